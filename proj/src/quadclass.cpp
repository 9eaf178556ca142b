#include "quatrefine/quadclass.hpp"

#include "quatrefine/quadfield.hpp"

#include <map>
#include <set>

namespace quatrefine {

bool is_fundamental_disc(const Int& D) {
    if (D == 0 || D == 1) return false;
    Int r = mod(D, 4);
    if (r == 1) return is_squarefree(D);
    if (r != 0) return false;
    Int m = D / 4;
    Int m4 = mod(m, 4);
    return (m4 == 2 || m4 == 3) && is_squarefree(m);
}

FormClassData reduced_forms_imaginary(const Int& D) {
    if (D >= 0 || !is_fundamental_disc(D)) throw ValidationError("not a negative fundamental discriminant: " + D.get_str());
    FormClassData out;
    out.disc = D;
    Int absD = -D;
    for (Int a = 1; 3 * a * a <= absD; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            if (mod(b - D, 2) != 0) continue;
            Int num = b * b - D;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            if (gcd(gcd(a, b), c) != 1) continue;
            out.reduced_forms.push_back({a, b, c});
        }
    }
    out.h = Int(out.reduced_forms.size());
    return out;
}

Int class_number_imaginary(const Int& D) { return reduced_forms_imaginary(D).h; }

Int narrow_class_number(const Int& D) {
    if (D <= 0 || !is_fundamental_disc(D)) throw ValidationError("not a positive fundamental discriminant: " + D.get_str());
    // Reduced indefinite forms: 0 < b < sqrt D, sqrt D - b < 2|a| < sqrt D + b.
    Int s = isqrt(D);
    using Form = std::array<Int, 3>;
    std::set<Form> forms;
    for (Int b = 1; b <= s; ++b) {
        if (mod(b - D, 2) != 0) continue;
        Int num = b * b - D;  // = 4ac < 0
        for (Int A = 1; 2 * A <= s + b; ++A) {
            // sqrt D - b < 2A  <=>  D < (2A + b)^2 ;  2A < sqrt D + b  <=>  (2A - b)^2 < D when 2A > b
            Int lo = 2 * A + b;
            if (lo * lo <= D) continue;
            Int hi = 2 * A - b;
            if (hi > 0 && hi * hi >= D) continue;
            if (num % (4 * A) != 0) continue;
            Int c = num / (4 * A);
            for (int sg : {1, -1}) {
                Int a = sg * A, cc = sg * c;
                if (gcd(gcd(a, b), cc) != 1) continue;
                forms.insert({a, b, cc});
            }
        }
    }
    auto rho = [&](const Form& f) {
        const Int& c = f[2];
        Int ac = abs(c);
        // b' = -b mod 2|c| in the window sqrt D - 2|c| < b' < sqrt D
        Int bp = mod(-f[1], 2 * ac);
        // largest b' = bp + k*2|c| below sqrt D
        Int k = floor_div(s - bp, 2 * ac);
        bp += k * 2 * ac;
        while (bp * bp > D && bp > 0) bp -= 2 * ac;
        Int ap = (bp * bp - D) / (4 * c);
        return Form{c, bp, ap};
    };
    std::set<Form> seen;
    Int cycles = 0;
    for (auto& f : forms) {
        if (seen.count(f)) continue;
        ++cycles;
        Form g = f;
        while (!seen.count(g)) {
            seen.insert(g);
            g = rho(g);
            if (!forms.count(g)) throw ConsistencyError("rho left the reduced set");
        }
    }
    return cycles;
}

Int class_number_real(const Int& d) {
    FundUnitData fu = fundamental_unit(d);
    Int hp = narrow_class_number(field_disc(d));
    return fu.norm_sign == 1 ? hp / 2 : hp;
}

Int class_number_field(const Int& m) {
    Int s = squarefree_part(m);
    if (s == 1) return 1;
    if (s < 0) return class_number_imaginary(fundamental_disc(s));
    return class_number_real(s);
}

Rat zeta_minus_one(const Int& d) {
    if (d < 2 || !is_squarefree(d)) throw ValidationError("d must be a square-free integer >= 2");
    Int D = field_disc(d);
    Int total = 0;
    for (Int b = -isqrt(D); b * b < D; ++b) {
        if (mod(b - D, 2) != 0) continue;
        Int n = (D - b * b) / 4;
        Int sigma = 0;
        for (Int e = 1; e * e <= n; ++e)
            if (n % e == 0) {
                sigma += e;
                if (e * e != n) sigma += n / e;
            }
        total += sigma;
    }
    return make_rat(total, 60);
}

}  // namespace quatrefine
