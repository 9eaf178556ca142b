#include "quatrefine/ssab.hpp"

#include "quatrefine/quadclass.hpp"

#include <json.hpp>

#include <sstream>

namespace quatrefine {

Census census(const Int& p) {
    RefinedCounts c = counts_prime(p);
    Int hF = class_number_real(p);
    Census out;
    out.p = p;
    out.h_pi = 0;
    out.t_pi = 0;
    for (auto& [G, gc] : c.per_group) {
        if (gc.h == 0) continue;
        out.h[G] = hF * *gc.t;
        out.h_pi += out.h[G];
        out.t_pi += *gc.t;
    }
    if (out.h_pi != c.h_total) throw ConsistencyError("census total differs from h(H) at p=" + p.get_str());
    return out;
}

bool is_nonabelian(GroupTag G) {
    switch (G) {
        case GroupTag::D3dag:
        case GroupTag::D3ddag:
        case GroupTag::D4:
        case GroupTag::D5:
        case GroupTag::D6:
        case GroupTag::D12:
        case GroupTag::A4:
        case GroupTag::S4:
        case GroupTag::A5: return true;
        default: return false;
    }
}

bool exists_real_quadratic_endalgebra(const Int& p) {
    if (!is_prime(p)) throw ValidationError("p must be prime");
    return mod(p, 24) != 1;
}

bool nonabelian_type_exists(const Int& p) {
    for (auto& [G, gc] : counts_prime(p).per_group)
        if (is_nonabelian(G) && gc.t && *gc.t > 0) return true;
    return false;
}

std::string census_json(const Census& c) {
    nlohmann::ordered_json j;
    j["p"] = c.p.get_si();
    nlohmann::ordered_json h = nlohmann::ordered_json::object();
    for (auto& [G, v] : c.h) h[group_name(G)] = v.get_si();
    j["h"] = h;
    j["h_pi"] = c.h_pi.get_si();
    j["t_pi"] = c.t_pi.get_si();
    j["real_quadratic_endalgebra"] = exists_real_quadratic_endalgebra(c.p);
    return j.dump(2);
}

std::string census_csv(const Census& c) {
    std::ostringstream os;
    os << "p,group,h\n";
    for (auto& [G, v] : c.h) os << c.p << "," << group_name(G) << "," << v << "\n";
    os << c.p << ",total," << c.h_pi << "\n";
    return os.str();
}

}  // namespace quatrefine
