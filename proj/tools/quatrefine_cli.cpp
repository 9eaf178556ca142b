#include "quatrefine/catalogue.hpp"
#include "quatrefine/cmorders.hpp"
#include "quatrefine/primecase.hpp"
#include "quatrefine/quadclass.hpp"
#include "quatrefine/ssab.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace quatrefine;

namespace {

// "x" or "x:y" for x + y sqrt(d).
FElem parse_felem(const Int& d, const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return FElem(d, parse_rat(s));
    return FElem(d, parse_rat(s.substr(0, colon)), parse_rat(s.substr(colon + 1)));
}

Int parse_int(const std::string& s, const char* what) {
    Int n;
    if (s.empty() || n.set_str(s, 10) != 0) throw ValidationError(std::string("bad integer for ") + what + ": '" + s + "'");
    return n;
}

void print_counts(const RefinedCounts& c) {
    for (auto& [G, gc] : c.per_group)
        std::cout << group_name(G) << " t=" << (gc.t ? gc.t->get_str() : std::string("-")) << " h=" << gc.h << "\n";
    std::cout << "mass=" << to_string(c.mass) << "\n";
    std::cout << "h_total=" << c.h_total << "\n";
    if (c.t_total) std::cout << "t_total=" << *c.t_total << "\n";
    std::cout << "mass_residual=" << to_string(c.mass_residual) << " eichler_residual=" << to_string(c.eichler_residual)
              << "\n";
}

struct SweepRow {
    Int d;
    std::string tag;
    std::vector<std::string> lines;
    std::string error;
};

SweepRow sweep_one(const Int& d, AlgTag tag) {
    SweepRow row{d, alg_tag_name(tag), {}, {}};
    try {
        auto c = full_counts(d, tag, false);
        for (auto& [G, gc] : c.per_group) {
            std::ostringstream os;
            os << d << "," << row.tag << "," << group_name(G) << "," << (gc.t ? gc.t->get_str() : std::string()) << ","
               << gc.h << "," << to_string(c.mass_residual) << "," << to_string(c.eichler_residual);
            row.lines.push_back(os.str());
        }
        if (c.mass_residual != 0 || c.eichler_residual != 0) row.error = "nonzero residual";
        if (tag == AlgTag::Hinf && is_prime(d)) {
            auto diff = crosscheck_prime(d);
            if (!diff.empty()) row.error = "closed form differs: " + diff.front();
        }
    } catch (const ValidationError& e) {
        // B and D need Nm(eps) = 1.
        std::ostringstream os;
        os << d << "," << row.tag << ",unavailable,,,,";
        row.lines.push_back(os.str());
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

int run_sweep(int dmax, const std::string& report, unsigned threads) {
    if (dmax < 6) throw ValidationError("--dmax must be at least 6");
    std::vector<std::pair<Int, AlgTag>> jobs;
    for (int d = 6; d <= dmax; ++d) {
        if (!is_squarefree(d)) continue;
        for (AlgTag t : {AlgTag::Hinf, AlgTag::A, AlgTag::B, AlgTag::C, AlgTag::D}) jobs.emplace_back(d, t);
    }
    std::vector<SweepRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < jobs.size();) rows[k] = sweep_one(jobs[k].first, jobs[k].second);
    };
    threads = std::max(1u, threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::ofstream out(report);
    if (!out) throw ValidationError("cannot write " + report);
    out << "d,algebra_tag,group,t,h,mass_residual,eichler_residual\n";
    int failures = 0;
    for (auto& r : rows) {
        for (auto& l : r.lines) out << l << "\n";
        if (!r.error.empty()) {
            ++failures;
            std::cerr << "d=" << r.d << " " << r.tag << ": " << r.error << "\n";
        }
    }
    std::cout << "sweep: " << rows.size() << " cases, " << failures << " failures\n";
    return failures ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Refined class and type numbers of totally definite quaternion algebras over real quadratic fields"};
    app.require_subcommand(1);

    std::string d_s, p_s, m_s, alg_s, tag_s = "Hinf", case_id, report, format = "json";
    bool json = false, crosscheck = false;
    int dmax = 0;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    auto* refined = app.add_subcommand("refined", "refined class numbers h(G) and type numbers t(G)");
    refined->add_option("--d", d_s, "square-free d >= 2")->required();
    auto* alg_opt = refined->add_option("--alg", alg_s, "custom algebra a,b with entries x or x:y for x + y sqrt d");
    refined->add_option("--tag", tag_s, "A|B|C|D|Hinf")->excludes(alg_opt);
    refined->add_flag("--json", json);

    auto* prime = app.add_subcommand("prime", "closed forms for F = Q(sqrt p)");
    prime->add_option("--p", p_s)->required();
    prime->add_flag("--crosscheck", crosscheck, "compare against the general recipe");

    auto* ssab = app.add_subcommand("ssab", "superspecial abelian surface census for pi = sqrt p");
    ssab->add_option("--p", p_s)->required();
    ssab->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* classnum = app.add_subcommand("classnum", "class number of Q(sqrt m)");
    classnum->add_option("-m", m_s)->required();

    auto* zeta = app.add_subcommand("zeta", "zeta_F(-1)");
    zeta->add_option("--d", d_s)->required();

    auto* cm = app.add_subcommand("cmorders", "CM orders B with w(B) > 1");
    cm->add_option("--d", d_s)->required();

    auto* verify = app.add_subcommand("order-verify", "rebuild and check an explicit order");
    verify->add_option("--d", d_s)->required();
    verify->add_option("--case", case_id)->required();

    auto* sweep = app.add_subcommand("sweep", "mass and Eichler identities over all square-free d <= dmax");
    sweep->add_option("--dmax", dmax)->required();
    sweep->add_option("--report", report)->required();
    sweep->add_option("--threads", threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*refined) {
            Int d = parse_int(d_s, "--d");
            RefinedCounts c;
            if (!alg_s.empty()) {
                auto comma = alg_s.find(',');
                if (comma == std::string::npos) throw ValidationError("--alg expects a,b");
                if (d < 2 || !is_squarefree(d)) throw ValidationError("d must be a square-free integer >= 2");
                QuatAlgebra H = custom_algebra(parse_felem(d, alg_s.substr(0, comma)), parse_felem(d, alg_s.substr(comma + 1)));
                c = full_counts(d, H);
            } else {
                c = full_counts(d, parse_alg_tag(tag_s));
            }
            if (json) std::cout << counts_json(c) << "\n";
            else print_counts(c);
        } else if (*prime) {
            Int p = parse_int(p_s, "--p");
            print_counts(counts_prime(p));
            if (crosscheck) {
                auto diff = crosscheck_prime(p);
                for (auto& l : diff) std::cerr << l << "\n";
                if (!diff.empty()) return 2;
                std::cout << "crosscheck: ok\n";
            }
        } else if (*ssab) {
            auto c = census(parse_int(p_s, "--p"));
            std::cout << (format == "csv" ? census_csv(c) : census_json(c) + "\n");
        } else if (*classnum) {
            Int m = parse_int(m_s, "-m");
            if (m == 0 || is_square(m)) throw ValidationError("m must be a non-square");
            std::cout << class_number_field(m) << "\n";
        } else if (*zeta) {
            Int d = parse_int(d_s, "--d");
            if (d < 2 || !is_squarefree(d)) throw ValidationError("d must be a square-free integer >= 2");
            std::cout << to_string(zeta_minus_one(d)) << "\n";
        } else if (*cm) {
            Int d = parse_int(d_s, "--d");
            if (d < 6 || !is_squarefree(d)) throw ValidationError("d must be a square-free integer >= 6");
            auto fu = fundamental_unit(d);
            std::cout << cmorders_json(fu, enumerate_B(fu)) << "\n";
        } else if (*verify) {
            auto c = verify_case(case_id, parse_int(d_s, "--d"));
            std::cout << catalogue_json(c) << "\n";
            if (!c.ok()) return 2;
        } else if (*sweep) {
            return run_sweep(dmax, report, threads);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
