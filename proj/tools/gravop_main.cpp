#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gravop/arnold.hpp"
#include "gravop/checks.hpp"
#include "gravop/expr.hpp"
#include "gravop/gravity.hpp"
#include "gravop/json_io.hpp"
#include "gravop/poisson.hpp"
#include "gravop/unitary.hpp"

namespace {

using gravop::json_io::json;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void print_profile(const gravop::GradedRankProfile& profile, const json& meta, bool as_json) {
    if (as_json) {
        json out = meta;
        out["poincare"] = gravop::json_io::to_json(profile);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << profile.to_polynomial_string() << "\n";
    }
}

int run_verify_gravity(int k, int l, int d, bool all_parities, bool as_json) {
    gravop::gravity::GravityRelationInstance instance(k, l, d);
    const int inputs = k + l;
    bool all_pass = true;
    json rows = json::array();
    std::vector<int> parities(static_cast<std::size_t>(inputs), 0);
    const std::uint32_t limit = all_parities ? (1u << inputs) : 1u;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        for (int t = 0; t < inputs; ++t)
            parities[static_cast<std::size_t>(t)] = static_cast<int>((mask >> t) & 1u);
        bool pass = instance.check(parities);
        all_pass = all_pass && pass;
        if (as_json) {
            rows.push_back(gravop::json_io::gravity_relation_json(k, l, d, parities, pass));
        } else {
            std::cout << (pass ? "pass" : "FAIL") << "  k=" << k << " l=" << l << " d=" << d
                      << " parities=";
            for (int p : parities) std::cout << p;
            std::cout << "\n";
        }
    }
    if (as_json) std::cout << rows.dump(2) << "\n";
    return all_pass ? kExitPass : kExitVerifyFail;
}

int run_verify_main(int n, int d, bool as_json) {
    auto report = gravop::gravity::verify_main_theorem(n, d);
    if (as_json) {
        std::cout << gravop::json_io::to_json(report).dump(2) << "\n";
    } else {
        std::cout << "degree  gravity  expected  ok\n";
        for (auto& row : report.rows)
            std::cout << row.degree << "\t" << row.gravity_rank << "\t" << row.expected_rank
                      << "\t" << (row.pass ? "pass" : "FAIL") << "\n";
        std::cout << (report.pass ? "PASS" : "FAIL") << " (" << report.convention << ")\n";
    }
    return report.pass ? kExitPass : kExitVerifyFail;
}

int run_verify_all(int max_n, int max_d, int samples, bool as_json) {
    auto results = gravop::checks::run_all(max_n, max_d, samples);
    bool all_pass = true;
    json rows = json::array();
    for (std::size_t t = 0; t < results.size(); ++t) {
        const auto& r = results[t];
        all_pass = all_pass && r.pass;
        if (as_json) {
            rows.push_back(
                {{"criterion", t + 1}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}});
        } else {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << (t + 1) << ": "
                      << r.name << "\n";
            for (auto& line : r.details) std::cout << "       " << line << "\n";
        }
    }
    if (as_json) std::cout << rows.dump(2) << "\n";
    return all_pass ? kExitPass : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the homology operads of configuration spaces"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    int n = 0, d = 1, degree = 0, k = 2, l = 1, slot = 1;
    int max_n = 6, max_d = 3, samples = 1000;
    std::string flavor = "conf", expr_text, left_path, right_path;
    bool all_parities = false;

    auto* poincare = app.add_subcommand("poincare", "graded ranks of a ring");
    poincare->add_option("--flavor", flavor, "conf|fiber|th")->default_val("conf");
    poincare->add_option("--n", n, "number of points")->required();
    poincare->add_option("--d", d, "complex dimension")->required();

    auto* normal_form = app.add_subcommand("normal-form", "reduce an expression to basis form");
    normal_form->add_option("--n", n)->required();
    normal_form->add_option("--d", d)->required();
    normal_form->add_option("--flavor", flavor)->default_val("conf");
    normal_form->add_option("--expr", expr_text, "expression text")->required();

    auto* delta_star = app.add_subcommand("delta-star", "apply the top derivation");
    delta_star->add_option("--n", n)->required();
    delta_star->add_option("--d", d)->required();
    delta_star->add_option("--expr", expr_text)->required();

    auto* kernel = app.add_subcommand("kernel", "kernel basis of the top derivation");
    kernel->add_option("--n", n)->required();
    kernel->add_option("--d", d)->required();
    kernel->add_option("--degree", degree)->required();

    auto* compose = app.add_subcommand("compose", "operadic composition of elements from files");
    compose->add_option("--d", d)->required();
    compose->add_option("--left", left_path, "JSON file, outer element")->required();
    compose->add_option("--slot", slot)->required();
    compose->add_option("--right", right_path, "JSON file, inner element")->required();

    auto* bracket = app.add_subcommand("bracket", "arity-k bracket generator");
    bracket->add_option("--k", k)->required();
    bracket->add_option("--d", d)->required();

    auto* verify = app.add_subcommand("verify", "batch verification");
    verify->require_subcommand(1);
    auto* vgrav = verify->add_subcommand("gravity", "the defining bracket relation");
    vgrav->add_option("--k", k)->required();
    vgrav->add_option("--l", l)->required();
    vgrav->add_option("--d", d)->required();
    vgrav->add_flag("--all-parities", all_parities, "sweep every parity vector");
    auto* vmain = verify->add_subcommand("main-theorem", "rank-level operad comparison");
    vmain->add_option("--n", n)->required();
    vmain->add_option("--d", d)->required();
    auto* vall = verify->add_subcommand("all", "every check at desk scale");
    vall->add_option("--max-n", max_n)->default_val(6);
    vall->add_option("--max-d", max_d)->default_val(3);
    vall->add_option("--samples", samples)->default_val(1000);

    // Let --json appear after a subcommand name as well as before it.
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*poincare) {
            gravop::arnold::RingDescriptor desc{n, d, gravop::arnold::flavor_from_string(flavor)};
            print_profile(gravop::arnold::poincare(desc),
                          {{"n", n}, {"d", d}, {"flavor", flavor}}, as_json);
            return kExitPass;
        }
        if (*normal_form) {
            gravop::arnold::RingDescriptor desc{n, d, gravop::arnold::flavor_from_string(flavor)};
            auto e = gravop::expr::evaluate(gravop::expr::parse(expr_text), desc);
            if (as_json)
                std::cout << gravop::json_io::to_json(e).dump(2) << "\n";
            else
                std::cout << e.to_string() << "\n";
            return kExitPass;
        }
        if (*delta_star) {
            gravop::arnold::RingDescriptor desc{n, d, gravop::arnold::Flavor::conf};
            auto e = gravop::expr::evaluate(gravop::expr::parse(expr_text), desc);
            auto img = gravop::unitary::delta_star(e);
            if (as_json)
                std::cout << gravop::json_io::to_json(img).dump(2) << "\n";
            else
                std::cout << img.to_string() << "\n";
            return kExitPass;
        }
        if (*kernel) {
            auto basis = gravop::unitary::kernel_basis_degree(n, d, degree);
            if (as_json) {
                json out = {{"n", n}, {"d", d}, {"degree", degree}};
                out["basis"] = json::array();
                for (auto& e : basis) out["basis"].push_back(gravop::json_io::to_json(e));
                std::cout << out.dump(2) << "\n";
            } else {
                for (auto& e : basis) std::cout << e.to_string() << "\n";
                std::cout << "rank " << basis.size() << "\n";
            }
            return kExitPass;
        }
        if (*compose) {
            auto a = gravop::json_io::operad_element_from_json(read_json_file(left_path));
            auto b = gravop::json_io::operad_element_from_json(read_json_file(right_path));
            if (a.d() != d || b.d() != d)
                throw std::invalid_argument("file dimension parameter disagrees with --d");
            auto c = gravop::poisson::compose(a, slot, b);
            if (as_json)
                std::cout << gravop::json_io::to_json(c).dump(2) << "\n";
            else
                std::cout << c.to_string() << "\n";
            return kExitPass;
        }
        if (*bracket) {
            auto e = gravop::poisson::bracket_generator(k, d);
            if (as_json)
                std::cout << gravop::json_io::to_json(e).dump(2) << "\n";
            else
                std::cout << e.to_string() << "\n";
            return kExitPass;
        }
        if (*vgrav) return run_verify_gravity(k, l, d, all_parities, as_json);
        if (*vmain) return run_verify_main(n, d, as_json);
        if (*vall) return run_verify_all(max_n, max_d, samples, as_json);
    } catch (const gravop::expr::ParseError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
