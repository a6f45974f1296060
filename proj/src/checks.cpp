#include "gravop/checks.hpp"

#include <random>

#include "gravop/arnold.hpp"
#include "gravop/arnold_oracle.hpp"
#include "gravop/gravity.hpp"
#include "gravop/poisson.hpp"
#include "gravop/unitary.hpp"

namespace gravop::checks {

namespace {

using arnold::Flavor;
using arnold::RingDescriptor;

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int t = 2; t <= n; ++t) f *= static_cast<std::size_t>(t);
    return f;
}

void note(CheckResult& r, const std::string& line) { r.details.push_back(line); }

void fail(CheckResult& r, const std::string& line) {
    r.pass = false;
    note(r, "FAIL " + line);
}

std::string nd(int n, int d) { return "n=" + std::to_string(n) + " d=" + std::to_string(d); }

} // namespace

CheckResult check_poincare_products(int max_n, int max_d) {
    CheckResult result{"poincare products vs falling product and relation-span oracle", true, {}};
    for (int n = 2; n <= max_n; ++n) {
        arnold_oracle::QuotientOracle oracle(n);
        for (int d = 1; d <= max_d; ++d) {
            const int w = 2 * d - 1;
            auto conf = arnold::poincare(RingDescriptor{n, d, Flavor::conf});
            GradedRankProfile product;
            product.set(0, 1);
            for (int i = 1; i < n; ++i) {
                GradedRankProfile factor;
                factor.set(0, 1);
                factor.set(w, static_cast<std::size_t>(i));
                product = product.convolved(factor);
            }
            if (conf != product) fail(result, nd(n, d) + ": profile != falling product");
            if (conf.total() != factorial(n)) fail(result, nd(n, d) + ": total rank != n!");
            bool oracle_ok = true;
            for (int k = 0; k <= n; ++k)
                if (oracle.rank_in_factors(k) != conf.at(k * w)) oracle_ok = false;
            for (auto& [q, r] : conf.ranks())
                if (q % w != 0) oracle_ok = false;
            if (!oracle_ok) fail(result, nd(n, d) + ": profile != oracle ranks");
        }
    }
    return result;
}

CheckResult check_th_tensor_structure(int max_n, int max_d) {
    CheckResult result{"quotient-ring ranks: c-tower tensor fiber ring", true, {}};
    for (int n = 2; n <= max_n; ++n)
        for (int d = 1; d <= max_d; ++d) {
            auto th = arnold::poincare(RingDescriptor{n, d, Flavor::th});
            auto fiber = arnold::poincare(RingDescriptor{n, d, Flavor::fiber});
            GradedRankProfile cpart;
            for (int a = 0; a < d; ++a) cpart.set(2 * a, 1);
            if (th != fiber.convolved(cpart)) fail(result, nd(n, d) + ": th != c-tower x fiber");
            if (th.total() != static_cast<std::size_t>(d) * factorial(n) / 2)
                fail(result, nd(n, d) + ": total rank != d n!/2");
        }
    return result;
}

CheckResult check_kernel_equals_Y_and_splitting(int max_n, int max_d) {
    CheckResult result{"derivation kernel equals Y; Y + Y x_12 bases the ring", true, {}};
    for (int n = 2; n <= max_n; ++n)
        for (int d = 1; d <= max_d; ++d) {
            auto kernel_report = unitary::verify_kernel_equals_Y(n, d);
            if (!kernel_report.pass) fail(result, nd(n, d) + ": kernel != Y");
            auto split_report = unitary::verify_free_splitting(n, d);
            if (!split_report.pass) fail(result, nd(n, d) + ": splitting failed");
        }
    return result;
}

CheckResult check_delta_operator(int max_arity, int max_d) {
    CheckResult result{"delta squares to zero; derivation identity; route agreement", true, {}};
    for (int d = 1; d <= max_d; ++d) {
        for (int n = 1; n <= max_arity; ++n) {
            const int w = 2 * d - 1;
            for (int m = 0; m < n; ++m)
                for (auto& mono : poisson::poisson_basis(n, d, m * w)) {
                    poisson::OperadElement e(n, d);
                    e.add_term(mono, 1);
                    if (!poisson::delta(poisson::delta(e)).is_zero())
                        fail(result, "delta^2 != 0 at arity " + std::to_string(n) + " d=" +
                                         std::to_string(d) + " on " + mono.to_string());
                    if (!(poisson::delta(e) == poisson::delta_recursive(e)))
                        fail(result, "pairwise/recursive mismatch on " + mono.to_string());
                }
        }
        // Derivation identity on exhaustive basis pairs with
        // arity(a) + arity(b) - 1 <= max_arity.
        for (int na = 2; na <= max_arity; ++na)
            for (int nb = 1; na + nb - 1 <= max_arity; ++nb) {
                const int w = 2 * d - 1;
                std::vector<poisson::PoissonMonomial> amonos, bmonos;
                for (int m = 0; m < na; ++m)
                    for (auto& mono : poisson::poisson_basis(na, d, m * w))
                        amonos.push_back(mono);
                for (int m = 0; m < nb; ++m)
                    for (auto& mono : poisson::poisson_basis(nb, d, m * w))
                        bmonos.push_back(mono);
                for (auto& Ma : amonos)
                    for (auto& Mb : bmonos) {
                        poisson::OperadElement a(na, d), b(nb, d);
                        a.add_term(Ma, 1);
                        b.add_term(Mb, 1);
                        auto da = poisson::delta(a);
                        auto db = poisson::delta(b);
                        const bool a_odd = a.homogeneous_degree() % 2 != 0;
                        for (int slot = 1; slot <= na; ++slot) {
                            auto lhs = poisson::delta(poisson::compose(a, slot, b));
                            auto rhs = poisson::compose(da, slot, b);
                            auto second = poisson::compose(a, slot, db);
                            if (a_odd) second *= -1;
                            rhs += second;
                            if (!(lhs == rhs))
                                fail(result, "derivation identity fails: " + Ma.to_string() +
                                                 " o_" + std::to_string(slot) + " " +
                                                 Mb.to_string() + " (d=" + std::to_string(d) +
                                                 ")");
                        }
                    }
            }
    }
    return result;
}

CheckResult check_kernel_equals_image(int max_n, int max_d) {
    CheckResult result{"rank ker delta = rank im delta; kernel = shifted fiber profile", true, {}};
    for (int n = 2; n <= max_n; ++n)
        for (int d = 1; d <= max_d; ++d) {
            auto kernel = poisson::kernel_rank_profile(n, d);
            auto image = poisson::image_rank_profile(n, d);
            if (kernel != image) fail(result, nd(n, d) + ": ker != im rankwise");
            auto fiber = arnold::poincare(RingDescriptor{n, d, Flavor::fiber});
            if (kernel != fiber.shifted(2 * d - 1))
                fail(result, nd(n, d) + ": kernel profile != shifted fiber profile");
        }
    return result;
}

CheckResult check_gravity_relations(int max_total, int max_d) {
    CheckResult result{"bracket relation for every (k, l, parity, d)", true, {}};
    for (int d = 1; d <= max_d; ++d)
        for (int k = 2; k + 1 - 1 <= max_total; ++k)
            for (int l = 1; k + l - 1 <= max_total; ++l) {
                gravity::GravityRelationInstance instance(k, l, d);
                const int inputs = k + l;
                std::vector<int> parities(static_cast<std::size_t>(inputs));
                for (std::uint32_t mask = 0; mask < (1u << inputs); ++mask) {
                    for (int t = 0; t < inputs; ++t)
                        parities[static_cast<std::size_t>(t)] = (mask >> t) & 1;
                    if (!instance.check(parities))
                        fail(result, "k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                         " d=" + std::to_string(d) + " parity mask " +
                                         std::to_string(mask));
                }
            }
    return result;
}

CheckResult check_main_theorem(int max_n, int max_d) {
    CheckResult result{"gravity ranks = suspended quotient-space homology ranks", true, {}};
    for (int n = 2; n <= max_n; ++n)
        for (int d = 1; d <= max_d; ++d) {
            auto report = gravity::verify_main_theorem(n, d);
            if (!report.pass) fail(result, nd(n, d) + ": profile mismatch");
            auto compat = gravity::verify_c_compatibility(n, d);
            if (!compat.pass) fail(result, nd(n, d) + ": c-action checks failed");
        }
    return result;
}

CheckResult check_getzler_regression(int max_n) {
    CheckResult result{"d=1 regression to the gravity operad of moduli of points", true, {}};
    for (int n = 2; n <= max_n; ++n) {
        auto report = gravity::verify_getzler_regression(n);
        if (!report.pass) fail(result, "n=" + std::to_string(n) + ": profile mismatch");
    }
    return result;
}

CheckResult check_confluence(int max_n, int max_d, int samples, std::uint64_t seed) {
    CheckResult result{"confluence of random reductions vs the linear-algebra oracle", true, {}};
    for (int n = 2; n <= max_n; ++n) {
        arnold_oracle::QuotientOracle oracle(n);
        for (int d = 1; d <= max_d; ++d) {
            RingDescriptor desc{n, d, Flavor::conf};
            std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n) * 64 +
                                static_cast<std::uint64_t>(d));
            std::uniform_int_distribution<int> idx(1, n), len(1, n + 1);
            int bad = 0;
            for (int trial = 0; trial < samples; ++trial) {
                arnold::RawTerm term;
                const int L = len(rng);
                for (int f = 0; f < L; ++f) {
                    int i = idx(rng), j = idx(rng);
                    while (j == i) j = idx(rng);
                    term.factors.emplace_back(i, j);
                }
                auto det = arnold::normal_form({term}, desc);
                auto ra = arnold::normal_form_randomized({term}, desc, rng);
                auto rb = arnold::normal_form_randomized({term}, desc, rng);
                arnold::RingElement from_oracle(desc);
                for (auto& [mono, coeff] : oracle.reduce_product(term.factors))
                    from_oracle.add_term(arnold::TermKey{0, mono}, coeff);
                if (!(det == ra) || !(det == rb) || !(det == from_oracle)) ++bad;
            }
            if (bad > 0)
                fail(result, nd(n, d) + ": " + std::to_string(bad) + " of " +
                                 std::to_string(samples) + " reductions disagree");
        }
    }
    return result;
}

std::vector<CheckResult> run_all(int max_n, int max_d, int samples, std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(check_poincare_products(max_n, max_d));
    out.push_back(check_th_tensor_structure(max_n, max_d));
    out.push_back(check_kernel_equals_Y_and_splitting(max_n, max_d));
    out.push_back(check_delta_operator(max_n, max_d));
    out.push_back(check_kernel_equals_image(max_n, max_d));
    out.push_back(check_gravity_relations(max_n, max_d));
    out.push_back(check_main_theorem(max_n, max_d));
    out.push_back(check_getzler_regression(max_n));
    out.push_back(check_confluence(std::min(max_n, 5), max_d, samples, seed));
    return out;
}

} // namespace gravop::checks
