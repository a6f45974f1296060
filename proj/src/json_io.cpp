#include "gravop/json_io.hpp"

namespace gravop::json_io {

namespace {

json coeff_to_json(const Int& c) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return static_cast<std::int64_t>(c);
    return c.str();
}

Int coeff_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("coefficient must be an integer or decimal string");
}

} // namespace

json to_json(const arnold::RingElement& e) {
    json terms = json::array();
    for (auto& [key, coeff] : e.terms()) {
        json mono = json::array();
        for (auto& g : key.mono.factors) mono.push_back({g.i, g.j});
        terms.push_back({{"coeff", coeff_to_json(coeff)}, {"c", key.c_exp}, {"monomial", mono}});
    }
    return {{"n", e.descriptor().n},
            {"d", e.descriptor().d},
            {"flavor", arnold::to_string(e.descriptor().flavor)},
            {"terms", terms}};
}

arnold::RingElement ring_element_from_json(const json& j) {
    arnold::RingDescriptor desc{j.at("n").get<int>(), j.at("d").get<int>(),
                                arnold::flavor_from_string(j.at("flavor").get<std::string>())};
    std::vector<arnold::RawTerm> raw;
    for (auto& t : j.at("terms")) {
        arnold::RawTerm term;
        term.coeff = coeff_from_json(t.at("coeff"));
        term.c_exp = t.value("c", 0);
        for (auto& pair : t.at("monomial")) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("monomial entries must be index pairs");
            term.factors.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
        raw.push_back(std::move(term));
    }
    return arnold::normal_form(raw, desc);
}

json to_json(const poisson::OperadElement& e) {
    json terms = json::array();
    for (auto& [mono, coeff] : e.terms()) {
        json blocks = json::array();
        for (auto& b : mono.blocks) {
            json word = json::array();
            for (auto l : b.letters) word.push_back(static_cast<int>(l));
            blocks.push_back({{"word", word}});
        }
        terms.push_back({{"coeff", coeff.str()}, {"blocks", blocks}});
    }
    return {{"n", e.arity()}, {"d", e.d()}, {"terms", terms}};
}

namespace {

poisson::PoissonMonomial monomial_from_json(const json& blocks, int arity) {
    poisson::PoissonMonomial mono;
    for (auto& b : blocks) {
        poisson::LieWord w;
        for (auto& l : b.at("word")) w.letters.push_back(static_cast<poisson::Letter>(l.get<int>()));
        mono.blocks.push_back(std::move(w));
    }
    if (!mono.canonical(arity))
        throw std::invalid_argument("blocks do not form a canonical monomial");
    return mono;
}

} // namespace

poisson::OperadElement operad_element_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    poisson::OperadElement e(n, d);
    if (j.contains("blocks")) {
        e.add_term(monomial_from_json(j.at("blocks"), n), 1);
        return e;
    }
    for (auto& t : j.at("terms"))
        e.add_term(monomial_from_json(t.at("blocks"), n), coeff_from_json(t.at("coeff")));
    return e;
}

json to_json(const GradedRankProfile& profile) {
    json rows = json::array();
    for (auto& [q, r] : profile.ranks()) rows.push_back({{"degree", q}, {"rank", r}});
    return rows;
}

json to_json(const unitary::KernelReport& report) {
    json rows = json::array();
    for (auto& r : report.rows)
        rows.push_back({{"degree", r.degree},
                        {"rank_kernel", r.rank_kernel},
                        {"rank_Y", r.rank_Y},
                        {"rank_ring", r.rank_ring},
                        {"pass", r.pass}});
    return {{"check", "kernel_equals_Y"},
            {"n", report.n},
            {"d", report.d},
            {"pass", report.pass},
            {"rows", rows}};
}

json to_json(const unitary::SplittingReport& report) {
    json rows = json::array();
    for (auto& r : report.rows)
        rows.push_back({{"degree", r.degree},
                        {"rank_ring", r.rank_ring},
                        {"count_union", r.count_union},
                        {"rank_union", r.rank_union},
                        {"pass", r.pass}});
    return {{"check", "free_splitting"},
            {"n", report.n},
            {"d", report.d},
            {"pass", report.pass},
            {"rows", rows}};
}

json to_json(const gravity::MainTheoremReport& report) {
    json rows = json::array();
    for (auto& r : report.rows)
        rows.push_back({{"degree", r.degree},
                        {"gravity_rank", r.gravity_rank},
                        {"expected_rank", r.expected_rank},
                        {"pass", r.pass}});
    return {{"check", "main_theorem"},
            {"n", report.n},
            {"d", report.d},
            {"pass", report.pass},
            {"convention", report.convention},
            {"rows", rows}};
}

json to_json(const gravity::CCompatibilityReport& report) {
    return {{"check", "c_compatibility"},
            {"n", report.n},
            {"d", report.d},
            {"pass", report.pass},
            {"c_power_annihilates", report.c_power_annihilates},
            {"slices_match", report.slices_match},
            {"freeness_matches", report.freeness_matches},
            {"note", report.note}};
}

json gravity_relation_json(int k, int l, int d, const std::vector<int>& parities, bool pass) {
    return {{"check", "gravity_relation"}, {"k", k},        {"l", l},
            {"d", d},                      {"parities", parities}, {"pass", pass}};
}

} // namespace gravop::json_io
