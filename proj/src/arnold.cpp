#include "gravop/arnold.hpp"

#include <algorithm>
#include <deque>

namespace gravop::arnold {

bool Monomial::admissible() const {
    for (std::size_t t = 0; t < factors.size(); ++t) {
        if (factors[t].i >= factors[t].j) return false;
        if (t > 0 && factors[t - 1].j >= factors[t].j) return false;
    }
    return true;
}

std::string to_string(Flavor f) {
    switch (f) {
        case Flavor::conf: return "conf";
        case Flavor::fiber: return "fiber";
        case Flavor::th: return "th";
    }
    return "?";
}

Flavor flavor_from_string(const std::string& s) {
    if (s == "conf") return Flavor::conf;
    if (s == "fiber") return Flavor::fiber;
    if (s == "th") return Flavor::th;
    throw std::invalid_argument("unknown flavor: " + s);
}

void RingDescriptor::validate() const {
    if (n < 2) throw std::invalid_argument("ring requires n >= 2");
    if (d < 1) throw std::invalid_argument("ring requires d >= 1");
    if (n > 12) throw std::invalid_argument("n too large for this library");
}

RingElement RingElement::one(RingDescriptor desc) {
    RingElement e(desc);
    e.add_term(TermKey{}, 1);
    return e;
}

RingElement RingElement::generator(RingDescriptor desc, int i, int j) {
    RawTerm t;
    t.factors.emplace_back(i, j);
    return normal_form({t}, desc);
}

RingElement RingElement::c_power(RingDescriptor desc, int exp) {
    RawTerm t;
    t.c_exp = exp;
    return normal_form({t}, desc);
}

int RingElement::term_degree(const TermKey& k) const {
    return 2 * k.c_exp + static_cast<int>(k.mono.length()) * desc_.generator_degree();
}

int RingElement::homogeneous_degree() const {
    int deg = -1;
    for (auto& [key, c] : terms_) {
        int q = term_degree(key);
        if (deg == -1)
            deg = q;
        else if (deg != q)
            throw std::logic_error("element is not homogeneous");
    }
    return deg;
}

void RingElement::add_term(const TermKey& key, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

RingElement& RingElement::operator+=(const RingElement& other) {
    if (desc_ != other.desc_) throw std::invalid_argument("descriptor mismatch");
    for (auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    if (desc_ != other.desc_) throw std::invalid_argument("descriptor mismatch");
    for (auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
}

RingElement& RingElement::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= scalar;
    return *this;
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [key, coeff] : terms_) {
        Int c = coeff;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string body;
        if (key.c_exp == 1)
            body += "c";
        else if (key.c_exp > 1)
            body += "c^" + std::to_string(key.c_exp);
        for (auto& g : key.mono.factors) {
            if (!body.empty()) body += "*";
            body += "x(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
        }
        if (body.empty())
            out += c.str();
        else if (c == 1)
            out += body;
        else
            out += c.str() + "*" + body;
    }
    return out;
}

std::vector<Int> RingElement::coordinates(const std::vector<TermKey>& basis) const {
    std::map<TermKey, std::size_t> index;
    for (std::size_t t = 0; t < basis.size(); ++t) index.emplace(basis[t], t);
    std::vector<Int> out(basis.size());
    for (auto& [key, c] : terms_) {
        auto it = index.find(key);
        if (it == index.end()) throw std::logic_error("term outside the given basis");
        out[it->second] = c;
    }
    return out;
}

namespace {

struct WorkTerm {
    Int coeff;
    int c_exp;
    std::vector<Gen> factors;
};

void validate_factor(int i, int j, const RingDescriptor& desc) {
    if (i < 1 || j < 1 || i > desc.n || j > desc.n)
        throw std::invalid_argument("generator index out of range for n=" +
                                    std::to_string(desc.n));
    if (i == j) throw std::invalid_argument("generator x(i,i) does not exist");
}

WorkTerm prepare(const RawTerm& raw, const RingDescriptor& desc) {
    if (raw.c_exp != 0 && desc.flavor != Flavor::th)
        throw std::invalid_argument("c is only available in the th flavor");
    if (raw.c_exp < 0) throw std::invalid_argument("negative power of c");
    WorkTerm t{raw.coeff, raw.c_exp, {}};
    t.factors.reserve(raw.factors.size());
    for (auto [i, j] : raw.factors) {
        validate_factor(i, j, desc);
        if (i > j) std::swap(i, j); // symmetric identification, no sign
        t.factors.push_back(Gen{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
    }
    return t;
}

// True if the term dies in the quotient defining the flavor.
bool killed_by_quotient(const WorkTerm& t, const RingDescriptor& desc) {
    if (desc.flavor == Flavor::th && t.c_exp >= desc.d) return true;
    if (desc.flavor != Flavor::conf)
        for (auto& g : t.factors)
            if (g.i == 1 && g.j == 2) return true;
    return false;
}

// Sort factors into canonical order, tracking the anticommutation sign.
// Returns false if two equal factors collide (the term is zero).
bool sort_factors(std::vector<Gen>& f, Int& coeff) {
    for (std::size_t a = 1; a < f.size(); ++a)
        for (std::size_t b = a; b > 0 && f[b] <= f[b - 1]; --b) {
            if (f[b] == f[b - 1]) return false;
            std::swap(f[b], f[b - 1]);
            coeff = -coeff;
        }
    return true;
}

// Index of the first adjacent pair sharing a larger index, or npos.
std::size_t first_shared_larger(const std::vector<Gen>& f) {
    for (std::size_t t = 0; t + 1 < f.size(); ++t)
        if (f[t].j == f[t + 1].j) return t;
    return static_cast<std::size_t>(-1);
}

// Apply x_aj x_bj -> x_ab x_bj - x_ab x_aj at position t (requires
// f[t].i < f[t+1].i, f[t].j == f[t+1].j).
std::pair<WorkTerm, WorkTerm> arnold_split(const WorkTerm& w, std::size_t t) {
    const auto a = w.factors[t].i, b = w.factors[t + 1].i, j = w.factors[t].j;
    WorkTerm plus{w.coeff, w.c_exp, w.factors};
    plus.factors[t] = Gen{a, b};
    plus.factors[t + 1] = Gen{b, j};
    WorkTerm minus{-w.coeff, w.c_exp, w.factors};
    minus.factors[t] = Gen{a, b};
    minus.factors[t + 1] = Gen{a, j};
    return {std::move(plus), std::move(minus)};
}

} // namespace

RingElement normal_form(const std::vector<RawTerm>& raw, RingDescriptor desc) {
    RingElement out(desc);
    std::deque<WorkTerm> work;
    for (auto& r : raw) work.push_back(prepare(r, desc));
    while (!work.empty()) {
        WorkTerm t = std::move(work.front());
        work.pop_front();
        if (t.coeff == 0 || killed_by_quotient(t, desc)) continue;
        if (!sort_factors(t.factors, t.coeff)) continue;
        if (killed_by_quotient(t, desc)) continue;
        std::size_t pos = first_shared_larger(t.factors);
        if (pos == static_cast<std::size_t>(-1)) {
            out.add_term(TermKey{t.c_exp, Monomial{std::move(t.factors)}}, t.coeff);
            continue;
        }
        auto [plus, minus] = arnold_split(t, pos);
        work.push_back(std::move(plus));
        work.push_back(std::move(minus));
    }
    return out;
}

// The randomized reducer applies one applicable elementary step at a time,
// chosen uniformly: an adjacent transposition of out-of-order factors (with
// sign), deletion of an adjacent equal pair, or the Arnold rewrite on an
// adjacent pair sharing a larger index and already ordered by smaller index.
// Each Arnold step shrinks the multiset of larger indices and each swap
// shrinks the inversion count, so any order of steps terminates.
RingElement normal_form_randomized(const std::vector<RawTerm>& raw, RingDescriptor desc,
                                   std::mt19937_64& rng) {
    RingElement out(desc);
    std::deque<WorkTerm> work;
    for (auto& r : raw) work.push_back(prepare(r, desc));
    while (!work.empty()) {
        std::uniform_int_distribution<std::size_t> pick_term(0, work.size() - 1);
        std::size_t wi = pick_term(rng);
        WorkTerm t = std::move(work[wi]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(wi));
        if (t.coeff == 0 || killed_by_quotient(t, desc)) continue;

        enum class Step { swap, drop, split };
        std::vector<std::pair<Step, std::size_t>> steps;
        for (std::size_t p = 0; p + 1 < t.factors.size(); ++p) {
            if (t.factors[p] == t.factors[p + 1])
                steps.emplace_back(Step::drop, p);
            else if (t.factors[p + 1] < t.factors[p])
                steps.emplace_back(Step::swap, p);
            else if (t.factors[p].j == t.factors[p + 1].j)
                steps.emplace_back(Step::split, p);
        }
        if (steps.empty()) {
            out.add_term(TermKey{t.c_exp, Monomial{std::move(t.factors)}}, t.coeff);
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
        auto [step, p] = steps[pick(rng)];
        switch (step) {
            case Step::drop: break; // square of an odd generator
            case Step::swap:
                std::swap(t.factors[p], t.factors[p + 1]);
                t.coeff = -t.coeff;
                work.push_back(std::move(t));
                break;
            case Step::split: {
                auto [plus, minus] = arnold_split(t, p);
                work.push_back(std::move(plus));
                work.push_back(std::move(minus));
                break;
            }
        }
    }
    return out;
}

RingElement multiply(const RingElement& a, const RingElement& b) {
    if (a.descriptor() != b.descriptor()) throw std::invalid_argument("descriptor mismatch");
    std::vector<RawTerm> raw;
    for (auto& [ka, ca] : a.terms())
        for (auto& [kb, cb] : b.terms()) {
            RawTerm t;
            t.coeff = ca * cb;
            t.c_exp = ka.c_exp + kb.c_exp;
            for (auto& g : ka.mono.factors) t.factors.emplace_back(g.i, g.j);
            for (auto& g : kb.mono.factors) t.factors.emplace_back(g.i, g.j);
            raw.push_back(std::move(t));
        }
    return normal_form(raw, a.descriptor());
}

namespace {

// Enumerate admissible monomials with `len` factors, larger indices strictly
// increasing and drawn from {from..n}; skips x_12 when the flavor quotients
// it out.
void enumerate_monomials(const RingDescriptor& desc, int len, int from, Monomial& acc,
                         std::vector<Monomial>& out) {
    if (len == 0) {
        out.push_back(acc);
        return;
    }
    for (int j = from; j <= desc.n; ++j)
        for (int i = 1; i < j; ++i) {
            if (desc.flavor != Flavor::conf && i == 1 && j == 2) continue;
            acc.factors.push_back(Gen{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
            enumerate_monomials(desc, len - 1, j + 1, acc, out);
            acc.factors.pop_back();
        }
}

} // namespace

std::vector<TermKey> basis_in_degree(RingDescriptor desc, int degree) {
    desc.validate();
    std::vector<TermKey> out;
    if (degree < 0) return out;
    const int w = desc.generator_degree();
    const int max_c = desc.flavor == Flavor::th ? desc.d - 1 : 0;
    for (int a = 0; a <= max_c; ++a) {
        int rest = degree - 2 * a;
        if (rest < 0 || rest % w != 0) continue;
        int len = rest / w;
        if (len > desc.n - 1) continue;
        std::vector<Monomial> monos;
        Monomial acc;
        enumerate_monomials(desc, len, 2, acc, monos);
        for (auto& m : monos) out.push_back(TermKey{a, std::move(m)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

GradedRankProfile poincare(RingDescriptor desc) {
    desc.validate();
    GradedRankProfile profile;
    const int w = desc.generator_degree();
    const int top = 2 * (desc.flavor == Flavor::th ? desc.d - 1 : 0) + (desc.n - 1) * w;
    for (int q = 0; q <= top; ++q) profile.set(q, basis_in_degree(desc, q).size());
    return profile;
}

RingElement y_element(RingDescriptor desc, int i, int j) {
    if (desc.flavor != Flavor::conf)
        throw std::invalid_argument("y elements live in the conf ring");
    validate_factor(i, j, desc);
    if (i > j) std::swap(i, j);
    if (i == 1 && j == 2) throw std::invalid_argument("y(1,2) is not defined");
    RawTerm pos;
    pos.factors.emplace_back(i, j);
    RawTerm neg;
    neg.coeff = -1;
    neg.factors.emplace_back(1, 2);
    return normal_form({pos, neg}, desc);
}

} // namespace gravop::arnold
