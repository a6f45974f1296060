#pragma once

#include <map>
#include <string>

namespace gravop {

/// Graded rank data: degree -> rank. Absent degrees mean rank zero; zero
/// entries are never stored.
class GradedRankProfile {
public:
    GradedRankProfile() = default;

    void set(int degree, std::size_t rank) {
        if (rank == 0)
            ranks_.erase(degree);
        else
            ranks_[degree] = rank;
    }

    void add(int degree, std::size_t rank) {
        if (rank == 0) return;
        set(degree, at(degree) + rank);
    }

    std::size_t at(int degree) const {
        auto it = ranks_.find(degree);
        return it == ranks_.end() ? 0 : it->second;
    }

    std::size_t total() const {
        std::size_t t = 0;
        for (auto& [q, r] : ranks_) t += r;
        return t;
    }

    bool empty() const { return ranks_.empty(); }

    const std::map<int, std::size_t>& ranks() const { return ranks_; }

    /// Shift every degree by `offset`.
    GradedRankProfile shifted(int offset) const {
        GradedRankProfile out;
        for (auto& [q, r] : ranks_) out.set(q + offset, r);
        return out;
    }

    /// Convolution: ranks of a tensor product of graded modules.
    GradedRankProfile convolved(const GradedRankProfile& other) const {
        GradedRankProfile out;
        for (auto& [q1, r1] : ranks_)
            for (auto& [q2, r2] : other.ranks_) out.add(q1 + q2, r1 * r2);
        return out;
    }

    bool operator==(const GradedRankProfile& other) const = default;

    /// Poincare polynomial in the variable t, ascending degrees, e.g.
    /// "1 + 3t + 2t^2". The zero profile prints as "0".
    std::string to_polynomial_string() const;

private:
    std::map<int, std::size_t> ranks_;
};

} // namespace gravop
