/*
  Brute-force ground truth, kept deliberately naive and independent of the
  bijection code: classical pattern containment by scanning every
  k-subsequence, exhaustive permutation and path generation, and a sampled
  geometric cell count for the area statistic.
*/
#ifndef SCHROEDER_ORACLE_HPP
#define SCHROEDER_ORACLE_HPP

#include <functional>
#include <numeric>
#include <optional>

#include "schroeder/core.hpp"

namespace schroeder {

// Desk-scale enumeration caps: (n+1)! permutations resp. r_n paths.
inline constexpr int kMaxPermutationN = 9;
inline constexpr int kMaxPathN = 10;

// A classical pattern: a permutation of {1..k} in one-line notation.
class Pattern {
public:
    explicit Pattern(std::vector<int> values) : values_(std::move(values)) {
        if (values_.empty())
            throw InvalidPermutation("a pattern has at least one value");
        std::vector<char> seen(values_.size() + 1, 0);
        for (int v : values_) {
            if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v])
                throw InvalidPermutation("pattern values must be a permutation of 1.." +
                                         std::to_string(values_.size()));
            seen[v] = 1;
        }
    }

    std::size_t length() const { return values_.size(); }
    const std::vector<int>& values() const { return values_; }

private:
    std::vector<int> values_;
};

inline const Pattern kPattern4132{{4, 1, 3, 2}};
inline const Pattern kPattern4231{{4, 2, 3, 1}};

namespace detail {
// Order-isomorphism: relative comparisons of vals match those of pat.
inline bool matches_pattern(const std::vector<int>& vals, const std::vector<int>& pat) {
    for (std::size_t a = 0; a < vals.size(); ++a)
        for (std::size_t b = a + 1; b < vals.size(); ++b)
            if ((vals[a] < vals[b]) != (pat[a] < pat[b])) return false;
    return true;
}
}  // namespace detail

// First subsequence of p order-isomorphic to pat, scanning index sets in
// lexicographic order; O(n^k), fine at desk scale. Returns the value
// subsequence (the witness) or nullopt.
inline std::optional<std::vector<int>> find_occurrence(const Permutation& p,
                                                       const Pattern& pat) {
    const std::size_t n = p.length(), k = pat.length();
    if (k > n) return std::nullopt;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<int> vals(k);
    while (true) {
        for (std::size_t t = 0; t < k; ++t) vals[t] = p[idx[t]];
        if (detail::matches_pattern(vals, pat.values())) return vals;
        // next index combination
        std::size_t t = k;
        while (t-- > 0) {
            if (idx[t] + (k - t) < n) {
                ++idx[t];
                for (std::size_t u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
                break;
            }
            if (t == 0) return std::nullopt;
        }
    }
}

inline bool contains_pattern(const Permutation& p, const Pattern& pat) {
    return find_occurrence(p, pat).has_value();
}

// The slow route of the avoidance check; the fast route is is_avoider().
inline bool avoids_class(const Permutation& p) {
    return !contains_pattern(p, kPattern4132) && !contains_pattern(p, kPattern4231);
}

// Every permutation of [0,n], lexicographic order, (n+1)! total.
inline void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n > kMaxPermutationN)
        throw CapExceeded("permutation enumeration capped at n = " +
                          std::to_string(kMaxPermutationN));
    std::vector<int> v(n + 1);
    std::iota(v.begin(), v.end(), 0);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

// Every Schroeder n-path exactly once, by depth-first extension with the
// diagonal constraint pruning (E only when strictly above the diagonal).
inline void for_each_schroder_path(int n, const std::function<void(const SchroederPath&)>& fn) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n > kMaxPathN)
        throw CapExceeded("path enumeration capped at n = " + std::to_string(kMaxPathN));
    std::vector<Step> steps;
    auto extend = [&](auto&& self, int x, int y) -> void {
        if (x == n && y == n) {
            fn(SchroederPath(steps));
            return;
        }
        if (y < n) {
            steps.push_back(Step::North);
            self(self, x, y + 1);
            steps.pop_back();
        }
        if (x < n && y < n) {
            steps.push_back(Step::Diagonal);
            self(self, x + 1, y + 1);
            steps.pop_back();
        }
        if (x < y) {
            steps.push_back(Step::East);
            self(self, x + 1, y);
            steps.pop_back();
        }
    };
    extend(extend, 0, 0);
}

// Geometric count of unit cells [a,a+1]x[b,b+1], 0 <= a <= b < n, whose
// interior is wholly or partially left of the path. Tests a 4x4 grid of
// interior sample points against the path abscissa at the sample height;
// everything runs in eighths of a unit, so the comparisons are exact and a
// sample exactly on a diagonal step counts as not-left. Independent of
// area_left's step sum on purpose.
inline long long area_by_cells(const SchroederPath& path) {
    const int n = path.size();
    // abscissa of the path at height y8/8 (y8 not a multiple of 8), in eighths
    auto path_x8 = [&path](long long y8) -> long long {
        long long x = 0, y = 0;
        for (Step st : path.steps()) {
            switch (st) {
                case Step::North:
                    if (8 * y < y8 && y8 <= 8 * (y + 1)) return 8 * x;
                    ++y;
                    break;
                case Step::Diagonal:
                    if (8 * y < y8 && y8 <= 8 * (y + 1)) return 8 * x + (y8 - 8 * y);
                    ++x;
                    ++y;
                    break;
                case Step::East:
                    ++x;
                    break;
            }
        }
        return -1;  // not reached for 0 < y8 < 8n
    };
    long long cells = 0;
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a <= b; ++a) {
            bool left = false;
            for (int i = 0; i < 4 && !left; ++i)
                for (int j = 0; j < 4 && !left; ++j)
                    left = 8LL * a + 2 * i + 1 < path_x8(8LL * b + 2 * j + 1);
            cells += left;
        }
    }
    return cells;
}

}  // namespace schroeder

#endif  // SCHROEDER_ORACLE_HPP
