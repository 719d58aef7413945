/*
  Counting and distribution machinery: the large Schroeder numbers r_n
  (1, 2, 6, 22, 90, ...) by the first-return convolution recurrence
  r_{n+1} = r_n + sum_{k=0..n} r_k r_{n-k}, a census generator that walks
  coinversion tables with weakly increasing non-fixed part (so it produces
  exactly the {4132,4231}-avoiders, r_n of them, without touching the other
  (n+1)! - r_n permutations), and integer histograms for the area/coinversion
  statistic pair.
*/
#ifndef SCHROEDER_ENUMERATION_HPP
#define SCHROEDER_ENUMERATION_HPP

#include <map>

#include "schroeder/core.hpp"
#include "schroeder/oracle.hpp"

namespace schroeder {

// Census and histogram cap; r_10 = 1037718 keeps full sweeps in seconds.
inline constexpr int kMaxCensusN = 10;

// Exact integer histogram of a statistic.
class StatHistogram {
public:
    void add(long long value) {
        ++bins_[value];
        ++total_;
    }

    const std::map<long long, long long>& bins() const { return bins_; }
    long long total() const { return total_; }

    friend bool operator==(const StatHistogram&, const StatHistogram&) = default;

private:
    std::map<long long, long long> bins_;
    long long total_ = 0;
};

// r_0..r_max in checked 64-bit arithmetic; throws std::overflow_error once a
// value would wrap (first at r_28).
inline std::vector<long long> schroder_numbers(int max) {
    if (max < 0) throw std::invalid_argument("max must be >= 0");
    std::vector<long long> r{1};
    for (int n = 0; n < max; ++n) {
        long long conv = 0, next = 0;
        for (int k = 0; k <= n; ++k) {
            long long term = 0;
            if (__builtin_mul_overflow(r[k], r[n - k], &term) ||
                __builtin_add_overflow(conv, term, &conv))
                throw std::overflow_error("r_" + std::to_string(n + 1) +
                                          " exceeds 64-bit range");
        }
        if (__builtin_add_overflow(r[n], conv, &next))
            throw std::overflow_error("r_" + std::to_string(n + 1) +
                                      " exceeds 64-bit range");
        r.push_back(next);
    }
    return r;
}

// Every {4132,4231}-avoider on [0,n], in lexicographic order of its
// coinversion table. Entry c_i ranges over {lo..i-1} (non-fixed, must not
// fall below the previous non-fixed value) plus i (fixed point).
inline void for_each_avoider(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n > kMaxCensusN)
        throw CapExceeded("census capped at n = " + std::to_string(kMaxCensusN));
    std::vector<int> entries;
    entries.reserve(n);
    auto rec = [&](auto&& self, int i, int lo) -> void {
        if (i > n) {
            fn(permutation_from_table(CoinversionTable(entries)));
            return;
        }
        for (int v = lo; v < i; ++v) {
            entries.push_back(v);
            self(self, i + 1, v);
            entries.pop_back();
        }
        entries.push_back(i);
        self(self, i + 1, lo);
        entries.pop_back();
    };
    rec(rec, 1, 0);
}

// area_left over all Schroeder n-paths; total is r_n.
inline StatHistogram area_histogram(int n) {
    if (n > kMaxCensusN)
        throw CapExceeded("histogram capped at n = " + std::to_string(kMaxCensusN));
    StatHistogram h;
    for_each_schroder_path(n, [&h](const SchroederPath& q) { h.add(area_left(q)); });
    return h;
}

// sum c_i over all avoiders on [0,n]; equals area_histogram(n) bin for bin,
// since the bijection transports the statistic.
inline StatHistogram coinversion_histogram(int n) {
    if (n > kMaxCensusN)
        throw CapExceeded("histogram capped at n = " + std::to_string(kMaxCensusN));
    StatHistogram h;
    for_each_avoider(n, [&h](const Permutation& p) { h.add(coinversion_table(p).sum()); });
    return h;
}

}  // namespace schroeder

#endif  // SCHROEDER_ENUMERATION_HPP
