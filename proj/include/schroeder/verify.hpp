/*
  Exhaustive checks of everything the bijection promises, each over all
  objects up to a size bound, stopping at the first (minimal) counterexample:

    table_round_trip        p -> c -> p is the identity on all permutations
    encode_round_trip       p -> path -> p on every avoider
    decode_round_trip       path -> p -> path on every Schroeder path
    proposition_equivalence fast predicate (c \ FP(c) weakly increasing)
                            agrees with the naive {4132,4231} scan
    count_agreement         #avoiders = #paths = r_n
    statistic_transport     area(path) = sum c_i = C(n+1,2) - inversions
    area_oracle             step-sum area = geometric cell count
    rtl_minima              FP(c) = nonzero right-to-left minimum values
    path_image              every path decodes inside the table bounds to an
                            avoider, with #E = #N and #N + #D = size
*/
#ifndef SCHROEDER_VERIFY_HPP
#define SCHROEDER_VERIFY_HPP

#include "schroeder/enumeration.hpp"
#include "schroeder/oracle.hpp"
#include "schroeder/text.hpp"

namespace schroeder {

// cmd_verify bound: n = 8 already means 9! naive pattern scans.
inline constexpr int kMaxVerifyN = 8;
// the sampled cell count is the quadratic-cost side; its suite stops here
inline constexpr int kMaxAreaOracleN = 6;

struct SuiteResult {
    std::string name;
    int n_max = 0;           // range actually covered
    long long cases = 0;
    bool passed = true;
    std::string counterexample;  // empty when passed
    std::string note;            // extra detail (e.g. the counts)
};

namespace detail {

template <typename Check>
SuiteResult over_permutations(const std::string& name, int n_max, Check check) {
    SuiteResult r{name, n_max};
    for (int n = 0; n <= n_max && r.passed; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            if (!r.passed) return;
            ++r.cases;
            if (!check(p)) {
                r.passed = false;
                r.counterexample = "p = " + to_string(p);
            }
        });
    return r;
}

template <typename Check>
SuiteResult over_paths(const std::string& name, int n_max, Check check) {
    SuiteResult r{name, n_max};
    for (int n = 0; n <= n_max && r.passed; ++n)
        for_each_schroder_path(n, [&](const SchroederPath& q) {
            if (!r.passed) return;
            ++r.cases;
            if (!check(q)) {
                r.passed = false;
                r.counterexample = "path = " + path_word(q);
            }
        });
    return r;
}

}  // namespace detail

inline SuiteResult check_table_round_trip(int n_max) {
    return detail::over_permutations("table_round_trip", n_max, [](const Permutation& p) {
        return permutation_from_table(coinversion_table(p)) == p;
    });
}

inline SuiteResult check_encode_round_trip(int n_max) {
    SuiteResult r{"encode_round_trip", n_max};
    for (int n = 0; n <= n_max && r.passed; ++n)
        for_each_avoider(n, [&](const Permutation& p) {
            if (!r.passed) return;
            ++r.cases;
            if (path_to_permutation(permutation_to_path(p)) != p) {
                r.passed = false;
                r.counterexample = "p = " + to_string(p);
            }
        });
    return r;
}

inline SuiteResult check_decode_round_trip(int n_max) {
    return detail::over_paths("decode_round_trip", n_max, [](const SchroederPath& q) {
        return permutation_to_path(path_to_permutation(q)) == q;
    });
}

inline SuiteResult check_proposition(int n_max) {
    return detail::over_permutations("proposition_equivalence", n_max,
                                     [](const Permutation& p) {
                                         return is_avoider(p) == avoids_class(p);
                                     });
}

inline SuiteResult check_count_agreement(int n_max) {
    SuiteResult r{"count_agreement", n_max};
    std::vector<long long> rn = schroder_numbers(n_max);
    std::string counts;
    for (int n = 0; n <= n_max; ++n) {
        long long paths = 0, avoiders = 0;
        for_each_schroder_path(n, [&](const SchroederPath&) { ++paths; });
        for_each_avoider(n, [&](const Permutation&) { ++avoiders; });
        r.cases += paths + avoiders;
        counts += (n ? " " : "") + std::to_string(rn[n]);
        if (paths != rn[n] || avoiders != rn[n]) {
            r.passed = false;
            r.counterexample = "n = " + std::to_string(n) + ": paths " +
                               std::to_string(paths) + ", avoiders " +
                               std::to_string(avoiders) + ", r_n " +
                               std::to_string(rn[n]);
            break;
        }
    }
    r.note = "counts " + counts;
    return r;
}

inline SuiteResult check_statistic_transport(int n_max) {
    SuiteResult r{"statistic_transport", n_max};
    for (int n = 0; n <= n_max && r.passed; ++n) {
        for_each_avoider(n, [&](const Permutation& p) {
            if (!r.passed) return;
            ++r.cases;
            long long csum = coinversion_table(p).sum();
            long long pairs = static_cast<long long>(n + 1) * n / 2;
            if (area_left(permutation_to_path(p)) != csum ||
                inversions(p) != pairs - csum) {
                r.passed = false;
                r.counterexample = "p = " + to_string(p);
            }
        });
        if (r.passed && area_histogram(n) != coinversion_histogram(n)) {
            r.passed = false;
            r.counterexample = "histograms differ at n = " + std::to_string(n);
        }
    }
    return r;
}

inline SuiteResult check_area_oracle(int n_max) {
    return detail::over_paths("area_oracle", std::min(n_max, kMaxAreaOracleN),
                              [](const SchroederPath& q) {
                                  return area_left(q) == area_by_cells(q);
                              });
}

inline SuiteResult check_rtl_minima(int n_max) {
    return detail::over_permutations("rtl_minima", n_max, [](const Permutation& p) {
        std::vector<int> nonzero;
        for (int v : right_to_left_minima(p))
            if (v != 0) nonzero.push_back(v);
        return split_fixed_points(coinversion_table(p)).fixed_points == nonzero;
    });
}

inline SuiteResult check_path_image(int n_max) {
    return detail::over_paths("path_image", n_max, [](const SchroederPath& q) {
        long long north = 0, diag = 0, east = 0;
        for (Step st : q.steps()) {
            if (st == Step::North) ++north;
            else if (st == Step::Diagonal) ++diag;
            else ++east;
        }
        if (east != north || north + diag != q.size()) return false;
        try {
            return avoids_class(path_to_permutation(q));
        } catch (const InvalidTable&) {
            return false;
        }
    });
}

inline std::vector<SuiteResult> run_all_suites(int n_max) {
    return {
        check_table_round_trip(n_max),  check_encode_round_trip(n_max),
        check_decode_round_trip(n_max), check_proposition(n_max),
        check_count_agreement(n_max),   check_statistic_transport(n_max),
        check_area_oracle(n_max),       check_rtl_minima(n_max),
        check_path_image(n_max),
    };
}

}  // namespace schroeder

#endif  // SCHROEDER_VERIFY_HPP
