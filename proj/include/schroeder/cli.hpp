/*
  Command implementations behind the schroeder binary, parameterized on
  streams so tests can drive them in-process. Exit codes: 0 success,
  1 verification failure, 2 parse/usage trouble, 3 domain violation.
*/
#ifndef SCHROEDER_CLI_HPP
#define SCHROEDER_CLI_HPP

#include <ostream>

#include "schroeder/render.hpp"
#include "schroeder/text.hpp"
#include "schroeder/verify.hpp"

namespace schroeder {

enum class OutputFormat { Text, Json };

namespace detail {

inline int fail(std::ostream& err, const std::exception& e, int code) {
    err << "error: " << e.what() << '\n';
    return code;
}

template <typename Body>
int guarded(std::ostream& err, Body body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return fail(err, e, 2);
    } catch (const CapExceeded& e) {
        return fail(err, e, 2);
    } catch (const DomainError& e) {
        return fail(err, e, 3);
    } catch (const std::overflow_error& e) {
        return fail(err, e, 2);
    } catch (const std::invalid_argument& e) {
        return fail(err, e, 2);
    }
}

inline nlohmann::json pair_report(const Permutation& p, const SchroederPath& q) {
    const CoinversionTable c = coinversion_table(p);
    const FixedPointSplit s = split_fixed_points(c);
    return {{"permutation", p.values()},
            {"path", path_word(q)},
            {"table", c.entries()},
            {"fixed_points", s.fixed_points},
            {"non_fixed", s.non_fixed_values},
            {"coinversions", c.sum()},
            {"inversions", inversions(p)}};
}

// first line: the primary result; then the shared detail block
inline void print_pair_text(std::ostream& out, const std::string& first,
                            const Permutation& p) {
    const CoinversionTable c = coinversion_table(p);
    const FixedPointSplit s = split_fixed_points(c);
    out << first << '\n'
        << "c: " << to_string(c) << '\n'
        << "FP: " << join(s.fixed_points) << '\n'
        << "c\\FP: " << join(s.non_fixed_values) << '\n'
        << "coinversions: " << c.sum() << '\n'
        << "inversions: " << inversions(p) << '\n';
}

}  // namespace detail

inline int run_encode(const std::string& input, OutputFormat fmt, std::ostream& out,
                      std::ostream& err) {
    return detail::guarded(err, [&] {
        const Permutation p = parse_permutation(input);
        const FixedPointSplit s = split_fixed_points(coinversion_table(p));
        if (!weakly_increasing(s.non_fixed_values)) {
            auto witness = find_occurrence(p, kPattern4132);
            const char* which = "4132";
            if (!witness) {
                witness = find_occurrence(p, kPattern4231);
                which = "4231";
            }
            err << "error: not a {4132,4231}-avoider";
            if (witness) err << " (witness " << join(*witness) << " matches " << which << ")";
            err << '\n';
            return 3;
        }
        const SchroederPath q = path_from_split(p.n(), s);
        if (fmt == OutputFormat::Json)
            out << detail::pair_report(p, q).dump() << '\n';
        else
            detail::print_pair_text(out, path_word(q), p);
        return 0;
    });
}

inline int run_decode(const std::string& input, OutputFormat fmt, std::ostream& out,
                      std::ostream& err) {
    return detail::guarded(err, [&] {
        const SchroederPath q = parse_path_word(input);
        const Permutation p = path_to_permutation(q);
        if (fmt == OutputFormat::Json)
            out << detail::pair_report(p, q).dump() << '\n';
        else
            detail::print_pair_text(out, to_string(p), p);
        return 0;
    });
}

inline int run_verify(int n_max, OutputFormat fmt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        if (n_max < 0 || n_max > kMaxVerifyN)
            throw CapExceeded("verify supports 0 <= n_max <= " +
                              std::to_string(kMaxVerifyN));
        bool all_passed = true;
        for (const SuiteResult& r : run_all_suites(n_max)) {
            all_passed = all_passed && r.passed;
            if (fmt == OutputFormat::Json) {
                nlohmann::json j{{"suite", r.name},
                                 {"n_max", r.n_max},
                                 {"cases", r.cases},
                                 {"passed", r.passed}};
                if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
                if (!r.note.empty()) j["note"] = r.note;
                out << j.dump() << '\n';
            } else {
                out << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (n <= "
                    << r.n_max << ", " << r.cases << " cases";
                if (!r.note.empty()) out << ", " << r.note;
                out << ")";
                if (!r.counterexample.empty())
                    out << " counterexample: " << r.counterexample;
                out << '\n';
            }
        }
        if (fmt == OutputFormat::Json)
            out << nlohmann::json{{"result", all_passed ? "PASS" : "FAIL"}}.dump() << '\n';
        else
            out << "result: " << (all_passed ? "PASS" : "FAIL") << '\n';
        return all_passed ? 0 : 1;
    });
}

inline int run_stats(int n, OutputFormat fmt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const StatHistogram area = area_histogram(n);
        const StatHistogram coinv = coinversion_histogram(n);
        const bool equal = area == coinv;
        if (fmt == OutputFormat::Json) {
            out << nlohmann::json{{"n", n},
                                  {"area", histogram_json(n, "area", area)},
                                  {"coinversion", histogram_json(n, "coinversion", coinv)},
                                  {"verdict", equal ? "EQUAL" : "UNEQUAL"}}
                       .dump()
                << '\n';
        } else {
            out << "n: " << n << '\n' << "value\tarea\tcoinversion\n";
            std::map<long long, std::pair<long long, long long>> merged;
            for (const auto& [v, cnt] : area.bins()) merged[v].first = cnt;
            for (const auto& [v, cnt] : coinv.bins()) merged[v].second = cnt;
            for (const auto& [v, counts] : merged)
                out << v << '\t' << counts.first << '\t' << counts.second << '\n';
            out << "total\t" << area.total() << '\t' << coinv.total() << '\n'
                << "verdict: " << (equal ? "EQUAL" : "UNEQUAL") << '\n';
        }
        return equal ? 0 : 1;
    });
}

inline int run_census(int n, OutputFormat fmt, std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        for_each_avoider(n, [&](const Permutation& p) {
            if (fmt == OutputFormat::Json)
                out << nlohmann::json{{"permutation", p.values()}}.dump() << '\n';
            else
                out << to_string(p) << '\n';
        });
        return 0;
    });
}

inline int run_render(const std::string& input, const RenderSpec& spec, std::ostream& out,
                      std::ostream& err) {
    return detail::guarded(err, [&] {
        out << render(parse_path_word(input), spec);
        return 0;
    });
}

}  // namespace schroeder

#endif  // SCHROEDER_CLI_HPP
