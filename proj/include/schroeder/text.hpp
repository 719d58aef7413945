/*
  Wire formats: permutations as whitespace-separated decimal integers, paths
  as words over {N, D, E} (whitespace ignored), histograms as two-column text
  or a JSON object with keys "n", "statistic", "bins", "total". Parsers
  report 1-based columns on rejection.
*/
#ifndef SCHROEDER_TEXT_HPP
#define SCHROEDER_TEXT_HPP

#include <cctype>
#include <sstream>
#include <string_view>

#include "json.hpp"
#include "schroeder/core.hpp"
#include "schroeder/enumeration.hpp"

namespace schroeder {

inline Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char ch = static_cast<unsigned char>(text[i]);
        if (std::isspace(ch)) {
            ++i;
            continue;
        }
        if (!std::isdigit(ch))
            throw ParseError("unexpected character '" + std::string(1, text[i]) +
                                 "' at column " + std::to_string(i + 1) +
                                 " (expected a decimal value)",
                             i + 1);
        long long v = 0;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000)
                throw ParseError("value starting at column " + std::to_string(start + 1) +
                                     " is out of range",
                                 start + 1);
            ++i;
        }
        values.push_back(static_cast<int>(v));
    }
    if (values.empty()) throw ParseError("empty permutation", 1);
    return Permutation(std::move(values));
}

inline SchroederPath parse_path_word(std::string_view text) {
    std::vector<Step> steps;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'N': steps.push_back(Step::North); break;
            case 'D': steps.push_back(Step::Diagonal); break;
            case 'E': steps.push_back(Step::East); break;
            default:
                if (std::isspace(static_cast<unsigned char>(text[i]))) break;
                throw ParseError("invalid step character '" + std::string(1, text[i]) +
                                     "' at column " + std::to_string(i + 1) +
                                     " (expected N, D, or E)",
                                 i + 1);
        }
    }
    return SchroederPath(std::move(steps));
}

inline std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

inline std::string to_string(const Permutation& p) { return join(p.values()); }
inline std::string to_string(const CoinversionTable& c) { return join(c.entries()); }

inline std::string path_word(const SchroederPath& path) {
    std::string w;
    w.reserve(path.steps().size());
    for (Step st : path.steps()) w.push_back(step_char(st));
    return w;
}

// Two-column export: "value<TAB>count" per bin, ascending.
inline std::string histogram_tsv(const StatHistogram& h) {
    std::ostringstream os;
    for (const auto& [value, count] : h.bins()) os << value << '\t' << count << '\n';
    return os.str();
}

inline nlohmann::json histogram_json(int n, std::string_view statistic,
                                     const StatHistogram& h) {
    nlohmann::json bins = nlohmann::json::object();
    for (const auto& [value, count] : h.bins()) bins[std::to_string(value)] = count;
    return {{"n", n}, {"statistic", statistic}, {"bins", bins}, {"total", h.total()}};
}

}  // namespace schroeder

#endif  // SCHROEDER_TEXT_HPP
