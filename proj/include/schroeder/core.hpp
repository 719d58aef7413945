/*
  Core value types and the bijection between {4132, 4231}-avoiding
  permutations on [0,n] and Schroeder n-paths.

  A Schroeder path walks from (0,0) to (n,n) with north N=(0,1), diagonal
  D=(1,1) and east E=(1,0) steps, never dropping below the diagonal y=x.
  The pivot representation is the truncated coinversion table c = (c_1..c_n)
  of a permutation p on [0,n]: c_i counts the values j < i placed before i
  in p (c_0 is omitted, it is always 0). Splitting c into its fixed points
  FP(c) = { i : c_i = i } and the remaining entries gives the path directly:
  D steps end at the x-coordinates in FP(c), N steps sit at the x-coordinates
  listed by c \ FP(c). The permutation avoids {4132, 4231} exactly when
  c \ FP(c) is weakly increasing, which is what makes the map total and
  reversible on avoiders.

  All types are immutable values validated on construction; all operations
  are pure and thread-safe.
*/
#ifndef SCHROEDER_CORE_HPP
#define SCHROEDER_CORE_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schroeder {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input; `column` is 1-based.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t column)
        : Error(what), column(column) {}
    std::size_t column;
};

// Structurally well-formed input that breaks a domain rule.
struct DomainError : Error {
    using Error::Error;
};

struct InvalidPermutation : DomainError {
    using DomainError::DomainError;
};

// A coinversion entry outside 0 <= c_i <= i, whether handed in directly or
// reconstructed from a split.
struct InvalidTable : DomainError {
    using DomainError::DomainError;
};

// A step word that dips below the diagonal or ends off it; `step_index`
// is 1-based (0 means the violation is at the endpoint).
struct InvalidPath : DomainError {
    InvalidPath(const std::string& what, std::size_t step_index)
        : DomainError(what), step_index(step_index) {}
    std::size_t step_index;
};

struct NotWeaklyIncreasing : DomainError {
    using DomainError::DomainError;
};

struct NotAnAvoider : DomainError {
    using DomainError::DomainError;
};

// Enumeration request beyond the documented desk-scale caps.
struct CapExceeded : Error {
    using Error::Error;
};

enum class Step : char { North = 'N', Diagonal = 'D', East = 'E' };

inline char step_char(Step s) { return static_cast<char>(s); }

// A permutation of {0, 1, ..., n} in one-line notation. The singleton "0"
// (n = 0) is legal.
class Permutation {
public:
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        if (values_.empty())
            throw InvalidPermutation("a permutation on [0,n] has at least one value");
        std::vector<char> seen(values_.size(), 0);
        for (int v : values_) {
            if (v < 0 || static_cast<std::size_t>(v) >= values_.size() || seen[v])
                throw InvalidPermutation(
                    "values must be a permutation of {0.." +
                    std::to_string(values_.size() - 1) + "}, got offending value " +
                    std::to_string(v));
            seen[v] = 1;
        }
    }

    std::size_t length() const { return values_.size(); }  // n + 1
    int n() const { return static_cast<int>(values_.size()) - 1; }
    int operator[](std::size_t i) const { return values_[i]; }
    const std::vector<int>& values() const { return values_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

// Truncated coinversion table (c_1..c_n), 0 <= c_i <= i. Stored 0-based;
// at(i) takes the 1-based index used everywhere in the math.
class CoinversionTable {
public:
    CoinversionTable() = default;
    explicit CoinversionTable(std::vector<int> entries) : entries_(std::move(entries)) {
        for (std::size_t k = 0; k < entries_.size(); ++k)
            if (entries_[k] < 0 || entries_[k] > static_cast<int>(k) + 1)
                throw InvalidTable("c_" + std::to_string(k + 1) + " = " +
                                   std::to_string(entries_[k]) +
                                   " violates 0 <= c_i <= i");
    }

    std::size_t size() const { return entries_.size(); }  // n
    int at(std::size_t i) const { return entries_.at(i - 1); }
    const std::vector<int>& entries() const { return entries_; }
    long long sum() const {
        return std::accumulate(entries_.begin(), entries_.end(), 0LL);
    }

    friend bool operator==(const CoinversionTable&, const CoinversionTable&) = default;

private:
    std::vector<int> entries_;
};

// The pair (FP(c), c \ FP(c)): fixed-point indices in increasing order and
// the remaining entries in index order. Consumers validate against n.
struct FixedPointSplit {
    std::vector<int> fixed_points;
    std::vector<int> non_fixed_values;

    friend bool operator==(const FixedPointSplit&, const FixedPointSplit&) = default;
};

// A Schroeder path; size n = #N + #D, so the endpoint is (n,n). Geometry is
// checked on construction: only an E step can dip below the diagonal, and
// the walk must end with x = y.
class SchroederPath {
public:
    SchroederPath() = default;
    explicit SchroederPath(std::vector<Step> steps) : steps_(std::move(steps)) {
        int x = 0, y = 0;
        for (std::size_t k = 0; k < steps_.size(); ++k) {
            switch (steps_[k]) {
                case Step::North: ++y; break;
                case Step::Diagonal: ++x; ++y; break;
                case Step::East: ++x; break;
            }
            if (y < x)
                throw InvalidPath("path drops below the diagonal at step " +
                                      std::to_string(k + 1),
                                  k + 1);
        }
        if (x != y)
            throw InvalidPath("path ends off the diagonal at (" + std::to_string(x) +
                                  "," + std::to_string(y) + ")",
                              0);
        size_ = y;
    }

    const std::vector<Step>& steps() const { return steps_; }
    int size() const { return size_; }

    friend bool operator==(const SchroederPath&, const SchroederPath&) = default;

private:
    std::vector<Step> steps_;
    int size_ = 0;
};

// c_i = #{ j : 0 <= j < i and j precedes i in p }.
inline CoinversionTable coinversion_table(const Permutation& p) {
    const int n = p.n();
    std::vector<int> pos(n + 1);
    for (std::size_t k = 0; k < p.length(); ++k) pos[p[k]] = static_cast<int>(k);
    std::vector<int> entries;
    entries.reserve(n);
    for (int i = 1; i <= n; ++i) {
        int c = 0;
        for (int j = 0; j < i; ++j) c += pos[j] < pos[i];
        entries.push_back(c);
    }
    return CoinversionTable(std::move(entries));
}

// Inverse of coinversion_table: start from (0) and insert value i at
// position c_i, so exactly c_i smaller values precede it.
inline Permutation permutation_from_table(const CoinversionTable& c) {
    std::vector<int> p{0};
    for (std::size_t i = 1; i <= c.size(); ++i)
        p.insert(p.begin() + c.at(i), static_cast<int>(i));
    return Permutation(std::move(p));
}

inline FixedPointSplit split_fixed_points(const CoinversionTable& c) {
    FixedPointSplit s;
    for (std::size_t i = 1; i <= c.size(); ++i) {
        if (c.at(i) == static_cast<int>(i))
            s.fixed_points.push_back(static_cast<int>(i));
        else
            s.non_fixed_values.push_back(c.at(i));
    }
    return s;
}

inline bool weakly_increasing(const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end());
}

// The unique Schroeder n-path whose D steps end at the x-coordinates in
// s.fixed_points and whose N steps, in path order, sit at the x-coordinates
// s.non_fixed_values. Column sweep: at column x emit every N with that
// coordinate, then D if x+1 is a fixed point, else E — so a D enters its
// column before that column's N steps.
inline SchroederPath path_from_split(int n, const FixedPointSplit& s) {
    if (!weakly_increasing(s.non_fixed_values))
        throw NotWeaklyIncreasing("c \\ FP(c) is not weakly increasing");
    if (s.fixed_points.size() + s.non_fixed_values.size() != static_cast<std::size_t>(n))
        throw InvalidPath("split has " +
                              std::to_string(s.fixed_points.size() +
                                             s.non_fixed_values.size()) +
                              " entries, expected " + std::to_string(n),
                          0);
    for (std::size_t k = 0; k < s.fixed_points.size(); ++k) {
        int f = s.fixed_points[k];
        if (f < 1 || f > n || (k > 0 && s.fixed_points[k - 1] >= f))
            throw InvalidPath("fixed points must be strictly increasing within 1.." +
                                  std::to_string(n),
                              0);
    }
    for (int v : s.non_fixed_values)
        if (v < 0 || v >= n)
            throw InvalidPath("north x-coordinate " + std::to_string(v) +
                                  " outside 0.." + std::to_string(n - 1),
                              0);

    std::vector<Step> steps;
    steps.reserve(2 * s.non_fixed_values.size() + n);
    std::size_t next_n = 0, next_d = 0;
    for (int x = 0; x < n; ++x) {
        while (next_n < s.non_fixed_values.size() && s.non_fixed_values[next_n] == x) {
            steps.push_back(Step::North);
            ++next_n;
        }
        if (next_d < s.fixed_points.size() && s.fixed_points[next_d] == x + 1) {
            steps.push_back(Step::Diagonal);
            ++next_d;
        } else {
            steps.push_back(Step::East);
        }
    }
    return SchroederPath(std::move(steps));  // throws InvalidPath on inconsistent data
}

// Read the split back off a path: D endpoints and N abscissas in path order.
inline FixedPointSplit split_from_path(const SchroederPath& path) {
    FixedPointSplit s;
    int x = 0;
    for (Step st : path.steps()) {
        switch (st) {
            case Step::North: s.non_fixed_values.push_back(x); break;
            case Step::Diagonal: s.fixed_points.push_back(++x); break;
            case Step::East: ++x; break;
        }
    }
    return s;
}

// Reassemble the table: c_i = i on fixed points, remaining indices take
// non_fixed_values in order. The bound 0 <= c_i <= i holds for every split
// read off a valid Schroeder path; violations signal data from outside the
// bijection's image.
inline CoinversionTable table_from_split(int n, const FixedPointSplit& s) {
    if (s.fixed_points.size() + s.non_fixed_values.size() != static_cast<std::size_t>(n))
        throw InvalidTable("split has " +
                           std::to_string(s.fixed_points.size() +
                                          s.non_fixed_values.size()) +
                           " entries, expected " + std::to_string(n));
    std::vector<char> fixed(n + 1, 0);
    for (int f : s.fixed_points) {
        if (f < 1 || f > n || fixed[f])
            throw InvalidTable("fixed point " + std::to_string(f) +
                               " outside 1..n or repeated");
        fixed[f] = 1;
    }
    std::vector<int> entries(n);
    std::size_t next = 0;
    for (int i = 1; i <= n; ++i)
        entries[i - 1] = fixed[i] ? i : s.non_fixed_values[next++];
    return CoinversionTable(std::move(entries));  // throws InvalidTable past the bound
}

// Fast avoidance predicate from the table characterization.
inline bool is_avoider(const Permutation& p) {
    return weakly_increasing(split_fixed_points(coinversion_table(p)).non_fixed_values);
}

inline SchroederPath permutation_to_path(const Permutation& p) {
    FixedPointSplit s = split_fixed_points(coinversion_table(p));
    if (!weakly_increasing(s.non_fixed_values))
        throw NotAnAvoider("permutation is not a {4132,4231}-avoider");
    return path_from_split(p.n(), s);
}

inline Permutation path_to_permutation(const SchroederPath& path) {
    return permutation_from_table(table_from_split(path.size(), split_from_path(path)));
}

// Number of unit squares on or above the diagonal lying wholly or partially
// to the left of the path. Row y..y+1 is crossed by exactly one N or D step,
// and contributes that step's ending x-coordinate, so the total is the sum
// of the x-coordinates of the N and D steps (equal to sum c_i under the
// bijection). An independent cell-counting oracle checks this in tests.
inline long long area_left(const SchroederPath& path) {
    long long area = 0;
    int x = 0;
    for (Step st : path.steps()) {
        switch (st) {
            case Step::North: area += x; break;
            case Step::Diagonal: area += ++x; break;
            case Step::East: ++x; break;
        }
    }
    return area;
}

// #{ (i,j) : i before j, p_i > p_j }; equals C(n+1,2) - sum c_i.
inline long long inversions(const Permutation& p) {
    long long inv = 0;
    for (std::size_t i = 0; i < p.length(); ++i)
        for (std::size_t j = i + 1; j < p.length(); ++j)
            inv += p[i] > p[j];
    return inv;
}

// Values smaller than everything to their right, ascending. The nonzero
// ones are exactly the fixed points of the coinversion table.
inline std::vector<int> right_to_left_minima(const Permutation& p) {
    std::vector<int> out;
    int best = static_cast<int>(p.length());
    for (std::size_t k = p.length(); k-- > 0;) {
        if (p[k] < best) {
            best = p[k];
            out.push_back(best);
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace schroeder

#endif  // SCHROEDER_CORE_HPP
