// Walk one permutation through the whole pipeline: table, split, path,
// statistics, and an ascii drawing, then back again.
#include <iostream>

#include "schroeder/oracle.hpp"
#include "schroeder/render.hpp"
#include "schroeder/text.hpp"

int main() {
    using namespace schroeder;

    const Permutation p = parse_permutation("2 1 0 7 9 6 10 5 3 4 8");
    const CoinversionTable c = coinversion_table(p);
    const FixedPointSplit s = split_fixed_points(c);
    const SchroederPath q = permutation_to_path(p);

    std::cout << "p:            " << to_string(p) << '\n'
              << "c:            " << to_string(c) << '\n'
              << "FP(c):        " << join(s.fixed_points) << '\n'
              << "c\\FP(c):      " << join(s.non_fixed_values) << '\n'
              << "path:         " << path_word(q) << '\n'
              << "area:         " << area_left(q) << "  (cell count "
              << area_by_cells(q) << ")\n"
              << "coinversions: " << c.sum() << '\n'
              << "inversions:   " << inversions(p) << '\n'
              << '\n'
              << render_ascii(q) << '\n'
              << "decoded back: " << to_string(path_to_permutation(q)) << '\n';
    return 0;
}
