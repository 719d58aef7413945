/*
  Path drawings. ASCII mode prints the lattice region above the diagonal
  with the path overlaid ('|' north, '-' east, '/' diagonal steps, dotted
  reference diagonal). SVG mode emits a standalone document with one line
  per step, a dashed diagonal, grid dots, and optionally one shaded unit
  square per cell lying wholly or partially left of the path. Output is
  integer-coordinate and byte-deterministic.
*/
#ifndef SCHROEDER_RENDER_HPP
#define SCHROEDER_RENDER_HPP

#include <sstream>

#include "schroeder/core.hpp"

namespace schroeder {

struct RenderSpec {
    enum class Format { Ascii, Svg };
    Format format = Format::Ascii;
    int cell_size = 40;       // svg pixels per unit
    bool shade_area = false;  // shade the left region (svg)
};

inline std::string render_ascii(const SchroederPath& path) {
    const int n = path.size();
    const int dim = 2 * n + 1;
    std::vector<std::string> canvas(dim, std::string(dim, ' '));
    // lattice points of the region y >= x, plus a dotted reference diagonal
    for (int y = 0; y <= n; ++y)
        for (int x = 0; x <= y; ++x) canvas[2 * (n - y)][2 * x] = '.';
    for (int k = 0; k < n; ++k) canvas[2 * (n - k) - 1][2 * k + 1] = '.';
    int x = 0, y = 0;
    for (Step st : path.steps()) {
        switch (st) {
            case Step::North: canvas[2 * (n - y) - 1][2 * x] = '|'; ++y; break;
            case Step::Diagonal: canvas[2 * (n - y) - 1][2 * x + 1] = '/'; ++x; ++y; break;
            case Step::East: canvas[2 * (n - y)][2 * x + 1] = '-'; ++x; break;
        }
    }
    std::ostringstream os;
    for (std::string& row : canvas) {
        row.erase(row.find_last_not_of(' ') + 1);
        os << row << '\n';
    }
    return os.str();
}

inline std::string render_svg(const SchroederPath& path, int cell_size, bool shade_area) {
    if (cell_size < 1) throw std::invalid_argument("cell_size must be >= 1");
    const int n = path.size();
    const int cs = cell_size;
    const int m = cs;  // margin
    const int wh = n * cs + 2 * m;
    auto X = [&](int x) { return m + x * cs; };
    auto Y = [&](int y) { return m + (n - y) * cs; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << wh << "\" height=\""
       << wh << "\" viewBox=\"0 0 " << wh << " " << wh << "\">\n";

    if (shade_area) {
        // one square per cell left of the path: the step crossing row b ends
        // at abscissa e, covering cells a = 0..e-1
        int x = 0, y = 0;
        for (Step st : path.steps()) {
            int end_x = -1;
            switch (st) {
                case Step::North: end_x = x; break;
                case Step::Diagonal: end_x = ++x; break;
                case Step::East: ++x; continue;
            }
            for (int a = 0; a < end_x; ++a)
                os << "  <rect class=\"cell\" x=\"" << X(a) << "\" y=\"" << Y(y + 1)
                   << "\" width=\"" << cs << "\" height=\"" << cs
                   << "\" fill=\"#ffee55\"/>\n";
            ++y;
        }
    }

    const int dot = std::max(1, cs / 12);
    for (int y = 0; y <= n; ++y)
        for (int x = 0; x <= y; ++x)
            os << "  <circle class=\"grid\" cx=\"" << X(x) << "\" cy=\"" << Y(y)
               << "\" r=\"" << dot << "\" fill=\"#c8c8c8\"/>\n";

    os << "  <polyline class=\"frame\" points=\"" << X(0) << "," << Y(0) << " " << X(0)
       << "," << Y(n) << " " << X(n) << "," << Y(n)
       << "\" fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\"/>\n";
    const int dash = std::max(2, cs / 5);
    os << "  <line class=\"diagonal\" x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\""
       << X(n) << "\" y2=\"" << Y(n) << "\" stroke=\"#888888\" stroke-width=\"1\""
       << " stroke-dasharray=\"" << dash << " " << dash << "\"/>\n";

    const int pw = std::max(2, cs / 12);
    int x = 0, y = 0;
    for (Step st : path.steps()) {
        int x2 = x, y2 = y;
        switch (st) {
            case Step::North: ++y2; break;
            case Step::Diagonal: ++x2; ++y2; break;
            case Step::East: ++x2; break;
        }
        os << "  <line class=\"step\" x1=\"" << X(x) << "\" y1=\"" << Y(y) << "\" x2=\""
           << X(x2) << "\" y2=\"" << Y(y2)
           << "\" stroke=\"#000000\" stroke-width=\"" << pw
           << "\" stroke-linecap=\"round\"/>\n";
        x = x2;
        y = y2;
    }
    os << "</svg>\n";
    return os.str();
}

inline std::string render(const SchroederPath& path, const RenderSpec& spec) {
    return spec.format == RenderSpec::Format::Ascii
               ? render_ascii(path)
               : render_svg(path, spec.cell_size, spec.shade_area);
}

}  // namespace schroeder

#endif  // SCHROEDER_RENDER_HPP
