#ifndef NPBEAM_FIELD_GRIDS_HPP
#define NPBEAM_FIELD_GRIDS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "npbeam/types.hpp"

namespace npbeam {

struct Axis {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    int n = 2;

    // cell-center coordinate; endpoints of (lo, hi) are never touched
    double center(int i) const { return lo + (i + 0.5) * (hi - lo) / n; }
};

// 2-D sampled complex field, row-major (y outer, x inner). Cells whose
// generator threw a domain error are masked rather than silently NaN.
struct FieldGrid {
    Axis x_axis;
    Axis y_axis;
    std::vector<Complex> values;
    std::vector<std::uint8_t> mask;  // 1 = masked
    std::string generator;

    int index(int ix, int iy) const { return iy * x_axis.n + ix; }
};

using GridFn = std::function<Complex(double, double)>;

// Samples fn at cell centers. Domain errors become masked cells. Rows may be
// sampled by n_threads workers; the output bytes do not depend on the count.
FieldGrid sample_grid(const GridFn& fn, const Axis& x_axis, const Axis& y_axis,
                      int n_threads = 1);

enum class Figure { Fig3, Fig4, Fig5, Fig6 };

// Samples a fixed function/range preset:
//   Fig3: ln(x/(2y)) * cos(k*y)/(k*y),  x in (0,1),   y in (0,1000)
//   Fig4: same function,                x in (0,700), y in (0,100000)
//   Fig5: cos(k*y)/(k*y), 1-D,          y in (0,1000)
//   Fig6: same, 1-D,                    y in (0,100000)
// Fig5/Fig6 force n_x = 1.
FieldGrid figure_grid(Figure figure, double k, int n_x, int n_y);

// UTF-8 CSV: header "x,y,re,im", one row per cell (y outer, x inner),
// shortest round-trip decimals, masked cells leave re/im empty.
void export_csv(const FieldGrid& grid, std::ostream& out);

// Single JSON object with keys x_axis, y_axis, generator, re, im, mask
// (row-major nested arrays).
void export_json(const FieldGrid& grid, std::ostream& out);

// Decoded CSV content (CSV carries no axis metadata).
struct CsvData {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<Complex> values;
    std::vector<std::uint8_t> mask;
};

CsvData parse_csv(std::istream& in);
FieldGrid parse_json(std::istream& in);

// shortest round-trip decimal representation of a double
std::string format_double(double v);

}  // namespace npbeam

#endif
