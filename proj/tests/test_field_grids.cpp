#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "npbeam/field_grids.hpp"

using namespace npbeam;
namespace {
constexpr double kPi = std::numbers::pi;

FieldGrid one_cell_grid(Complex v, bool masked = false) {
    FieldGrid g;
    g.x_axis = {"x", 0.0, 1.0, 1};
    g.y_axis = {"y", 0.0, 1.0, 1};
    g.values = {v};
    g.mask = {static_cast<std::uint8_t>(masked ? 1 : 0)};
    g.generator = "test";
    return g;
}
}  // namespace

TEST_CASE("axis cell centers") {
    const Axis ax{"x", 0.0, 1.0, 4};
    CHECK(ax.center(0) == doctest::Approx(0.125));
    CHECK(ax.center(3) == doctest::Approx(0.875));
    // open interval: endpoints never sampled
    const Axis single{"y", 0.0, 1000.0, 1};
    CHECK(single.center(0) == doctest::Approx(500.0));
}

TEST_CASE("sample_grid evaluates cell centers") {
    const GridFn fn = [](double x, double y) { return Complex{x + 10.0 * y, x * y}; };
    const FieldGrid g = sample_grid(fn, {"x", 0.0, 1.0, 3}, {"y", 0.0, 2.0, 2});
    REQUIRE(g.values.size() == 6);
    for (int iy = 0; iy < 2; ++iy)
        for (int ix = 0; ix < 3; ++ix) {
            // bit-equal to a direct re-evaluation
            CHECK(g.values[g.index(ix, iy)] ==
                  fn(g.x_axis.center(ix), g.y_axis.center(iy)));
            CHECK(g.mask[g.index(ix, iy)] == 0);
        }
    CHECK_THROWS_AS(sample_grid(fn, {"x", 1.0, 0.0, 3}, {"y", 0.0, 2.0, 2}), DomainError);
    CHECK_THROWS_AS(sample_grid(fn, {"x", 0.0, 1.0, 0}, {"y", 0.0, 2.0, 2}), DomainError);
}

TEST_CASE("domain errors become masked cells") {
    const GridFn fn = [](double x, double y) {
        if (x < 0.5 && y < 0.5) throw DomainError("bad corner");
        return Complex{x, y};
    };
    const FieldGrid g = sample_grid(fn, {"x", 0.0, 1.0, 2}, {"y", 0.0, 1.0, 2});
    CHECK(g.mask[g.index(0, 0)] == 1);
    CHECK(g.values[g.index(0, 0)] == Complex{0.0, 0.0});
    CHECK(g.mask[g.index(1, 0)] == 0);
    CHECK(g.mask[g.index(0, 1)] == 0);
    CHECK(g.mask[g.index(1, 1)] == 0);
}

TEST_CASE("multithreaded sampling is deterministic") {
    const GridFn fn = [](double x, double y) {
        return Complex{std::sin(3.0 * x) * y, std::cos(x + y)};
    };
    const FieldGrid serial = sample_grid(fn, {"x", 0.0, 2.0, 40}, {"y", 0.0, 5.0, 33});
    for (const int threads : {2, 4, 7}) {
        const FieldGrid parallel =
            sample_grid(fn, {"x", 0.0, 2.0, 40}, {"y", 0.0, 5.0, 33}, threads);
        CHECK(parallel.values == serial.values);
        CHECK(parallel.mask == serial.mask);
    }
}

TEST_CASE("figure grids use the preset axes and formulas") {
    FieldGrid g = figure_grid(Figure::Fig3, 1.0, 8, 10);
    CHECK(g.x_axis.lo == 0.0);
    CHECK(g.x_axis.hi == 1.0);
    CHECK(g.y_axis.hi == 1000.0);
    CHECK(g.generator == "fig3:ln(x/(2y))*cos(k*y)/(k*y);k=1");
    for (int iy = 0; iy < 10; ++iy)
        for (int ix = 0; ix < 8; ++ix) {
            const double x = g.x_axis.center(ix), y = g.y_axis.center(iy);
            CHECK(g.values[g.index(ix, iy)] ==
                  Complex{std::log(x / (2.0 * y)) * std::cos(y) / y, 0.0});
        }

    g = figure_grid(Figure::Fig4, 1.0, 4, 4);
    CHECK(g.x_axis.hi == 700.0);
    CHECK(g.y_axis.hi == 100000.0);

    g = figure_grid(Figure::Fig5, 1.0, 99, 1000);  // n_x ignored, forced to 1
    CHECK(g.x_axis.n == 1);
    CHECK(g.y_axis.hi == 1000.0);
    CHECK(g.values.size() == 1000);
    for (int iy = 0; iy < 1000; ++iy) {
        const double y = g.y_axis.center(iy);
        CHECK(g.values[iy] == Complex{std::cos(y) / y, 0.0});
    }
    // first oscillation: positive before y = pi/2, negative after
    CHECK(g.values[0].real() > 0.0);  // y = 0.5
    CHECK(g.values[2].real() < 0.0);  // y = 2.5
    // envelope decay by three orders of magnitude across the range
    CHECK(std::abs(g.values[999]) < 2e-3);

    g = figure_grid(Figure::Fig6, 2.0, 1, 50);
    CHECK(g.x_axis.n == 1);
    CHECK(g.y_axis.hi == 100000.0);
    CHECK(g.generator == "fig6:cos(k*y)/(k*y);k=2");

    CHECK_THROWS_AS(figure_grid(Figure::Fig3, 0.0, 8, 10), DomainError);
    CHECK_THROWS_AS(figure_grid(Figure::Fig3, 1.0, 1, 10), DomainError);
    CHECK_THROWS_AS(figure_grid(Figure::Fig5, 1.0, 1, 1), DomainError);
}

TEST_CASE("CSV export writes exact shortest decimals") {
    std::ostringstream out;
    export_csv(one_cell_grid({1.0, 2.0}), out);
    CHECK(out.str() == "x,y,re,im\n0.5,0.5,1,2\n");

    std::ostringstream masked;
    export_csv(one_cell_grid({0.0, 0.0}, true), masked);
    CHECK(masked.str() == "x,y,re,im\n0.5,0.5,,\n");

    // row order: y outer, x inner
    FieldGrid g;
    g.x_axis = {"x", 0.0, 2.0, 2};
    g.y_axis = {"y", 0.0, 2.0, 2};
    g.values = {{1, 0}, {2, 0}, {3, 0}, {4, 0}};
    g.mask = {0, 0, 0, 0};
    std::ostringstream grid_out;
    export_csv(g, grid_out);
    CHECK(grid_out.str() ==
          "x,y,re,im\n"
          "0.5,0.5,1,0\n1.5,0.5,2,0\n"
          "0.5,1.5,3,0\n1.5,1.5,4,0\n");
}

TEST_CASE("format_double round-trips") {
    for (const double v : {0.1, 1.0 / 3.0, -2.5e-17, 1e300, 0.0, 123456.789}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("CSV round-trip preserves bits") {
    const FieldGrid g = figure_grid(Figure::Fig3, 3.0, 7, 9);
    std::ostringstream out;
    export_csv(g, out);
    std::istringstream in(out.str());
    const CsvData data = parse_csv(in);
    REQUIRE(data.values.size() == g.values.size());
    for (size_t i = 0; i < g.values.size(); ++i) {
        CHECK(data.values[i] == g.values[i]);
        CHECK(data.mask[i] == g.mask[i]);
    }
    // coordinates round-trip too
    CHECK(data.x[0] == g.x_axis.center(0));
    CHECK(data.y.back() == g.y_axis.center(8));

    std::istringstream bad("not,a,header\n");
    CHECK_THROWS_AS(parse_csv(bad), std::runtime_error);
    std::istringstream short_row("x,y,re,im\n0.5,0.5\n");
    CHECK_THROWS_AS(parse_csv(short_row), std::runtime_error);
}

TEST_CASE("JSON round-trip preserves the full grid") {
    FieldGrid g = figure_grid(Figure::Fig5, 1.0, 1, 20);
    g.mask[3] = 1;
    std::ostringstream out;
    export_json(g, out);
    std::istringstream in(out.str());
    const FieldGrid back = parse_json(in);
    CHECK(back.x_axis.name == g.x_axis.name);
    CHECK(back.x_axis.lo == g.x_axis.lo);
    CHECK(back.x_axis.hi == g.x_axis.hi);
    CHECK(back.x_axis.n == g.x_axis.n);
    CHECK(back.y_axis.n == g.y_axis.n);
    CHECK(back.generator == g.generator);
    CHECK(back.values == g.values);
    CHECK(back.mask == g.mask);
}

TEST_CASE("exports are byte-identical across repeated runs") {
    const auto dump = [] {
        const FieldGrid g = figure_grid(Figure::Fig4, 1.0, 16, 16);
        std::ostringstream csv, json;
        export_csv(g, csv);
        export_json(g, json);
        return csv.str() + "\x1f" + json.str();
    };
    const std::string first = dump();
    CHECK(dump() == first);
    CHECK(dump() == first);
}

TEST_CASE("CSV and JSON decode to the same values") {
    const FieldGrid g = figure_grid(Figure::Fig3, 2.0, 5, 6);
    std::ostringstream csv, json;
    export_csv(g, csv);
    export_json(g, json);
    std::istringstream csv_in(csv.str()), json_in(json.str());
    const CsvData c = parse_csv(csv_in);
    const FieldGrid j = parse_json(json_in);
    REQUIRE(c.values.size() == j.values.size());
    for (size_t i = 0; i < c.values.size(); ++i) {
        CHECK(c.values[i] == j.values[i]);
        CHECK(c.mask[i] == j.mask[i]);
    }
}
