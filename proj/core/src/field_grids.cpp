#include "npbeam/field_grids.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace npbeam {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

FieldGrid sample_grid(const GridFn& fn, const Axis& x_axis, const Axis& y_axis,
                      int n_threads) {
    if (!(x_axis.lo < x_axis.hi) || !(y_axis.lo < y_axis.hi))
        throw DomainError("axis bounds must satisfy lo < hi");
    if (x_axis.n < 1 || y_axis.n < 1) throw DomainError("axis sample counts must be >= 1");

    FieldGrid grid;
    grid.x_axis = x_axis;
    grid.y_axis = y_axis;
    grid.values.assign(static_cast<size_t>(x_axis.n) * y_axis.n, Complex{});
    grid.mask.assign(grid.values.size(), 0);

    const auto sample_row = [&](int iy) {
        const double y = y_axis.center(iy);
        for (int ix = 0; ix < x_axis.n; ++ix) {
            const int idx = grid.index(ix, iy);
            try {
                grid.values[idx] = fn(x_axis.center(ix), y);
            } catch (const DomainError&) {
                grid.mask[idx] = 1;
            }
        }
    };

    if (n_threads <= 1 || y_axis.n == 1) {
        for (int iy = 0; iy < y_axis.n; ++iy) sample_row(iy);
    } else {
        const int workers = std::min(n_threads, y_axis.n);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int iy = w; iy < y_axis.n; iy += workers) sample_row(iy);
            });
        }
        for (auto& t : pool) t.join();
    }
    return grid;
}

FieldGrid figure_grid(Figure figure, double k, int n_x, int n_y) {
    if (!(k > 0.0)) throw DomainError("k must be > 0");
    if (n_y < 2) throw DomainError("n_y must be >= 2");

    const GridFn paraxial = [k](double x, double y) {
        return Complex{std::log(x / (2.0 * y)) * std::cos(k * y) / (k * y), 0.0};
    };
    const GridFn spherical = [k](double, double y) {
        return Complex{std::cos(k * y) / (k * y), 0.0};
    };

    Axis x, y;
    GridFn fn;
    std::string name;
    switch (figure) {
        case Figure::Fig3:
            if (n_x < 2) throw DomainError("n_x must be >= 2");
            x = {"x", 0.0, 1.0, n_x};
            y = {"y", 0.0, 1000.0, n_y};
            fn = paraxial;
            name = "fig3:ln(x/(2y))*cos(k*y)/(k*y)";
            break;
        case Figure::Fig4:
            if (n_x < 2) throw DomainError("n_x must be >= 2");
            x = {"x", 0.0, 700.0, n_x};
            y = {"y", 0.0, 100000.0, n_y};
            fn = paraxial;
            name = "fig4:ln(x/(2y))*cos(k*y)/(k*y)";
            break;
        case Figure::Fig5:
            x = {"x", 0.0, 1.0, 1};
            y = {"y", 0.0, 1000.0, n_y};
            fn = spherical;
            name = "fig5:cos(k*y)/(k*y)";
            break;
        case Figure::Fig6:
            x = {"x", 0.0, 1.0, 1};
            y = {"y", 0.0, 100000.0, n_y};
            fn = spherical;
            name = "fig6:cos(k*y)/(k*y)";
            break;
        default:
            throw DomainError("invalid figure id");
    }
    FieldGrid grid = sample_grid(fn, x, y);
    grid.generator = name + ";k=" + format_double(k);
    return grid;
}

void export_csv(const FieldGrid& grid, std::ostream& out) {
    out << "x,y,re,im\n";
    for (int iy = 0; iy < grid.y_axis.n; ++iy) {
        const std::string ys = format_double(grid.y_axis.center(iy));
        for (int ix = 0; ix < grid.x_axis.n; ++ix) {
            const int idx = grid.index(ix, iy);
            out << format_double(grid.x_axis.center(ix)) << ',' << ys << ',';
            if (grid.mask[idx]) {
                out << ",\n";
            } else {
                out << format_double(grid.values[idx].real()) << ','
                    << format_double(grid.values[idx].imag()) << '\n';
            }
        }
    }
    if (!out) throw std::runtime_error("CSV export: write failure");
}

namespace {
nlohmann::ordered_json axis_to_json(const Axis& ax) {
    return {{"name", ax.name}, {"lo", ax.lo}, {"hi", ax.hi}, {"n", ax.n}};
}

Axis axis_from_json(const nlohmann::json& j) {
    Axis ax;
    ax.name = j.at("name").get<std::string>();
    ax.lo = j.at("lo").get<double>();
    ax.hi = j.at("hi").get<double>();
    ax.n = j.at("n").get<int>();
    return ax;
}
}  // namespace

void export_json(const FieldGrid& grid, std::ostream& out) {
    nlohmann::ordered_json j;
    j["x_axis"] = axis_to_json(grid.x_axis);
    j["y_axis"] = axis_to_json(grid.y_axis);
    j["generator"] = grid.generator;
    auto re = nlohmann::ordered_json::array();
    auto im = nlohmann::ordered_json::array();
    auto mask = nlohmann::ordered_json::array();
    for (int iy = 0; iy < grid.y_axis.n; ++iy) {
        auto re_row = nlohmann::ordered_json::array();
        auto im_row = nlohmann::ordered_json::array();
        auto mask_row = nlohmann::ordered_json::array();
        for (int ix = 0; ix < grid.x_axis.n; ++ix) {
            const int idx = grid.index(ix, iy);
            re_row.push_back(grid.values[idx].real());
            im_row.push_back(grid.values[idx].imag());
            mask_row.push_back(grid.mask[idx] != 0);
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
        mask.push_back(std::move(mask_row));
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    j["mask"] = std::move(mask);
    out << j.dump() << '\n';
    if (!out) throw std::runtime_error("JSON export: write failure");
}

namespace {
double parse_number(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::runtime_error("CSV parse: bad number '" + s + "'");
    return v;
}
}  // namespace

CsvData parse_csv(std::istream& in) {
    CsvData data;
    std::string line;
    if (!std::getline(in, line) || line != "x,y,re,im")
        throw std::runtime_error("CSV parse: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<std::string, 4> cell;
        size_t start = 0;
        for (int c = 0; c < 4; ++c) {
            const size_t comma = line.find(',', start);
            if (c < 3 && comma == std::string::npos)
                throw std::runtime_error("CSV parse: short row");
            cell[c] = line.substr(start, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - start);
            start = comma + 1;
        }
        data.x.push_back(parse_number(cell[0]));
        data.y.push_back(parse_number(cell[1]));
        if (cell[2].empty() && cell[3].empty()) {
            data.values.emplace_back(0.0, 0.0);
            data.mask.push_back(1);
        } else {
            data.values.emplace_back(parse_number(cell[2]), parse_number(cell[3]));
            data.mask.push_back(0);
        }
    }
    return data;
}

FieldGrid parse_json(std::istream& in) {
    const auto j = nlohmann::json::parse(in);
    FieldGrid grid;
    grid.x_axis = axis_from_json(j.at("x_axis"));
    grid.y_axis = axis_from_json(j.at("y_axis"));
    grid.generator = j.at("generator").get<std::string>();
    grid.values.reserve(static_cast<size_t>(grid.x_axis.n) * grid.y_axis.n);
    for (int iy = 0; iy < grid.y_axis.n; ++iy) {
        for (int ix = 0; ix < grid.x_axis.n; ++ix) {
            grid.values.emplace_back(j.at("re").at(iy).at(ix).get<double>(),
                                     j.at("im").at(iy).at(ix).get<double>());
            grid.mask.push_back(j.at("mask").at(iy).at(ix).get<bool>() ? 1 : 0);
        }
    }
    return grid;
}

}  // namespace npbeam
