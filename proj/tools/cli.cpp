#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "npbeam/analysis.hpp"
#include "npbeam/core_field.hpp"
#include "npbeam/field_grids.hpp"
#include "npbeam/riccati.hpp"
#include "npbeam/verification.hpp"

namespace npbeam::cli {

namespace {

using nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

std::string fd(double v) { return format_double(v); }

struct Ctx {
    CommandResult result;
    bool json = false;

    void emit_text(const std::string& text) {
        if (!json) result.stdout_payload = text;
    }
    void emit_json(const ordered_json& j) {
        if (json) result.stdout_payload = j.dump() + "\n";
    }
};

Branch parse_branch(const std::string& s) {
    if (s == "cos") return Branch::Cos;
    if (s == "sin") return Branch::Sin;
    throw DomainError("branch must be 'cos' or 'sin'");
}

void setup_eval(CLI::App& app, Ctx& ctx) {
    auto* cmd = app.add_subcommand("eval", "evaluate the closed-form field");
    auto k = std::make_shared<double>(1.0);
    auto a = std::make_shared<double>(1.0);
    auto r = std::make_shared<double>(0.0);
    auto theta = std::make_shared<double>(0.0);
    auto phi = std::make_shared<double>(0.0);
    auto x = std::make_shared<double>(0.0);
    auto y = std::make_shared<double>(0.0);
    auto z = std::make_shared<double>(0.0);
    auto branch = std::make_shared<std::string>();
    auto deg = std::make_shared<bool>(false);
    cmd->add_option("--k", *k, "wavenumber")->required();
    cmd->add_option("--a", *a, "amplitude constant")->required();
    auto* opt_r = cmd->add_option("--r", *r, "radius");
    cmd->add_option("--theta", *theta, "polar angle (radians)")->needs(opt_r);
    cmd->add_option("--phi", *phi, "azimuth");
    auto* opt_x = cmd->add_option("--x", *x)->excludes(opt_r);
    cmd->add_option("--y", *y)->needs(opt_x);
    cmd->add_option("--z", *z)->needs(opt_x);
    cmd->add_option("--branch", *branch, "force branch: cos|sin");
    cmd->add_flag("--deg", *deg, "angles given in degrees");

    cmd->callback([&ctx, k, a, r, theta, phi, x, y, z, branch, deg, opt_r, opt_x] {
        SphericalPoint pt;
        if (opt_r->count() > 0) {
            const double scale = *deg ? kPi / 180.0 : 1.0;
            pt = {*r, *theta * scale, *phi * scale};
        } else if (opt_x->count() > 0) {
            pt = spherical_from_cartesian({*x, *y, *z});
        } else {
            throw DomainError("eval needs either --r/--theta or --x/--y/--z");
        }
        const BeamSpec beam{*a, *k};
        Complex value;
        Branch used;
        if (!branch->empty()) {
            used = parse_branch(*branch);
            value = eval_branch(beam, pt, used);
        } else {
            const FieldSample s = eval_field(beam, pt);
            value = s.value;
            used = s.branch;
        }
        ctx.emit_text("re=" + fd(value.real()) + " im=" + fd(value.imag()) +
                      " branch=" + to_string(used) + "\n");
        ctx.emit_json({{"schema", "eval"},
                       {"re", value.real()},
                       {"im", value.imag()},
                       {"branch", to_string(used)},
                       {"r", pt.R},
                       {"theta", pt.theta}});
    });
}

void setup_residual(CLI::App& app, Ctx& ctx) {
    auto* cmd = app.add_subcommand("residual", "finite-difference PDE residual");
    cmd->set_help_flag("--help", "print help");  // frees -h for the step option
    auto k = std::make_shared<double>(1.0);
    auto a = std::make_shared<double>(1.0);
    auto r = std::make_shared<double>(0.0);
    auto theta = std::make_shared<double>(0.0);
    auto h = std::make_shared<double>(1e-3);
    auto tol = std::make_shared<double>(1e-4);
    auto envelope = std::make_shared<bool>(false);
    auto deg = std::make_shared<bool>(false);
    auto corrupt = std::make_shared<double>(0.0);
    cmd->add_option("--k", *k)->required();
    cmd->add_option("--a", *a);
    cmd->add_option("--r", *r)->required();
    cmd->add_option("--theta", *theta)->required();
    cmd->add_option("--h", *h, "stencil step");
    cmd->add_option("--tol", *tol, "pass tolerance on the relative magnitude");
    cmd->add_flag("--envelope", *envelope, "check the envelope PDE instead of Helmholtz");
    cmd->add_flag("--deg", *deg, "theta given in degrees");
    cmd->add_option("--corrupt", *corrupt)->group("");  // test hook, hidden

    cmd->callback([&ctx, k, a, r, theta, h, tol, envelope, deg, corrupt] {
        const BeamSpec beam{*a, *k};
        const SphericalPoint pt{*r, *theta * (*deg ? kPi / 180.0 : 1.0), 0.0};
        ResidualReport rep;
        const char* schema = "residual";
        if (*envelope) {
            schema = "residual-envelope";
            const Branch br = select_branch(beam.k, pt.R);
            if (*corrupt != 0.0) {
                const double eps = *corrupt;
                rep = pde_envelope_residual_of(
                    [&](double R, double th) {
                        return eval_envelope_exponent(beam, {R, th, 0.0}, br) +
                               Complex{eps * R * R, 0.0};
                    },
                    beam.k, pt, *h);
            } else {
                rep = pde_envelope_residual(beam, pt, br, *h);
            }
        } else if (*corrupt != 0.0) {
            // corrupted-field hook: perturb the sampled field by eps*R^2
            const Branch br = select_branch(beam.k, pt.R);
            const double eps = *corrupt;
            const auto f = [&](const SphericalPoint& p) {
                return eval_branch(beam, p, br) + Complex{eps * p.R * p.R, 0.0};
            };
            const Complex A = f(pt);
            rep.residual = laplacian_spherical_fd(f, pt, *h) + beam.k * beam.k * A;
            rep.relative_magnitude =
                std::abs(rep.residual) / (beam.k * beam.k * std::abs(A) + 1e-300);
            rep.h = *h;
            rep.point = pt;
        } else {
            rep = helmholtz_residual(beam, pt, *h);
        }
        const bool failed = rep.relative_magnitude > *tol;
        ctx.emit_text("re=" + fd(rep.residual.real()) + " im=" + fd(rep.residual.imag()) +
                      " relative=" + fd(rep.relative_magnitude) + " h=" + fd(rep.h) +
                      " pass=" + (failed ? "false" : "true") + "\n");
        ctx.emit_json({{"schema", schema},
                       {"re", rep.residual.real()},
                       {"im", rep.residual.imag()},
                       {"relative_magnitude", rep.relative_magnitude},
                       {"h", rep.h},
                       {"pass", !failed}});
        if (failed) {
            ctx.result.exit_code = 3;
            ctx.result.diagnostics.push_back("residual above tolerance");
        }
    });
}

void setup_riccati(CLI::App& app, Ctx& ctx) {
    auto* cmd = app.add_subcommand("riccati", "cross-check closed forms by integration");
    auto which = std::make_shared<std::string>();
    auto from = std::make_shared<double>(0.0);
    auto to = std::make_shared<double>(0.0);
    auto c0re = std::make_shared<double>(0.0);
    auto c0im = std::make_shared<double>(0.0);
    auto k = std::make_shared<double>(1.0);
    auto branch = std::make_shared<std::string>("cos");
    auto tol = std::make_shared<double>(1e-10);
    auto samples = std::make_shared<int>(50);
    cmd->add_option("--which", *which, "angular|radial")
        ->required()
        ->check(CLI::IsMember({"angular", "radial"}));
    cmd->add_option("--from", *from)->required();
    cmd->add_option("--to", *to)->required();
    cmd->add_option("--c0-re", *c0re, "Re C0 (angular)");
    cmd->add_option("--c0-im", *c0im, "Im C0 (angular)");
    cmd->add_option("--k", *k, "wavenumber (radial)");
    cmd->add_option("--branch", *branch, "cos|sin (radial)");
    cmd->add_option("--tol", *tol);
    cmd->add_option("--samples", *samples);

    cmd->callback([&ctx, which, from, to, c0re, c0im, k, branch, tol, samples] {
        CrosscheckReport rep;
        if (*which == "angular") {
            rep = crosscheck_angular({*c0re, *c0im}, *from, *to, *tol, *samples);
        } else {
            rep = crosscheck_radial(*k, *from, *to, parse_branch(*branch), *tol, *samples);
        }
        ctx.emit_text("max_abs_error=" + fd(rep.max_abs_error) +
                      " max_rel_error=" + fd(rep.max_rel_error) +
                      " samples=" + std::to_string(rep.n_samples) +
                      " passed=" + (rep.passed ? "true" : "false") + "\n");
        ctx.emit_json({{"schema", "riccati"},
                       {"max_abs_error", rep.max_abs_error},
                       {"max_rel_error", rep.max_rel_error},
                       {"interval", {rep.t_a, rep.t_b}},
                       {"n_samples", rep.n_samples},
                       {"tolerance", rep.tolerance},
                       {"passed", rep.passed}});
        if (!rep.passed) {
            ctx.result.exit_code = 3;
            ctx.result.diagnostics.push_back("cross-check failed");
        }
    });
}

void setup_window(CLI::App& app, Ctx& ctx) {
    auto* cmd = app.add_subcommand("window", "admissible theta window");
    cmd->callback([&ctx] {
        const ThetaWindow w = admissible_theta_window();
        ctx.emit_text("theta0=" + fd(w.theta0) + " theta1=" + fd(w.theta1) + "\n");
        ctx.emit_json({{"schema", "window"}, {"theta0", w.theta0}, {"theta1", w.theta1}});
    });
}

void setup_vortex(CLI::App& app, Ctx& ctx) {
    auto* cmd = app.add_subcommand("vortex", "locate the zero line of the field");
    auto k = std::make_shared<double>(1.0);
    auto r = std::make_shared<double>(1.0);
    cmd->add_option("--k", *k)->required();
    cmd->add_option("--r", *r)->required();
    cmd->callback([&ctx, k, r] {
        const double theta = locate_vortex({1.0, *k}, *r);
        ctx.emit_text("theta=" + fd(theta) + "\n");
        ctx.emit_json({{"schema", "vortex"}, {"theta", theta}});
    });
}

void setup_paraxial(CLI::App& app, Ctx& ctx) {
    auto* cmd = app.add_subcommand("paraxial", "compare exact vs paraxial field");
    auto k = std::make_shared<double>(1.0);
    auto a = std::make_shared<double>(1.0);
    auto z = std::make_shared<double>(0.0);
    auto rho = std::make_shared<double>(0.0);
    cmd->add_option("--k", *k)->required();
    cmd->add_option("--a", *a);
    cmd->add_option("--z", *z)->required();
    cmd->add_option("--rho", *rho, "transverse radius r(X,Y)")->required();
    cmd->callback([&ctx, k, a, z, rho] {
        const ParaxialComparison c = paraxial_error({*a, *k}, *rho, 0.0, *z);
        ctx.emit_text("exact=" + fd(c.exact) + " approx=" + fd(c.approx) +
                      " abs_error=" + fd(c.abs_error) + " rel_error=" + fd(c.rel_error) +
                      " fresnel=" + fd(c.fresnel_parameter) + "\n");
        ctx.emit_json({{"schema", "paraxial"},
                       {"exact", c.exact},
                       {"approx", c.approx},
                       {"abs_error", c.abs_error},
                       {"rel_error", c.rel_error},
                       {"fresnel_parameter", c.fresnel_parameter}});
    });
}

void setup_energy(CLI::App& app, Ctx& ctx) {
    auto* cmd = app.add_subcommand("energy", "shell energy quadrature");
    auto k = std::make_shared<double>(1.0);
    auto a = std::make_shared<double>(1.0);
    auto rlo = std::make_shared<double>(0.0);
    auto rhi = std::make_shared<double>(0.0);
    auto full = std::make_shared<bool>(false);
    auto magnitude = std::make_shared<bool>(false);
    auto nr = std::make_shared<int>(0);
    auto ntheta = std::make_shared<int>(32);
    cmd->add_option("--k", *k)->required();
    cmd->add_option("--a", *a)->required();
    cmd->add_option("--rlo", *rlo)->required();
    cmd->add_option("--rhi", *rhi)->required();
    cmd->add_flag("--full-theta", *full, "integrate over (0, pi) instead of the window");
    cmd->add_flag("--magnitude", *magnitude, "integrate |A| instead of |A|^2");
    cmd->add_option("--nr", *nr, "radial panel count (0 = auto)");
    cmd->add_option("--ntheta", *ntheta, "angular panel count");
    cmd->callback([&ctx, k, a, rlo, rhi, full, magnitude, nr, ntheta] {
        const ThetaWindow w = admissible_theta_window();
        const double tlo = *full ? 1e-3 : w.theta0;
        const double thi = *full ? kPi - 1e-3 : w.theta1;
        int panels = *nr;
        if (panels <= 0)
            panels = std::max(64, static_cast<int>(std::ceil(*k * (*rhi - *rlo))));
        const EnergyReport rep =
            shell_energy({*a, *k}, *rlo, *rhi, tlo, thi, panels, *ntheta, *magnitude);
        ctx.emit_text("value=" + fd(rep.value) + " rlo=" + fd(rep.R_lo) +
                      " rhi=" + fd(rep.R_hi) + " theta_lo=" + fd(rep.theta_lo) +
                      " theta_hi=" + fd(rep.theta_hi) + "\n");
        ctx.emit_json({{"schema", "energy"},
                       {"value", rep.value},
                       {"R_lo", rep.R_lo},
                       {"R_hi", rep.R_hi},
                       {"theta_lo", rep.theta_lo},
                       {"theta_hi", rep.theta_hi},
                       {"n_radial", rep.n_radial},
                       {"n_angular", rep.n_angular}});
    });
}

void setup_grid(CLI::App& app, Ctx& ctx) {
    auto* cmd = app.add_subcommand("grid", "sample a field onto a grid and export");
    auto figure = std::make_shared<int>(0);
    auto field = std::make_shared<std::string>();
    auto k = std::make_shared<double>(1.0);
    auto a = std::make_shared<double>(1.0);
    auto nx = std::make_shared<int>(0);
    auto ny = std::make_shared<int>(0);
    auto format = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    auto threads = std::make_shared<int>(1);
    auto xlo = std::make_shared<double>(0.0);
    auto xhi = std::make_shared<double>(0.0);
    auto ylo = std::make_shared<double>(0.0);
    auto yhi = std::make_shared<double>(0.0);
    auto* opt_fig = cmd->add_option("--figure", *figure, "3|4|5|6")
                        ->check(CLI::IsMember({3, 4, 5, 6}));
    auto* opt_field = cmd->add_option("--field", *field, "exact|paraxial")
                          ->check(CLI::IsMember({"exact", "paraxial"}))
                          ->excludes(opt_fig);
    cmd->add_option("--k", *k)->required();
    cmd->add_option("--a", *a);
    cmd->add_option("--nx", *nx, "x samples (default 256; 1-D figures force 1)");
    cmd->add_option("--ny", *ny, "y samples (default 256; 4096 for 1-D)");
    cmd->add_option("--format", *format, "csv|json")
        ->required()
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", *out_path)->required();
    cmd->add_option("--threads", *threads, "sampling threads");
    auto* opt_xlo = cmd->add_option("--xlo", *xlo)->needs(opt_field);
    cmd->add_option("--xhi", *xhi)->needs(opt_xlo);
    cmd->add_option("--ylo", *ylo)->needs(opt_xlo);
    cmd->add_option("--yhi", *yhi)->needs(opt_xlo);

    cmd->callback([&ctx, figure, field, k, a, nx, ny, format, out_path, threads, xlo, xhi,
                   ylo, yhi, opt_fig, opt_field, opt_xlo] {
        FieldGrid grid;
        if (opt_fig->count() > 0) {
            const Figure fig = static_cast<Figure>(*figure - 3 + static_cast<int>(Figure::Fig3));
            const bool one_d = *figure >= 5;
            const int want_ny = *ny > 0 ? *ny : (one_d ? 4096 : 256);
            const int want_nx = *nx > 0 ? *nx : 256;
            grid = figure_grid(fig, *k, want_nx, want_ny);
        } else if (opt_field->count() > 0) {
            Axis x_axis, y_axis;
            const BeamSpec beam{*a, *k};
            GridFn fn;
            if (*field == "exact") {
                x_axis = {"R", 0.0, 10.0, *nx > 0 ? *nx : 256};
                y_axis = {"theta", 0.0, kPi, *ny > 0 ? *ny : 256};
                fn = [beam](double R, double theta) {
                    return eval_field(beam, {R, theta, 0.0}).value;
                };
            } else {
                x_axis = {"r", 0.0, 1.0, *nx > 0 ? *nx : 256};
                y_axis = {"Z", 0.0, 1000.0, *ny > 0 ? *ny : 256};
                fn = [beam](double r, double Z) {
                    return Complex{paraxial_field(beam, r, 0.0, Z), 0.0};
                };
            }
            if (opt_xlo->count() > 0) {
                x_axis.lo = *xlo;
                x_axis.hi = *xhi;
                y_axis.lo = *ylo;
                y_axis.hi = *yhi;
            }
            grid = sample_grid(fn, x_axis, y_axis, *threads);
            grid.generator = *field + ";k=" + fd(*k) + ";a=" + fd(*a);
        } else {
            throw DomainError("grid needs either --figure or --field");
        }

        std::ofstream out(*out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + *out_path);
        if (*format == "csv")
            export_csv(grid, out);
        else
            export_json(grid, out);
        ctx.emit_text("wrote " + *out_path + " (" + std::to_string(grid.x_axis.n) + "x" +
                      std::to_string(grid.y_axis.n) + ")\n");
        ctx.emit_json({{"schema", "grid"},
                       {"out", *out_path},
                       {"nx", grid.x_axis.n},
                       {"ny", grid.y_axis.n},
                       {"generator", grid.generator}});
    });
}

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
    Ctx ctx;
    CLI::App app{"non-paraxial Helmholtz beam toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    // flag callback so ctx.json is set before the subcommand callbacks run
    app.add_flag_callback("--json", [&ctx] { ctx.json = true; },
                          "machine-readable output");

    setup_eval(app, ctx);
    setup_residual(app, ctx);
    setup_riccati(app, ctx);
    setup_window(app, ctx);
    setup_vortex(app, ctx);
    setup_paraxial(app, ctx);
    setup_energy(app, ctx);
    setup_grid(app, ctx);

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        os << app.help();
        ctx.result.stdout_payload = os.str();
        return ctx.result;
    } catch (const CLI::ParseError& e) {
        ctx.result.exit_code = 2;
        ctx.result.diagnostics.push_back(e.what());
        ctx.result.diagnostics.push_back(app.help());
        return ctx.result;
    } catch (const DomainError& e) {
        ctx.result.exit_code = 2;
        ctx.result.diagnostics.push_back(std::string("domain error: ") + e.what());
        return ctx.result;
    } catch (const std::exception& e) {
        ctx.result.exit_code = 2;
        ctx.result.diagnostics.push_back(std::string("error: ") + e.what());
        return ctx.result;
    }
    return ctx.result;
}

}  // namespace npbeam::cli
