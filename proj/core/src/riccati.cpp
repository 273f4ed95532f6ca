#include "npbeam/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "npbeam/core_field.hpp"

namespace npbeam {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr double kPoleGuard = 1e8;
constexpr double kPoleMargin = 1e-8;  // closed forms refuse arguments this close to a pole

double distance_to_tan_pole(double x) {
    // nearest pole of tan at pi/2 + n*pi
    const double n = std::round((x - kPi / 2.0) / kPi);
    return std::abs(x - (kPi / 2.0 + n * kPi));
}

double distance_to_cot_pole(double x) {
    return std::abs(x - kPi * std::round(x / kPi));
}
}  // namespace

Complex angular_rhs(double theta, Complex y, Complex C) {
    if (!(theta > 0.0 && theta < kPi)) throw DomainError("theta must lie in (0, pi)");
    const double cot = std::cos(theta) / std::sin(theta);
    return -kI * y * y - cot * y + C;
}

Complex radial_rhs(double R, Complex y, Complex C, double k) {
    if (!(R > 0.0)) throw DomainError("R must be > 0");
    if (!(k > 0.0)) throw DomainError("k must be > 0");
    return -kI * y * y - (2.0 / R) * y - C / (R * R) + kI * (k * k);
}

Complex angular_closed_u(double theta, Complex C0) {
    const Complex denom = C0 + kI * log_tan_half(theta);
    if (std::abs(denom) < kPoleMargin)
        throw SingularEnvelopeError("angular closed form singular: C0 + i*ln tan(theta/2) ~ 0");
    return 1.0 / denom;
}

Complex radial_closed_y1(double R, double k, Branch branch) {
    if (!(R > 0.0)) throw DomainError("R must be > 0");
    if (!(k > 0.0)) throw DomainError("k must be > 0");
    const double kR = k * R;
    if (branch == Branch::Cos) {
        if (distance_to_tan_pole(kR) < kPoleMargin)
            throw SingularEnvelopeError("radial closed form at a tan pole");
        return kI * (k * std::tan(kR) + 1.0 / R);
    }
    if (distance_to_cot_pole(kR) < kPoleMargin)
        throw SingularEnvelopeError("radial closed form at a cot pole");
    return kI * (1.0 / R - k * (std::cos(kR) / std::sin(kR)));
}

// Dormand-Prince 5(4) tableau.
namespace dp {
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// 5th-order minus embedded 4th-order weights (error estimator).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
}  // namespace dp

OdeSolution integrate_complex_ode(const ComplexRhs& rhs, double t0, Complex y0,
                                  double t1, double tol) {
    if (t0 == t1) throw DomainError("empty integration interval");
    if (!(tol > 0.0)) throw DomainError("tol must be > 0");

    const double dir = t1 > t0 ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);

    OdeSolution sol;
    double t = t0;
    Complex y = y0;
    sol.nodes.emplace_back(t, y);

    double h = dir * std::min(span, std::max(1e-6, span / 100.0));
    Complex k1 = rhs(t, y);

    while (dir * (t1 - t) > 0.0) {
        if (std::abs(h) > std::abs(t1 - t)) h = t1 - t;
        if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t)))
            throw StiffnessError("step size underflow in adaptive integrator");

        using namespace dp;
        const Complex k2 = rhs(t + c2 * h, y + h * (a21 * k1));
        const Complex k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        const Complex k4 = rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const Complex k5 = rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Complex k6 =
            rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Complex y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Complex k7 = rhs(t + h, y5);  // FSAL
        const Complex err_vec =
            h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double err = std::abs(err_vec);
        const double scale = tol * (1.0 + std::abs(y));
        if (err <= scale || std::abs(h) <= 1e-13 * std::max(1.0, std::abs(t))) {
            t += h;
            y = y5;
            k1 = k7;
            sol.nodes.emplace_back(t, y);
            ++sol.n_accepted;
            sol.max_local_error = std::max(sol.max_local_error, err);
            if (std::abs(y) > kPoleGuard)
                throw PoleError("solution magnitude exceeded pole guard", t);
        } else {
            ++sol.n_rejected;
        }
        const double factor =
            err > 0.0 ? 0.9 * std::pow(scale / err, 0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
    }
    return sol;
}

Complex integrate_fixed_rk4(const ComplexRhs& rhs, double t0, Complex y0,
                            double t1, int n_steps) {
    if (n_steps < 1) throw DomainError("n_steps must be >= 1");
    const double h = (t1 - t0) / n_steps;
    double t = t0;
    Complex y = y0;
    for (int i = 0; i < n_steps; ++i) {
        const Complex k1 = rhs(t, y);
        const Complex k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
        const Complex k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
        const Complex k4 = rhs(t + h, y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = t0 + (i + 1) * h;
    }
    return y;
}

namespace {
CrosscheckReport run_crosscheck(const ComplexRhs& rhs,
                                const std::function<Complex(double)>& closed,
                                double t_a, double t_b, double tol, int n_samples) {
    CrosscheckReport rep;
    rep.t_a = t_a;
    rep.t_b = t_b;
    rep.n_samples = n_samples;
    rep.tolerance = 100.0 * tol;

    Complex y = closed(t_a);
    double t = t_a;
    for (int i = 1; i < n_samples; ++i) {
        const double t_next = t_a + (t_b - t_a) * i / (n_samples - 1);
        y = integrate_complex_ode(rhs, t, y, t_next, tol).final_value();
        t = t_next;
        const Complex ref = closed(t);
        const double abs_err = std::abs(y - ref);
        rep.max_abs_error = std::max(rep.max_abs_error, abs_err);
        rep.max_rel_error =
            std::max(rep.max_rel_error, abs_err / std::max(std::abs(ref), 1e-300));
    }
    rep.passed = rep.max_rel_error <= rep.tolerance;
    return rep;
}
}  // namespace

CrosscheckReport crosscheck_angular(Complex C0, double theta_a, double theta_b,
                                    double tol, int n_samples) {
    if (!(theta_a > 0.0 && theta_b < kPi && theta_a < theta_b))
        throw DomainError("angular interval must satisfy 0 < theta_a < theta_b < pi");
    if (n_samples < 2) throw DomainError("n_samples must be >= 2");
    // The closed form is singular where C0 + i*ln tan(theta/2) = 0; since
    // ln tan(theta/2) is real and monotone, that needs Re(C0) = 0 with
    // -Im(C0) inside the interval's ln tan range.
    const double La = log_tan_half(theta_a), Lb = log_tan_half(theta_b);
    if (std::abs(C0.real()) < 1e-12 && -C0.imag() >= La - 1e-9 && -C0.imag() <= Lb + 1e-9)
        throw DomainError("interval contains a singularity of the angular closed form");

    const auto closed = [C0](double theta) { return angular_closed_u(theta, C0); };
    const auto rhs = [](double theta, Complex u) {
        return -kI * u * u / std::sin(theta);  // u' = -i*csc(theta)*u^2, C = 0
    };
    return run_crosscheck(rhs, closed, theta_a, theta_b, tol, n_samples);
}

CrosscheckReport crosscheck_radial(double k, double R_a, double R_b, Branch branch,
                                   double tol, int n_samples) {
    if (!(k > 0.0)) throw DomainError("k must be > 0");
    if (!(0.0 < R_a && R_a < R_b)) throw DomainError("need 0 < R_a < R_b");
    if (n_samples < 2) throw DomainError("n_samples must be >= 2");
    // reject trig poles of the chosen branch inside [k*R_a, k*R_b]
    const double lo = k * R_a, hi = k * R_b;
    const double first_pole = branch == Branch::Cos
                                  ? kPi / 2.0 + kPi * std::ceil((lo - kPi / 2.0) / kPi - 1e-12)
                                  : kPi * std::ceil(lo / kPi - 1e-12);
    if (first_pole <= hi + 1e-12)
        throw DomainError("interval contains a trig pole of the chosen branch");

    const auto closed = [k, branch](double R) { return radial_closed_y1(R, k, branch); };
    const auto rhs = [k](double R, Complex y) { return radial_rhs(R, y, Complex{0.0, 0.0}, k); };
    return run_crosscheck(rhs, closed, R_a, R_b, tol, n_samples);
}

}  // namespace npbeam
