#include "npbeam/analysis.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "npbeam/core_field.hpp"

namespace npbeam {

namespace {
constexpr double kPi = std::numbers::pi;

// 16-point Gauss-Legendre rule on [-1, 1] (positive half; symmetric).
constexpr std::array<double, 8> kGlNodes = {
    0.0950125098376374401853, 0.2816035507792589132305, 0.4580167776572273863424,
    0.6178762444026437484467, 0.7554044083550030338951, 0.8656312023878317438805,
    0.9445750230732325760780, 0.9894009349916499325962};
constexpr std::array<double, 8> kGlWeights = {
    0.1894506104550684962854, 0.1826034150449235888667, 0.1691565193950025381893,
    0.1495959888165767320815, 0.1246289712555338720525, 0.0951585116824927848099,
    0.0622535239386478928628, 0.0271524594117540948518};

template <class F>
double gl_panel(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) {
        sum += kGlWeights[i] * (f(mid - half * kGlNodes[i]) + f(mid + half * kGlNodes[i]));
    }
    return sum * half;
}

template <class F>
double gl_composite(const F& f, double a, double b, int panels) {
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double pa = a + (b - a) * p / panels;
        const double pb = a + (b - a) * (p + 1) / panels;
        sum += gl_panel(f, pa, pb);
    }
    return sum;
}
}  // namespace

ThetaWindow admissible_theta_window() {
    const double e = std::numbers::e;
    return {2.0 * std::atan(1.0 / e), 2.0 * std::atan(e)};
}

bool amplitude_within_bound(double theta) {
    return std::abs(log_tan_half(theta)) <= 1.0;
}

double exact_real_part_cartesian(const BeamSpec& beam, double X, double Y, double Z) {
    const double r = std::hypot(X, Y);
    if (!(r > 0.0)) throw DomainError("on-axis point: log singularity at r = 0");
    if (!(Z > 0.0)) throw DomainError("Z must be > 0");
    const double R = std::hypot(r, Z);
    const double kR = beam.k * R;
    // ln((R - Z)/(R + Z))/2 written cancellation-free as ln(r/(R + Z))
    return beam.k * beam.a * std::log(r / (R + Z)) * std::cos(kR) / kR;
}

double paraxial_field(const BeamSpec& beam, double X, double Y, double Z) {
    const double r = std::hypot(X, Y);
    if (!(r > 0.0)) throw DomainError("r must be > 0");
    if (!(Z > 0.0)) throw DomainError("Z must be > 0");
    const double kZ = beam.k * Z;
    return beam.k * beam.a * std::log(r / (2.0 * Z)) * std::cos(kZ) / kZ;
}

ParaxialComparison paraxial_error(const BeamSpec& beam, double X, double Y, double Z) {
    ParaxialComparison out;
    out.exact = exact_real_part_cartesian(beam, X, Y, Z);
    out.approx = paraxial_field(beam, X, Y, Z);
    out.abs_error = std::abs(out.exact - out.approx);
    out.rel_error = out.abs_error / std::max(std::abs(out.exact), 1e-300);
    const double r = std::hypot(X, Y);
    out.fresnel_parameter = beam.k * r * r / (2.0 * Z);
    return out;
}

double locate_vortex(const BeamSpec& beam, double R) {
    if (!(R > 0.0)) throw DomainError("R must be > 0");
    const ThetaWindow win = admissible_theta_window();
    double lo = win.theta0, hi = win.theta1;
    // ln tan(theta/2) is -1 at theta0, +1 at theta1, strictly increasing
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (log_tan_half(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

EnergyReport shell_energy(const BeamSpec& beam, double R_lo, double R_hi,
                          double theta_lo, double theta_hi, int n_radial,
                          int n_angular, bool use_magnitude) {
    if (!(0.0 < R_lo && R_lo < R_hi)) throw DomainError("need 0 < R_lo < R_hi");
    if (!(0.0 < theta_lo && theta_lo < theta_hi && theta_hi < kPi))
        throw DomainError("need 0 < theta_lo < theta_hi < pi");
    if (n_radial < 8 || n_angular < 8) throw DomainError("quadrature sizes must be >= 8");

    const auto angular_weight = [&](double theta) {
        const double L = log_tan_half(theta);
        return (use_magnitude ? std::abs(L) : L * L) * std::sin(theta);
    };
    const double ang = gl_composite(angular_weight, theta_lo, theta_hi, n_angular);

    const auto radial_weight = [&](double R) {
        const double kR = beam.k * R;
        const double g = select_branch(beam.k, R) == Branch::Cos ? std::cos(kR) : std::sin(kR);
        const double amp = std::abs(beam.k * beam.a * g / kR);
        return (use_magnitude ? amp : amp * amp) * R * R;
    };

    // never let a panel straddle the branch boundary
    const double boundary = kPi / (4.0 * beam.k);
    double rad = 0.0;
    if (R_lo < boundary && boundary < R_hi) {
        const double frac = (boundary - R_lo) / (R_hi - R_lo);
        int n1 = std::max(1, static_cast<int>(std::lround(frac * n_radial)));
        n1 = std::min(n1, n_radial - 1);
        rad = gl_composite(radial_weight, R_lo, boundary, n1) +
              gl_composite(radial_weight, boundary, R_hi, n_radial - n1);
    } else {
        rad = gl_composite(radial_weight, R_lo, R_hi, n_radial);
    }

    EnergyReport rep;
    rep.R_lo = R_lo;
    rep.R_hi = R_hi;
    rep.theta_lo = theta_lo;
    rep.theta_hi = theta_hi;
    rep.n_radial = n_radial;
    rep.n_angular = n_angular;
    rep.value = 2.0 * kPi * ang * rad;
    return rep;
}

}  // namespace npbeam
