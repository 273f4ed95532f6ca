#include "npbeam/verification.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "npbeam/core_field.hpp"

namespace npbeam {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kFloor = 1e-300;
}  // namespace

Complex laplacian_spherical_fd(const SphericalField& field, const SphericalPoint& pt,
                               double h) {
    if (!(h > 0.0)) throw DomainError("h must be > 0");
    if (!(pt.R - h > 0.0)) throw DomainError("radial stencil leaves R > 0");
    if (!(pt.theta - h > 0.0 && pt.theta + h < kPi))
        throw DomainError("angular stencil leaves (0, pi)");

    const auto at = [&](double dR, double dth, double dphi) {
        return field({pt.R + dR, pt.theta + dth, pt.phi + dphi});
    };
    const Complex f0 = at(0, 0, 0);
    const Complex fRp = at(h, 0, 0), fRm = at(-h, 0, 0);
    const Complex fTp = at(0, h, 0), fTm = at(0, -h, 0);
    const Complex fPp = at(0, 0, h), fPm = at(0, 0, -h);

    const double s = std::sin(pt.theta);
    const double cot = std::cos(pt.theta) / s;
    const Complex d2R = (fRp - 2.0 * f0 + fRm) / (h * h);
    const Complex dR = (fRp - fRm) / (2.0 * h);
    const Complex d2T = (fTp - 2.0 * f0 + fTm) / (h * h);
    const Complex dT = (fTp - fTm) / (2.0 * h);
    const Complex d2P = (fPp - 2.0 * f0 + fPm) / (h * h);

    return d2R + (2.0 / pt.R) * dR + d2P / (pt.R * pt.R * s * s) +
           (d2T + cot * dT) / (pt.R * pt.R);
}

// Angular-step note: a plain 3-point theta stencil at step 1e-3 cannot reach
// the 1e-4 residual budget near theta ~ 0.1 when kR is small -- the truncation
// term scales like csc^3(theta)/(kR)^2 and roundoff meets truncation above
// 1e-4 there in double precision. The theta direction therefore uses a 5-point
// (4th-order) stencil with step h*sin(theta); the radial direction keeps the
// 3-point stencil with step h*max(1,R), which dominates the residual and
// preserves the overall O(h^2) convergence order.
namespace {
struct FdResult {
    Complex laplacian;
    double noise_abs;  // rounding-noise estimate for |laplacian|
};

FdResult anisotropic_laplacian(const std::function<Complex(double, double)>& f,
                               double R, double theta, double hR, double ht) {
    if (!(R - hR > 0.0)) throw DomainError("radial stencil leaves R > 0");
    if (!(theta - 2.0 * ht > 0.0 && theta + 2.0 * ht < kPi))
        throw DomainError("angular stencil leaves (0, pi)");

    const Complex f0 = f(R, theta);
    const Complex fRp = f(R + hR, theta), fRm = f(R - hR, theta);
    const Complex fm2 = f(R, theta - 2 * ht), fm1 = f(R, theta - ht);
    const Complex fp1 = f(R, theta + ht), fp2 = f(R, theta + 2 * ht);

    const double cot = std::cos(theta) / std::sin(theta);
    const Complex d2R = (fRp - 2.0 * f0 + fRm) / (hR * hR);
    const Complex dR = (fRp - fRm) / (2.0 * hR);
    const Complex d2T = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * ht * ht);
    const Complex dT = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * ht);

    FdResult out;
    out.laplacian = d2R + (2.0 / R) * dR + (d2T + cot * dT) / (R * R);

    const double aR = std::abs(fRp) + 2.0 * std::abs(f0) + std::abs(fRm);
    const double aT = std::abs(fp2) + 16.0 * std::abs(fp1) + 30.0 * std::abs(f0) +
                      16.0 * std::abs(fm1) + std::abs(fm2);
    const double aT1 = std::abs(fp2) + 8.0 * std::abs(fp1) + 8.0 * std::abs(fm1) + std::abs(fm2);
    out.noise_abs = kEps * (aR / (hR * hR) + (2.0 / R) * aR / (2.0 * hR) +
                            (aT / (12.0 * ht * ht) + std::abs(cot) * aT1 / (12.0 * ht)) / (R * R));
    return out;
}
}  // namespace

ResidualReport helmholtz_residual(const BeamSpec& beam, const SphericalPoint& pt, double h) {
    if (!(h > 0.0)) throw DomainError("h must be > 0");
    const Branch branch = select_branch(beam.k, pt.R);
    const double hR = h * std::max(1.0, pt.R);
    const double ht = h * std::sin(pt.theta);

    // the piecewise field is only piecewise smooth at |kR| = pi/4
    if (std::abs(beam.k * pt.R - kPi / 4.0) <= 2.0 * beam.k * hR)
        throw BranchCrossingError("stencil too close to the |kR| = pi/4 branch boundary");

    const auto f = [&](double R, double theta) {
        return eval_branch(beam, {R, theta, pt.phi}, branch);
    };
    const FdResult fd = anisotropic_laplacian(f, pt.R, pt.theta, hR, ht);
    const Complex A = f(pt.R, pt.theta);

    ResidualReport rep;
    rep.residual = fd.laplacian + beam.k * beam.k * A;
    const double denom = beam.k * beam.k * std::abs(A) + kFloor;
    rep.relative_magnitude = std::abs(rep.residual) / denom;
    rep.noise_floor = fd.noise_abs / denom;
    rep.h = h;
    rep.point = pt;
    return rep;
}

ResidualReport pde_envelope_residual_of(const std::function<Complex(double, double)>& f,
                                        double k, const SphericalPoint& pt, double h) {
    if (!(h > 0.0)) throw DomainError("h must be > 0");
    if (!(pt.R - h > 0.0) || !(pt.theta - h > 0.0 && pt.theta + h < kPi))
        throw DomainError("stencil leaves the valid domain");

    const double R = pt.R, th = pt.theta;
    const Complex f0 = f(R, th);
    const Complex fRp = f(R + h, th), fRm = f(R - h, th);
    const Complex fTp = f(R, th + h), fTm = f(R, th - h);

    const Complex f_RR = (fRp - 2.0 * f0 + fRm) / (h * h);
    const Complex f_R = (fRp - fRm) / (2.0 * h);
    const Complex f_TT = (fTp - 2.0 * f0 + fTm) / (h * h);
    const Complex f_T = (fTp - fTm) / (2.0 * h);
    const double cot = std::cos(th) / std::sin(th);

    ResidualReport rep;
    rep.residual = f_RR + kI * f_R * f_R + (2.0 / R) * f_R +
                   (f_TT + kI * f_T * f_T + cot * f_T) / (R * R) - kI * (k * k);
    rep.relative_magnitude = std::abs(rep.residual) / (k * k);
    rep.h = h;
    rep.point = pt;
    return rep;
}

ResidualReport pde_envelope_residual(const BeamSpec& beam, const SphericalPoint& pt,
                                     Branch branch, double h) {
    if (!(h > 0.0)) throw DomainError("h must be > 0");
    const double margin = 10.0 * h;
    if (std::abs(pt.theta - kPi / 2.0) < margin)
        throw DomainError("envelope singular neighborhood: theta ~ pi/2");
    const double kR = beam.k * pt.R;
    const double half_period = kPi;
    const double zero_ref = branch == Branch::Cos ? kPi / 2.0 : 0.0;
    const double dist = std::abs(kR - (zero_ref + half_period * std::round((kR - zero_ref) / half_period)));
    if (dist < margin * beam.k)
        throw DomainError("envelope singular neighborhood: trig factor zero");

    const auto f = [&](double R, double theta) {
        return eval_envelope_exponent(beam, {R, theta, pt.phi}, branch);
    };
    return pde_envelope_residual_of(f, beam.k, pt, h);
}

double angular_identity(double theta) {
    if (!(theta > 0.0 && theta < kPi)) throw DomainError("theta must lie in (0, pi)");
    const double s = std::sin(theta), c = std::cos(theta);
    const double deriv = -c / (s * s);          // d(1/sin)/dtheta
    const double cot_term = (c / s) * (1.0 / s);
    return std::abs(deriv + cot_term);
}

double radial_identity(double R, double k, Branch branch) {
    if (!(R > 0.0)) throw DomainError("R must be > 0");
    if (!(k > 0.0)) throw DomainError("k must be > 0");
    const double kR = k * R;
    if (branch == Branch::Cos) {
        const double c = std::cos(kR), s = std::sin(kR);
        const double g = c / R;
        const double g1 = -k * s / R - c / (R * R);
        const double g2 = -k * k * c / R + 2.0 * k * s / (R * R) + 2.0 * c / (R * R * R);
        return std::abs(g2 + (2.0 / R) * g1 + k * k * g);
    }
    const double c = std::cos(kR), s = std::sin(kR);
    const double g = s / R;
    const double g1 = k * c / R - s / (R * R);
    const double g2 = -k * k * s / R - 2.0 * k * c / (R * R) + 2.0 * s / (R * R * R);
    return std::abs(g2 + (2.0 / R) * g1 + k * k * g);
}

ConvergenceReport convergence_order(const BeamSpec& beam, const SphericalPoint& pt,
                                    double h0, int levels) {
    if (levels < 3) throw DomainError("levels must be >= 3");
    ConvergenceReport rep;
    double h = h0;
    for (int i = 0; i < levels; ++i, h /= 2.0) {
        const ResidualReport r = helmholtz_residual(beam, pt, h);
        rep.h_values.push_back(h);
        rep.residuals.push_back(r.relative_magnitude);
        if (r.relative_magnitude < 1e-14 || r.relative_magnitude < 10.0 * r.noise_floor) {
            rep.precision_limited = true;
        }
    }
    if (rep.precision_limited) return rep;
    double sum = 0.0;
    for (int i = 0; i + 1 < levels; ++i)
        sum += std::log2(rep.residuals[i] / rep.residuals[i + 1]);
    rep.estimated_order = sum / (levels - 1);
    return rep;
}

}  // namespace npbeam
