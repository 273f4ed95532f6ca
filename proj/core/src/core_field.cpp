#include "npbeam/core_field.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace npbeam {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void check_point(const SphericalPoint& pt) {
    if (!(pt.R > 0.0)) throw DomainError("R must be > 0");
    if (!(pt.theta > 0.0 && pt.theta < kPi)) throw DomainError("theta must lie in (0, pi)");
}
}  // namespace

double log_tan_half(double theta) {
    if (!(theta > 0.0 && theta < kPi)) throw DomainError("theta must lie in (0, pi)");
    // exact zero on the equatorial plane; log(tan(.)) alone leaves ~1e-17
    if (theta == kPi / 2.0) return 0.0;
    return std::log(std::tan(0.5 * theta));
}

SphericalPoint spherical_from_cartesian(const CartesianPoint& pt) {
    if (!(std::isfinite(pt.X) && std::isfinite(pt.Y) && std::isfinite(pt.Z)))
        throw DomainError("cartesian coordinates must be finite");
    const double R = std::hypot(pt.X, pt.Y, pt.Z);
    if (R == 0.0) throw DomainError("origin has no spherical representation");
    const double theta = std::acos(std::clamp(pt.Z / R, -1.0, 1.0));
    double phi = std::atan2(pt.Y, pt.X);
    if (phi < 0.0) phi += 2.0 * kPi;
    if (phi >= 2.0 * kPi) phi = 0.0;
    return {R, theta, phi};
}

CartesianPoint cartesian_from_spherical(const SphericalPoint& pt) {
    const double s = std::sin(pt.theta);
    return {pt.R * s * std::cos(pt.phi), pt.R * s * std::sin(pt.phi),
            pt.R * std::cos(pt.theta)};
}

Branch select_branch(double k, double R) {
    if (!(k > 0.0)) throw DomainError("k must be > 0");
    if (!(R > 0.0)) throw DomainError("R must be > 0");
    return k * R <= kPi / 4.0 ? Branch::Cos : Branch::Sin;
}

Complex eval_branch(const BeamSpec& beam, const SphericalPoint& pt, Branch branch) {
    check_point(pt);
    if (!(beam.k > 0.0)) throw DomainError("k must be > 0");
    const double kR = beam.k * pt.R;
    const double angular = log_tan_half(pt.theta);
    if (branch == Branch::Cos)
        return Complex{beam.k * beam.a * angular * std::cos(kR) / kR, 0.0};
    return Complex{0.0, beam.k * beam.a * angular * std::sin(kR) / kR};
}

FieldSample eval_field(const BeamSpec& beam, const SphericalPoint& pt) {
    const Branch branch = select_branch(beam.k, pt.R);
    return {eval_branch(beam, pt, branch), branch};
}

Complex eval_envelope_exponent(const BeamSpec& beam, const SphericalPoint& pt, Branch branch) {
    check_point(pt);
    if (!(beam.k > 0.0)) throw DomainError("k must be > 0");
    const double kR = beam.k * pt.R;
    const double angular = log_tan_half(pt.theta);
    if (angular == 0.0 || std::abs(pt.theta - kPi / 2.0) < 1e-14)
        throw SingularEnvelopeError("envelope exponent singular at theta = pi/2");

    const Complex f2 = -kI * std::log(Complex{angular, 0.0});

    Complex f1;
    if (branch == Branch::Cos) {
        const double c = std::cos(kR);
        if (c == 0.0) throw SingularEnvelopeError("cos(kR) = 0: envelope exponent singular");
        f1 = -kI * std::log(Complex{c, 0.0}) + kI * std::log(pt.R);
    } else {
        const double s = std::sin(kR);
        if (s == 0.0) throw SingularEnvelopeError("sin(kR) = 0: envelope exponent singular");
        f1 = -kI * std::log(Complex{s, 0.0}) + kI * std::log(pt.R) - kI * std::log(kI);
    }
    return f1 + f2;
}

PQPair beam_parameters_to_pq(const GaussianBeamParams& params, double k) {
    if (!(params.w > 0.0)) throw DomainError("waist w must be > 0");
    if (params.r_curv == 0.0) throw DomainError("r_curv must be nonzero");
    if (!(k > 0.0)) throw DomainError("k must be > 0");
    PQPair out;
    out.p = Complex{params.zeta - k * params.Z, std::log(params.w)};
    const double curvature =
        std::isinf(params.r_curv) ? 0.0 : k / (2.0 * params.r_curv);
    out.inv_2q = Complex{-curvature, 1.0 / (params.w * params.w)};
    return out;
}

}  // namespace npbeam
