#ifndef NPBEAM_CORE_FIELD_HPP
#define NPBEAM_CORE_FIELD_HPP

#include "npbeam/types.hpp"

namespace npbeam {

// ln(tan(theta/2)), the angular amplitude factor. Requires theta in (0, pi).
double log_tan_half(double theta);

// Cartesian -> spherical. Rejects the origin. theta lands in [0, pi],
// phi in [0, 2*pi). Poles (theta = 0 or pi) are valid coordinates here
// but are rejected later by the field evaluators.
SphericalPoint spherical_from_cartesian(const CartesianPoint& pt);

// Inverse transform (round-trip partner of spherical_from_cartesian).
CartesianPoint cartesian_from_spherical(const SphericalPoint& pt);

// Regime selection: Cos for k*R <= pi/4, Sin for k*R > pi/4.
Branch select_branch(double k, double R);

// Closed-form field with an explicitly chosen branch (no regime check,
// so either branch can be probed anywhere):
//   Cos: A = (k*a) * ln(tan(theta/2)) * cos(k*R)/(k*R)      (purely real)
//   Sin: A = (k*a) * ln(tan(theta/2)) * i*sin(k*R)/(k*R)    (purely imaginary)
Complex eval_branch(const BeamSpec& beam, const SphericalPoint& pt, Branch branch);

// Closed-form field in its proper regime; returns the value and the branch used.
FieldSample eval_field(const BeamSpec& beam, const SphericalPoint& pt);

// Envelope exponent f = f1(R) + f2(theta) with principal-branch logs, so that
// a * exp(i*f) reproduces eval_branch wherever the exponent is defined.
//   f2 = -i*ln(ln tan(theta/2))
//   f1 = -i*ln cos(kR) + i*ln R              (Cos)
//   f1 = -i*ln sin(kR) + i*ln R - i*ln i     (Sin)
Complex eval_envelope_exponent(const BeamSpec& beam, const SphericalPoint& pt, Branch branch);

// Classical p/q mapping: p = (zeta - k*Z) + i*ln w, 1/(2q) = i/w^2 - k/(2*r_curv).
// r_curv = +infinity means a flat wavefront (curvature term exactly zero).
PQPair beam_parameters_to_pq(const GaussianBeamParams& params, double k);

}  // namespace npbeam

#endif
