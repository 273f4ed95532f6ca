#ifndef NPBEAM_VERIFICATION_HPP
#define NPBEAM_VERIFICATION_HPP

#include <functional>
#include <vector>

#include "npbeam/types.hpp"

namespace npbeam {

using SphericalField = std::function<Complex(const SphericalPoint&)>;

// Spherical Laplacian by 3-point central differences with uniform step h:
//   A_RR + (2/R) A_R + (1/(R^2 sin^2 theta)) A_phiphi + (1/R^2) A_thth
//   + (cot theta / R^2) A_th
// The phi term is computed even for axisymmetric fields (it lands near 0).
Complex laplacian_spherical_fd(const SphericalField& field, const SphericalPoint& pt,
                               double h);

struct ResidualReport {
    Complex residual;
    double relative_magnitude = 0.0;  // |residual| / (k^2 |A| + 1e-300)
    double noise_floor = 0.0;         // rounding-noise estimate, same normalization
    double h = 0.0;
    SphericalPoint point;
};

// FD residual of Delta A + k^2 A for the closed-form field, evaluated with the
// branch fixed to the point's regime. Steps: radial 3-point with h*max(1,R),
// angular 5-point (4th order) with h*sin(theta); see the angular-step note in
// the implementation. Rejects stencils straddling the |kR| = pi/4 boundary.
ResidualReport helmholtz_residual(const BeamSpec& beam, const SphericalPoint& pt, double h);

// FD residual of the envelope PDE
//   f_RR + i f_R^2 + (2/R) f_R + (1/R^2)(f_thth + i f_th^2 + cot*f_th) - i k^2
// for f from eval_envelope_exponent. relative_magnitude normalizes by k^2.
ResidualReport pde_envelope_residual(const BeamSpec& beam, const SphericalPoint& pt,
                                     Branch branch, double h);

// Same PDE residual for an arbitrary envelope exponent f(R, theta); test hook
// for deliberately perturbed envelopes.
ResidualReport pde_envelope_residual_of(const std::function<Complex(double, double)>& f,
                                        double k, const SphericalPoint& pt, double h);

// | d(1/sin theta)/dtheta + cot(theta)*(1/sin theta) | with analytic derivatives
// (identically zero up to rounding).
double angular_identity(double theta);

// | g'' + (2/R) g' + k^2 g | for g = cos(kR)/R (Cos) or sin(kR)/R (Sin),
// analytic derivatives, full cancellation chain.
double radial_identity(double R, double k, Branch branch);

struct ConvergenceReport {
    std::vector<double> h_values;
    std::vector<double> residuals;  // relative magnitudes
    double estimated_order = 0.0;
    bool precision_limited = false;
};

// Helmholtz residual at h0, h0/2, ... ; estimated order is the mean of
// log2(res(h)/res(h/2)). Flags precision_limited instead of estimating when
// the residual sits below the rounding floor.
ConvergenceReport convergence_order(const BeamSpec& beam, const SphericalPoint& pt,
                                    double h0, int levels);

}  // namespace npbeam

#endif
