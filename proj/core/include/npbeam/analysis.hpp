#ifndef NPBEAM_ANALYSIS_HPP
#define NPBEAM_ANALYSIS_HPP

#include "npbeam/types.hpp"

namespace npbeam {

// Admissible angular window [2*arctan(1/e), 2*arctan(e)] where the angular
// amplitude factor satisfies |ln tan(theta/2)| <= 1.
struct ThetaWindow {
    double theta0;
    double theta1;
};

ThetaWindow admissible_theta_window();

// true iff |ln tan(theta/2)| <= 1, i.e. theta in [theta0, theta1] (inclusive).
bool amplitude_within_bound(double theta);

// Real part of the closed-form field in Cartesian coordinates,
//   (k*a) * ln(r / (sqrt(r^2+Z^2) + Z)) * cos(kR)/(kR),  r = sqrt(X^2+Y^2),
// algebraically identical to the Cos-branch spherical form (probe mode: no
// regime check). Requires r > 0 and Z > 0.
double exact_real_part_cartesian(const BeamSpec& beam, double X, double Y, double Z);

// Small-angle approximation: (k*a) * ln(r/(2Z)) * cos(kZ)/(kZ).
double paraxial_field(const BeamSpec& beam, double X, double Y, double Z);

struct ParaxialComparison {
    double exact = 0.0;
    double approx = 0.0;
    double abs_error = 0.0;
    double rel_error = 0.0;
    double fresnel_parameter = 0.0;  // k*r^2/(2Z)
};

ParaxialComparison paraxial_error(const BeamSpec& beam, double X, double Y, double Z);

// Bisection on theta -> ln tan(theta/2) over the admissible window; returns
// the zero line theta = pi/2 (independent of R).
double locate_vortex(const BeamSpec& beam, double R);

struct EnergyReport {
    double R_lo = 0.0, R_hi = 0.0;
    double theta_lo = 0.0, theta_hi = 0.0;
    double value = 0.0;
    int n_radial = 0, n_angular = 0;
};

// Shell integral of |A|^2 * R^2 * sin(theta) * 2*pi (or |A| with
// use_magnitude) by composite 16-point Gauss-Legendre panels. The radial
// interval is split at the |kR| = pi/4 branch boundary so no panel straddles
// the regime switch. n_radial / n_angular are panel counts.
EnergyReport shell_energy(const BeamSpec& beam, double R_lo, double R_hi,
                          double theta_lo, double theta_hi, int n_radial,
                          int n_angular, bool use_magnitude = false);

}  // namespace npbeam

#endif
