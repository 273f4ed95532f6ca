#ifndef NPBEAM_RICCATI_HPP
#define NPBEAM_RICCATI_HPP

#include <functional>
#include <utility>
#include <vector>

#include "npbeam/types.hpp"

namespace npbeam {

// Right-hand side of the angular Riccati equation:
//   y'(theta) = -i*y^2 - cot(theta)*y + C
Complex angular_rhs(double theta, Complex y, Complex C);

// Right-hand side of the radial Riccati equation:
//   y'(R) = -i*y^2 - (2/R)*y - (C/R^2 - i*k^2)
Complex radial_rhs(double R, Complex y, Complex C, double k);

// Closed-form angular solution for C = 0:
//   u(theta) = 1 / (C0 + i*ln tan(theta/2));  y(theta) = csc(theta)*u(theta)
Complex angular_closed_u(double theta, Complex C0);

// Closed-form radial solution for C = 0:
//   Cos: y1 = i*k*tan(kR) + i/R
//   Sin: y1 = -i*k*cot(kR) + i/R
Complex radial_closed_y1(double R, double k, Branch branch);

using ComplexRhs = std::function<Complex(double, Complex)>;

struct OdeSolution {
    std::vector<std::pair<double, Complex>> nodes;  // accepted (t, y), t monotone
    int n_accepted = 0;
    int n_rejected = 0;
    double max_local_error = 0.0;  // largest accepted local error estimate

    Complex final_value() const { return nodes.back().second; }
};

// Adaptive Dormand-Prince 5(4) over [t0, t1] (either direction).
// Local error per step is kept below tol*(1+|y|). Aborts with PoleError
// when |y| exceeds 1e8, with StiffnessError on step-size underflow.
OdeSolution integrate_complex_ode(const ComplexRhs& rhs, double t0, Complex y0,
                                  double t1, double tol);

// Fixed-step classical RK4; used by the order-measurement tests.
Complex integrate_fixed_rk4(const ComplexRhs& rhs, double t0, Complex y0,
                            double t1, int n_steps);

struct CrosscheckReport {
    double max_abs_error = 0.0;
    double max_rel_error = 0.0;
    double t_a = 0.0;
    double t_b = 0.0;
    int n_samples = 0;
    double tolerance = 0.0;  // pass threshold on max_rel_error
    bool passed = false;
};

// Integrates the substituted angular equation u' = -i*csc(theta)*u^2 (C = 0)
// seeded by the closed form at theta_a and reports the worst deviation from
// angular_closed_u at n_samples points. Rejects intervals containing a zero
// of C0 + i*ln tan(theta/2).
CrosscheckReport crosscheck_angular(Complex C0, double theta_a, double theta_b,
                                    double tol, int n_samples);

// Same scheme for the radial equation (C = 0) against radial_closed_y1.
// Rejects intervals containing a trig pole of the chosen branch.
CrosscheckReport crosscheck_radial(double k, double R_a, double R_b, Branch branch,
                                   double tol, int n_samples);

}  // namespace npbeam

#endif
