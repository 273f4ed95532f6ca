#ifndef NPBEAM_TYPES_HPP
#define NPBEAM_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace npbeam {

using Complex = std::complex<double>;

// Piecewise regime of the closed-form field: Cos for |k*R| <= pi/4,
// Sin for |k*R| > pi/4. The boundary tie resolves to Cos.
enum class Branch { Cos, Sin };

inline const char* to_string(Branch b) { return b == Branch::Cos ? "cos" : "sin"; }

// Amplitude constant and wavenumber of one beam instance. k must be > 0.
struct BeamSpec {
    double a = 1.0;
    double k = 1.0;
};

// Evaluation point in spherical coordinates. Field evaluators require
// R > 0 and theta strictly inside (0, pi); values never depend on phi.
struct SphericalPoint {
    double R = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

struct CartesianPoint {
    double X = 0.0;
    double Y = 0.0;
    double Z = 0.0;
};

// Classical Gaussian-beam parameters at axial position Z.
// r_curv may be +infinity (flat wavefront).
struct GaussianBeamParams {
    double w = 1.0;       // beam waist size
    double r_curv = 0.0;  // wavefront radius of curvature
    double zeta = 0.0;    // Gouy phase
    double Z = 0.0;       // axial position
};

// Complex phase p and the (X^2+Y^2) exponent coefficient 1/(2q).
struct PQPair {
    Complex p;
    Complex inv_2q;
};

struct FieldSample {
    Complex value;
    Branch branch;
};

// --- error taxonomy ---

class DomainError : public std::domain_error {
  public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class SingularEnvelopeError : public DomainError {
  public:
    explicit SingularEnvelopeError(const std::string& what) : DomainError(what) {}
};

class BranchCrossingError : public DomainError {
  public:
    explicit BranchCrossingError(const std::string& what) : DomainError(what) {}
};

class PoleError : public std::runtime_error {
  public:
    PoleError(const std::string& what, double last_good_t)
        : std::runtime_error(what), last_good_t(last_good_t) {}
    double last_good_t;
};

class StiffnessError : public std::runtime_error {
  public:
    explicit StiffnessError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace npbeam

#endif
