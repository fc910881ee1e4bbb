#pragma once

#include "polymaass/types.hpp"
#include "polymaass/eisenstein.hpp"
#include "polymaass/taylor.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace polymaass {

/// Five-point central-difference stencil with optional one-level Richardson
/// extrapolation.  Footprint must stay inside y > 0.1.
struct Stencil {
    double h = 1e-2;
    bool richardson = true;
};

using SmoothField = std::function<cplx(const UpperHalfPoint&)>;

/// Weight-k hyperbolic Laplacian
///   y^2 (f_xx + f_yy) - i k y (f_x + i f_y)
/// by finite differences.
cplx laplacian(const SmoothField& f, Weight k, const UpperHalfPoint& z,
               const Stencil& st = {});

/// Conjugate-linear first-order operator  i y^k conj(f_x + i f_y)
/// mapping weight k to weight 2-k.
cplx xi(const SmoothField& f, Weight k, const UpperHalfPoint& z, const Stencil& st = {});

/// Profile of one Fourier mode: y^{-k/2} W_{sgn(n) k/2, s+(k-1)/2}(4 pi |n| y);
/// the mode field is this times e^{2 pi i n x}.
cplx fourier_term_profile(Weight k, long n, cplx s, double y);

/// Closed-form xi_k image of the mode above, with its e^{-2 pi i n x} factor
/// stripped: for n <= -1 it is -y^{-(2-k)/2} W_{(2-k)/2, -conj(s)+(1-k)/2},
/// for n >= 1 it carries the prefactor conj(s)(1-k-conj(s)).
cplx xi_on_fourier_terms(Weight k, long n, cplx s, double y);

struct PointResidual {
    UpperHalfPoint z;
    double residual;
};

struct VerificationReport {
    std::string identity;
    std::vector<int> weights;  // weights the identity was exercised at
    std::string params;
    std::vector<PointResidual> points;
    double tolerance = 0.0;
    double max_residual = 0.0;
    bool pass = false;
    std::vector<std::string> notes;
};

struct VerifyOptions {
    std::vector<UpperHalfPoint> grid;
    Stencil stencil;
    ContourSpec contour;
    std::map<std::string, double> tolerance_overrides;

    VerifyOptions();
};

std::vector<UpperHalfPoint> default_grid();
std::vector<UpperHalfPoint> dense_grid();

/// Names of all registered operator identities, in report order.
const std::vector<std::string>& identity_registry();

/// Verify one named identity over the option grid.  UnknownIdentityError for
/// names outside the registry.  Residuals are max |LHS-RHS| / max(1, |RHS|).
VerificationReport verify_identity(const std::string& name, const Evaluator& ev,
                                   const VerifyOptions& opt = {});

std::vector<VerificationReport> verify_all(const Evaluator& ev,
                                           const VerifyOptions& opt = {});

} // namespace polymaass
