#pragma once

#include "polymaass/types.hpp"
#include "polymaass/eisenstein.hpp"
#include "polymaass/connection.hpp"

#include <map>
#include <tuple>
#include <utility>

namespace polymaass {

/// Circle around s = 0 used for Taylor-coefficient extraction.  Node angles
/// are (2j+1) pi / nodes, so no node meets the real axis; nodes must be even.
struct ContourSpec {
    double radius = 0.375;
    int nodes = 64;

    void validate(int weight, int order) const;
};

enum class TaylorFamily { Plain, Symmetrized, Modified };

struct TaylorCoefficientRequest {
    Weight weight;
    int order = 0;
    UpperHalfPoint point;
    ContourSpec contour;
    TaylorFamily family = TaylorFamily::Plain;
    Boundary boundary = Boundary::Binomial;  // connection table used by Modified
};

/// Taylor coefficients in s at s = 0 of the doubly-completed series, by
/// trapezoidal contour integration (spectrally accurate, the function being
/// entire), plus the symmetrized and modified recombinations.  Plain
/// coefficients are memoized per (weight, order, point, contour); instances
/// are not thread-safe, use one per thread.
class TaylorBasis {
public:
    explicit TaylorBasis(const Evaluator& ev) : ev_(ev) {}

    /// Plain coefficient: order-n Taylor coefficient of the weight-k
    /// doubly-completed series at z.
    cplx coefficient(Weight k, int n, const UpperHalfPoint& z,
                     const ContourSpec& contour = {}) const;

    /// Symmetrized basis for weights 0 and 2 (binomial recombination).
    cplx symmetrized(Weight k, int n, const UpperHalfPoint& z,
                     const ContourSpec& contour = {}) const;

    /// Modified pair for k >= 2: first the weight-k combination
    /// sum_l (-1)^l c_{n,k,l} G_{n-l,k}, then the dual-weight combination
    /// (-1)^n sum_l c_{n,k,l} F_{n-l,2-k}.  Requires table.weight == k with
    /// at least n rows (TableMismatchError otherwise).
    std::pair<cplx, cplx> modified(Weight k, int n, const UpperHalfPoint& z,
                                   const ConnectionTable& table,
                                   const ContourSpec& contour = {}) const;

    cplx dispatch(const TaylorCoefficientRequest& req) const;

private:
    const Evaluator& ev_;
    mutable std::map<std::tuple<int, int, double, double, double, int>, cplx> memo_;
};

/// Explicit low-order closed forms.  Each comes in two sign/constant
/// variants: the cross-validated one (matching the lattice-sum and
/// functional-equation-validated evaluators) and an alternate that circulates
/// in the literature; the verification suite reports residuals of both and
/// asserts only the cross-validated form.

/// Weight-2 order-1 coefficient as a truncated series:
///   pi/6 - 1/(2y) - 4 pi sum_{n<=N} sigma_1(n) e^{2 pi i n z}.
cplx explicit_g1_series(const UpperHalfPoint& z, long N);
/// Alternate form -pi/6 - 1/(2y) + 4 pi sum sigma_1(n) e^{2 pi i n z}.
cplx explicit_g1_series_alternate(const UpperHalfPoint& z, long N);

/// Weight-0 order-1 coefficient in closed form:
///   -gamma/2 - 1/2 + log(2 sqrt(pi)) + log(sqrt(y) |Delta(z)|^{1/12}).
cplx kronecker_limit_value(const UpperHalfPoint& z);
/// Alternate constant -gamma/2 + log(4 pi) + log(sqrt(y) |Delta(z)|^{1/12}).
cplx kronecker_limit_value_alternate(const UpperHalfPoint& z);

} // namespace polymaass
