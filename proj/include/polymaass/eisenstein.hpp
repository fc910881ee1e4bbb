#pragma once

#include "polymaass/types.hpp"

#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polymaass {

/// Fourier expansion of the completed series at fixed (k, s).  Term n
/// contributes
///   coefficient * (2pi|n|y)^{-k/2} W_{sgn(n) k/2, s+(k-1)/2}(4pi|n|y) e^{2pi i n x},
/// and the constant term is  constant_plus * y^s + constant_minus * y^{1-s-k}.
struct FourierExpansion {
    int weight = 0;
    cplx s;
    cplx constant_plus;
    cplx constant_minus;
    std::vector<std::pair<long, cplx>> terms;
    long truncation = 0;

    cplx eval(const UpperHalfPoint& z) const;
    /// Sound-in-practice bound on the dropped tail at height y; validated by
    /// the N-doubling test.
    double tail_bound(double y) const;
};

/// Expansion of the completed weight-k series at s, modes 0 < |n| <= N.
/// Throws PoleError if s is within 1e-6 of a pole of the internal Gamma /
/// completed-zeta factors.
FourierExpansion build_fourier_expansion(Weight k, cplx s, long N);

/// True when the Fourier formula has a (removable or genuine) singularity
/// within tol of s for weight k.
bool fourier_formula_singular(int k, cplx s, double tol = 1e-6);

struct LatticeSum {
    cplx value;
    double tail_bound;
};

/// Truncated double sum over 0 < max(|m|,|n|) <= M of
///   (1/2) y^s / (|mz+n|^{2s} (mz+n)^k).
/// Requires Re(2s+k) > 2.5 and M >= 50 (ConvergenceError otherwise).
LatticeSum eval_lattice_sum(Weight k, const UpperHalfPoint& z, cplx s, long M);

/// Same, throwing TailError when the tail bound exceeds tol.
cplx eval_lattice_sum_checked(Weight k, const UpperHalfPoint& z, cplx s, long M, double tol);

/// Reduce z into the standard fundamental domain.  Returns (z', gamma) with
/// z' = gamma z, |Re z'| <= 1/2 + 1e-12, |z'| >= 1 - 1e-12.
std::pair<UpperHalfPoint, UnimodularMatrix> reduce_to_fundamental_domain(const UpperHalfPoint& z);

/// (cz+d)^{-k} * value; the weight-k slash pullback of a value at gamma z.
cplx apply_slash(cplx value_at_gamma_z, Weight k, const UnimodularMatrix& gamma,
                 const UpperHalfPoint& z);

/// Normalized holomorphic q-series  1 - (2k/B_k) sum sigma_{k-1}(n) q^n,
/// k >= 4 even (WeightError otherwise), truncated at q^N.
cplx holomorphic_eisenstein(Weight k, const UpperHalfPoint& z, long N);

/// The lattice normalization at s = 0:  (1/2) zeta(k) E_k(z).
cplx holomorphic_eisenstein_at_s0(Weight k, const UpperHalfPoint& z, long N);

/// q prod_{n<=N} (1 - q^n)^24.
cplx discriminant_delta(const UpperHalfPoint& z, long N);

/// Truncation with |q|^N < 1e-16 at height y.
long delta_terms_for(double y);

struct EvalResult {
    cplx value;
    double tail_bound;
};

/// Evaluation front end: modular reduction, Fourier expansion with per-(k,s)
/// caching, completion-level conversion, and contour averaging across the
/// removable singularities of the formula.  Instances are not thread-safe
/// (mutable caches); use one per thread.
class Evaluator {
public:
    explicit Evaluator(long fourier_terms = 24) : fourier_terms_(fourier_terms) {}

    EvalResult eval_detailed(Weight k, const UpperHalfPoint& z, cplx s, Completion c) const;
    cplx eval(Weight k, const UpperHalfPoint& z, cplx s, Completion c) const {
        return eval_detailed(k, z, s, c).value;
    }

    /// Residue of the completed weight-k series at s0 by a small contour.
    cplx residue_at(Weight k, const UpperHalfPoint& z, cplx s0, double radius = 1e-2,
                    int nodes = 32) const;

    long fourier_terms() const { return fourier_terms_; }

private:
    cplx eval_reduced(Weight k, const UpperHalfPoint& z, cplx s, Completion c) const;
    cplx eval_formula(Weight k, const UpperHalfPoint& z, cplx s, Completion c) const;
    const FourierExpansion& expansion(Weight k, cplx s) const;
    cplx term_sum(const FourierExpansion& fe, const UpperHalfPoint& z) const;

    long fourier_terms_;
    mutable std::map<std::tuple<int, double, double>, FourierExpansion> cache_;
    mutable std::unordered_map<std::uint64_t, cplx> wcache_;
};

} // namespace polymaass
