#pragma once

#include "polymaass/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace polymaass {

/// Harmonic depth m in (1/2) Z, stored exactly as 2m.
struct HarmonicDepth {
    int twice_depth = 1;

    explicit HarmonicDepth(int twice) : twice_depth(twice) {
        if (twice < 1) throw RangeError("HarmonicDepth: 2m >= 1 required");
    }
    int ceil_m() const { return (twice_depth + 1) / 2; }
    int floor_m() const { return twice_depth / 2; }
};

/// dim of the holomorphic space: 0 for k < 0 or odd, else [k/12] plus one
/// unless k = 2 mod 12.
int dim_holomorphic(int k);

/// Cusp-form dimension; computed by the direct mod-12 formula and by
/// dim_holomorphic - 1 (for even k >= 4), ConsistencyError on disagreement.
int dim_cusp(int k);

/// dim of the weight-k depth-m polyharmonic space at eigenvalue 0:
///   k = 0            -> ceil(m)
///   k = 2 or k <= -2 -> floor(m)
///   k >= 4           -> ceil(m) + dim_cusp(k)    (direct-sum count)
/// Supported box |k| <= 26 even, m <= 8.
int dim_polyharmonic(int k, HarmonicDepth depth);

enum class ShapeCase { NonzeroMode, ZeroModeGeneric, ZeroModeLogDegenerate };

struct ShapeDescriptor {
    enum class Kind { WDerivative, PowerPlus, PowerMinus } kind;
    int order = 0;  // s-derivative order j (W) or log power j (constant term)
    int sign = 0;   // mode sign for WDerivative
    std::string text;
};

/// Allowed functional form of one Fourier-coefficient function at lambda = 0
/// (s0 = 0 branch): m W-derivative slots for n != 0, the 2m power-log tags
/// for n = 0.  The log-degenerate zero-mode case requires s0 = (1-k)/2 = 0,
/// i.e. odd weight 1; it is represented by ShapeCase::ZeroModeLogDegenerate
/// but never reachable here (see log_degenerate_reachable).
struct CoefficientShape {
    int weight = 0;
    int depth_m = 1;
    long mode = 0;
    ShapeCase shape_case = ShapeCase::ZeroModeGeneric;
    bool reachable = true;
    std::vector<ShapeDescriptor> descriptors;
};

CoefficientShape fourier_shape(int k, int depth_m, long mode_n);
bool log_degenerate_reachable(int k);

/// Depth-1 Fourier template
///   sum b_{-n} Gamma(1-k, 4 pi n y) e^{-2 pi i n z} + (b0 y^{1-k} + a0)
///   + sum a_n e^{2 pi i n z}.
struct OneHarmonicCoefficients {
    cplx a0, b0;
    std::vector<cplx> a;  // a[j] = a_{j+1}
    std::vector<cplx> b;  // b[j] = b_{-(j+1)}
};

cplx one_harmonic_expansion_eval(int k, const OneHarmonicCoefficients& c,
                                 const UpperHalfPoint& z, long N);

/// CSV rows `k,twice_depth,dim` over even k in [kmin, kmax], 2m in [1, max].
void write_dim_table_csv(int kmin, int kmax, int max_twice_depth, std::ostream& os);

} // namespace polymaass
