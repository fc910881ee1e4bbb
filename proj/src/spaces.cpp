#include "polymaass/spaces.hpp"
#include "polymaass/specialfn.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace polymaass {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

int dim_holomorphic(int k) {
    if (k < 0 || k % 2 != 0) return 0;
    return k / 12 + (k % 12 != 2 ? 1 : 0);
}

int dim_cusp(int k) {
    if (k < 0 || k % 2 != 0) return 0;
    int direct = (k % 12 == 2) ? std::max(k / 12 - 1, 0) : k / 12;
    if (k < 4) direct = 0;  // no cusp forms in weights 0 and 2
    if (k >= 4) {
        int subtracted = dim_holomorphic(k) - 1;
        if (direct != subtracted)
            throw ConsistencyError("dim_cusp: mod-12 formula disagrees with dim(M_k)-1");
    }
    return direct;
}

int dim_polyharmonic(int k, HarmonicDepth depth) {
    if (k % 2 != 0 || std::abs(k) > 26)
        throw RangeError("dim_polyharmonic: even |k| <= 26 required");
    if (depth.twice_depth > 16)
        throw RangeError("dim_polyharmonic: depth <= 8 required");
    if (k == 0) return depth.ceil_m();
    if (k == 2 || k <= -2) return depth.floor_m();
    return depth.ceil_m() + dim_cusp(k);
}

bool log_degenerate_reachable(int k) {
    // the zero mode becomes log-degenerate only when s0 = (1-k)/2 vanishes,
    // which needs odd weight 1
    return 1 - k == 0;
}

namespace {

std::string power_log_text(int y_exponent, int log_power) {
    std::ostringstream os;
    if (y_exponent == 0 && log_power == 0) return "1";
    if (y_exponent == 1) os << "y";
    else if (y_exponent != 0) os << "y^" << y_exponent;
    for (int j = 0; j < log_power; ++j) {
        if (os.tellp() > 0) os << "*";
        os << "log y";
    }
    return os.str();
}

} // namespace

CoefficientShape fourier_shape(int k, int depth_m, long mode_n) {
    if (k % 2 != 0) throw RangeError("fourier_shape: even weight required");
    if (depth_m < 1) throw RangeError("fourier_shape: depth >= 1 required");
    CoefficientShape shape;
    shape.weight = k;
    shape.depth_m = depth_m;
    shape.mode = mode_n;
    if (mode_n != 0) {
        shape.shape_case = ShapeCase::NonzeroMode;
        int sgn = mode_n > 0 ? 1 : -1;
        for (int j = 0; j < depth_m; ++j) {
            ShapeDescriptor d;
            d.kind = ShapeDescriptor::Kind::WDerivative;
            d.order = j;
            d.sign = sgn;
            std::ostringstream os;
            os << "d^" << j << "/ds^" << j << " W_{" << (sgn > 0 ? "+" : "-") << std::abs(k) / 2
               << ", s+(k-1)/2}|_{s=0}";
            d.text = os.str();
            shape.descriptors.push_back(d);
        }
        return shape;
    }
    shape.shape_case = ShapeCase::ZeroModeGeneric;  // s0 = 0 != (1-k)/2 for even k
    shape.reachable = true;
    for (int j = 0; j < depth_m; ++j) {
        ShapeDescriptor p;
        p.kind = ShapeDescriptor::Kind::PowerPlus;
        p.order = j;
        p.text = power_log_text(0, j);
        shape.descriptors.push_back(p);
        ShapeDescriptor q;
        q.kind = ShapeDescriptor::Kind::PowerMinus;
        q.order = j;
        q.text = power_log_text(1 - k, j);
        shape.descriptors.push_back(q);
    }
    return shape;
}

cplx one_harmonic_expansion_eval(int k, const OneHarmonicCoefficients& c,
                                 const UpperHalfPoint& z, long N) {
    if (z.y < 0.3) throw DomainError("one_harmonic_expansion_eval: y >= 0.3 required");
    cplx q = std::exp(cplx(0.0, 2.0 * kPi) * z.z());
    cplx acc = c.a0 + c.b0 * std::pow(z.y, 1.0 - k);
    cplx qn = 1.0;
    for (long n = 1; n <= N; ++n) {
        qn *= q;
        if (n <= static_cast<long>(c.a.size())) acc += c.a[n - 1] * qn;
        if (n <= static_cast<long>(c.b.size()) && c.b[n - 1] != cplx(0.0)) {
            cplx g = incomplete_gamma_upper(cplx(1.0 - k), 4.0 * kPi * n * z.y);
            if (g != cplx(0.0))
                acc += c.b[n - 1] * g *
                       std::exp(cplx(0.0, -2.0 * kPi * n * z.x) + cplx(2.0 * kPi * n * z.y));
        }
    }
    return acc;
}

void write_dim_table_csv(int kmin, int kmax, int max_twice_depth, std::ostream& os) {
    os << "k,twice_depth,dim\n";
    for (int k = kmin; k <= kmax; ++k) {
        if (k % 2 != 0) continue;
        for (int t = 1; t <= max_twice_depth; ++t)
            os << k << ',' << t << ',' << dim_polyharmonic(k, HarmonicDepth(t)) << '\n';
    }
}

} // namespace polymaass
