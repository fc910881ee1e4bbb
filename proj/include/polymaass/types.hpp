#pragma once

#include <complex>
#include <cstdint>
#include <cmath>

#include "polymaass/errors.hpp"

namespace polymaass {

using cplx = std::complex<double>;

inline constexpr double euler_gamma = 0.57721566490153286061;

/// Point z = x + iy in the upper half-plane.
struct UpperHalfPoint {
    double x = 0.0;
    double y = 1.0;

    UpperHalfPoint() = default;
    UpperHalfPoint(double x_, double y_) : x(x_), y(y_) {
        if (!(y > 0.0)) throw DomainError("UpperHalfPoint requires y > 0");
    }
    cplx z() const { return {x, y}; }
};

/// Even integer weight, |k| <= 12.
struct Weight {
    int k = 0;

    Weight() = default;
    explicit Weight(int k_) : k(k_) {
        if (k % 2 != 0) throw WeightError("weight must be even");
        if (std::abs(k) > 12) throw WeightError("supported weight range is |k| <= 12");
    }
    operator int() const { return k; }
};

enum class Completion { Raw, Completed, DoublyCompleted };

/// Element of SL(2,Z) acting by z -> (az+b)/(cz+d).
struct UnimodularMatrix {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    bool is_valid() const { return a * d - b * c == 1; }
    cplx multiplier(const UpperHalfPoint& z) const {
        return cplx(double(c)) * z.z() + cplx(double(d));
    }
    UpperHalfPoint apply(const UpperHalfPoint& z) const {
        cplx w = (cplx(double(a)) * z.z() + cplx(double(b))) / multiplier(z);
        return {w.real(), w.imag()};
    }
    static UnimodularMatrix identity() { return {}; }
    static UnimodularMatrix translation(std::int64_t n) { return {1, n, 0, 1}; }
    static UnimodularMatrix inversion() { return {0, -1, 1, 0}; }
    friend UnimodularMatrix operator*(const UnimodularMatrix& g, const UnimodularMatrix& h) {
        return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
    }
};

/// Integer power of a complex number by repeated multiplication.
/// Even integer exponents keep (cz+d)^{-k} single-valued with no branch choice.
inline cplx ipow(cplx base, int e) {
    if (e < 0) return 1.0 / ipow(base, -e);
    cplx r = 1.0;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline bool near_nonpositive_integer(cplx s, double tol) {
    double re = s.real();
    if (re > 0.5) return false;
    double n = std::round(re);
    return n <= 0.0 && std::abs(re - n) <= tol && std::abs(s.imag()) <= tol;
}

} // namespace polymaass
