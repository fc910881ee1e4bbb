#pragma once

#include <vector>
#include <cmath>
#include <mutex>
#include <unordered_map>

namespace polymaass::detail {

struct GaussRule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

/// Gauss-Legendre rule on [-1,1], Newton on P_n from Chebyshev guesses. Cached.
inline const GaussRule& gauss_legendre(int n) {
    static std::mutex mtx;
    static std::unordered_map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p0 = 0, p1 = 0;
        for (int iter = 0; iter < 100; ++iter) {
            p0 = 1.0;
            p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
            }
            double dp = n * (t * p0 - p1) / (t * t - 1.0);
            double dt = p0 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-16) {
                p0 = 1.0;
                p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
                }
                break;
            }
        }
        double dp = n * (t * p0 - p1) / (t * t - 1.0);
        r.x[i] = -t;
        r.x[n - 1 - i] = t;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

/// integral of f over [a,b] with an n-point Gauss-Legendre rule.
template <typename F>
auto gl_integrate(F&& f, double a, double b, int n) {
    const auto& r = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    decltype(f(a)) acc{};
    for (int i = 0; i < n; ++i) acc += r.w[i] * f(mid + half * r.x[i]);
    return half * acc;
}

/// Composite rule: npanels equal panels, n points each.
template <typename F>
auto gl_composite(F&& f, double a, double b, int n, int npanels) {
    decltype(f(a)) acc{};
    const double step = (b - a) / npanels;
    for (int p = 0; p < npanels; ++p)
        acc += gl_integrate(f, a + p * step, a + (p + 1) * step, n);
    return acc;
}

} // namespace polymaass::detail
