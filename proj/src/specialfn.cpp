#include "polymaass/specialfn.hpp"
#include "polymaass/rational.hpp"
#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace polymaass {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

// Lanczos, g = 607/128, 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

cplx lanczos_pos(cplx z) {
    // valid Re(z) >= 0.5
    z -= 1.0;
    cplx acc = kLanczos[0];
    for (int i = 1; i < 15; ++i) acc += kLanczos[i] / (z + cplx(double(i)));
    cplx t = z + (kLanczosG + 0.5);
    return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * acc;
}

} // namespace

cplx gamma_complex(cplx s) {
    if (near_nonpositive_integer(s, 1e-14))
        throw PoleError("gamma_complex: pole at non-positive integer");
    if (s.real() >= 0.5) return lanczos_pos(s);
    // reflection  Gamma(s) = pi / (sin(pi s) Gamma(1-s))
    return kPi / (std::sin(kPi * s) * lanczos_pos(1.0 - s));
}

cplx reciprocal_gamma(cplx s) {
    if (s.real() >= 0.5) return 1.0 / lanczos_pos(s);
    return std::sin(kPi * s) * lanczos_pos(1.0 - s) / kPi;
}

cplx zeta_complex(cplx s) {
    if (std::abs(s - cplx(1.0)) < 1e-13) throw PoleError("zeta_complex: pole at s = 1");
    // Euler-Maclaurin stays valid a little past the imaginary axis, which
    // keeps the reflection target clear of the pole at 1
    if (s.real() < -0.5) {
        // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
        cplx one_minus = 1.0 - s;
        return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
               gamma_complex(one_minus) * zeta_complex(one_minus);
    }
    const int N = 28 + static_cast<int>(std::ceil(std::min(200.0, std::abs(s.imag()))));
    const int J = 14;
    cplx acc = 0.0;
    for (int n = 1; n < N; ++n) acc += std::exp(-s * std::log(double(n)));
    const cplx logN = std::log(double(N));
    acc += std::exp((1.0 - s) * logN) / (s - 1.0);
    acc += 0.5 * std::exp(-s * logN);
    // Euler-Maclaurin tail: sum_j B_{2j}/(2j)! (s)_{2j-1} N^{1-s-2j}
    cplx rising = s;  // (s)_{1}
    double fact = 2.0; // (2j)! running
    for (int j = 1; j <= J; ++j) {
        double b2j = bernoulli(2 * j).to_double();
        acc += (b2j / fact) * rising * std::exp((1.0 - s - 2.0 * double(j)) * logN);
        // advance (s)_{2j-1} -> (s)_{2j+1},  (2j)! -> (2j+2)!
        rising *= (s + cplx(2.0 * j - 1.0)) * (s + cplx(2.0 * j));
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return acc;
}

cplx zeta_hat(cplx s) {
    if (std::abs(s) < 1e-13 || std::abs(s - cplx(1.0)) < 1e-13)
        throw PoleError("zeta_hat: pole at s in {0, 1}");
    if (s.real() < 0.5) s = 1.0 - s;  // functional equation; dodges trivial-zero 0*inf
    return std::pow(kPi, -s / 2.0) * gamma_complex(s / 2.0) * zeta_complex(s);
}

cplx divisor_sum(cplx exponent, long n) {
    if (n < 1) throw DomainError("divisor_sum: n >= 1 required");
    cplx acc = 0.0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        acc += std::exp(exponent * std::log(double(d)));
        long e = n / d;
        if (e != d) acc += std::exp(exponent * std::log(double(e)));
    }
    return acc;
}

namespace {

// E_1(x) = Gamma(0, x)
double exp_integral_e1(double x) {
    if (x <= 1.0) {
        double acc = -euler_gamma - std::log(x);
        double term = 1.0;
        for (int k = 1; k < 40; ++k) {
            term *= -x / k;
            acc -= term / k;
            if (std::abs(term / k) < 1e-18 * std::abs(acc)) break;
        }
        return acc;
    }
    // Lentz continued fraction for exp(x) E_1(x)
    double b = x + 1.0, C = b, D = 0.0, f = b;
    for (int i = 1; i < 300; ++i) {
        double a = -double(i) * double(i);
        b += 2.0;
        D = b + a * D;
        if (D == 0.0) D = 1e-300;
        C = b + a / C;
        if (C == 0.0) C = 1e-300;
        D = 1.0 / D;
        double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x) / f;
}

cplx incgamma_cf(cplx a, double x) {
    cplx b = x + 1.0 - a, C = b, D = 0.0, f = b;
    for (int i = 1; i < 400; ++i) {
        cplx an = -double(i) * (double(i) - a);
        b += 2.0;
        D = b + an * D;
        if (std::abs(D) < 1e-300) D = 1e-300;
        C = b + an / C;
        if (std::abs(C) < 1e-300) C = 1e-300;
        D = 1.0 / D;
        cplx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x)) / f;
}

cplx incgamma_series_complement(cplx a, double x) {
    // Gamma(a) - lower series
    cplx term = 1.0 / a, acc = term;
    for (int n = 1; n < 500; ++n) {
        term *= x / (a + cplx(double(n)));
        acc += term;
        if (std::abs(term) < 1e-17 * std::abs(acc)) break;
    }
    cplx lower = std::exp(a * std::log(x) - x) * acc;
    return gamma_complex(a) - lower;
}

} // namespace

cplx incomplete_gamma_upper(cplx a, double x) {
    if (!(x > 0.0)) throw DomainError("incomplete_gamma_upper: x > 0 required");
    const double are = std::round(a.real());
    const bool integer_a = std::abs(a.real() - are) < 1e-12 && std::abs(a.imag()) < 1e-12;
    if (integer_a && are <= 1.0) {
        const long m = static_cast<long>(are);
        if (m == 1) return std::exp(-x);
        // the downward recurrence cancels catastrophically once x is large
        // (consecutive terms agree to O(1/x)); the continued fraction has no
        // such loss there
        if (m < 0 && x > 1.5) return incgamma_cf(cplx(double(m)), x);
        cplx g = exp_integral_e1(x);  // Gamma(0, x)
        double xp = 1.0 / x;          // x^{aa-1} for aa = 0
        const double ex = std::exp(-x);
        for (long aa = 0; aa > m; --aa) {
            // Gamma(aa-1, x) = (Gamma(aa,x) - x^{aa-1} e^{-x}) / (aa-1)
            g = (g - xp * ex) / double(aa - 1);
            xp /= x;
        }
        return g;
    }
    if (x > a.real() + 1.0) return incgamma_cf(a, x);
    return incgamma_series_complement(a, x);
}

// ---------------------------------------------------------------------------
// Bessel K of complex order and the Whittaker W built on it.
// ---------------------------------------------------------------------------

namespace {

struct Estimated {
    cplx value;
    double rel_err;
};

Estimated bessel_k_series(cplx mu, double x) {
    // K = (pi/2) (I_{-mu} - I_mu) / sin(pi mu); requires mu away from integers
    auto branch = [&](cplx m) -> cplx {
        cplx g = gamma_complex(m + 1.0);
        cplx term = 1.0 / g, acc = term;
        const double q = x * x / 4.0;
        for (int j = 1; j < 90; ++j) {
            term *= q / (double(j) * (m + cplx(double(j))));
            acc += term;
            if (std::abs(term) < 1e-18 * std::abs(acc)) break;
        }
        return std::exp(m * std::log(x / 2.0)) * acc;
    };
    cplx ip = branch(mu), im = branch(-mu);
    cplx diff = im - ip;
    cplx val = kPi / 2.0 * diff / std::sin(kPi * mu);
    double cancel = (std::abs(ip) + std::abs(im)) / std::max(1e-300, std::abs(diff));
    return {val, 1e-16 * std::max(1.0, cancel)};
}

cplx bessel_k_integral_once(cplx mu, double x, int nodes) {
    const double mre = std::abs(mu.real());
    double t = std::acosh(1.0 + 48.0 / x);
    for (int it = 0; it < 4; ++it) t = std::acosh((48.0 + x + mre * t) / x);
    auto f = [&](double u) { return std::exp(cplx(-x * std::cosh(u))) * std::cosh(mu * u); };
    const double panel = std::min(3.0, 12.0 / std::max(1.0, std::abs(mu.imag())));
    const int npanels = std::max(1, static_cast<int>(std::ceil(t / panel)));
    return detail::gl_composite(f, 0.0, t, nodes, npanels);
}

Estimated bessel_k_integral(cplx mu, double x) {
    cplx v1 = bessel_k_integral_once(mu, x, 48);
    cplx v2 = bessel_k_integral_once(mu, x, 80);
    double err = std::abs(v1 - v2) / std::max(1e-300, std::abs(v2));
    return {v2, err};
}

Estimated bessel_k(cplx mu, double x) {
    if (mu.real() < 0) mu = -mu;
    const bool near_int =
        std::abs(mu.imag()) < 0.05 && std::abs(mu.real() - std::round(mu.real())) < 0.05;
    if (x < 6.0 && !near_int) {
        Estimated s = bessel_k_series(mu, x);
        if (s.rel_err < 1e-11) return s;
        Estimated q = bessel_k_integral(mu, x);
        return (q.rel_err < s.rel_err) ? q : s;
    }
    return bessel_k_integral(mu, x);
}

// W_{kappa,mu}(z) for kappa <= -1 via the Kummer-U integral; Re(mu) >= 0 assumed.
Estimated whittaker_negative(int kappa, cplx mu, double z) {
    const cplx am = mu - double(kappa) - 0.5;  // exponent of t
    const cplx bm = mu + double(kappa) - 0.5;  // exponent of (1+t)
    auto h = [&](double t) {
        return std::exp(-z * t + am * std::log(t) + bm * std::log1p(t));
    };
    const double freq = std::max(1.0, 2.0 * std::abs(mu.imag()));
    const double panel = std::min(2.5, 12.0 / freq);

    // t in (0,1]: t = e^{-v}.  The integrand peaks near t* = am/z, so the
    // cutoff must reach well below t*, not just below t = 1.
    const double a1 = std::max(0.5, am.real());
    const double vmax = (z > a1 ? std::log(z / a1) : 0.0) + (44.0 + a1) / (a1 + 1.0);
    auto f_low = [&](double v) { double t = std::exp(-v); return h(t) * t; };
    // t in [1,tmax): t = e^{v}
    double tmax = (48.0 + z) / z;
    for (int it = 0; it < 4; ++it)
        tmax = (48.0 + z + std::max(0.0, (am + bm).real()) * std::log(tmax)) / z;
    tmax = std::max(tmax, 1.5);
    auto f_high = [&](double v) { double t = std::exp(v); return h(t) * t; };

    auto run = [&](int nodes) {
        int pl = std::max(2, static_cast<int>(std::ceil(vmax / panel)));
        int ph = std::max(2, static_cast<int>(std::ceil(std::log(tmax) / panel)));
        return detail::gl_composite(f_low, 0.0, vmax, nodes, pl) +
               detail::gl_composite(f_high, 0.0, std::log(tmax), nodes, ph);
    };
    cplx v1 = run(36), v2 = run(60);
    double err = std::abs(v1 - v2) / std::max(1e-300, std::abs(v2));
    cplx pref = std::exp(-z / 2.0 + (mu + 0.5) * std::log(z)) /
                gamma_complex(mu - double(kappa) + 0.5);
    return {pref * v2, err};
}

} // namespace

cplx bessel_k_complex_order(cplx mu, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k: x > 0 required");
    return bessel_k(mu, x).value;
}

cplx whittaker_w(int kappa, cplx mu, double argument) {
    return whittaker_w(WhittakerParams(kappa, mu, argument));
}

cplx whittaker_w(const WhittakerParams& p) {
    if (!(p.argument >= 0.5))
        throw ParameterBoxError("whittaker_w: argument >= 0.5 required");
    if (std::abs(p.kappa) > 8)
        throw ParameterBoxError("whittaker_w: |kappa| <= 8 required");
    if (std::abs(p.mu) > 10.0)
        throw ParameterBoxError("whittaker_w: |mu| <= 10 required");

    cplx mu = p.mu;
    if (mu.real() < 0) mu = -mu;  // W_{kappa,mu} = W_{kappa,-mu}
    const double z = p.argument;
    const int kappa = p.kappa;

    if (kappa <= -1) {
        Estimated w = whittaker_negative(kappa, mu, z);
        if (w.rel_err > 1e-9)
            throw AccuracyError("whittaker_w: self-check above 1e-9 (integral path)");
        return w.value;
    }

    Estimated k0 = bessel_k(mu, z / 2.0);
    cplx w0 = std::sqrt(z / kPi) * k0.value;
    if (kappa == 0) {
        if (k0.rel_err > 1e-9)
            throw AccuracyError("whittaker_w: self-check above 1e-9 (Bessel seed)");
        return w0;
    }

    Estimated wm1 = whittaker_negative(-1, mu, z);
    double seed_err = std::max(k0.rel_err, wm1.rel_err);
    if (seed_err > 1e-9)
        throw AccuracyError("whittaker_w: self-check above 1e-9 (seeds)");

    // climb: W_{K+1} = (z - 2K) W_K - ((K-1/2)^2 - mu^2) W_{K-1}
    cplx wk = w0, wkm1 = wm1.value;
    for (int K = 0; K < kappa; ++K) {
        cplx next = (z - 2.0 * K) * wk - ((K - 0.5) * (K - 0.5) - mu * mu) * wkm1;
        wkm1 = wk;
        wk = next;
    }
    return wk;
}

} // namespace polymaass
