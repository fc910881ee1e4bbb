#pragma once

#include "polymaass/types.hpp"

namespace polymaass {

// Complex special functions used by every evaluation path.  All functions are
// pure and thread-safe.  Powers z^a of positive real z use the principal
// branch exp(a log z) throughout.

/// Gamma(s) by Lanczos approximation with reflection for Re(s) < 1/2.
/// Relative error < 1e-13 for |s| <= 50.  Throws PoleError within 1e-14 of a
/// non-positive integer.
cplx gamma_complex(cplx s);

/// Reciprocal gamma; finite everywhere (zero at the poles of Gamma).
cplx reciprocal_gamma(cplx s);

/// Riemann zeta(s), Euler-Maclaurin for Re(s) >= 1/2 and the reflection
/// formula below that line.  Throws PoleError at s = 1.
cplx zeta_complex(cplx s);

/// Completed zeta  pi^{-s/2} Gamma(s/2) zeta(s) = zeta_hat(1-s).
/// Throws PoleError at s in {0, 1}.
cplx zeta_hat(cplx s);

/// Divisor power sum sigma_e(n) = sum_{d|n} d^e by trial division, n >= 1.
cplx divisor_sum(cplx exponent, long n);

/// Upper incomplete gamma Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt, x > 0.
/// Integer a <= 0 handled by the exact downward recurrence seeded at
/// Gamma(0,x) = E_1(x).  Throws DomainError for x <= 0.
cplx incomplete_gamma_upper(cplx a, double x);

struct WhittakerParams {
    int kappa = 0;          // integer first parameter (= +-k/2 for even weight k)
    cplx mu = 0.0;          // second parameter (= s + (k-1)/2)
    double argument = 1.0;  // positive real argument

    WhittakerParams(int kappa_, cplx mu_, double argument_)
        : kappa(kappa_), mu(mu_), argument(argument_) {
        if (!(argument > 0.0)) throw ParameterBoxError("whittaker: argument > 0 required");
    }
};

/// Whittaker W_{kappa,mu}(y) for integer kappa, complex mu, y > 0.
///
/// Scheme: mu is reflected to Re(mu) >= 0 (W is even in mu); W_{0,mu} comes
/// from the Bessel seed sqrt(y/pi) K_mu(y/2); W_{kappa,mu} for kappa <= -1
/// from the integral representation valid for Re(mu - kappa + 1/2) > 0; and
/// kappa >= 1 by the three-term recurrence
///   W_{K+1,mu}(y) = (y - 2K) W_{K,mu}(y) - ((K-1/2)^2 - mu^2) W_{K-1,mu}(y),
/// which is division-free upward and stable at desk scale.
///
/// Supported box: argument >= 0.5, |kappa| <= 8, |mu| <= 10
/// (ParameterBoxError outside).  Internal self-checks (quadrature node
/// doubling, series cancellation estimates) raise AccuracyError past 1e-9.
cplx whittaker_w(const WhittakerParams& p);
cplx whittaker_w(int kappa, cplx mu, double argument);

/// Modified Bessel K_mu(x) for complex order, x > 0.  Exposed for tests.
cplx bessel_k_complex_order(cplx mu, double x);

} // namespace polymaass
