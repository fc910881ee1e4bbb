#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polymaass/specialfn.hpp"
#include "polymaass/rational.hpp"

#include <cmath>
#include <random>

using namespace polymaass;

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// adaptive Simpson oracle for int_x^inf t^{a-1} e^{-t} dt (real a), used to
// pin incomplete-gamma values independently of the library path
double adaptive_simpson(double a, double lo, double hi, double flo, double fmid, double fhi,
                        double whole, double tol, int depth) {
    auto f = [a](double t) { return std::pow(t, a - 1.0) * std::exp(-t); };
    double mid = 0.5 * (lo + hi);
    double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    double flm = f(lm), frm = f(rm);
    double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(a, lo, mid, flo, flm, fmid, left, tol / 2.0, depth - 1) +
           adaptive_simpson(a, mid, hi, fmid, frm, fhi, right, tol / 2.0, depth - 1);
}

double upper_gamma_quadrature(double a, double x) {
    auto f = [a](double t) { return std::pow(t, a - 1.0) * std::exp(-t); };
    double hi = x + 60.0 + 10.0 * std::abs(a);
    double mid = 0.5 * (x + hi);
    double whole = (hi - x) / 6.0 * (f(x) + 4.0 * f(mid) + f(hi));
    double scale = std::max(std::abs(f(x)) * 1e-2, 1e-300);
    return adaptive_simpson(a, x, hi, f(x), f(mid), f(hi), whole, 1e-13 * scale, 48);
}

// 10^4-term Euler-Maclaurin oracle (short correction tail), independent of
// the production N ~ 30 / 14-term path
cplx zeta_oracle(cplx s) {
    const long N = 10000;
    cplx acc = 0.0;
    for (long n = 1; n < N; ++n) acc += std::exp(-s * std::log(double(n)));
    cplx logN = std::log(double(N));
    acc += std::exp((1.0 - s) * logN) / (s - 1.0) + 0.5 * std::exp(-s * logN);
    acc += s / 12.0 * std::exp(-(s + 1.0) * logN);
    acc -= s * (s + 1.0) * (s + 2.0) / 720.0 * std::exp(-(s + 3.0) * logN);
    return acc;
}

} // namespace

TEST_CASE("gamma anchors and poles") {
    CHECK(rel(gamma_complex(1.0), 1.0) < 1e-14);
    CHECK(rel(gamma_complex(0.5), std::sqrt(kPi)) < 1e-14);
    CHECK(rel(gamma_complex(4.0), 6.0) < 1e-14);
    CHECK(rel(gamma_complex({3.7, 2.1}), {-1.85982529596651961, 1.16234015269686177}) < 1e-13);
    CHECK(rel(gamma_complex({-4.3, 1.2}),
              {0.00359658410129945179, -0.00255213010505846186}) < 1e-13);
    CHECK(rel(gamma_complex({0.5, 40.0}),
              {9.52955104943115883e-28, 8.73756820183844179e-28}) < 1e-13);
    CHECK_THROWS_AS(gamma_complex(0.0), PoleError);
    CHECK_THROWS_AS(gamma_complex(-3.0), PoleError);
}

TEST_CASE("gamma recurrence property") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(-20.0, 20.0), im(-30.0, 30.0);
    for (int i = 0; i < 200; ++i) {
        cplx s{re(rng), im(rng)};
        if (near_nonpositive_integer(s, 1e-3) || near_nonpositive_integer(s + 1.0, 1e-3))
            continue;
        CHECK(rel(gamma_complex(s + 1.0), s * gamma_complex(s)) < 1e-12);
    }
}

TEST_CASE("zeta values") {
    CHECK(rel(zeta_complex(2.0), kPi * kPi / 6.0) < 1e-13);
    CHECK(rel(zeta_complex(0.0), -0.5) < 1e-13);
    CHECK(rel(zeta_complex({2.3, 0.4}), zeta_oracle({2.3, 0.4})) < 1e-12);
    CHECK(rel(zeta_complex({2.3, 0.4}), {1.36674708297286424, -0.192524827682777238}) < 1e-13);
    CHECK(rel(zeta_complex({0.5, 14.0}), {0.0222411426099935892, -0.103258123266450058}) < 1e-12);
    CHECK(rel(zeta_complex({-3.2, 2.0}), {0.0109750045808915268, 0.046539392024170667}) < 1e-12);
    CHECK_THROWS_AS(zeta_complex(1.0), PoleError);
}

TEST_CASE("completed zeta functional equation") {
    CHECK(rel(zeta_hat(2.0), kPi / 6.0) < 1e-13);
    CHECK(rel(zeta_hat(-2.6), zeta_hat(3.6)) < 1e-13);
    CHECK(rel(zeta_hat(3.6), 0.132409406853075532) < 1e-13);
    CHECK(std::abs(zeta_hat({0.5, 3.0}) - zeta_hat({0.5, -3.0})) < 1e-13);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> re(-3.0, 4.0), im(-8.0, 8.0);
    int tested = 0;
    while (tested < 20) {
        cplx s{re(rng), im(rng)};
        if (std::abs(s) < 0.05 || std::abs(s - cplx(1.0)) < 0.05) continue;
        ++tested;
        CHECK(rel(zeta_hat(s), zeta_hat(1.0 - s)) < 1e-12);
    }
    CHECK_THROWS_AS(zeta_hat(0.0), PoleError);
    CHECK_THROWS_AS(zeta_hat(1.0), PoleError);
}

TEST_CASE("divisor sums") {
    CHECK(rel(divisor_sum(1.0, 6), 12.0) < 1e-15);
    CHECK(rel(divisor_sum(0.0, 12), 6.0) < 1e-15);
    CHECK(rel(divisor_sum({1.5, 0.5}, 4), {9.8141660117637346, 6.07244220480527111}) < 1e-14);
    CHECK_THROWS_AS(divisor_sum(1.0, 0), DomainError);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    // cross-check the recurrence against zeta(-11) = -B_12/12
    CHECK(rel(zeta_complex(-11.0), -bernoulli(12).to_double() / 12.0) < 1e-12);
}

TEST_CASE("incomplete gamma") {
    CHECK(rel(incomplete_gamma_upper(1.0, 2.0), std::exp(-2.0)) < 1e-13);
    CHECK(rel(incomplete_gamma_upper(0.0, 1.0), upper_gamma_quadrature(0.0, 1.0)) < 1e-12);
    CHECK(rel(incomplete_gamma_upper(0.0, 1.0), 0.219383934395520274) < 1e-13);
    CHECK(rel(incomplete_gamma_upper(-1.0, 1.0), 0.148495506775922048) < 1e-12);
    CHECK(rel(incomplete_gamma_upper({2.5, 1.5}, 3.0),
              {-0.209680499873844068, 0.313558240020369192}) < 1e-12);
    CHECK(rel(incomplete_gamma_upper(-2.5, 0.8), 0.219809068880128312) < 1e-12);
    CHECK_THROWS_AS(incomplete_gamma_upper(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(incomplete_gamma_upper(1.0, -2.0), DomainError);
}

TEST_CASE("incomplete gamma downward recurrence vs quadrature") {
    for (double a : {-3.0, -2.0, -1.0, 0.0, 1.0})
        for (double x : {0.5, 1.0, 5.0})
            CHECK(rel(incomplete_gamma_upper(a, x), upper_gamma_quadrature(a, x)) < 1e-10);
}

TEST_CASE("bessel K complex order") {
    // K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
    for (double x : {0.6, 1.3, 4.0, 9.0})
        CHECK(rel(bessel_k_complex_order(0.5, x), std::sqrt(kPi / (2.0 * x)) * std::exp(-x)) <
              1e-12);
    CHECK(rel(bessel_k_complex_order({0.3, 0.2}, 1.7),
              {0.167413555694247946, 0.00477353773013242227}) < 1e-12);
    CHECK(rel(bessel_k_complex_order(2.5, 0.9), 4.31687645542891314) < 1e-12);
    // recurrence K_{mu+1} = K_{mu-1} + (2 mu / x) K_mu
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0.2, 3.0);
    for (int i = 0; i < 20; ++i) {
        cplx mu{u(rng), u(rng) - 1.5};
        double x = u(rng) + 0.4;
        cplx lhs = bessel_k_complex_order(mu + 1.0, x);
        cplx rhs = bessel_k_complex_order(mu - 1.0, x) +
                   2.0 * mu / x * bessel_k_complex_order(mu, x);
        CHECK(rel(lhs, rhs) < 1e-11);
    }
}

TEST_CASE("whittaker closed-form anchors") {
    // W_{1,1/2}(y) = y e^{-y/2}
    CHECK(rel(whittaker_w(1, 0.5, 3.0), 3.0 * std::exp(-1.5)) < 1e-12);
    // W_{k/2,(1-k)/2}(y) = y^{k/2} e^{-y/2} at k = 4, y = 4 pi 0.9
    {
        double y = 4.0 * kPi * 0.9;
        CHECK(rel(whittaker_w(2, -1.5, y), y * y * std::exp(-y / 2.0)) < 1e-11);
    }
    // W_{-1,-1/2}(y) = y e^{y/2} Gamma(-1, y)
    {
        double y = 2.0;
        cplx expect = y * std::exp(y / 2.0) * incomplete_gamma_upper(-1.0, y);
        CHECK(rel(whittaker_w(-1, -0.5, y), expect) < 1e-11);
    }
    CHECK(rel(whittaker_w(3, {1.4, 0.3}, 5.5), {2.39291708700015327, 0.858794703118906655}) <
          1e-11);
    CHECK(rel(whittaker_w(-2, {0.25, 0.375}, 2.2),
              {0.0150897722960907925, 0.000716436512687357748}) < 1e-11);
    CHECK(rel(whittaker_w(0, {2.8, 0.4}, 11.0),
              {0.00743482600387794438, 0.00137461254902353343}) < 1e-11);
}

TEST_CASE("whittaker parameter box") {
    CHECK_THROWS_AS(whittaker_w(9, 0.5, 3.0), ParameterBoxError);
    CHECK_THROWS_AS(whittaker_w(1, {11.0, 0.0}, 3.0), ParameterBoxError);
    CHECK_THROWS_AS(whittaker_w(1, 0.5, 0.25), ParameterBoxError);
}

TEST_CASE("whittaker exponential-decay identities over the even-weight sweep") {
    // (4 pi n y)^{-k/2} W_{k/2,(1-k)/2} = e^{-2 pi n y}  and
    // (4 pi n y)^{-k/2} W_{-k/2,(1-k)/2} = Gamma(1-k, 4 pi n y) e^{2 pi n y}
    for (int k = -8; k <= 8; k += 2) {
        for (int n = 1; n <= 5; ++n) {
            for (double y : {0.6, 1.0, 2.0}) {
                double arg = 4.0 * kPi * n * y;
                if (arg > 600.0) continue;
                cplx mu = (1.0 - k) / 2.0;
                cplx lhs1 = std::pow(arg, -k / 2.0) * whittaker_w(k / 2, mu, arg);
                CHECK(rel(lhs1, std::exp(-2.0 * kPi * n * y)) < 1e-10);
                cplx g = incomplete_gamma_upper(cplx(1.0 - k), arg);
                if (std::abs(g) < 1e-280) continue;
                cplx lhs2 = std::pow(arg, -k / 2.0) * whittaker_w(-k / 2, mu, arg);
                CHECK(rel(lhs2, g * std::exp(2.0 * kPi * n * y)) < 1e-10);
            }
        }
    }
}

TEST_CASE("whittaker reflection in mu") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> ur(-10.0, 10.0), uy(0.5, 25.0);
    std::uniform_int_distribution<int> uk(-8, 8);
    int evaluated = 0;
    for (int i = 0; i < 100; ++i) {
        int kap = uk(rng);
        double a = ur(rng), b = ur(rng);
        cplx mu{a, b};
        if (std::abs(mu) > 10.0) mu *= 10.0 / std::abs(mu) * 0.99;
        double y = uy(rng);
        try {
            cplx w1 = whittaker_w(kap, mu, y);
            cplx w2 = whittaker_w(kap, -mu, y);
            if (std::abs(w1) > 1e-280) {
                CHECK(std::abs(w1 - w2) / std::abs(w1) < 1e-9);
                ++evaluated;
            }
        } catch (const AccuracyError&) {
            // self-check declined the draw (strongly imaginary mu at small
            // argument); the box contract allows this
        }
    }
    CHECK(evaluated > 60);
}
