#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polymaass/taylor.hpp"

#include <cmath>

using namespace polymaass;

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

const Evaluator& shared_evaluator() {
    static Evaluator ev;
    return ev;
}

} // namespace

TEST_CASE("order-0 anchors") {
    TaylorBasis tb(shared_evaluator());
    for (const UpperHalfPoint& z : {UpperHalfPoint{0.0, 1.0}, UpperHalfPoint{0.37, 1.21}}) {
        CHECK(std::abs(tb.coefficient(Weight(0), 0, z) - 0.5) < 1e-10);
        CHECK(std::abs(tb.coefficient(Weight(2), 0, z)) < 1e-10);
    }
}

TEST_CASE("kronecker limit value pins the weight-0 order-1 coefficient") {
    TaylorBasis tb(shared_evaluator());
    // exact special value at z = i via the quarter-integer gamma closed form
    CHECK(std::abs(kronecker_limit_value({0.0, 1.0}) - cplx(-0.05043984946395699912)) < 1e-12);
    for (const UpperHalfPoint& z :
         {UpperHalfPoint{0.0, 1.0}, UpperHalfPoint{0.3, 0.9}, UpperHalfPoint{-0.25, 1.4}}) {
        cplx contour = tb.coefficient(Weight(0), 1, z);
        CHECK(std::abs(contour - kronecker_limit_value(z)) < 1e-8);
        // the alternate constant misses by 1/2 + log 2 + (log pi)/2
        cplx alt = kronecker_limit_value_alternate(z);
        CHECK(std::abs(contour - alt) ==
              doctest::Approx(0.5 + std::log(2.0) + 0.5 * std::log(kPi)).epsilon(1e-6));
    }
    // invariance under z -> z+1 and z -> -1/z
    CHECK(std::abs(kronecker_limit_value({0.3, 1.1}) - kronecker_limit_value({-0.7, 1.1})) <
          1e-12);
    CHECK(std::abs(kronecker_limit_value({0.0, 2.0}) - kronecker_limit_value({0.0, 0.5})) <
          1e-11);
}

TEST_CASE("explicit weight-2 order-1 series") {
    TaylorBasis tb(shared_evaluator());
    UpperHalfPoint zi{0.0, 1.0};
    CHECK(std::abs(tb.coefficient(Weight(2), 1, zi) - explicit_g1_series(zi, 40)) < 1e-9);
    for (const UpperHalfPoint& z : {UpperHalfPoint{0.5, 1.7}, UpperHalfPoint{-0.2, 1.05}}) {
        CHECK(std::abs(tb.coefficient(Weight(2), 1, z) - explicit_g1_series(z, 40)) < 1e-9);
    }
    // frozen value at z = 0.1 + 0.8i
    CHECK(std::abs(explicit_g1_series({0.1, 0.8}, 80) -
                   cplx(-0.16860431600505621393, -0.050021989505802130042)) < 1e-15);
    // periodicity and the y -> infinity constant (+pi/6 wins the sign vote)
    CHECK(std::abs(explicit_g1_series({0.3, 1.2}, 40) - explicit_g1_series({-0.7, 1.2}, 40)) <
          1e-13);
    cplx far = explicit_g1_series({0.0, 50.0}, 10) + 1.0 / (2.0 * 50.0);
    CHECK(std::abs(far - kPi / 6.0) < 1e-12);
    // alternate-variant bookkeeping: differs in the constant and series signs
    cplx a = explicit_g1_series({0.1, 0.8}, 40), b = explicit_g1_series_alternate({0.1, 0.8}, 40);
    CHECK(std::abs(a + b + 1.0 / 0.8) < 1e-13);
}

TEST_CASE("symmetrized basis") {
    TaylorBasis tb(shared_evaluator());
    UpperHalfPoint z{0.1, 0.8};
    CHECK(std::abs(tb.symmetrized(Weight(0), 0, z) - 0.5) < 1e-10);
    CHECK(std::abs(tb.symmetrized(Weight(2), 0, z)) < 1e-10);
    // Gt_1 = G_1 (the n=1 correction multiplies G_0 = 0)
    CHECK(std::abs(tb.symmetrized(Weight(2), 1, z) - explicit_g1_series(z, 80)) < 1e-9);
    CHECK_THROWS_AS(tb.symmetrized(Weight(4), 1, z), DomainError);
}

TEST_CASE("modified basis") {
    TaylorBasis tb(shared_evaluator());
    UpperHalfPoint z{0.12, 1.07};
    ConnectionTable t4 = solve_table(4, Boundary::Binomial, 3);
    // n = 0 is the plain pair
    auto p0 = tb.modified(Weight(4), 0, z, t4);
    CHECK(std::abs(p0.first - tb.coefficient(Weight(4), 0, z)) < 1e-12);
    CHECK(std::abs(p0.second - tb.coefficient(Weight(-2), 0, z)) < 1e-12);
    // n = 1 correction coefficient is c_{1,4,1} = (1/3) C(2,1) = 2/3
    CHECK(t4.at(1, 1) == Rational(2, 3));
    auto p1 = tb.modified(Weight(4), 1, z, t4);
    cplx expect = tb.coefficient(Weight(4), 1, z) -
                  (2.0 / 3.0) * tb.coefficient(Weight(4), 0, z);
    CHECK(std::abs(p1.first - expect) < 1e-12);
    // weight-2 binomial table reproduces the symmetrized combination
    ConnectionTable t2 = solve_table(2, Boundary::Binomial, 3);
    for (int n : {1, 2}) {
        auto p = tb.modified(Weight(2), n, z, t2);
        CHECK(std::abs(p.first - tb.symmetrized(Weight(2), n, z)) < 1e-11);
        CHECK(std::abs(p.second - tb.symmetrized(Weight(0), n, z)) < 1e-11);
    }
    // table validation
    ConnectionTable t6 = solve_table(6, Boundary::Binomial, 3);
    CHECK_THROWS_AS(tb.modified(Weight(4), 1, z, t6), TableMismatchError);
    CHECK_THROWS_AS(tb.modified(Weight(4), 5, z, t4), TableMismatchError);
}

TEST_CASE("request dispatch and guards") {
    TaylorBasis tb(shared_evaluator());
    TaylorCoefficientRequest req;
    req.weight = Weight(0);
    req.order = 1;
    req.point = {0.0, 1.0};
    CHECK(std::abs(tb.dispatch(req) - tb.coefficient(Weight(0), 1, {0.0, 1.0})) < 1e-14);

    req.order = 20;  // > nodes/4
    CHECK_THROWS_AS(tb.dispatch(req), AliasError);

    req.order = 1;
    req.contour.nodes = 63;
    CHECK_THROWS_AS(tb.dispatch(req), DomainError);
    req.contour.nodes = 64;
    req.contour.radius = 0.5;  // singular abscissa for weight 0
    CHECK_THROWS_AS(tb.dispatch(req), DomainError);

    TaylorCoefficientRequest mod;
    mod.weight = Weight(-4);
    mod.order = 1;
    mod.point = {0.1, 1.0};
    mod.family = TaylorFamily::Modified;
    // dual route: modified family at k = -4 equals the second slot at k = 6
    ConnectionTable t6 = solve_table(6, Boundary::Binomial, 1);
    auto pair = tb.modified(Weight(6), 1, mod.point, t6);
    CHECK(std::abs(tb.dispatch(mod) - pair.second) < 1e-14);
}

TEST_CASE("contour node doubling leaves coefficients fixed") {
    TaylorBasis tb(shared_evaluator());
    UpperHalfPoint z{0.21, 1.13};
    ContourSpec c64, c128;
    c128.nodes = 128;
    for (int k : {0, 2, 4}) {
        for (int n = 0; n <= 3; ++n) {
            cplx a = tb.coefficient(Weight(k), n, z, c64);
            cplx b = tb.coefficient(Weight(k), n, z, c128);
            CHECK(std::abs(a - b) < 1e-10);
        }
    }
}

TEST_CASE("depth separation: the weight-2 order-1 coefficient is not the zero function") {
    TaylorBasis tb(shared_evaluator());
    double best = 0.0;
    for (const UpperHalfPoint& z :
         {UpperHalfPoint{0.0, 1.0}, UpperHalfPoint{0.2, 1.05}, UpperHalfPoint{-0.35, 0.95},
          UpperHalfPoint{0.45, 1.3}, UpperHalfPoint{-0.12, 2.2}}) {
        best = std::max(best, std::abs(tb.coefficient(Weight(2), 1, z)));
    }
    CHECK(best > 1e-3);
}
