#include "doctest.h"

#include <cmath>

#include "toric/params.hpp"

using namespace toric;

TEST_CASE("soliton coefficient on the unit-class trapezium") {
    const double c = soliton_coefficient(make_trapezium(1.0));
    CHECK(c == doctest::Approx(0.527620).epsilon(1e-5));
}

TEST_CASE("soliton coefficient of the two-point blow-up pentagon") {
    const double c = soliton_coefficient(make_pentagon(2.0));
    CHECK(c == doctest::Approx(-0.434748).epsilon(1e-5));
}

TEST_CASE("soliton coefficient vanishes on the symmetric simplex") {
    // int_P (x1 + x2) dx = 0 on the reflexive simplex, so c* = 0.
    CHECK(std::abs(soliton_coefficient(make_simplex())) < 1e-12);
}

TEST_CASE("soliton coefficient is stable in the quadrature order") {
    const Polytope p = make_pentagon(2.0);
    CHECK(soliton_coefficient(p, 30) ==
          doctest::Approx(soliton_coefficient(p, 60)).epsilon(1e-12));
}

TEST_CASE("conformal parameters at m = 2") {
    LppParams p = lpp_parameters(2.0);
    CHECK(p.b == doctest::Approx(0.076527).epsilon(1e-4));
    CHECK(p.c == doctest::Approx(std::sqrt(p.b * p.b + 1.0)).epsilon(1e-12));
    CHECK(p.d == doctest::Approx(1.0 / (2.0 * (2.0 * p.b - p.c))).epsilon(1e-12));
    CHECK(p.d < 0.0);
    CHECK(std::abs(lpp_constraint_residual(p)) < 1e-10);
}

TEST_CASE("constraint residual has a sign change around the root") {
    LppParams p = lpp_parameters(2.0);
    LppParams lo = p, hi = p;
    lo.b = p.b - 0.02;
    lo.c = std::sqrt(lo.b * lo.b + 1.0);
    lo.d = 1.0 / (2.0 * (2.0 * lo.b - lo.c));
    hi.b = p.b + 0.02;
    hi.c = std::sqrt(hi.b * hi.b + 1.0);
    hi.d = 1.0 / (2.0 * (2.0 * hi.b - hi.c));
    CHECK(lpp_constraint_residual(lo) * lpp_constraint_residual(hi) < 0.0);
}

TEST_CASE("pentagon constraint system at m = 2, a = 2") {
    Qe2Params q = qe2_parameters(2.0, 2.0);
    CHECK(q.mu == doctest::Approx(0.2826178).epsilon(1e-4));
    auto r = qe2_residuals(q);
    for (double ri : r) CHECK(std::abs(ri) < 1e-9);
}

TEST_CASE("pentagon system residuals are nonzero away from the solution") {
    Qe2Params q = qe2_parameters(2.0, 2.0);
    q.b += 0.05;
    auto r = qe2_residuals(q);
    double norm = 0.0;
    for (double ri : r) norm += ri * ri;
    CHECK(norm > 1e-8);
}

TEST_CASE("reference profile and its taylor expansion") {
    auto k = kc_taylor(4);
    REQUIRE(k.size() == 4);
    CHECK(k[0] == doctest::Approx(-0.0900384).epsilon(2e-4));
    CHECK(k[1] == doctest::Approx(0.0159081).epsilon(2e-3));
    CHECK(k[2] == doctest::Approx(-4.25806e-3).epsilon(5e-3));
    CHECK(k[3] == doctest::Approx(1.34121e-3).epsilon(2e-2));
    // F'' at 0 is twice the quadratic coefficient.
    CHECK(kc_reference_fpp(0.0) == doctest::Approx(2.0 * k[0]).epsilon(1e-8));
}

TEST_CASE("reference profile second derivative is finite near the ends") {
    CHECK(std::isfinite(kc_reference_fpp(-0.999)));
    CHECK(std::isfinite(kc_reference_fpp(0.999)));
}
