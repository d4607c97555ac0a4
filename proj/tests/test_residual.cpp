#include "doctest.h"

#include <cmath>

#include "toric/errors.hpp"
#include "toric/oracle.hpp"
#include "toric/residual.hpp"

using namespace toric;

namespace {

SymplecticPotential fs_potential() {
    SymplecticPotential s;
    s.polytope = make_simplex();
    s.basis = make_basis(2, Symmetry::Z2);
    s.coeffs = {0.0, 0.0};
    return s;
}

ConformalData lpp_like() {
    ConformalData cd;
    cd.b = 0.0765;
    cd.c = 1.0029;
    cd.d = -0.5883;
    cd.m = 2.0;
    return cd;
}

}  // namespace

TEST_CASE("eps basis layout") {
    CHECK(make_eps_basis(0).empty());
    auto e1 = make_eps_basis(1);
    REQUIRE(e1.size() == 1);
    CHECK(e1[0].a == 1);
    CHECK(e1[0].b == 0);
    auto e3 = make_eps_basis(3);
    CHECK(e3.size() == std::size_t(1 + z2_count(3)));
}

TEST_CASE("T1 and T2 vanish for the Einstein oracle") {
    SymplecticPotential s = fs_potential();
    SolitonData sd{0.0};
    auto scheme = scheme_shrunken(s.polytope, 0.01, 10);
    for (const auto& x : scheme.points) {
        CHECK(std::abs(t1(s, sd, x)) < 1e-8);
        CHECK(std::abs(eval_residual(ResidualKind::T2, s, &sd, nullptr, x)) < 1e-7);
    }
}

TEST_CASE("field jets match finite differences") {
    ConformalData cd = lpp_like();
    cd.eps_degree = 2;
    cd.eps1 = {0.05, 0.01, -0.02};
    cd.eps2 = {-0.03, 0.02, 0.01};
    Vec2 x{0.3, -0.2};
    auto fs = [&](const Vec2& y) { return field_jet_sigma(cd, y).value; };
    auto fp = [&](const Vec2& y) { return field_jet_phi_qe(cd, y).value; };
    for (auto [jet, fn] : {std::pair{field_jet_sigma(cd, x), ScalarFn(fs)},
                           std::pair{field_jet_phi_qe(cd, x), ScalarFn(fp)}}) {
        Jet4 fd = fd_jet(fn, x, 1e-4);
        for (int i = 0; i < 2; ++i)
            CHECK(jet.grad[i] == doctest::Approx(fd.grad[i]).epsilon(1e-7));
        for (int i = 0; i < 3; ++i)
            CHECK(jet.hess[i] == doctest::Approx(fd.hess[i]).epsilon(1e-5));
    }
}

TEST_CASE("sigma jet throws when the log argument dies") {
    ConformalData cd;
    cd.b = 1.0;
    cd.c = 0.5;  // b t + c <= 0 for t <= -0.5
    const Vec2 x{-1.0, 0.2};
    CHECK_THROWS_AS(field_jet_sigma(cd, x), SingularEvaluationError);
}

TEST_CASE("z2 equivariance of all residual kinds") {
    SymplecticPotential s;
    s.polytope = make_pentagon(2.0);
    s.basis = make_basis(3, Symmetry::Z2);
    s.coeffs = {0.02, -0.01, 0.015, 0.01};
    SolitonData sd{-0.4347};
    ConformalData cd = lpp_like();
    Vec2 x{0.3, -0.45}, xs{-0.45, 0.3};
    for (ResidualKind k :
         {ResidualKind::T1, ResidualKind::T2, ResidualKind::T3, ResidualKind::T4}) {
        const double a = eval_residual(k, s, &sd, &cd, x);
        const double b = eval_residual(k, s, &sd, &cd, xs);
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("sqrt-weight objective is the quadrature of the squared residual") {
    SymplecticPotential s = fs_potential();
    SolitonData sd{0.3};
    auto scheme = scheme_for(s.polytope, 20);
    auto obj = objective(ResidualKind::T1, s, &sd, nullptr, scheme,
                         WeightMode::SqrtWeight);
    REQUIRE(obj.has_value());
    std::vector<double> sq;
    sq.reserve(scheme.points.size());
    for (const auto& x : scheme.points) {
        const double t = t1(s, sd, x);
        sq.push_back(t * t);
    }
    CHECK(obj->second == doctest::Approx(scheme.integrate(sq)).epsilon(1e-12));
}

TEST_CASE("plain-weight objective squares the weight") {
    SymplecticPotential s = fs_potential();
    SolitonData sd{0.3};
    auto scheme = scheme_for(s.polytope, 6);
    auto plain = objective(ResidualKind::T1, s, &sd, nullptr, scheme,
                           WeightMode::PlainWeight);
    REQUIRE(plain.has_value());
    double want = 0.0;
    for (std::size_t i = 0; i < scheme.points.size(); ++i) {
        const double r = scheme.weights[i] * t1(s, sd, scheme.points[i]);
        want += r * r;
    }
    CHECK(plain->second == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("infeasible candidate yields nullopt") {
    SymplecticPotential s;
    s.polytope = make_simplex();
    s.basis = make_basis(2, Symmetry::Z2);
    s.coeffs = {-5.0, 0.0};
    SolitonData sd{0.0};
    auto scheme = scheme_for(s.polytope, 6);
    CHECK(!objective(ResidualKind::T1, s, &sd, nullptr, scheme,
                     WeightMode::SqrtWeight));
}

TEST_CASE("error metrics on the Einstein oracle") {
    SymplecticPotential s = fs_potential();
    SolitonData sd{0.0};
    ResidualSpec spec;
    spec.kind = ResidualKind::T1;
    auto em = error_metrics(ResidualKind::T1, s, &sd, nullptr, spec, 15);
    CHECK(em.normalized < 1e-6);
    CHECK(em.max_abs < 1e-6);
}

TEST_CASE("shrunken region flags") {
    CHECK(!needs_shrunken_region(ResidualKind::T1));
    CHECK(needs_shrunken_region(ResidualKind::T2));
    CHECK(needs_shrunken_region(ResidualKind::T3));
    CHECK(!needs_shrunken_region(ResidualKind::T4));
}

TEST_CASE("tensor norm") {
    Mat2 r{{{3.0, 1.0}, {1.0, 2.0}}};
    CHECK(tensor_norm(r) == doctest::Approx(std::sqrt(9.0 + 2.0 + 4.0)));
}
