#pragma once

#include <functional>

#include "toric/basis.hpp"
#include "toric/curvature.hpp"

namespace toric {

using ScalarFn = std::function<double(const Vec2&)>;

// Exact integral of x1^p x2^q over the polygon with CCW vertices, by fan
// triangulation and the closed form on the standard simplex.
double polygon_monomial_integral(const std::vector<Vec2>& verts, int p, int q);

// Central finite differences; h is the base step.
double fd_partial(const ScalarFn& f, const Vec2& x, int i, double h);
double fd_partial2(const ScalarFn& f, const Vec2& x, int i, int j, double h);

// 4-jet of f by nested central differences (used to cross-check the closed
// forms; accuracy degrades with order, callers pick tolerances accordingly).
Jet4 fd_jet(const ScalarFn& f, const Vec2& x, double h);

// Curvature quantities recomputed with numerically differentiated metric
// data: only the analytic Hessian of u is trusted, everything above second
// order comes from finite differences.
double fd_scalar_curvature(const SymplecticPotential& s, const Vec2& x, double h);
Mat2 fd_ricci(const SymplecticPotential& s, const Vec2& x, double h);
std::array<Mat2, 2> fd_christoffel(const SymplecticPotential& s, const Vec2& x,
                                   double h);
Mat2 fd_hessian(const SymplecticPotential& s, const ScalarFn& f, const Vec2& x,
                double h);
double fd_laplacian(const SymplecticPotential& s, const ScalarFn& f, const Vec2& x,
                    double h);

}  // namespace toric
