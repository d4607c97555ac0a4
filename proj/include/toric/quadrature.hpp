#pragma once

#include <vector>

#include "toric/polytope.hpp"

namespace toric {

// Gauss-Legendre nodes and weights on [-1, 1], exact for polynomials of
// degree <= 2n-1.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

// Weighted points integrating over one polytope: sum w_i f(p_i) ~ int_P f.
// Weights carry the Jacobians of the per-region affine maps, so they sum to
// the polytope area.
struct QuadratureScheme {
    std::vector<Vec2> points;
    std::vector<double> weights;
    Polytope region;
    int order = 20;  // 1-D point count

    double integrate(const std::vector<double>& values) const;
};

// Two-region iterated-integral splitting for a trapezium (2 n^2 points).
QuadratureScheme scheme_trapezium(const Polytope& p, int n);

// Two-region splitting for a pentagon (2 n^2 points).
QuadratureScheme scheme_pentagon(const Polytope& p, int n);

// Single-region scheme for the simplex fixture (n^2 points).
QuadratureScheme scheme_simplex(const Polytope& p, int n);

// Dispatch on kind.
QuadratureScheme scheme_for(const Polytope& p, int n);

// Same splitting logic applied to P_delta.
QuadratureScheme scheme_shrunken(const Polytope& p, double delta, int n);

}  // namespace toric
