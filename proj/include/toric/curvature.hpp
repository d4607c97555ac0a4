#pragma once

#include <array>

#include "toric/basis.hpp"

namespace toric {

using Mat2 = std::array<std::array<double, 2>, 2>;

// Everything derived from the 4-jet of u at one interior point: metric
// block u_ij, its inverse, G = log det D^2 u with its first and second
// coordinate derivatives, derivatives of the inverse metric, and the
// Christoffel symbols of the x-x block.
struct MetricData {
    Mat2 u;       // u_ij
    Mat2 uinv;    // u^{ij}
    double detH = 0.0;
    double G = 0.0;               // log det D^2 u
    std::array<double, 2> G_k{};  // G_k = u^{pq} u_{pqk}
    Mat2 G_kl;                    // u^{pq} u_{pqkl} - u^{pa} u_{abl} u^{bq} u_{pqk}
    Jet4 jet;                     // third/fourth derivatives of u
    // dinv[j][i][k] = d(u^{ik})/dx_j = -u^{ip} u_{pqj} u^{qk}
    std::array<Mat2, 2> dinv;
    // christoffel[k][i][j] = 1/2 u^{km} u_{ijm}
    std::array<Mat2, 2> christoffel;
};

// 2-jet of a torus-invariant scalar function of (x1, x2).
struct ScalarField2Jet {
    double value = 0.0;
    std::array<double, 2> grad{};
    std::array<double, 3> hess{};  // (11,12,22)
    double h(int i, int j) const { return hess[i + j]; }
};

// Throws NonConvexPointError if det D^2 u <= 0.
MetricData metric_data(const Jet4& j);

// x-x block of the Ricci tensor, Ric_ab = 1/2 (G_ab - u^{kl} u_{abk} G_l).
Mat2 ricci_xx(const MetricData& md);

// S = -sum_{ij} u^{ij}_{,ij}.
double scalar_curvature(const MetricData& md);

// x-x block of the Riemannian Hessian, f_ab - Gamma^k_ab f_k.
Mat2 hessian(const MetricData& md, const ScalarField2Jet& f);

// Delta f = u^{ij} f_ij + (d_i u^{ij}) f_j (det g = 1 in these coordinates).
double laplacian(const MetricData& md, const ScalarField2Jet& f);

// g(grad f, grad h) = u^{ij} f_i h_j.
double grad_inner(const MetricData& md, const ScalarField2Jet& f,
                  const ScalarField2Jet& h);

}  // namespace toric
