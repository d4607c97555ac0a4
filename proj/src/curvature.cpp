#include "toric/curvature.hpp"

#include <cmath>

#include "toric/errors.hpp"

namespace toric {

MetricData metric_data(const Jet4& j) {
    MetricData md;
    md.jet = j;
    md.u = {{{j.h(0, 0), j.h(0, 1)}, {j.h(1, 0), j.h(1, 1)}}};
    md.detH = md.u[0][0] * md.u[1][1] - md.u[0][1] * md.u[0][1];
    if (!(md.detH > 0.0) || !(md.u[0][0] > 0.0))
        throw NonConvexPointError("Hessian of potential is not positive definite");
    const double id = 1.0 / md.detH;
    md.uinv = {{{md.u[1][1] * id, -md.u[0][1] * id}, {-md.u[0][1] * id, md.u[0][0] * id}}};
    md.G = std::log(md.detH);

    for (int k = 0; k < 2; ++k) {
        double s = 0.0;
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) s += md.uinv[p][q] * j.t3(p, q, k);
        md.G_k[k] = s;
    }
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
            double s = 0.0;
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) {
                    s += md.uinv[p][q] * j.t4(p, q, k, l);
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b)
                            s -= md.uinv[p][a] * j.t3(a, b, l) * md.uinv[b][q] * j.t3(p, q, k);
                }
            md.G_kl[k][l] = s;
        }
    for (int jj = 0; jj < 2; ++jj)
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k) {
                double s = 0.0;
                for (int p = 0; p < 2; ++p)
                    for (int q = 0; q < 2; ++q)
                        s -= md.uinv[i][p] * j.t3(p, q, jj) * md.uinv[q][k];
                md.dinv[jj][i][k] = s;
            }
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int jj = 0; jj < 2; ++jj) {
                double s = 0.0;
                for (int m = 0; m < 2; ++m) s += md.uinv[k][m] * j.t3(i, jj, m);
                md.christoffel[k][i][jj] = 0.5 * s;
            }
    return md;
}

Mat2 ricci_xx(const MetricData& md) {
    Mat2 ric;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double corr = 0.0;
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    corr += md.uinv[k][l] * md.jet.t3(a, b, k) * md.G_k[l];
            ric[a][b] = 0.5 * (md.G_kl[a][b] - corr);
        }
    return ric;
}

double scalar_curvature(const MetricData& md) {
    // S = -sum_{ij} d_i d_j u^{ij}; differentiating u^{ij} twice gives a
    // fourth-derivative term and two distinct third-derivative contractions.
    // The three pieces grow like inverse powers of the boundary distance and
    // cancel to O(1), so everything is rebuilt from the jet and contracted
    // in extended precision to keep the absolute error near machine level.
    const auto& j = md.jet;
    long double u11 = j.h(0, 0), u12 = j.h(0, 1), u22 = j.h(1, 1);
    const long double det = u11 * u22 - u12 * u12;
    const long double ui[2][2] = {{u22 / det, -u12 / det}, {-u12 / det, u11 / det}};
    long double gk[2];
    for (int k = 0; k < 2; ++k) {
        gk[k] = 0.0L;
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) gk[k] += ui[p][q] * (long double)j.t3(p, q, k);
    }
    long double fourth = 0.0L, cross = 0.0L;
    for (int i = 0; i < 2; ++i)
        for (int jj = 0; jj < 2; ++jj)
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) {
                    fourth += ui[i][p] * (long double)j.t4(p, q, i, jj) * ui[q][jj];
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b)
                            cross += ui[i][a] * (long double)j.t3(a, b, jj) *
                                     ui[b][p] * (long double)j.t3(p, q, i) *
                                     ui[q][jj];
                }
    long double gsq = 0.0L;  // u^{ab} G_a G_b
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) gsq += ui[a][b] * gk[a] * gk[b];
    return double(fourth - cross - gsq);
}

Mat2 hessian(const MetricData& md, const ScalarField2Jet& f) {
    Mat2 h;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double s = f.h(a, b);
            for (int k = 0; k < 2; ++k) s -= md.christoffel[k][a][b] * f.grad[k];
            h[a][b] = s;
        }
    return h;
}

double laplacian(const MetricData& md, const ScalarField2Jet& f) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int jj = 0; jj < 2; ++jj)
            s += md.uinv[i][jj] * f.h(i, jj) + md.dinv[i][i][jj] * f.grad[jj];
    return s;
}

double grad_inner(const MetricData& md, const ScalarField2Jet& f,
                  const ScalarField2Jet& h) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int jj = 0; jj < 2; ++jj) s += md.uinv[i][jj] * f.grad[i] * h.grad[jj];
    return s;
}

}  // namespace toric
