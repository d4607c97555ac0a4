#include "toric/oracle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "toric/errors.hpp"

namespace toric {

namespace {

// The multinomial expansion below cancels catastrophically at high degree
// (terms grow combinatorially while the integral stays O(1)), so the oracle
// accumulates in 50-digit floats and rounds once at the end.
using Big = boost::multiprecision::cpp_bin_float_50;

Big ipow(const Big& x, int n) {
    Big v = 1;
    for (int i = 0; i < n; ++i) v *= x;
    return v;
}

// integral of s^a t^b over {s,t >= 0, s+t <= 1} = a! b! / (a+b+2)!
Big unit_simplex_monomial(int a, int b) {
    Big v = 1;
    // a!b!/(a+b+2)! = 1 / (C(a+b, a) * (a+b+1) * (a+b+2))
    for (int i = 1; i <= b; ++i) v *= Big(i) / Big(a + i);
    return v / (Big(a + b + 1) * Big(a + b + 2));
}

Big binom(int n, int k) {
    Big v = 1;
    for (int i = 1; i <= k; ++i) v *= Big(n - k + i) / Big(i);
    return v;
}

// integral of x1^p x2^q over the triangle (A, B, C)
Big triangle_monomial(const Vec2& A, const Vec2& B, const Vec2& C, int p, int q) {
    const Big e1x = Big(B[0]) - Big(A[0]), e1y = Big(B[1]) - Big(A[1]);
    const Big e2x = Big(C[0]) - Big(A[0]), e2y = Big(C[1]) - Big(A[1]);
    const Big jac = e1x * e2y - e1y * e2x;  // signed
    // x1 = A0 + s e1x + t e2x, expand both powers multinomially
    Big total = 0;
    for (int i = 0; i <= p; ++i)
        for (int j = 0; i + j <= p; ++j)
            for (int k = 0; k <= q; ++k)
                for (int l = 0; k + l <= q; ++l) {
                    const Big cx = binom(p, i) * binom(p - i, j) *
                                   ipow(Big(A[0]), p - i - j) * ipow(e1x, i) *
                                   ipow(e2x, j);
                    const Big cy = binom(q, k) * binom(q - k, l) *
                                   ipow(Big(A[1]), q - k - l) * ipow(e1y, k) *
                                   ipow(e2y, l);
                    total += cx * cy * unit_simplex_monomial(i + k, j + l);
                }
    return total * jac;
}

Vec2 shifted(const Vec2& x, int i, double d) {
    Vec2 y = x;
    y[i] += d;
    return y;
}

}  // namespace

double polygon_monomial_integral(const std::vector<Vec2>& verts, int p, int q) {
    if (verts.size() < 3) throw DegeneratePolytopeError("polygon needs 3+ vertices");
    Big total = 0;
    for (std::size_t i = 1; i + 1 < verts.size(); ++i)
        total += triangle_monomial(verts[0], verts[i], verts[i + 1], p, q);
    return total.convert_to<double>();
}

double fd_partial(const ScalarFn& f, const Vec2& x, int i, double h) {
    return (f(shifted(x, i, h)) - f(shifted(x, i, -h))) / (2 * h);
}

double fd_partial2(const ScalarFn& f, const Vec2& x, int i, int j, double h) {
    if (i == j)
        return (f(shifted(x, i, h)) - 2 * f(x) + f(shifted(x, i, -h))) / (h * h);
    return (f(shifted(shifted(x, i, h), j, h)) - f(shifted(shifted(x, i, h), j, -h)) -
            f(shifted(shifted(x, i, -h), j, h)) +
            f(shifted(shifted(x, i, -h), j, -h))) /
           (4 * h * h);
}

Jet4 fd_jet(const ScalarFn& f, const Vec2& x, double h) {
    Jet4 j;
    j.value = f(x);
    for (int i = 0; i < 2; ++i) j.grad[i] = fd_partial(f, x, i, h);
    for (int a = 0; a < 2; ++a)
        for (int b = a; b < 2; ++b) j.hess[a + b] = fd_partial2(f, x, a, b, h);
    // third and fourth: differentiate the 2nd-derivative stencils once/twice
    auto d2 = [&](int a, int b) {
        return [&, a, b](const Vec2& y) { return fd_partial2(f, y, a, b, h); };
    };
    j.third[0] = fd_partial(d2(0, 0), x, 0, h);
    j.third[1] = fd_partial(d2(0, 0), x, 1, h);
    j.third[2] = fd_partial(d2(1, 1), x, 0, h);
    j.third[3] = fd_partial(d2(1, 1), x, 1, h);
    j.fourth[0] = fd_partial2(d2(0, 0), x, 0, 0, h);
    j.fourth[1] = fd_partial2(d2(0, 0), x, 0, 1, h);
    j.fourth[2] = fd_partial2(d2(0, 0), x, 1, 1, h);
    j.fourth[3] = fd_partial2(d2(1, 1), x, 0, 1, h);
    j.fourth[4] = fd_partial2(d2(1, 1), x, 1, 1, h);
    return j;
}

namespace {

// analytic Hessian entry of u; everything above relies on FD of these
ScalarFn hess_fn(const SymplecticPotential& s, int a, int b) {
    return [&s, a, b](const Vec2& y) { return potential_jet(s, y).h(a, b); };
}

Mat2 inverse_of(const Mat2& m) {
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return {{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

ScalarFn uinv_fn(const SymplecticPotential& s, int i, int j) {
    return [&s, i, j](const Vec2& y) {
        Jet4 jet = potential_jet(s, y);
        Mat2 h{{{jet.h(0, 0), jet.h(0, 1)}, {jet.h(1, 0), jet.h(1, 1)}}};
        return inverse_of(h)[i][j];
    };
}

// u_abk by central differences of the analytic Hessian
double fd_u3(const SymplecticPotential& s, const Vec2& x, int a, int b, int k,
             double h) {
    return fd_partial(hess_fn(s, a, b), x, k, h);
}

}  // namespace

double fd_scalar_curvature(const SymplecticPotential& s, const Vec2& x, double h) {
    double sum = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) sum += fd_partial2(uinv_fn(s, i, j), x, i, j, h);
    return -sum;
}

Mat2 fd_ricci(const SymplecticPotential& s, const Vec2& x, double h) {
    ScalarFn G = [&s](const Vec2& y) {
        Jet4 jet = potential_jet(s, y);
        return std::log(jet.h(0, 0) * jet.h(1, 1) - jet.h(0, 1) * jet.h(0, 1));
    };
    Jet4 jet = potential_jet(s, x);
    Mat2 hm{{{jet.h(0, 0), jet.h(0, 1)}, {jet.h(1, 0), jet.h(1, 1)}}};
    Mat2 uinv = inverse_of(hm);
    std::array<double, 2> Gl{fd_partial(G, x, 0, h), fd_partial(G, x, 1, h)};
    Mat2 r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double corr = 0.0;
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    corr += uinv[k][l] * fd_u3(s, x, a, b, k, h) * Gl[l];
            r[a][b] = 0.5 * (fd_partial2(G, x, a, b, h) - corr);
        }
    return r;
}

std::array<Mat2, 2> fd_christoffel(const SymplecticPotential& s, const Vec2& x,
                                   double h) {
    Jet4 jet = potential_jet(s, x);
    Mat2 hm{{{jet.h(0, 0), jet.h(0, 1)}, {jet.h(1, 0), jet.h(1, 1)}}};
    Mat2 uinv = inverse_of(hm);
    std::array<Mat2, 2> gamma{};
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double v = 0.0;
                for (int m = 0; m < 2; ++m)
                    v += uinv[k][m] * fd_u3(s, x, i, j, m, h);
                gamma[k][i][j] = 0.5 * v;
            }
    return gamma;
}

Mat2 fd_hessian(const SymplecticPotential& s, const ScalarFn& f, const Vec2& x,
                double h) {
    auto gamma = fd_christoffel(s, x, h);
    Mat2 r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double v = fd_partial2(f, x, a, b, h);
            for (int k = 0; k < 2; ++k)
                v -= gamma[k][a][b] * fd_partial(f, x, k, h);
            r[a][b] = v;
        }
    return r;
}

double fd_laplacian(const SymplecticPotential& s, const ScalarFn& f, const Vec2& x,
                    double h) {
    Jet4 jet = potential_jet(s, x);
    Mat2 hm{{{jet.h(0, 0), jet.h(0, 1)}, {jet.h(1, 0), jet.h(1, 1)}}};
    Mat2 uinv = inverse_of(hm);
    double v = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            v += uinv[i][j] * fd_partial2(f, x, i, j, h);
            v += fd_partial(uinv_fn(s, i, j), x, i, h) * fd_partial(f, x, j, h);
        }
    return v;
}

}  // namespace toric
