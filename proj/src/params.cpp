#include "toric/params.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "toric/errors.hpp"
#include "toric/quadrature.hpp"

namespace toric {

namespace {

// Published constants of the explicit Koiso-Cao profile.
constexpr double kKcCoeff = 0.527620;
constexpr double kKcD = -6.91561;

}  // namespace

double soliton_coefficient(const Polytope& p, int quad_order) {
    auto scheme = scheme_for(p, quad_order);
    auto h = [&](double c) {
        double s = 0.0;
        for (std::size_t i = 0; i < scheme.points.size(); ++i) {
            const double t = scheme.points[i][0] + scheme.points[i][1];
            s += scheme.weights[i] * t * std::exp(c * t);
        }
        return s;
    };
    // h is strictly increasing; bracket then Newton polish
    double lo = -8.0, hi = 8.0;
    if (h(lo) > 0.0 || h(hi) < 0.0)
        throw SolverFailure("soliton-coefficient bracketing failed");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (h(mid) < 0.0 ? lo : hi) = mid;
    }
    double c = 0.5 * (lo + hi);
    for (int it = 0; it < 50; ++it) {
        double hp = 0.0;
        for (std::size_t i = 0; i < scheme.points.size(); ++i) {
            const double t = scheme.points[i][0] + scheme.points[i][1];
            hp += scheme.weights[i] * t * t * std::exp(c * t);
        }
        const double step = h(c) / hp;
        c -= step;
        if (std::abs(step) < 1e-14) break;
    }
    return -c;
}

double lpp_mu(double b, double c, double d) {
    // vertex condition -2 b tau / (A D) = 1/A^2 - mu/D^2 at tau = -1
    const double tau = -1.0;
    const double a = b * tau + c;
    const double dd = d * a + 1.0;
    return dd * dd * (1.0 / (a * a) + 2.0 * b * tau / (a * dd));
}

namespace {

double lpp_integral(double b, double m, const GaussRule& g) {
    const double c = std::sqrt(b * b + 1.0);
    const double d = 1.0 / (2.0 * (2.0 * b - c));
    const double mu = lpp_mu(b, c, d);
    double s = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const double t = g.nodes[i];
        const double a = b * t + c;
        const double dd = d * a + 1.0;
        const double r = dd / a;
        s += g.weights[i] * (2.0 + t) * (std::pow(r, m) - mu * std::pow(r, m - 2.0)) /
             (a * a * a * a);
    }
    return s;
}

}  // namespace

LppParams lpp_parameters(double m, int quad_order) {
    if (!(m > 1.0)) throw ParameterDomainError("lpp_parameters requires m > 1");
    auto g = gauss_legendre(quad_order);
    // b = 0 is the trivial root; scan upward for the sign change of the
    // non-trivial one.
    double lo = 0.0, hi = 0.0;
    double prev_b = 1e-4, prev_v = lpp_integral(prev_b, m, g);
    for (int i = 1; i <= 900; ++i) {
        const double b = 1e-4 + i * 1e-3;
        const double v = lpp_integral(b, m, g);
        if (prev_v < 0.0 && v >= 0.0) { lo = prev_b; hi = b; break; }
        prev_b = b;
        prev_v = v;
    }
    if (hi == 0.0) throw SolverFailure("lpp constraint: no sign change found in b scan");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (lpp_integral(mid, m, g) < 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-15) break;
    }
    LppParams p;
    p.b = 0.5 * (lo + hi);
    p.c = std::sqrt(p.b * p.b + 1.0);
    p.d = 1.0 / (2.0 * (2.0 * p.b - p.c));
    p.m = m;
    return p;
}

double lpp_constraint_residual(const LppParams& p, int quad_order) {
    auto g = gauss_legendre(quad_order);
    return lpp_integral(p.b, p.m, g);
}

namespace {

struct Qe2System {
    double m, a;
    QuadratureScheme scheme;

    Eigen::Vector4d residuals(const Eigen::Vector4d& v) const {
        const double b = v[0], c = v[1], d = v[2], mu = v[3];
        Eigen::Vector4d e;
        const double a1 = c - 2.0 * b, d1 = d * c + 1.0 - 2.0 * d * b;
        const double a2 = c + (a - 2.0) * b, d2 = d * c + 1.0 + (a - 2.0) * d * b;
        const double a3 = c + (a - 1.0) * b, d3 = d * c + 1.0 + (a - 1.0) * d * b;
        e[0] = 4.0 * b / (a1 * d1) - 1.0 / (a1 * a1) + mu / (d1 * d1);
        e[1] = 1.0 / (a2 * a2) - mu / (d2 * d2);
        e[2] = -2.0 * b / (a3 * d3) - 1.0 / (a3 * a3) + mu / (d3 * d3);
        double s = 0.0;
        for (std::size_t i = 0; i < scheme.points.size(); ++i) {
            const double t = scheme.points[i][0] + scheme.points[i][1];
            const double aa = b * t + c;
            const double dd = d * aa + 1.0;
            const double r = dd / aa;
            s += scheme.weights[i] *
                 (std::pow(r, m) - mu * std::pow(r, m - 2.0)) / (aa * aa * aa * aa);
        }
        e[3] = s;
        return e;
    }

    Eigen::Matrix4d jacobian(const Eigen::Vector4d& v) const {
        // analytic rows for the algebraic constraints
        const double b = v[0], c = v[1], d = v[2], mu = v[3];
        Eigen::Matrix4d jac = Eigen::Matrix4d::Zero();
        struct Row { double tau, coef; };
        const Row rows[3] = {{-2.0, 4.0 * b}, {a - 2.0, 0.0}, {a - 1.0, -2.0 * b}};
        const double dcoef_db[3] = {4.0, 0.0, -2.0};
        for (int i = 0; i < 3; ++i) {
            const double tau = rows[i].tau;
            const double A = c + tau * b;
            const double D = d * A + 1.0;
            const double dA_db = tau, dA_dc = 1.0;
            const double dD_db = d * tau, dD_dc = d, dD_dd = A;
            const double coef = rows[i].coef;
            const double sgn = (i == 1) ? 1.0 : -1.0;  // e2 = 1/A^2 - mu/D^2
            // e = coef/(A D) + sgn * (1/A^2 - mu/D^2), with e2 having coef = 0
            auto d_term = [&](double dA, double dD, double dcoef) {
                double t1 = dcoef / (A * D) - coef * (dA * D + A * dD) / (A * A * D * D);
                double t2 = sgn * (-2.0 * dA / (A * A * A) + 2.0 * mu * dD / (D * D * D));
                return t1 + t2;
            };
            jac(i, 0) = d_term(dA_db, dD_db, dcoef_db[i]);
            jac(i, 1) = d_term(dA_dc, dD_dc, 0.0);
            jac(i, 2) = d_term(0.0, dD_dd, 0.0);
            jac(i, 3) = -sgn / (D * D);
        }
        // integral row: analytic in mu, forward differences in b, c, d
        double dmu = 0.0;
        for (std::size_t i = 0; i < scheme.points.size(); ++i) {
            const double t = scheme.points[i][0] + scheme.points[i][1];
            const double aa = b * t + c;
            const double dd = d * aa + 1.0;
            dmu -= scheme.weights[i] * std::pow(dd / aa, m - 2.0) / (aa * aa * aa * aa);
        }
        jac(3, 3) = dmu;
        const double e40 = residuals(v)[3];
        for (int k = 0; k < 3; ++k) {
            Eigen::Vector4d vp = v;
            const double h = 1e-7 * std::max(1.0, std::abs(v[k]));
            vp[k] += h;
            jac(3, k) = (residuals(vp)[3] - e40) / h;
        }
        return jac;
    }
};

bool feasible_qe2(const Qe2System& sys, const Eigen::Vector4d& v) {
    const double b = v[0], c = v[1], d = v[2];
    for (const auto& x : sys.scheme.points) {
        const double t = x[0] + x[1];
        const double aa = b * t + c;
        if (!(aa > 0.0) || !(d * aa + 1.0 > 0.0)) return false;
    }
    return true;
}

}  // namespace

Qe2Params qe2_parameters(double m, double a, int quad_order) {
    if (!(m > 1.0)) throw ParameterDomainError("qe2_parameters requires m > 1");
    if (!(a > 1.0)) throw ParameterDomainError("qe2_parameters requires a > 1");
    Qe2System sys{m, a, scheme_pentagon(make_pentagon(a), quad_order)};

    const double starts[] = {-0.05, 0.05, -0.1, 0.1, -0.02, 0.02, -0.2, 0.2, -0.3, 0.3};
    for (double b0 : starts) {
        const double c0 = std::sqrt(b0 * b0 + 1.0);
        const double d0 = 1.0 / (2.0 * (2.0 * b0 - c0));
        const double a2 = c0 + (a - 2.0) * b0, d2 = d0 * c0 + 1.0 + (a - 2.0) * d0 * b0;
        Eigen::Vector4d v(b0, c0, d0, (d2 * d2) / (a2 * a2));
        if (!feasible_qe2(sys, v)) continue;
        bool ok = true;
        for (int it = 0; it < 80; ++it) {
            Eigen::Vector4d e = sys.residuals(v);
            if (!e.allFinite()) { ok = false; break; }
            Eigen::Vector4d step = sys.jacobian(v).fullPivLu().solve(-e);
            if (!step.allFinite()) { ok = false; break; }
            // damped update: stay inside the feasible cone
            double alpha = 1.0;
            Eigen::Vector4d vn = v + step;
            while (alpha > 1e-6 && !feasible_qe2(sys, vn)) {
                alpha *= 0.5;
                vn = v + alpha * step;
            }
            v = vn;
            if (step.norm() * alpha < 1e-13) break;
        }
        if (!ok) continue;
        Eigen::Vector4d e = sys.residuals(v);
        if (e.head<3>().cwiseAbs().maxCoeff() < 1e-10 && std::abs(e[3]) < 1e-8 &&
            std::abs(v[0]) > 1e-4) {
            Qe2Params p;
            p.a = a;
            p.b = v[0];
            p.c = v[1];
            p.d = v[2];
            p.mu = v[3];
            p.m = m;
            return p;
        }
    }
    throw SolverFailure("qe2 constraint system: Newton multi-start failed");
}

std::array<double, 4> qe2_residuals(const Qe2Params& p, int quad_order) {
    Qe2System sys{p.m, p.a, scheme_pentagon(make_pentagon(p.a), quad_order)};
    Eigen::Vector4d e = sys.residuals(Eigen::Vector4d(p.b, p.c, p.d, p.mu));
    return {e[0], e[1], e[2], e[3]};
}

double kc_reference_fpp(double t) {
    if (!(t > -1.0 && t < 1.0))
        throw ParameterDomainError("kc_reference_fpp domain is (-1, 1)");
    const double c = kKcCoeff, d = kKcD;
    const double num1 = 0.5 * c * c * c * (2.0 + t);
    const double den1 = c * c * c * d * std::exp(c * (2.0 + t)) + c * c * t * (2.0 + t) +
                        2.0 * c * (1.0 + t) + 2.0;
    const double num2 = 0.5 * (t * t - 2.0 * t - 5.0);
    const double den2 = (1.0 - t * t) * (t + 2.0);
    return num1 / den1 + num2 / den2;
}

std::vector<double> kc_taylor(int k) {
    if (k < 1 || k > 6)
        throw ParameterDomainError("kc_taylor supports 1 <= k <= 6");
    // Richardson-extrapolated central differences of F'' at 0; F''^{(p)}(0)
    // recovers k_{p+1} after dividing by p! (p+2)(p+1).
    auto derivs = [&](double h) {
        std::vector<double> f(11);
        for (int i = -5; i <= 5; ++i) f[i + 5] = kc_reference_fpp(i * h);
        std::vector<double> d(6);
        d[0] = f[5];
        d[1] = (f[6] - f[4]) / (2.0 * h);
        d[2] = (f[6] - 2.0 * f[5] + f[4]) / (h * h);
        d[3] = (f[7] - 2.0 * f[6] + 2.0 * f[4] - f[3]) / (2.0 * h * h * h);
        d[4] = (f[7] - 4.0 * f[6] + 6.0 * f[5] - 4.0 * f[4] + f[3]) / (h * h * h * h);
        d[5] = (f[8] - 4.0 * f[7] + 5.0 * f[6] - 5.0 * f[4] + 4.0 * f[3] - f[2]) /
               (2.0 * h * h * h * h * h);
        return d;
    };
    auto d1 = derivs(1e-2), d2 = derivs(5e-3);
    std::vector<double> out(k);
    double pfac = 1.0;
    for (int p = 0; p < k; ++p) {
        if (p > 0) pfac *= double(p);
        const double dp = (4.0 * d2[p] - d1[p]) / 3.0;  // O(h^2) Richardson
        out[p] = dp / (pfac * double(p + 2) * double(p + 1));
    }
    return out;
}

}  // namespace toric
