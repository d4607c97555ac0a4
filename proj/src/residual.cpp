#include "toric/residual.hpp"

#include <cmath>
#include <limits>

#include "toric/errors.hpp"

namespace toric {

std::vector<Generator> make_eps_basis(int eps_degree) {
    std::vector<Generator> gens;
    if (eps_degree < 1) return gens;
    gens.push_back({1, 0});  // x1 + x2
    if (eps_degree >= 2) {
        auto z2 = make_basis(eps_degree, Symmetry::Z2);
        gens.insert(gens.end(), z2.generators.begin(), z2.generators.end());
    }
    return gens;
}

bool needs_shrunken_region(ResidualKind k) {
    return k == ResidualKind::T2 || k == ResidualKind::T3;
}

namespace {

ScalarField2Jet eps_jet(const std::vector<double>& eps, int eps_degree, const Vec2& x) {
    ScalarField2Jet f;
    if (eps.empty()) return f;
    auto gens = make_eps_basis(eps_degree);
    if (gens.size() != eps.size())
        throw BasisMismatchError("eps coefficient length does not match eps basis");
    Jet4 j = polynomial_jet(gens, eps, x);
    f.value = j.value;
    f.grad = j.grad;
    f.hess = j.hess;
    return f;
}

}  // namespace

ScalarField2Jet field_jet_sigma(const ConformalData& cd, const Vec2& x) {
    const double t = x[0] + x[1];
    const double A = cd.b * t + cd.c;
    if (!(A > 0.0)) throw SingularEvaluationError("sigma log argument non-positive");
    ScalarField2Jet f = eps_jet(cd.eps1, cd.eps_degree, x);
    f.value += -std::log(A);
    const double g = -cd.b / A;
    const double h = cd.b * cd.b / (A * A);
    f.grad[0] += g;
    f.grad[1] += g;
    f.hess[0] += h;
    f.hess[1] += h;
    f.hess[2] += h;
    return f;
}

ScalarField2Jet field_jet_phi_qe(const ConformalData& cd, const Vec2& x) {
    const double t = x[0] + x[1];
    const double A = cd.b * t + cd.c;
    const double D = cd.d * A + 1.0;
    if (!(A > 0.0) || !(D > 0.0))
        throw SingularEvaluationError("phi log argument non-positive");
    ScalarField2Jet f = eps_jet(cd.eps2, cd.eps_degree, x);
    f.value += -cd.m * (std::log(D) - std::log(A));
    const double g = -cd.m * (cd.d * cd.b / D - cd.b / A);
    const double h = -cd.m * (-cd.d * cd.d * cd.b * cd.b / (D * D) + cd.b * cd.b / (A * A));
    f.grad[0] += g;
    f.grad[1] += g;
    f.hess[0] += h;
    f.hess[1] += h;
    f.hess[2] += h;
    return f;
}

namespace {

ScalarField2Jet soliton_phi(const SolitonData& sd, const Vec2& x) {
    ScalarField2Jet f;
    f.value = sd.coeff * (x[0] + x[1]);
    f.grad = {sd.coeff, sd.coeff};
    return f;
}

}  // namespace

double t1(const SymplecticPotential& s, const SolitonData& sd, const Vec2& x) {
    MetricData md = metric_data(potential_jet(s, x));
    return scalar_curvature(md) + laplacian(md, soliton_phi(sd, x)) - 4.0;
}

Mat2 t2_components(const SymplecticPotential& s, const SolitonData& sd, const Vec2& x) {
    MetricData md = metric_data(potential_jet(s, x));
    Mat2 ric = ricci_xx(md);
    Mat2 hph = hessian(md, soliton_phi(sd, x));
    Mat2 r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) r[a][b] = ric[a][b] + hph[a][b] - md.u[a][b];
    return r;
}

Mat2 qe_tensor_A(const MetricData& md, const ScalarField2Jet& sigma,
                 const ScalarField2Jet& phi, const ConformalData& cd) {
    Mat2 hs = hessian(md, sigma);
    Mat2 hp = hessian(md, phi);
    const double cross = grad_inner(md, sigma, phi);
    const double s2 = grad_inner(md, sigma, sigma);
    const double lap_s = laplacian(md, sigma);
    const double trace_part = lap_s + 2.0 * s2 - cross + std::exp(2.0 * sigma.value);
    Mat2 a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            a[i][j] = 2.0 * hs[i][j] - hp[i][j] - 2.0 * sigma.grad[i] * sigma.grad[j]
                      + sigma.grad[i] * phi.grad[j] + phi.grad[i] * sigma.grad[j]
                      + phi.grad[i] * phi.grad[j] / cd.m + trace_part * md.u[i][j];
        }
    return a;
}

Mat2 t3_components(const SymplecticPotential& s, const ConformalData& cd, const Vec2& x) {
    MetricData md = metric_data(potential_jet(s, x));
    ScalarField2Jet sig = field_jet_sigma(cd, x);
    ScalarField2Jet phi = field_jet_phi_qe(cd, x);
    Mat2 ric = ricci_xx(md);
    Mat2 a = qe_tensor_A(md, sig, phi, cd);
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = ric[i][j] - a[i][j];
    return r;
}

double t4(const SymplecticPotential& s, const ConformalData& cd, const Vec2& x) {
    // trace of the quasi-Einstein equation with respect to g = e^{2 sigma} g_K,
    // written in g_K quantities via the standard conformal identities
    MetricData md = metric_data(potential_jet(s, x));
    ScalarField2Jet sig = field_jet_sigma(cd, x);
    ScalarField2Jet phi = field_jet_phi_qe(cd, x);
    const double sk = scalar_curvature(md);
    const double inner = sk - 6.0 * laplacian(md, sig) - 6.0 * grad_inner(md, sig, sig)
                         + laplacian(md, phi) + 2.0 * grad_inner(md, sig, phi)
                         - grad_inner(md, phi, phi) / cd.m;
    return std::exp(-2.0 * sig.value) * inner - 4.0;
}

double tensor_norm(const Mat2& r) {
    return std::sqrt(r[0][0] * r[0][0] + 2.0 * r[0][1] * r[0][1] + r[1][1] * r[1][1]);
}

double eval_residual(ResidualKind kind, const SymplecticPotential& s,
                     const SolitonData* sd, const ConformalData* cd, const Vec2& x) {
    switch (kind) {
        case ResidualKind::T1: return t1(s, *sd, x);
        case ResidualKind::T2: return tensor_norm(t2_components(s, *sd, x));
        case ResidualKind::T3: return tensor_norm(t3_components(s, *cd, x));
        case ResidualKind::T4: return t4(s, *cd, x);
    }
    throw ParameterDomainError("unknown residual kind");
}

std::optional<std::pair<std::vector<double>, double>>
objective(ResidualKind kind, const SymplecticPotential& s, const SolitonData* sd,
          const ConformalData* cd, const QuadratureScheme& scheme, WeightMode mode) {
    std::vector<double> r(scheme.points.size());
    double total = 0.0;
    try {
        for (std::size_t i = 0; i < scheme.points.size(); ++i) {
            const double t = eval_residual(kind, s, sd, cd, scheme.points[i]);
            const double w = mode == WeightMode::SqrtWeight ? std::sqrt(scheme.weights[i])
                                                            : scheme.weights[i];
            r[i] = w * t;
            total += r[i] * r[i];
        }
    } catch (const NonConvexPointError&) {
        return std::nullopt;
    } catch (const SingularEvaluationError&) {
        return std::nullopt;
    }
    return std::make_pair(std::move(r), total);
}

ErrorMetrics error_metrics(ResidualKind kind, const SymplecticPotential& s,
                           const SolitonData* sd, const ConformalData* cd,
                           const ResidualSpec& spec, int quad_order) {
    const Polytope& p = s.polytope;
    QuadratureScheme scheme = needs_shrunken_region(kind)
                                  ? scheme_shrunken(p, spec.delta, quad_order)
                                  : scheme_for(p, quad_order);
    auto obj = objective(kind, s, sd, cd, scheme, spec.weight_mode);
    ErrorMetrics em;
    if (!obj) {
        em.normalized = em.max_abs = em.objective =
            std::numeric_limits<double>::quiet_NaN();
        return em;
    }
    em.objective = obj->second;
    em.normalized = std::sqrt(em.objective) / volume(p);

    Polytope grid_region = shrink(p, 0.005);
    auto bb = bounding_box(p);
    const int n = spec.grid_n;
    double mx = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec2 x{bb[0] + (bb[2] - bb[0]) * double(i) / double(n - 1),
                   bb[1] + (bb[3] - bb[1]) * double(j) / double(n - 1)};
            if (!contains(grid_region, x, 0.0)) continue;
            mx = std::max(mx, std::abs(eval_residual(kind, s, sd, cd, x)));
        }
    em.max_abs = mx;
    return em;
}

}  // namespace toric
