#pragma once

#include <optional>
#include <vector>

#include "toric/curvature.hpp"
#include "toric/quadrature.hpp"

namespace toric {

// Soliton potential phi = coeff * (x1 + x2); lambda is scaled to 1 and the
// real dimension is 4 throughout.
struct SolitonData {
    double coeff = 0.0;
};

// Conformal / quasi-Einstein data: sigma = -log(b t + c) + eps1 and
// phi = -m (log(d(b t + c) + 1) - log(b t + c)) + eps2, t = x1 + x2.
// eps1/eps2 are coefficients over the Z2 generators of degrees 1..E, with
// the linear term t first.
struct ConformalData {
    double b = 0.0;
    double c = 1.0;
    double d = 0.0;
    double m = 2.0;
    double mu = 0.0;
    std::vector<double> eps1;
    std::vector<double> eps2;
    int eps_degree = 0;
};

// Z2 generators for the perturbations eps1/eps2: t first, then the regular
// degree 2..E generators. Empty for E <= 0.
std::vector<Generator> make_eps_basis(int eps_degree);

enum class ResidualKind { T1, T2, T3, T4 };
enum class WeightMode { SqrtWeight, PlainWeight };

struct ResidualSpec {
    ResidualKind kind = ResidualKind::T1;
    double delta = 0.005;  // shrink for T2/T3 regions and for Max grids
    WeightMode weight_mode = WeightMode::SqrtWeight;
    int grid_n = 201;
};

// True for the tensor residuals whose integrands blow up at the boundary;
// these are always integrated over P_delta.
bool needs_shrunken_region(ResidualKind k);

struct ErrorMetrics {
    double normalized = 0.0;  // Vol(P)^{-1} sqrt(I)
    double max_abs = 0.0;     // max |T| over the P_delta grid
    double objective = 0.0;   // I
};

// 2-jets of sigma and phi. Throw SingularEvaluationError when a log
// argument is non-positive.
ScalarField2Jet field_jet_sigma(const ConformalData& cd, const Vec2& x);
ScalarField2Jet field_jet_phi_qe(const ConformalData& cd, const Vec2& x);

// T1 = S + Delta phi - 4.
double t1(const SymplecticPotential& s, const SolitonData& sd, const Vec2& x);

// R_ab = Ric_ab + (Hess phi)_ab - u_ab; the scalar residual is
// sqrt(R11^2 + 2 R12^2 + R22^2).
Mat2 t2_components(const SymplecticPotential& s, const SolitonData& sd, const Vec2& x);

// Conformal quasi-Einstein tensor A_ab (x-x block).
Mat2 qe_tensor_A(const MetricData& md, const ScalarField2Jet& sigma,
                 const ScalarField2Jet& phi, const ConformalData& cd);

// R_ab = Ric_ab - A_ab.
Mat2 t3_components(const SymplecticPotential& s, const ConformalData& cd, const Vec2& x);

// T4 = S + Delta phi - (1/m) |grad phi|^2 - 4.
double t4(const SymplecticPotential& s, const ConformalData& cd, const Vec2& x);

double tensor_norm(const Mat2& r);

// Scalar residual of any kind at one point. Exactly one of sd/cd is used.
double eval_residual(ResidualKind kind, const SymplecticPotential& s,
                     const SolitonData* sd, const ConformalData* cd, const Vec2& x);

// Weighted residual vector r_i = w_i T(p_i) and I = sum r_i^2. Returns
// nullopt if any point is infeasible (non-convex Hessian or singular log).
std::optional<std::pair<std::vector<double>, double>>
objective(ResidualKind kind, const SymplecticPotential& s, const SolitonData* sd,
          const ConformalData* cd, const QuadratureScheme& scheme, WeightMode mode);

// E = Vol(P)^{-1} sqrt(I) over the spec's region, Max over a grid_n x grid_n
// bounding-box lattice filtered to P_{0.005}.
ErrorMetrics error_metrics(ResidualKind kind, const SymplecticPotential& s,
                           const SolitonData* sd, const ConformalData* cd,
                           const ResidualSpec& spec, int quad_order);

}  // namespace toric
