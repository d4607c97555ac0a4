#pragma once

#include <functional>
#include <optional>
#include <string>

#include "toric/lm.hpp"
#include "toric/params.hpp"
#include "toric/residual.hpp"

namespace toric {

enum class Manifold { Cp2Blowup1, Cp2Blowup2, Simplex };
enum class Equation { Soliton, Qem };

struct RunConfig {
    Manifold manifold = Manifold::Cp2Blowup1;
    Equation equation = Equation::Soliton;
    ResidualKind residual = ResidualKind::T1;  // the minimized quantity
    Symmetry symmetry = Symmetry::Z2;
    int degree_min = 2;
    int degree_max = 10;
    double m = 2.0;
    double class_param = 0.0;  // 0 -> manifold default (1 trapezium, 2 pentagon)
    bool free_class = false;
    bool free_conformal = false;
    bool free_soliton = false;
    int eps_degree = 0;
    double delta = 0.005;
    int quad_order = 20;
    WeightMode weight_mode = WeightMode::SqrtWeight;
    int grid_n = 201;
    LMConfig lm;
    std::string output_dir;
    std::string label;

    double effective_class_param() const;
};

void validate(const RunConfig& cfg);

// Free-parameter layout: [basis coefficients | a | (b,c,d) | soliton coeff |
// eps1 | eps2], each optional block present only when its flag is set.
struct ParameterPack {
    std::vector<double> coeffs;
    double class_param = 0.0;
    double conf_b = 0.0, conf_c = 1.0, conf_d = 0.0;
    double soliton_coeff = 0.0;
    std::vector<double> eps1, eps2;
    bool free_class = false, free_conformal = false, free_soliton = false;
    bool free_eps = false;

    Eigen::VectorXd pack() const;
    void unpack(const Eigen::VectorXd& x);
    int packed_size() const;
};

struct DegreeResult {
    int degree = 0;
    int basis_size = 0;
    ParameterPack pack;      // final state (coeffs in run symmetry basis)
    ConformalData conformal; // filled for qem runs
    SolitonData soliton;     // filled for soliton runs
    LMReport report;
    bool solver_error = false;
    std::string error_message;
    ErrorMetrics scalar_metrics;  // T1 (soliton) or T4 (qem)
    ErrorMetrics tensor_metrics;  // T2 (soliton) or T3 (qem)
};

// Optional warm start for the first degree of a run.
struct WarmStart {
    int degree = 0;
    Symmetry symmetry = Symmetry::Z2;
    std::vector<double> coeffs;
    std::optional<double> class_param;
    std::optional<ConformalData> conformal;
    std::optional<SolitonData> soliton;
};

using DegreeCallback = std::function<void(const DegreeResult&)>;

// Continuation over degrees degree_min..degree_max. Per-degree results are
// delivered through the callback as soon as they are available and also
// returned at the end. Solver failures are reported per degree; the run
// continues with the warm start it has.
std::vector<DegreeResult> run_solve(const RunConfig& cfg,
                                    const WarmStart* warm = nullptr,
                                    const DegreeCallback& on_degree = {});

// Rebuild the potential + data of a finished degree (used by eval/report).
SymplecticPotential make_potential(const RunConfig& cfg, const DegreeResult& r);

Polytope make_manifold_polytope(Manifold m, double a);

std::string to_string(Manifold m);
std::string to_string(Equation e);
std::string to_string(ResidualKind k);
std::string to_string(Symmetry s);
std::string to_string(WeightMode w);

}  // namespace toric
