#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace toric {

struct LMConfig {
    int max_evals = 4000;
    double tol_residual_change = 5e-12;
    double tol_step_norm = 5e-12;
    double damping_init = 1e-3;
    double damping_up = 10.0;
    double damping_down = 0.1;
    double fd_step = 1e-7;
};

enum class Termination { MaxEvals, ResidualChange, StepNorm };

std::string to_string(Termination t);

struct LMReport {
    Eigen::VectorXd x;
    std::vector<double> history;  // objective after each accepted step (front = start)
    int evals = 0;
    Termination reason = Termination::MaxEvals;
    double seconds = 0.0;

    double objective() const { return history.empty() ? 0.0 : history.back(); }
};

// Residual vector at a parameter point; nullopt marks an infeasible point
// (e.g. a non-convex Hessian at some quadrature node).
using ResidualFn = std::function<std::optional<Eigen::VectorXd>(const Eigen::VectorXd&)>;

// Forward-difference Jacobian, column j stepped by fd_step * max(1, |x_j|);
// falls back to a backward difference when the forward point is infeasible.
// evals is incremented per residual call.
Eigen::MatrixXd jacobian_fd(const ResidualFn& fn, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& r0, double fd_step, int& evals);

// Damped Gauss-Newton (Levenberg-Marquardt) with descent-only acceptance.
// Throws SolverFailure if the start point is infeasible.
LMReport lm_minimize(const ResidualFn& fn, const Eigen::VectorXd& x0,
                     const LMConfig& cfg);

// Degree-continuation driver: solve the first degree from a zero start,
// warm-start each subsequent one through `embed`.
struct ContinuationProblem {
    std::function<ResidualFn(int degree)> make_residual;
    std::function<int(int degree)> param_count;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&, int from, int to)> embed;
};

std::vector<LMReport> continuation(const ContinuationProblem& problem,
                                   const std::vector<int>& degrees,
                                   const LMConfig& cfg);

}  // namespace toric
