#include "toric/lm.hpp"

#include <chrono>
#include <cmath>

#include "toric/errors.hpp"

namespace toric {

std::string to_string(Termination t) {
    switch (t) {
        case Termination::MaxEvals: return "max-evals";
        case Termination::ResidualChange: return "residual-change";
        case Termination::StepNorm: return "step-norm";
    }
    return "unknown";
}

Eigen::MatrixXd jacobian_fd(const ResidualFn& fn, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& r0, double fd_step, int& evals) {
    if (!(fd_step > 0.0)) throw ParameterDomainError("fd_step must be positive");
    const Eigen::Index n = x.size();
    Eigen::MatrixXd jac(r0.size(), n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double h = fd_step * std::max(1.0, std::abs(x[j]));
        Eigen::VectorXd xp = x;
        xp[j] += h;
        auto rp = fn(xp);
        ++evals;
        if (rp) {
            jac.col(j) = (*rp - r0) / h;
            continue;
        }
        xp[j] = x[j] - h;  // backward fallback
        auto rm = fn(xp);
        ++evals;
        if (!rm) throw SolverFailure("both one-sided Jacobian perturbations infeasible");
        jac.col(j) = (r0 - *rm) / h;
    }
    return jac;
}

LMReport lm_minimize(const ResidualFn& fn, const Eigen::VectorXd& x0,
                     const LMConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    LMReport rep;
    rep.x = x0;
    auto r0 = fn(x0);
    rep.evals = 1;
    if (!r0) throw SolverFailure("initial point is infeasible");
    Eigen::VectorXd r = *r0;
    double obj = r.squaredNorm();
    rep.history.push_back(obj);

    double lambda = cfg.damping_init;
    rep.reason = Termination::MaxEvals;
    while (rep.evals < cfg.max_evals) {
        Eigen::MatrixXd jac = jacobian_fd(fn, rep.x, r, cfg.fd_step, rep.evals);
        Eigen::MatrixXd a = jac.transpose() * jac;
        Eigen::VectorXd g = jac.transpose() * r;
        Eigen::VectorXd diag = a.diagonal().cwiseMax(1e-12);

        bool accepted = false;
        while (rep.evals < cfg.max_evals) {
            Eigen::MatrixXd damped = a;
            damped.diagonal() += lambda * diag;
            Eigen::LDLT<Eigen::MatrixXd> ldlt(damped);
            if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
                lambda *= cfg.damping_up;
                if (lambda > 1e16) { rep.reason = Termination::StepNorm; goto done; }
                continue;
            }
            Eigen::VectorXd step = ldlt.solve(-g);
            if (!step.allFinite()) {
                lambda *= cfg.damping_up;
                if (lambda > 1e16) { rep.reason = Termination::StepNorm; goto done; }
                continue;
            }
            Eigen::VectorXd xc = rep.x + step;
            auto rc = fn(xc);
            ++rep.evals;
            const double step_norm = step.norm();
            if (rc) {
                const double oc = rc->squaredNorm();
                if (oc < obj) {
                    const double change = obj - oc;
                    rep.x = xc;
                    r = *rc;
                    obj = oc;
                    rep.history.push_back(obj);
                    lambda = std::max(lambda * cfg.damping_down, 1e-14);
                    accepted = true;
                    if (change < cfg.tol_residual_change) {
                        rep.reason = Termination::ResidualChange;
                        goto done;
                    }
                    if (step_norm < cfg.tol_step_norm) {
                        rep.reason = Termination::StepNorm;
                        goto done;
                    }
                    break;  // new Jacobian
                }
            }
            // rejected (worse or infeasible): raise damping, retry
            lambda *= cfg.damping_up;
            if (step_norm < cfg.tol_step_norm || lambda > 1e16) {
                rep.reason = Termination::StepNorm;
                goto done;
            }
        }
        if (!accepted && rep.evals >= cfg.max_evals) break;
    }
done:
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return rep;
}

std::vector<LMReport> continuation(const ContinuationProblem& problem,
                                   const std::vector<int>& degrees,
                                   const LMConfig& cfg) {
    std::vector<LMReport> reports;
    Eigen::VectorXd x;
    int prev_degree = -1;
    for (int d : degrees) {
        if (reports.empty()) {
            x = Eigen::VectorXd::Zero(problem.param_count(d));
        } else {
            x = problem.embed(reports.back().x, prev_degree, d);
        }
        reports.push_back(lm_minimize(problem.make_residual(d), x, cfg));
        prev_degree = d;
    }
    return reports;
}

}  // namespace toric
