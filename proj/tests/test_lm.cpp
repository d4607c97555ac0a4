#include "doctest.h"

#include <cmath>

#include "toric/errors.hpp"
#include "toric/lm.hpp"

using namespace toric;

namespace {

// Linear least squares: r = A x - b with a unique minimizer.
ResidualFn linear_problem() {
    return [](const Eigen::VectorXd& x) -> std::optional<Eigen::VectorXd> {
        Eigen::VectorXd r(3);
        r << 2.0 * x(0) - 1.0, x(0) + x(1) - 3.0, 3.0 * x(1) + 2.0;
        return r;
    };
}

// Rosenbrock in residual form: r = (10 (y - x^2), 1 - x), minimum at (1, 1).
ResidualFn rosenbrock() {
    return [](const Eigen::VectorXd& x) -> std::optional<Eigen::VectorXd> {
        Eigen::VectorXd r(2);
        r << 10.0 * (x(1) - x(0) * x(0)), 1.0 - x(0);
        return r;
    };
}

}  // namespace

TEST_CASE("linear problem converges to the normal-equation solution") {
    LMConfig cfg;
    auto rep = lm_minimize(linear_problem(), Eigen::VectorXd::Zero(2), cfg);
    // Normal equations for the system above.
    Eigen::MatrixXd a(3, 2);
    a << 2, 0, 1, 1, 0, 3;
    Eigen::VectorXd b(3);
    b << 1, 3, -2;
    Eigen::VectorXd want = (a.transpose() * a).ldlt().solve(a.transpose() * b);
    CHECK(rep.x(0) == doctest::Approx(want(0)).epsilon(1e-8));
    CHECK(rep.x(1) == doctest::Approx(want(1)).epsilon(1e-8));
    CHECK(rep.reason != Termination::MaxEvals);
}

TEST_CASE("rosenbrock converges from a cold start") {
    LMConfig cfg;
    cfg.max_evals = 10000;
    Eigen::VectorXd x0(2);
    x0 << -1.2, 1.0;
    auto rep = lm_minimize(rosenbrock(), x0, cfg);
    CHECK(rep.x(0) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(rep.x(1) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(rep.objective() < 1e-12);
}

TEST_CASE("history is monotone non-increasing") {
    auto rep = lm_minimize(rosenbrock(), Eigen::VectorXd::Zero(2), LMConfig{});
    REQUIRE(!rep.history.empty());
    for (std::size_t i = 1; i < rep.history.size(); ++i)
        CHECK(rep.history[i] <= rep.history[i - 1] + 1e-15);
}

TEST_CASE("infeasible start throws, infeasible steps are rejected") {
    // Feasible only for x >= -0.5; minimizer at the boundary of a quadratic.
    ResidualFn fn = [](const Eigen::VectorXd& x) -> std::optional<Eigen::VectorXd> {
        if (x(0) < -0.5) return std::nullopt;
        Eigen::VectorXd r(1);
        r << x(0) + 2.0;
        return r;
    };
    CHECK_THROWS_AS(lm_minimize(fn, Eigen::VectorXd::Constant(1, -1.0), LMConfig{}),
                    SolverFailure);
    auto rep = lm_minimize(fn, Eigen::VectorXd::Zero(1), LMConfig{});
    CHECK(rep.x(0) >= -0.5);
    CHECK(rep.objective() <= 4.0 + 1e-12);
}

TEST_CASE("max-evals termination is reported") {
    LMConfig cfg;
    cfg.max_evals = 5;
    cfg.tol_residual_change = 0.0;
    cfg.tol_step_norm = 0.0;
    auto rep = lm_minimize(rosenbrock(), Eigen::VectorXd::Zero(2), cfg);
    CHECK(rep.reason == Termination::MaxEvals);
    CHECK(to_string(rep.reason) == "max-evals");
}

TEST_CASE("finite-difference jacobian matches the analytic one") {
    int evals = 0;
    Eigen::VectorXd x(2);
    x << 0.7, -0.3;
    auto fn = rosenbrock();
    Eigen::MatrixXd j = jacobian_fd(fn, x, *fn(x), 1e-7, evals);
    CHECK(evals == 2);
    CHECK(j(0, 0) == doctest::Approx(-20.0 * x(0)).epsilon(1e-5));
    CHECK(j(0, 1) == doctest::Approx(10.0).epsilon(1e-7));
    CHECK(j(1, 0) == doctest::Approx(-1.0).epsilon(1e-7));
    CHECK(j(1, 1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-7));
}

TEST_CASE("continuation warm-starts and never regresses") {
    // Degree d: fit d parameters to targets 1..d; embedding copies a prefix.
    ContinuationProblem prob;
    prob.param_count = [](int d) { return d; };
    prob.make_residual = [](int d) -> ResidualFn {
        return [d](const Eigen::VectorXd& x) -> std::optional<Eigen::VectorXd> {
            Eigen::VectorXd r(d);
            for (int i = 0; i < d; ++i) r(i) = x(i) - double(i + 1);
            return r;
        };
    };
    prob.embed = [](const Eigen::VectorXd& x, int from, int to) {
        Eigen::VectorXd y = Eigen::VectorXd::Zero(to);
        y.head(from) = x;
        return y;
    };
    auto reps = continuation(prob, {2, 3, 4}, LMConfig{});
    REQUIRE(reps.size() == 3);
    for (std::size_t i = 1; i < reps.size(); ++i) {
        // Warm start: the shared prefix is already solved.
        CHECK(reps[i].history.front() <=
              reps[i - 1].history.front() + double(i + 2) * double(i + 2));
    }
    CHECK(reps.back().objective() < 1e-16);
    CHECK(reps.back().x(3) == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("deterministic: two identical runs agree bit for bit") {
    auto a = lm_minimize(rosenbrock(), Eigen::VectorXd::Zero(2), LMConfig{});
    auto b = lm_minimize(rosenbrock(), Eigen::VectorXd::Zero(2), LMConfig{});
    CHECK(a.x(0) == b.x(0));
    CHECK(a.x(1) == b.x(1));
    CHECK(a.evals == b.evals);
    CHECK(a.history == b.history);
}
