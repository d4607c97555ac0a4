#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"

#include "toric/errors.hpp"
#include "toric/io.hpp"
#include "toric/oracle.hpp"
#include "toric/solve.hpp"

namespace {

using toric::RunConfig;
using ordered_json = nlohmann::ordered_json;

const std::map<std::string, toric::Manifold> kManifolds{
    {"cp2-blowup1", toric::Manifold::Cp2Blowup1},
    {"cp2-blowup2", toric::Manifold::Cp2Blowup2},
    {"simplex", toric::Manifold::Simplex}};
const std::map<std::string, toric::Equation> kEquations{
    {"soliton", toric::Equation::Soliton}, {"qem", toric::Equation::Qem}};
const std::map<std::string, toric::ResidualKind> kResiduals{
    {"t1", toric::ResidualKind::T1},
    {"t2", toric::ResidualKind::T2},
    {"t3", toric::ResidualKind::T3},
    {"t4", toric::ResidualKind::T4}};
const std::map<std::string, toric::Symmetry> kSymmetries{
    {"z2", toric::Symmetry::Z2}, {"u2", toric::Symmetry::U2}};
const std::map<std::string, toric::WeightMode> kWeights{
    {"sqrt", toric::WeightMode::SqrtWeight},
    {"plain", toric::WeightMode::PlainWeight}};

void apply_preset(const std::string& name, RunConfig& cfg) {
    cfg.equation = toric::Equation::Soliton;
    cfg.degree_min = 2;
    cfg.degree_max = 10;
    if (name == "kc-t1" || name == "kc-t2") {
        cfg.manifold = toric::Manifold::Cp2Blowup1;
        cfg.residual = name == "kc-t1" ? toric::ResidualKind::T1
                                       : toric::ResidualKind::T2;
        cfg.symmetry = toric::Symmetry::U2;
    } else if (name == "wz-t1" || name == "wz-t2") {
        cfg.manifold = toric::Manifold::Cp2Blowup2;
        cfg.residual = name == "wz-t1" ? toric::ResidualKind::T1
                                       : toric::ResidualKind::T2;
        cfg.symmetry = toric::Symmetry::Z2;
    } else if (name == "lpp-t3") {
        cfg.manifold = toric::Manifold::Cp2Blowup1;
        cfg.equation = toric::Equation::Qem;
        cfg.residual = toric::ResidualKind::T3;
        cfg.symmetry = toric::Symmetry::U2;
    } else if (name == "qe2-t3") {
        cfg.manifold = toric::Manifold::Cp2Blowup2;
        cfg.equation = toric::Equation::Qem;
        cfg.residual = toric::ResidualKind::T3;
        cfg.symmetry = toric::Symmetry::Z2;
        cfg.free_class = true;
        cfg.free_conformal = true;
        cfg.degree_max = 15;
    } else {
        throw toric::ParameterDomainError("unknown preset '" + name + "'");
    }
    if (name.empty()) return;
    cfg.label = name;
}

std::string output_dir(const RunConfig& cfg) {
    if (!cfg.output_dir.empty()) return cfg.output_dir;
    if (const char* env = std::getenv("TORIC_OUTPUT_DIR")) return env;
    return ".";
}

int cmd_solve(const RunConfig& cfg_in, const std::string& warm_path) {
    RunConfig cfg = cfg_in;
    if (cfg.label.empty()) cfg.label = "run";
    toric::validate(cfg);

    toric::WarmStart warm;
    const toric::WarmStart* warm_ptr = nullptr;
    if (!warm_path.empty()) {
        toric::CoefficientFile f = toric::load_coefficient_file(warm_path);
        warm.degree = f.degree;
        warm.symmetry = f.symmetry;
        warm.coeffs = f.coefficients;
        warm.class_param = f.class_param;
        if (f.conformal) warm.conformal = *f.conformal;
        if (f.soliton_coeff) warm.soliton = toric::SolitonData{*f.soliton_coeff};
        warm_ptr = &warm;
    }

    const std::filesystem::path dir = output_dir(cfg);
    const std::string csv = (dir / (cfg.label + ".csv")).string();
    std::error_code ec;
    std::filesystem::remove(csv, ec);

    std::cout << "degree  N       E_scalar      Max_scalar    E_tensor      Max_tensor    evals  stop\n";
    bool failed = false;
    auto on_degree = [&](const toric::DegreeResult& r) {
        toric::CoefficientFile f = toric::make_coefficient_file(cfg, r);
        const std::string stem =
            cfg.label + "_d" + std::to_string(r.degree);
        toric::save_coefficient_file((dir / (stem + ".json")).string(), f);
        toric::save_coefficients_text((dir / (stem + ".txt")).string(),
                                      r.pack.coeffs);
        toric::append_csv_row(csv, r);
        std::printf("%-7d %-7d %-13.6e %-13.6e %-13.6e %-13.6e %-6d %s\n",
                    r.degree, r.basis_size, r.scalar_metrics.normalized,
                    r.scalar_metrics.max_abs, r.tensor_metrics.normalized,
                    r.tensor_metrics.max_abs, r.report.evals,
                    r.solver_error ? "FAILED" : to_string(r.report.reason).c_str());
        if (r.solver_error) {
            failed = true;
            std::cerr << "degree " << r.degree << ": " << r.error_message << "\n";
        }
    };
    toric::run_solve(cfg, warm_ptr, on_degree);
    return failed ? 2 : 0;
}

int cmd_eval(const std::string& path, const std::string& kind_name) {
    toric::CoefficientFile f = toric::load_coefficient_file(path);
    toric::ResidualKind kind = kResiduals.at(kind_name);
    toric::SymplecticPotential s = f.potential();
    toric::SolitonData sd{f.soliton_coeff.value_or(0.0)};
    toric::ConformalData cd = f.conformal.value_or(toric::ConformalData{});
    toric::ResidualSpec spec;
    spec.kind = kind;
    spec.delta = f.delta;
    spec.weight_mode = f.weight_mode;
    spec.grid_n = f.grid_n;
    toric::ErrorMetrics m =
        toric::error_metrics(kind, s, &sd, &cd, spec, f.quad_order);
    ordered_json out{{"residual", kind_name},
                     {"normalized", m.normalized},
                     {"max", m.max_abs},
                     {"objective", m.objective}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_taylor(const std::string& path) {
    toric::CoefficientFile f = toric::load_coefficient_file(path);
    ordered_json out;
    if (f.symmetry == toric::Symmetry::U2) {
        out["taylor"] = f.coefficients;
        out["projection_residual"] = 0.0;
    } else {
        // least-squares projection of the generator coefficients onto
        // powers of t = x1 + x2
        const int d = f.degree;
        const auto basis = toric::make_basis(d, toric::Symmetry::Z2);
        const int n = int(basis.size());
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, d - 1);
        for (int k = 2; k <= d; ++k) {
            std::vector<double> kappa(d - 1, 0.0);
            kappa[k - 2] = 1.0;
            auto col = toric::embed_u2_in_z2(kappa, d);
            for (int i = 0; i < n; ++i) M(i, k - 2) = col[i];
        }
        Eigen::VectorXd c = Eigen::Map<const Eigen::VectorXd>(
            f.coefficients.data(), n);
        Eigen::VectorXd kappa = M.colPivHouseholderQr().solve(c);
        out["taylor"] = std::vector<double>(kappa.data(), kappa.data() + d - 1);
        out["projection_residual"] = (M * kappa - c).norm();
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_params(const std::string& system, double m, double a,
               const std::string& manifold) {
    ordered_json out;
    if (system == "soliton") {
        toric::Polytope p = toric::make_manifold_polytope(kManifolds.at(manifold),
                                                          a);
        out["values"] = {{"coefficient", toric::soliton_coefficient(p)}};
        out["quad_order"] = 40;
    } else if (system == "lpp") {
        toric::LppParams lp = toric::lpp_parameters(m);
        out["values"] = {{"b", lp.b},
                         {"c", lp.c},
                         {"d", lp.d},
                         {"mu", toric::lpp_mu(lp.b, lp.c, lp.d)}};
        out["residuals"] = {{"integral", toric::lpp_constraint_residual(lp)}};
        out["quad_order"] = 40;
    } else if (system == "qe2") {
        toric::Qe2Params qp = toric::qe2_parameters(m, a);
        auto res = toric::qe2_residuals(qp);
        out["values"] = {{"b", qp.b}, {"c", qp.c}, {"d", qp.d}, {"mu", qp.mu}};
        out["residuals"] = {{"e1", res[0]},
                            {"e2", res[1]},
                            {"e3", res[2]},
                            {"integral", res[3]}};
        out["quad_order"] = 40;
    } else {
        throw toric::ParameterDomainError("unknown system '" + system + "'");
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct Check {
    std::string name;
    double err;
    double tol;
    bool pass() const { return err <= tol; }
};

int cmd_quadcheck() {
    std::vector<Check> checks;
    auto record = [&](const std::string& name, double err, double tol) {
        checks.push_back({name, err, tol});
    };

    // quadrature vs triangulation closed forms
    const std::vector<std::pair<std::string, toric::Polytope>> domains{
        {"trapezium(1)", toric::make_trapezium(1.0)},
        {"pentagon(2)", toric::make_pentagon(2.0)},
        {"simplex", toric::make_simplex()}};
    for (const auto& [name, p] : domains) {
        auto scheme = toric::scheme_for(p, 20);
        auto verts = toric::vertices(p);
        double worst = 0.0;
        for (int pw = 0; pw <= 8; ++pw)
            for (int qw = 0; pw + qw <= 8; ++qw) {
                std::vector<double> vals;
                vals.reserve(scheme.points.size());
                for (const auto& x : scheme.points)
                    vals.push_back(std::pow(x[0], pw) * std::pow(x[1], qw));
                const double got = scheme.integrate(vals);
                const double want = toric::polygon_monomial_integral(verts, pw, qw);
                const double scale = std::max(1.0, std::abs(want));
                worst = std::max(worst, std::abs(got - want) / scale);
            }
        record("monomials deg<=8 on " + name, worst, 1e-12);
        record("area " + name,
               std::abs(scheme.integrate(std::vector<double>(
                            scheme.points.size(), 1.0)) -
                        toric::volume(p)),
               1e-12);
    }

    // jet vs finite differences at one interior point
    {
        toric::SymplecticPotential s;
        s.polytope = toric::make_pentagon(2.0);
        s.basis = toric::make_basis(4, toric::Symmetry::Z2);
        s.coeffs = {0.01, -0.02, 0.015, 0.03, -0.01, 0.02, -0.005};
        toric::Vec2 x{0.13, -0.21};
        auto f = [&s](const toric::Vec2& y) {
            return toric::potential_jet(s, y).value;
        };
        toric::Jet4 fd = toric::fd_jet(f, x, 1e-3);
        toric::Jet4 an = toric::potential_jet(s, x);
        double worst = 0.0;
        for (int i = 0; i < 3; ++i)
            worst = std::max(worst, std::abs(fd.hess[i] - an.hess[i]));
        record("jet hessian vs FD", worst, 1e-6);
        worst = 0.0;
        for (int i = 0; i < 5; ++i)
            worst = std::max(worst, std::abs(fd.fourth[i] - an.fourth[i]));
        record("jet 4th derivatives vs FD", worst, 1e-3);

        // trace identity S = 2 tr(u^{-1} Ric)
        auto md = toric::metric_data(an);
        auto ric = toric::ricci_xx(md);
        double tr = 0.0;
        for (int a2 = 0; a2 < 2; ++a2)
            for (int b2 = 0; b2 < 2; ++b2) tr += md.uinv[a2][b2] * ric[b2][a2];
        record("trace identity", std::abs(toric::scalar_curvature(md) - 2 * tr),
               1e-10);
    }

    // Fubini-Study: canonical simplex potential is Kahler-Einstein
    {
        toric::SymplecticPotential s;
        s.polytope = toric::make_simplex();
        s.basis = toric::make_basis(2, toric::Symmetry::Z2);
        s.coeffs = {0.0, 0.0};
        auto scheme = toric::scheme_shrunken(s.polytope, 0.01, 12);
        double worst_ric = 0.0, worst_s = 0.0;
        for (const auto& x : scheme.points) {
            auto md = toric::metric_data(toric::potential_jet(s, x));
            auto ric = toric::ricci_xx(md);
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 2; ++b2)
                    worst_ric = std::max(worst_ric,
                                         std::abs(ric[a2][b2] - md.u[a2][b2]));
            worst_s = std::max(worst_s,
                               std::abs(toric::scalar_curvature(md) - 4.0));
        }
        record("Fubini-Study Ric = u", worst_ric, 1e-8);
        record("Fubini-Study S = 4", worst_s, 1e-8);
    }

    bool all = true;
    for (const auto& c : checks) {
        std::printf("%-5s %-34s err %-12.3e tol %-9.0e\n",
                    c.pass() ? "ok" : "FAIL", c.name.c_str(), c.err, c.tol);
        all = all && c.pass();
    }
    return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvature-residual minimization on toric surfaces"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string preset, warm_path;
    auto* solve = app.add_subcommand("solve", "run a degree continuation");
    solve->add_option("--preset", preset,
                      "kc-t1|kc-t2|wz-t1|wz-t2|lpp-t3|qe2-t3");
    solve->add_option("--manifold", cfg.manifold, "")
        ->transform(CLI::CheckedTransformer(kManifolds));
    solve->add_option("--equation", cfg.equation, "")
        ->transform(CLI::CheckedTransformer(kEquations));
    solve->add_option("--residual", cfg.residual, "minimized residual")
        ->transform(CLI::CheckedTransformer(kResiduals));
    solve->add_option("--symmetry", cfg.symmetry, "")
        ->transform(CLI::CheckedTransformer(kSymmetries));
    solve->add_option("--degree-min", cfg.degree_min);
    solve->add_option("--degree-max", cfg.degree_max);
    solve->add_option("--m", cfg.m, "quasi-Einstein parameter");
    solve->add_option("--class-param", cfg.class_param,
                      "polytope parameter a (0 = manifold default)");
    solve->add_flag("--free-class", cfg.free_class);
    solve->add_flag("--free-conformal", cfg.free_conformal);
    solve->add_flag("--free-soliton", cfg.free_soliton);
    solve->add_option("--eps-degree", cfg.eps_degree);
    solve->add_option("--delta", cfg.delta);
    solve->add_option("--quad-order", cfg.quad_order);
    solve->add_option("--weight-mode", cfg.weight_mode, "")
        ->transform(CLI::CheckedTransformer(kWeights));
    solve->add_option("--grid-n", cfg.grid_n);
    solve->add_option("--max-evals", cfg.lm.max_evals);
    solve->add_option("--fd-step", cfg.lm.fd_step);
    solve->add_option("--output-dir", cfg.output_dir);
    solve->add_option("--label", cfg.label);
    solve->add_option("--warm-start", warm_path, "coefficient file");

    std::string eval_path, eval_kind = "t1";
    auto* eval = app.add_subcommand("eval", "re-evaluate a coefficient file");
    eval->add_option("file", eval_path)->required();
    eval->add_option("--residual", eval_kind, "t1|t2|t3|t4");

    std::string taylor_path;
    auto* taylor = app.add_subcommand("taylor", "Taylor coefficients of F(t)");
    taylor->add_option("file", taylor_path)->required();

    std::string system = "soliton", pmanifold = "cp2-blowup1";
    double pm = 2.0, pa = 0.0;
    auto* params = app.add_subcommand("params", "closed parameter systems");
    params->add_option("--system", system, "soliton|lpp|qe2")->required();
    params->add_option("--m", pm);
    params->add_option("--a", pa);
    params->add_option("--manifold", pmanifold);

    auto* quadcheck = app.add_subcommand("quadcheck", "numerical self-test");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) {
            if (!preset.empty()) {
                RunConfig preset_cfg;
                apply_preset(preset, preset_cfg);
                // explicit flags win over the preset
                if (!solve->count("--manifold")) cfg.manifold = preset_cfg.manifold;
                if (!solve->count("--equation")) cfg.equation = preset_cfg.equation;
                if (!solve->count("--residual")) cfg.residual = preset_cfg.residual;
                if (!solve->count("--symmetry")) cfg.symmetry = preset_cfg.symmetry;
                if (!solve->count("--degree-max"))
                    cfg.degree_max = preset_cfg.degree_max;
                if (!solve->count("--free-class")) cfg.free_class = preset_cfg.free_class;
                if (!solve->count("--free-conformal"))
                    cfg.free_conformal = preset_cfg.free_conformal;
                if (!solve->count("--label")) cfg.label = preset_cfg.label;
            }
            return cmd_solve(cfg, warm_path);
        }
        if (eval->parsed()) return cmd_eval(eval_path, eval_kind);
        if (taylor->parsed()) return cmd_taylor(taylor_path);
        if (params->parsed()) return cmd_params(system, pm, pa, pmanifold);
        if (quadcheck->parsed()) return cmd_quadcheck();
    } catch (const toric::SolverFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
