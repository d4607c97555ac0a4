#include "toric/solve.hpp"

#include <cmath>

#include "toric/errors.hpp"

namespace toric {

std::string to_string(Manifold m) {
    switch (m) {
        case Manifold::Cp2Blowup1: return "cp2-blowup1";
        case Manifold::Cp2Blowup2: return "cp2-blowup2";
        case Manifold::Simplex: return "simplex";
    }
    return "unknown";
}

std::string to_string(Equation e) {
    return e == Equation::Soliton ? "soliton" : "qem";
}

std::string to_string(ResidualKind k) {
    switch (k) {
        case ResidualKind::T1: return "t1";
        case ResidualKind::T2: return "t2";
        case ResidualKind::T3: return "t3";
        case ResidualKind::T4: return "t4";
    }
    return "unknown";
}

std::string to_string(Symmetry s) { return s == Symmetry::Z2 ? "z2" : "u2"; }

std::string to_string(WeightMode w) {
    return w == WeightMode::SqrtWeight ? "sqrt" : "plain";
}

double RunConfig::effective_class_param() const {
    if (class_param != 0.0) return class_param;
    switch (manifold) {
        case Manifold::Cp2Blowup1: return 1.0;
        case Manifold::Cp2Blowup2: return 2.0;
        case Manifold::Simplex: return 1.0;
    }
    return 1.0;
}

Polytope make_manifold_polytope(Manifold m, double a) {
    switch (m) {
        case Manifold::Cp2Blowup1: return make_trapezium(a);
        case Manifold::Cp2Blowup2: return make_pentagon(a);
        case Manifold::Simplex: return make_simplex();
    }
    throw ParameterDomainError("unknown manifold");
}

void validate(const RunConfig& cfg) {
    if (cfg.residual == ResidualKind::T3 && cfg.equation != Equation::Qem)
        throw ParameterDomainError("residual t3 requires equation qem");
    if (cfg.residual == ResidualKind::T4)
        throw ParameterDomainError("t4 is a diagnostic, not a minimization target");
    if ((cfg.residual == ResidualKind::T1 || cfg.residual == ResidualKind::T2) &&
        cfg.equation == Equation::Qem)
        throw ParameterDomainError("soliton residuals require equation soliton");
    if (cfg.symmetry == Symmetry::U2 && cfg.manifold == Manifold::Cp2Blowup2)
        throw ParameterDomainError("u2 symmetry is only available on cp2-blowup1/simplex");
    if (cfg.degree_min < 2 || cfg.degree_max < cfg.degree_min)
        throw ParameterDomainError("need 2 <= degree_min <= degree_max");
    if (cfg.equation == Equation::Soliton && cfg.free_conformal)
        throw ParameterDomainError("free conformal parameters require equation qem");
    if (cfg.equation == Equation::Qem && !(cfg.m > 1.0))
        throw ParameterDomainError("qem requires m > 1");
}

Eigen::VectorXd ParameterPack::pack() const {
    Eigen::VectorXd x(packed_size());
    Eigen::Index k = 0;
    for (double c : coeffs) x[k++] = c;
    if (free_class) x[k++] = class_param;
    if (free_conformal) {
        x[k++] = conf_b;
        x[k++] = conf_c;
        x[k++] = conf_d;
    }
    if (free_soliton) x[k++] = soliton_coeff;
    if (free_eps) {
        for (double c : eps1) x[k++] = c;
        for (double c : eps2) x[k++] = c;
    }
    return x;
}

void ParameterPack::unpack(const Eigen::VectorXd& x) {
    if (x.size() != packed_size())
        throw BasisMismatchError("parameter vector does not match pack layout");
    Eigen::Index k = 0;
    for (double& c : coeffs) c = x[k++];
    if (free_class) class_param = x[k++];
    if (free_conformal) {
        conf_b = x[k++];
        conf_c = x[k++];
        conf_d = x[k++];
    }
    if (free_soliton) soliton_coeff = x[k++];
    if (free_eps) {
        for (double& c : eps1) c = x[k++];
        for (double& c : eps2) c = x[k++];
    }
}

int ParameterPack::packed_size() const {
    int n = int(coeffs.size());
    if (free_class) n += 1;
    if (free_conformal) n += 3;
    if (free_soliton) n += 1;
    if (free_eps) n += int(eps1.size() + eps2.size());
    return n;
}

namespace {

struct DegreeProblem {
    const RunConfig& cfg;
    MonomialBasis basis;
    ParameterPack prototype;  // fixed values for non-free blocks
    // cached geometry for fixed-a runs
    Polytope polytope;
    QuadratureScheme scheme;
    double base_mu = 0.0;

    SymplecticPotential potential_for(const ParameterPack& pk, const Polytope& p) const {
        SymplecticPotential s;
        s.polytope = p;
        if (basis.symmetry == Symmetry::U2) {
            s.basis = make_basis(basis.degree, Symmetry::Z2);
            s.coeffs = embed_u2_in_z2(pk.coeffs, basis.degree);
        } else {
            s.basis = basis;
            s.coeffs = pk.coeffs;
        }
        return s;
    }

    ConformalData conformal_for(const ParameterPack& pk) const {
        ConformalData cd;
        cd.b = pk.conf_b;
        cd.c = pk.conf_c;
        cd.d = pk.conf_d;
        cd.m = cfg.m;
        cd.mu = base_mu;
        cd.eps1 = pk.eps1;
        cd.eps2 = pk.eps2;
        cd.eps_degree = cfg.eps_degree;
        return cd;
    }

    std::optional<Eigen::VectorXd> operator()(const Eigen::VectorXd& x) const {
        ParameterPack pk = prototype;
        pk.unpack(x);
        try {
            const Polytope* p = &polytope;
            Polytope rebuilt;
            QuadratureScheme local_scheme;
            const QuadratureScheme* sc = &scheme;
            if (cfg.free_class) {
                rebuilt = make_manifold_polytope(cfg.manifold, pk.class_param);
                local_scheme = needs_shrunken_region(cfg.residual)
                                   ? scheme_shrunken(rebuilt, cfg.delta, cfg.quad_order)
                                   : scheme_for(rebuilt, cfg.quad_order);
                p = &rebuilt;
                sc = &local_scheme;
            }
            SymplecticPotential s = potential_for(pk, *p);
            SolitonData sd{pk.soliton_coeff};
            ConformalData cd = conformal_for(pk);
            auto obj = objective(cfg.residual, s, &sd, &cd, *sc, cfg.weight_mode);
            if (!obj) return std::nullopt;
            return Eigen::Map<Eigen::VectorXd>(obj->first.data(),
                                               Eigen::Index(obj->first.size()));
        } catch (const DegeneratePolytopeError&) {
            return std::nullopt;
        } catch (const ParameterDomainError&) {
            return std::nullopt;
        }
    }
};

ParameterPack make_prototype(const RunConfig& cfg, const MonomialBasis& basis,
                             double a, const ConformalData& cd, const SolitonData& sd) {
    ParameterPack pk;
    pk.coeffs.assign(basis.size(), 0.0);
    pk.class_param = a;
    pk.conf_b = cd.b;
    pk.conf_c = cd.c;
    pk.conf_d = cd.d;
    pk.soliton_coeff = sd.coeff;
    pk.free_class = cfg.free_class;
    pk.free_conformal = cfg.free_conformal;
    pk.free_soliton = cfg.free_soliton;
    pk.free_eps = cfg.eps_degree > 0;
    if (pk.free_eps) {
        const std::size_t ne = make_eps_basis(cfg.eps_degree).size();
        pk.eps1.assign(ne, 0.0);
        pk.eps2.assign(ne, 0.0);
    }
    return pk;
}

}  // namespace

SymplecticPotential make_potential(const RunConfig& cfg, const DegreeResult& r) {
    SymplecticPotential s;
    s.polytope = make_manifold_polytope(cfg.manifold, r.pack.class_param);
    s.basis = make_basis(r.degree, cfg.symmetry);
    s.coeffs = r.pack.coeffs;
    return s;
}

std::vector<DegreeResult> run_solve(const RunConfig& cfg, const WarmStart* warm,
                                    const DegreeCallback& on_degree) {
    validate(cfg);
    const double a0 = cfg.effective_class_param();
    Polytope p0 = make_manifold_polytope(cfg.manifold, a0);

    SolitonData sd0{0.0};
    ConformalData cd0;
    if (cfg.equation == Equation::Soliton) {
        sd0.coeff = soliton_coefficient(p0);
    } else {
        if (cfg.manifold == Manifold::Cp2Blowup1 || cfg.manifold == Manifold::Simplex) {
            LppParams lp = lpp_parameters(cfg.m);
            cd0.b = lp.b;
            cd0.c = lp.c;
            cd0.d = lp.d;
            cd0.mu = lpp_mu(lp.b, lp.c, lp.d);
        } else {
            Qe2Params qp = qe2_parameters(cfg.m, a0);
            cd0.b = qp.b;
            cd0.c = qp.c;
            cd0.d = qp.d;
            cd0.mu = qp.mu;
        }
        cd0.m = cfg.m;
        cd0.eps_degree = cfg.eps_degree;
    }
    if (warm) {
        if (warm->class_param) p0 = make_manifold_polytope(cfg.manifold, *warm->class_param);
        if (warm->conformal) {
            cd0.b = warm->conformal->b;
            cd0.c = warm->conformal->c;
            cd0.d = warm->conformal->d;
        }
        if (warm->soliton) sd0.coeff = warm->soliton->coeff;
    }

    std::vector<DegreeResult> results;
    ParameterPack prev_pack;
    int prev_degree = -1;
    for (int d = cfg.degree_min; d <= cfg.degree_max; ++d) {
        DegreeResult res;
        res.degree = d;
        MonomialBasis basis = make_basis(d, cfg.symmetry);
        res.basis_size = int(basis.size());

        DegreeProblem prob{cfg, basis,
                           make_prototype(cfg, basis, warm && warm->class_param
                                                          ? *warm->class_param
                                                          : a0,
                                          cd0, sd0),
                           p0, QuadratureScheme{}, cd0.mu};
        if (!cfg.free_class) {
            prob.polytope = make_manifold_polytope(
                cfg.manifold, prob.prototype.class_param);
            prob.scheme = needs_shrunken_region(cfg.residual)
                              ? scheme_shrunken(prob.polytope, cfg.delta, cfg.quad_order)
                              : scheme_for(prob.polytope, cfg.quad_order);
        }

        // warm start: previous degree's pack, coefficient block re-embedded
        ParameterPack start = prob.prototype;
        if (prev_degree > 0) {
            start = prev_pack;
            start.coeffs = embed_lower_degree(prev_pack.coeffs,
                                              make_basis(prev_degree, cfg.symmetry), basis);
        } else if (warm && !warm->coeffs.empty()) {
            if (warm->symmetry != cfg.symmetry)
                throw BasisMismatchError("warm-start symmetry does not match run");
            start.coeffs = embed_lower_degree(
                warm->coeffs, make_basis(warm->degree, cfg.symmetry), basis);
            start.class_param = warm->class_param.value_or(start.class_param);
        }

        try {
            res.report = lm_minimize(std::cref(prob), start.pack(), cfg.lm);
            res.pack = prob.prototype;
            res.pack.unpack(res.report.x);
        } catch (const SolverFailure& e) {
            res.solver_error = true;
            res.error_message = e.what();
            res.pack = start;
        }

        // report metrics on the final state
        {
            ParameterPack& pk = res.pack;
            Polytope pf = make_manifold_polytope(cfg.manifold, pk.class_param);
            SymplecticPotential s = prob.potential_for(pk, pf);
            res.soliton = SolitonData{pk.soliton_coeff};
            res.conformal = prob.conformal_for(pk);
            ResidualSpec spec;
            spec.delta = cfg.delta;
            spec.weight_mode = cfg.weight_mode;
            spec.grid_n = cfg.grid_n;
            const bool soliton = cfg.equation == Equation::Soliton;
            spec.kind = soliton ? ResidualKind::T1 : ResidualKind::T4;
            res.scalar_metrics = error_metrics(spec.kind, s, &res.soliton,
                                               &res.conformal, spec, cfg.quad_order);
            spec.kind = soliton ? ResidualKind::T2 : ResidualKind::T3;
            res.tensor_metrics = error_metrics(spec.kind, s, &res.soliton,
                                               &res.conformal, spec, cfg.quad_order);
        }

        if (!res.solver_error) {
            prev_pack = res.pack;
            prev_degree = d;
        }
        if (on_degree) on_degree(res);
        results.push_back(std::move(res));
    }
    return results;
}

}  // namespace toric
