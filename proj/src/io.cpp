#include "toric/io.hpp"

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "toric/errors.hpp"

namespace toric {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;
constexpr int kOrderingVersion = 1;

Manifold manifold_from_string(const std::string& s) {
    if (s == "cp2-blowup1") return Manifold::Cp2Blowup1;
    if (s == "cp2-blowup2") return Manifold::Cp2Blowup2;
    if (s == "simplex") return Manifold::Simplex;
    throw ParameterDomainError("unknown manifold '" + s + "'");
}

Symmetry symmetry_from_string(const std::string& s) {
    if (s == "z2") return Symmetry::Z2;
    if (s == "u2") return Symmetry::U2;
    throw ParameterDomainError("unknown symmetry '" + s + "'");
}

WeightMode weight_from_string(const std::string& s) {
    if (s == "sqrt") return WeightMode::SqrtWeight;
    if (s == "plain") return WeightMode::PlainWeight;
    throw ParameterDomainError("unknown weight mode '" + s + "'");
}

Equation equation_from_string(const std::string& s) {
    if (s == "soliton") return Equation::Soliton;
    if (s == "qem") return Equation::Qem;
    throw ParameterDomainError("unknown equation '" + s + "'");
}

ordered_json metrics_json(const ErrorMetrics& m) {
    return ordered_json{{"normalized", m.normalized},
                        {"max", m.max_abs},
                        {"objective", m.objective}};
}

ErrorMetrics metrics_from_json(const ordered_json& j) {
    ErrorMetrics m;
    m.normalized = j.at("normalized").get<double>();
    m.max_abs = j.at("max").get<double>();
    m.objective = j.at("objective").get<double>();
    return m;
}

void atomic_write(const std::string& path, const std::string& data) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw SolverFailure("cannot open '" + tmp.string() + "' for writing");
        out << data;
        if (!out) throw SolverFailure("short write to '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
}

std::string iso_timestamp() {
    const char* env = std::getenv("TORIC_TIMESTAMP");
    if (!env || std::string(env) != "1") return "";
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
    return buf;
}

}  // namespace

SymplecticPotential CoefficientFile::potential() const {
    SymplecticPotential s;
    s.polytope = make_manifold_polytope(manifold, class_param);
    s.basis = make_basis(degree, symmetry);
    s.coeffs = coefficients;
    if (coefficients.size() != s.basis.size())
        throw BasisMismatchError("coefficient count does not match basis");
    return s;
}

CoefficientFile make_coefficient_file(const RunConfig& cfg, const DegreeResult& r) {
    CoefficientFile f;
    f.manifold = cfg.manifold;
    f.class_param = r.pack.class_param;
    f.degree = r.degree;
    f.symmetry = cfg.symmetry;
    f.coefficients = r.pack.coeffs;
    f.equation = cfg.equation;
    if (cfg.equation == Equation::Soliton)
        f.soliton_coeff = r.soliton.coeff;
    else
        f.conformal = r.conformal;
    f.scalar_metrics = r.scalar_metrics;
    f.tensor_metrics = r.tensor_metrics;
    f.delta = cfg.delta;
    f.quad_order = cfg.quad_order;
    f.weight_mode = cfg.weight_mode;
    f.grid_n = cfg.grid_n;
    f.config_hash = config_hash(cfg);
    f.timestamp = iso_timestamp();
    return f;
}

void save_coefficient_file(const std::string& path, const CoefficientFile& f) {
    ordered_json j;
    j["format_version"] = f.format_version;
    Polytope p = make_manifold_polytope(f.manifold, f.class_param);
    ordered_json facets = ordered_json::array();
    for (const auto& fa : p.facets)
        facets.push_back({{"normal", {fa.normal[0], fa.normal[1]}},
                          {"offset", fa.offset}});
    j["manifold"] = {{"kind", to_string(f.manifold)},
                     {"a", f.class_param},
                     {"facets", facets}};
    j["basis"] = {{"degree", f.degree},
                  {"symmetry", to_string(f.symmetry)},
                  {"ordering_version", f.ordering_version}};
    j["coefficients"] = f.coefficients;
    j["equation"] = to_string(f.equation);
    if (f.soliton_coeff) j["soliton_coeff"] = *f.soliton_coeff;
    if (f.conformal) {
        const ConformalData& cd = *f.conformal;
        j["conformal"] = {{"b", cd.b},   {"c", cd.c},
                          {"d", cd.d},   {"m", cd.m},
                          {"mu", cd.mu}, {"eps1", cd.eps1},
                          {"eps2", cd.eps2}, {"eps_degree", cd.eps_degree}};
    }
    j["metrics"] = {{"scalar", metrics_json(f.scalar_metrics)},
                    {"tensor", metrics_json(f.tensor_metrics)}};
    j["evaluation"] = {{"delta", f.delta},
                       {"quad_order", f.quad_order},
                       {"weight_mode", to_string(f.weight_mode)},
                       {"grid_n", f.grid_n}};
    j["provenance"] = {{"config_hash", f.config_hash},
                       {"timestamp", f.timestamp}};
    atomic_write(path, j.dump(2) + "\n");
}

CoefficientFile load_coefficient_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterDomainError("cannot open '" + path + "'");
    ordered_json j = ordered_json::parse(in);

    CoefficientFile f;
    f.format_version = j.at("format_version").get<int>();
    if (f.format_version != kFormatVersion)
        throw BasisMismatchError("unsupported format_version in '" + path + "'");
    const auto& man = j.at("manifold");
    f.manifold = manifold_from_string(man.at("kind").get<std::string>());
    f.class_param = man.at("a").get<double>();
    const auto& bas = j.at("basis");
    f.degree = bas.at("degree").get<int>();
    f.symmetry = symmetry_from_string(bas.at("symmetry").get<std::string>());
    f.ordering_version = bas.at("ordering_version").get<int>();
    if (f.ordering_version != kOrderingVersion)
        throw BasisMismatchError("unsupported basis ordering_version in '" + path + "'");
    f.coefficients = j.at("coefficients").get<std::vector<double>>();
    f.equation = equation_from_string(j.at("equation").get<std::string>());
    if (j.contains("soliton_coeff"))
        f.soliton_coeff = j.at("soliton_coeff").get<double>();
    if (j.contains("conformal")) {
        const auto& c = j.at("conformal");
        ConformalData cd;
        cd.b = c.at("b").get<double>();
        cd.c = c.at("c").get<double>();
        cd.d = c.at("d").get<double>();
        cd.m = c.at("m").get<double>();
        cd.mu = c.at("mu").get<double>();
        cd.eps1 = c.at("eps1").get<std::vector<double>>();
        cd.eps2 = c.at("eps2").get<std::vector<double>>();
        cd.eps_degree = c.at("eps_degree").get<int>();
        f.conformal = cd;
    }
    f.scalar_metrics = metrics_from_json(j.at("metrics").at("scalar"));
    f.tensor_metrics = metrics_from_json(j.at("metrics").at("tensor"));
    const auto& ev = j.at("evaluation");
    f.delta = ev.at("delta").get<double>();
    f.quad_order = ev.at("quad_order").get<int>();
    f.weight_mode = weight_from_string(ev.at("weight_mode").get<std::string>());
    f.grid_n = ev.at("grid_n").get<int>();
    f.config_hash = j.at("provenance").at("config_hash").get<std::string>();
    f.timestamp = j.at("provenance").at("timestamp").get<std::string>();
    if (f.coefficients.size() != make_basis(f.degree, f.symmetry).size())
        throw BasisMismatchError("coefficient count does not match basis in '" + path + "'");
    return f;
}

void save_coefficients_text(const std::string& path,
                            const std::vector<double>& coeffs) {
    std::ostringstream out;
    out.precision(17);
    for (double c : coeffs) out << c << "\n";
    atomic_write(path, out.str());
}

std::string config_hash(const RunConfig& cfg) {
    std::ostringstream key;
    key.precision(17);
    key << to_string(cfg.manifold) << '|' << to_string(cfg.equation) << '|'
        << to_string(cfg.residual) << '|' << to_string(cfg.symmetry) << '|'
        << cfg.degree_min << '|' << cfg.degree_max << '|' << cfg.m << '|'
        << cfg.effective_class_param() << '|' << cfg.free_class << '|'
        << cfg.free_conformal << '|' << cfg.free_soliton << '|'
        << cfg.eps_degree << '|' << cfg.delta << '|' << cfg.quad_order << '|'
        << to_string(cfg.weight_mode) << '|' << cfg.grid_n << '|'
        << cfg.lm.max_evals << '|' << cfg.lm.tol_residual_change << '|'
        << cfg.lm.tol_step_norm << '|' << cfg.lm.damping_init << '|'
        << cfg.lm.fd_step;
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : key.str()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string csv_header() {
    return "degree,basis_size,E_scalar,Max_scalar,E_tensor,Max_tensor\r\n";
}

std::string csv_row(const DegreeResult& r) {
    std::ostringstream out;
    out.precision(10);
    out << r.degree << ',' << r.basis_size << ','
        << r.scalar_metrics.normalized << ',' << r.scalar_metrics.max_abs << ','
        << r.tensor_metrics.normalized << ',' << r.tensor_metrics.max_abs
        << "\r\n";
    return out.str();
}

void append_csv_row(const std::string& path, const DegreeResult& r) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const bool fresh = !fs::exists(target);
    std::ofstream out(target, std::ios::binary | std::ios::app);
    if (!out) throw SolverFailure("cannot open '" + path + "' for append");
    if (fresh) out << csv_header();
    out << csv_row(r);
}

}  // namespace toric
