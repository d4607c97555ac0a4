#pragma once

#include <string>

#include "toric/solve.hpp"

namespace toric {

// Self-describing artifact for one converged degree: enough to rebuild the
// potential and re-check the stored metrics without the generating config.
struct CoefficientFile {
    int format_version = 1;
    Manifold manifold = Manifold::Cp2Blowup1;
    double class_param = 1.0;
    int degree = 2;
    Symmetry symmetry = Symmetry::Z2;
    int ordering_version = 1;
    std::vector<double> coefficients;
    Equation equation = Equation::Soliton;
    std::optional<double> soliton_coeff;
    std::optional<ConformalData> conformal;
    ErrorMetrics scalar_metrics;  // T1 / T4
    ErrorMetrics tensor_metrics;  // T2 / T3
    double delta = 0.005;
    int quad_order = 20;
    WeightMode weight_mode = WeightMode::SqrtWeight;
    int grid_n = 201;
    std::string config_hash;
    std::string timestamp;  // empty unless TORIC_TIMESTAMP=1 (determinism)

    SymplecticPotential potential() const;
};

CoefficientFile make_coefficient_file(const RunConfig& cfg, const DegreeResult& r);

// Atomic (write temp, rename) UTF-8 JSON. save(load(p)) is byte-identical.
void save_coefficient_file(const std::string& path, const CoefficientFile& f);
CoefficientFile load_coefficient_file(const std::string& path);

// One coefficient per line, basis order.
void save_coefficients_text(const std::string& path,
                            const std::vector<double>& coeffs);

// FNV-1a over the canonical config string; hex digest.
std::string config_hash(const RunConfig& cfg);

// CSV (RFC 4180) table mirroring the published layout. append_csv_row
// creates the file with a header when absent.
std::string csv_header();
std::string csv_row(const DegreeResult& r);
void append_csv_row(const std::string& path, const DegreeResult& r);

}  // namespace toric
