#pragma once

#include <vector>

#include "toric/polytope.hpp"

namespace toric {

enum class Symmetry { Z2, U2 };

// One Z2-invariant generator: x1^a x2^b + x1^b x2^a (a > b), or the single
// monomial x1^a x2^a when a == b.
struct Generator {
    int a = 0;
    int b = 0;
};

// Polynomial search space for the smooth part F of the symplectic potential.
// Z2 generators are ordered by ascending total degree, most-mixed first
// within a degree (x1 x2 before x1^2 + x2^2). U2 bases are powers t^k of
// t = x1 + x2, k = 2..d, stored as coefficients kappa_k.
struct MonomialBasis {
    int degree = 2;
    Symmetry symmetry = Symmetry::Z2;
    std::vector<Generator> generators;  // Z2 view; empty for U2

    std::size_t size() const {
        return symmetry == Symmetry::Z2 ? generators.size()
                                        : std::size_t(degree - 1);
    }
};

MonomialBasis make_basis(int degree, Symmetry symmetry);

// Generator count of the degree-d Z2 basis, sum_{k=2..d} ceil((k+1)/2).
int z2_count(int degree);

// Expand F(t) = sum kappa_k t^k into Z2 generator coefficients: the
// generator (a, b) receives kappa_{a+b} * C(a+b, b).
std::vector<double> embed_u2_in_z2(const std::vector<double>& kappa, int degree);

// Warm-start embedding: copy coefficients of the lower-degree basis, zero
// the new entries. Bases must share the symmetry type.
std::vector<double> embed_lower_degree(const std::vector<double>& coeffs,
                                       const MonomialBasis& from,
                                       const MonomialBasis& to);

// Derivatives through order 4 at a point. Symmetric tensors are stored once
// per index multiset: hess (11,12,22), third (111,112,122,222),
// fourth (1111,1112,1122,1222,2222).
struct Jet4 {
    double value = 0.0;
    std::array<double, 2> grad{};
    std::array<double, 3> hess{};
    std::array<double, 4> third{};
    std::array<double, 5> fourth{};

    double h(int i, int j) const { return hess[i + j]; }
    double t3(int i, int j, int k) const { return third[i + j + k]; }
    double t4(int i, int j, int k, int l) const { return fourth[i + j + k + l]; }
};

// u = u_can + F with F = sum_i coeffs[i] * generator_i.
struct SymplecticPotential {
    Polytope polytope;
    MonomialBasis basis;
    std::vector<double> coeffs;

    // Coefficients in the Z2 generator basis (identity for Z2 inputs).
    std::vector<double> z2_coeffs() const;
};

// Exact jet of u_can = 1/2 sum l_i log l_i. Throws SingularEvaluationError
// unless x is strictly interior.
Jet4 canonical_jet(const Polytope& p, const Vec2& x);

// Exact jet of a Z2 polynomial sum_i c_i * generator_i.
Jet4 polynomial_jet(const std::vector<Generator>& gens,
                    const std::vector<double>& coeffs, const Vec2& x);

// canonical_jet + polynomial jet of F.
Jet4 potential_jet(const SymplecticPotential& s, const Vec2& x);

}  // namespace toric
