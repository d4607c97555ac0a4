#include "toric/basis.hpp"

#include <cmath>

#include "toric/errors.hpp"

namespace toric {

int z2_count(int degree) {
    int n = 0;
    for (int k = 2; k <= degree; ++k) n += (k + 2) / 2;  // ceil((k+1)/2)
    return n;
}

MonomialBasis make_basis(int degree, Symmetry symmetry) {
    if (degree < 2) throw ParameterDomainError("basis degree must be >= 2");
    MonomialBasis mb;
    mb.degree = degree;
    mb.symmetry = symmetry;
    if (symmetry == Symmetry::Z2) {
        for (int k = 2; k <= degree; ++k) {
            // most-mixed first: b descending from floor(k/2)
            for (int b = k / 2; b >= 0 && k - b <= k; --b) {
                if (k - b < b) continue;
                mb.generators.push_back({k - b, b});
            }
        }
    }
    return mb;
}

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
    return r;
}

}  // namespace

std::vector<double> embed_u2_in_z2(const std::vector<double>& kappa, int degree) {
    if (int(kappa.size()) != degree - 1)
        throw BasisMismatchError("kappa length must equal degree - 1");
    auto z2 = make_basis(degree, Symmetry::Z2);
    std::vector<double> c(z2.generators.size(), 0.0);
    for (std::size_t i = 0; i < z2.generators.size(); ++i) {
        const auto& g = z2.generators[i];
        int k = g.a + g.b;
        c[i] = kappa[k - 2] * binom(k, g.b);
    }
    return c;
}

std::vector<double> embed_lower_degree(const std::vector<double>& coeffs,
                                       const MonomialBasis& from,
                                       const MonomialBasis& to) {
    if (from.symmetry != to.symmetry)
        throw BasisMismatchError("cannot embed across symmetry types");
    if (to.degree < from.degree)
        throw BasisMismatchError("target basis degree is lower than source");
    if (coeffs.size() != from.size())
        throw BasisMismatchError("coefficient length does not match source basis");
    std::vector<double> out(to.size(), 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i];
    return out;
}

std::vector<double> SymplecticPotential::z2_coeffs() const {
    if (coeffs.size() != basis.size())
        throw BasisMismatchError("coefficient length does not match basis");
    if (basis.symmetry == Symmetry::Z2) return coeffs;
    return embed_u2_in_z2(coeffs, basis.degree);
}

Jet4 canonical_jet(const Polytope& p, const Vec2& x) {
    Jet4 j;
    for (const auto& f : p.facets) {
        const double l = f.value(x);
        if (!(l > 0.0))
            throw SingularEvaluationError("canonical potential evaluated on or outside boundary");
        const double n1 = f.normal[0], n2 = f.normal[1];
        const double lg = std::log(l);
        j.value += 0.5 * l * lg;
        j.grad[0] += 0.5 * n1 * (lg + 1.0);
        j.grad[1] += 0.5 * n2 * (lg + 1.0);
        const double il = 1.0 / l;
        j.hess[0] += 0.5 * n1 * n1 * il;
        j.hess[1] += 0.5 * n1 * n2 * il;
        j.hess[2] += 0.5 * n2 * n2 * il;
        const double il2 = il * il;
        j.third[0] += -0.5 * n1 * n1 * n1 * il2;
        j.third[1] += -0.5 * n1 * n1 * n2 * il2;
        j.third[2] += -0.5 * n1 * n2 * n2 * il2;
        j.third[3] += -0.5 * n2 * n2 * n2 * il2;
        const double il3 = il2 * il;
        j.fourth[0] += n1 * n1 * n1 * n1 * il3;
        j.fourth[1] += n1 * n1 * n1 * n2 * il3;
        j.fourth[2] += n1 * n1 * n2 * n2 * il3;
        j.fourth[3] += n1 * n2 * n2 * n2 * il3;
        j.fourth[4] += n2 * n2 * n2 * n2 * il3;
    }
    return j;
}

namespace {

// falling factorial p (p-1) ... (p-k+1); zero once the power is exhausted
double ffac(int p, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= double(p - i);
    return r;
}

double ipow(double x, int p) {
    if (p < 0) return 0.0;
    double r = 1.0;
    while (p-- > 0) r *= x;
    return r;
}

// adds c * d^{a1+a2}/(dx1^a1 dx2^a2) x1^p x2^q evaluated at x
inline double mono_d(double c, int p, int q, int a1, int a2, const Vec2& x) {
    if (a1 > p || a2 > q) return 0.0;
    return c * ffac(p, a1) * ffac(q, a2) * ipow(x[0], p - a1) * ipow(x[1], q - a2);
}

void accumulate_monomial(Jet4& j, double c, int p, int q, const Vec2& x) {
    j.value += mono_d(c, p, q, 0, 0, x);
    j.grad[0] += mono_d(c, p, q, 1, 0, x);
    j.grad[1] += mono_d(c, p, q, 0, 1, x);
    j.hess[0] += mono_d(c, p, q, 2, 0, x);
    j.hess[1] += mono_d(c, p, q, 1, 1, x);
    j.hess[2] += mono_d(c, p, q, 0, 2, x);
    j.third[0] += mono_d(c, p, q, 3, 0, x);
    j.third[1] += mono_d(c, p, q, 2, 1, x);
    j.third[2] += mono_d(c, p, q, 1, 2, x);
    j.third[3] += mono_d(c, p, q, 0, 3, x);
    j.fourth[0] += mono_d(c, p, q, 4, 0, x);
    j.fourth[1] += mono_d(c, p, q, 3, 1, x);
    j.fourth[2] += mono_d(c, p, q, 2, 2, x);
    j.fourth[3] += mono_d(c, p, q, 1, 3, x);
    j.fourth[4] += mono_d(c, p, q, 0, 4, x);
}

}  // namespace

Jet4 polynomial_jet(const std::vector<Generator>& gens,
                    const std::vector<double>& coeffs, const Vec2& x) {
    if (gens.size() != coeffs.size())
        throw BasisMismatchError("coefficient length does not match generator list");
    Jet4 j;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const double c = coeffs[i];
        if (c == 0.0) continue;
        accumulate_monomial(j, c, gens[i].a, gens[i].b, x);
        if (gens[i].a != gens[i].b) accumulate_monomial(j, c, gens[i].b, gens[i].a, x);
    }
    return j;
}

Jet4 potential_jet(const SymplecticPotential& s, const Vec2& x) {
    Jet4 j = canonical_jet(s.polytope, x);
    auto z2 = s.z2_coeffs();
    auto gens = s.basis.symmetry == Symmetry::Z2
                    ? s.basis.generators
                    : make_basis(s.basis.degree, Symmetry::Z2).generators;
    Jet4 f = polynomial_jet(gens, z2, x);
    j.value += f.value;
    for (int i = 0; i < 2; ++i) j.grad[i] += f.grad[i];
    for (int i = 0; i < 3; ++i) j.hess[i] += f.hess[i];
    for (int i = 0; i < 4; ++i) j.third[i] += f.third[i];
    for (int i = 0; i < 5; ++i) j.fourth[i] += f.fourth[i];
    return j;
}

}  // namespace toric
