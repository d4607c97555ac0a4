#include "toric/quadrature.hpp"

#include <cmath>
#include <functional>

#include "toric/errors.hpp"

namespace toric {

GaussRule gauss_legendre(int n) {
    if (n < 1) throw ParameterDomainError("quadrature order must be >= 1");
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    // Newton iteration on P_n from the Chebyshev-like initial guess
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            if (n == 1) { p1 = x; }
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
                p0 = p1;
                p1 = p2;
            }
            double pn = (n == 1) ? x : p1;
            double pn1 = (n == 1) ? 1.0 : p0;
            pp = double(n) * (x * pn - pn1) / (x * x - 1.0);
            double dx = pn / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    // nodes come out descending; flip to ascending
    for (int i = 0; i < n / 2; ++i) {
        std::swap(r.nodes[i], r.nodes[n - 1 - i]);
        std::swap(r.weights[i], r.weights[n - 1 - i]);
    }
    return r;
}

double QuadratureScheme::integrate(const std::vector<double>& values) const {
    if (values.size() != weights.size())
        throw BasisMismatchError("value count does not match quadrature points");
    double s = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * values[i];
    return s;
}

namespace {

// Iterated integral over {x1 in [lo1, hi1], x2 in [lo2(x1), hi2(x1)]}.
void add_region(QuadratureScheme& q, const GaussRule& g, double lo1, double hi1,
                const std::function<double(double)>& lo2,
                const std::function<double(double)>& hi2) {
    if (!(hi1 > lo1)) throw DegeneratePolytopeError("quadrature region is empty");
    const double m1 = 0.5 * (hi1 + lo1), h1 = 0.5 * (hi1 - lo1);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const double x1 = m1 + h1 * g.nodes[i];
        const double a = lo2(x1), b = hi2(x1);
        if (!(b > a)) throw DegeneratePolytopeError("quadrature slice is empty");
        const double m2 = 0.5 * (b + a), h2 = 0.5 * (b - a);
        for (std::size_t j = 0; j < g.nodes.size(); ++j) {
            q.points.push_back({x1, m2 + h2 * g.nodes[j]});
            q.weights.push_back(g.weights[i] * g.weights[j] * h1 * h2);
        }
    }
}

}  // namespace

QuadratureScheme scheme_trapezium(const Polytope& p, int n) {
    if (p.kind != PolytopeKind::Trapezium)
        throw ParameterDomainError("scheme_trapezium requires a trapezium");
    const double l1 = p.facets[0].offset, l2 = p.facets[1].offset;
    const double l3 = p.facets[2].offset, l4 = p.facets[3].offset;
    QuadratureScheme q;
    q.region = p;
    q.order = n;
    auto g = gauss_legendre(n);
    // Region A: between the slanted lower facet l1 and the top facet l4.
    add_region(q, g, -l2, l3 - l1, [&](double x1) { return -l1 - x1; },
               [&](double x1) { return l4 - x1; });
    // Region B: lower bound becomes the horizontal facet l3.
    add_region(q, g, l3 - l1, l4 + l3, [&](double) { return -l3; },
               [&](double x1) { return l4 - x1; });
    return q;
}

QuadratureScheme scheme_pentagon(const Polytope& p, int n) {
    if (p.kind != PolytopeKind::Pentagon)
        throw ParameterDomainError("scheme_pentagon requires a pentagon");
    const double l1 = p.facets[0].offset, l2 = p.facets[1].offset;
    const double l3 = p.facets[2].offset, l4 = p.facets[3].offset;
    const double l5 = p.facets[4].offset;
    QuadratureScheme q;
    q.region = p;
    q.order = n;
    auto g = gauss_legendre(n);
    // Region A: rectangle where the corner cut l5 is inactive.
    add_region(q, g, -l1, l5 - l4, [&](double) { return -l2; },
               [&](double) { return l4; });
    // Region B: upper bound is the cut facet l5.
    add_region(q, g, l5 - l4, l3, [&](double) { return -l2; },
               [&](double x1) { return l5 - x1; });
    return q;
}

QuadratureScheme scheme_simplex(const Polytope& p, int n) {
    if (p.kind != PolytopeKind::Simplex)
        throw ParameterDomainError("scheme_simplex requires the simplex fixture");
    const double l1 = p.facets[0].offset, l2 = p.facets[1].offset;
    const double l3 = p.facets[2].offset;
    QuadratureScheme q;
    q.region = p;
    q.order = n;
    auto g = gauss_legendre(n);
    add_region(q, g, -l1, l3 + l2, [&](double) { return -l2; },
               [&](double x1) { return l3 - x1; });
    return q;
}

QuadratureScheme scheme_for(const Polytope& p, int n) {
    switch (p.kind) {
        case PolytopeKind::Trapezium: return scheme_trapezium(p, n);
        case PolytopeKind::Pentagon: return scheme_pentagon(p, n);
        case PolytopeKind::Simplex: return scheme_simplex(p, n);
    }
    throw ParameterDomainError("unknown polytope kind");
}

QuadratureScheme scheme_shrunken(const Polytope& p, double delta, int n) {
    return scheme_for(shrink(p, delta), n);
}

}  // namespace toric
