#include "toric/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "toric/errors.hpp"

namespace toric {

namespace {

constexpr double kVertexTol = 1e-12;

void validate(const Polytope& p) {
    auto vs = vertices(p);  // throws if degenerate / redundant facet
    if (volume(p) <= 0.0) throw DegeneratePolytopeError("polytope has non-positive area");
    (void)vs;
}

}  // namespace

Polytope make_trapezium(double a) {
    if (!(a > -1.0 && a < 2.0))
        throw ParameterDomainError("trapezium parameter a must lie in (-1, 2)");
    Polytope p;
    p.kind = PolytopeKind::Trapezium;
    p.class_param = a;
    p.facets = {
        {{1.0, 1.0}, a},
        {{1.0, 0.0}, 1.0},
        {{0.0, 1.0}, 1.0},
        {{-1.0, -1.0}, 1.0},
    };
    validate(p);
    return p;
}

Polytope make_pentagon(double a) {
    if (!(a > 1.0))
        throw ParameterDomainError("pentagon parameter a must be > 1");
    Polytope p;
    p.kind = PolytopeKind::Pentagon;
    p.class_param = a;
    p.facets = {
        {{1.0, 0.0}, 1.0},
        {{0.0, 1.0}, 1.0},
        {{-1.0, 0.0}, a - 1.0},
        {{0.0, -1.0}, a - 1.0},
        {{-1.0, -1.0}, a - 1.0},
    };
    validate(p);
    return p;
}

Polytope make_simplex() {
    Polytope p;
    p.kind = PolytopeKind::Simplex;
    p.class_param = 1.0;
    p.facets = {
        {{1.0, 0.0}, 1.0},
        {{0.0, 1.0}, 1.0},
        {{-1.0, -1.0}, 1.0},
    };
    validate(p);
    return p;
}

Polytope shrink(const Polytope& p, double delta) {
    if (delta < 0.0) throw ParameterDomainError("shrink delta must be >= 0");
    Polytope q = p;
    for (auto& f : q.facets) f.offset -= delta;
    validate(q);  // throws DegeneratePolytopeError if interior vanished
    return q;
}

bool contains(const Polytope& p, const Vec2& x, double strict_margin) {
    for (const auto& f : p.facets)
        if (!(f.value(x) > strict_margin)) return false;
    return true;
}

std::vector<Vec2> vertices(const Polytope& p) {
    const std::size_t n = p.facets.size();
    std::vector<Vec2> verts;
    std::vector<int> facet_hits(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& a = p.facets[i];
            const auto& b = p.facets[j];
            double det = a.normal[0] * b.normal[1] - a.normal[1] * b.normal[0];
            if (std::abs(det) < 1e-14) continue;  // parallel lines
            Vec2 v{(-a.offset * b.normal[1] + b.offset * a.normal[1]) / det,
                   (-a.normal[0] * b.offset + b.normal[0] * a.offset) / det};
            bool inside = true;
            for (const auto& f : p.facets)
                if (f.value(v) < -kVertexTol) { inside = false; break; }
            if (!inside) continue;
            bool dup = false;
            for (const auto& w : verts)
                if (std::abs(w[0] - v[0]) < 1e-9 && std::abs(w[1] - v[1]) < 1e-9) { dup = true; break; }
            if (!dup) {
                verts.push_back(v);
                facet_hits[i]++;
                facet_hits[j]++;
            } else {
                facet_hits[i]++;
                facet_hits[j]++;
            }
        }
    }
    if (verts.size() < 3)
        throw DegeneratePolytopeError("polytope interior is empty or degenerate");
    for (std::size_t i = 0; i < n; ++i)
        if (facet_hits[i] == 0)
            throw DegeneratePolytopeError("redundant facet: touches no vertex");

    Vec2 c{0.0, 0.0};
    for (const auto& v : verts) { c[0] += v[0]; c[1] += v[1]; }
    c[0] /= double(verts.size());
    c[1] /= double(verts.size());
    std::sort(verts.begin(), verts.end(), [&](const Vec2& u, const Vec2& v) {
        return std::atan2(u[1] - c[1], u[0] - c[0]) < std::atan2(v[1] - c[1], v[0] - c[0]);
    });
    return verts;
}

double volume(const Polytope& p) {
    auto vs = vertices(p);
    double s = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& u = vs[i];
        const auto& v = vs[(i + 1) % vs.size()];
        s += u[0] * v[1] - v[0] * u[1];
    }
    return 0.5 * s;
}

std::array<double, 4> bounding_box(const Polytope& p) {
    auto vs = vertices(p);
    std::array<double, 4> bb{vs[0][0], vs[0][1], vs[0][0], vs[0][1]};
    for (const auto& v : vs) {
        bb[0] = std::min(bb[0], v[0]);
        bb[1] = std::min(bb[1], v[1]);
        bb[2] = std::max(bb[2], v[0]);
        bb[3] = std::max(bb[3], v[1]);
    }
    return bb;
}

}  // namespace toric
