#pragma once

#include <array>
#include <vector>

namespace toric {

using Vec2 = std::array<double, 2>;

// l(x) = nu . x + offset, one supporting halfplane {l >= 0} of the polytope.
struct AffineFunctional {
    Vec2 normal{};
    double offset = 0.0;

    double value(const Vec2& x) const {
        return normal[0] * x[0] + normal[1] * x[1] + offset;
    }
};

enum class PolytopeKind { Trapezium, Pentagon, Simplex };

// Convex moment polygon P = {x : l_r(x) >= 0 for all r}. Facet order is
// fixed at construction and is part of the file format, so it is never
// re-sorted.
struct Polytope {
    PolytopeKind kind = PolytopeKind::Simplex;
    double class_param = 0.0;  // cohomology parameter a
    std::vector<AffineFunctional> facets;
};

// Trapezium for CP^2 # CP^2bar: facets {a+x1+x2, 1+x1, 1+x2, 1-x1-x2},
// a in (-1, 2).
Polytope make_trapezium(double a);

// Pentagon for CP^2 # 2CP^2bar: facets {1+x1, 1+x2, a-1-x1, a-1-x2,
// a-1-x1-x2}, a > 1.
Polytope make_pentagon(double a);

// Reflexive simplex {1+x1, 1+x2, 1-x1-x2}; its canonical metric is
// Fubini-Study, used as a curvature oracle.
Polytope make_simplex();

// P_delta: every facet offset reduced by delta.
Polytope shrink(const Polytope& p, double delta);

// Exact polygon area (shoelace over the vertex cycle).
double volume(const Polytope& p);

// True iff l_r(x) > strict_margin for every facet.
bool contains(const Polytope& p, const Vec2& x, double strict_margin = 0.0);

// Vertices in counter-clockwise order, computed from pairwise facet-line
// intersections and validated against all inequalities.
std::vector<Vec2> vertices(const Polytope& p);

// Axis-aligned bounding box {xmin, ymin, xmax, ymax}.
std::array<double, 4> bounding_box(const Polytope& p);

}  // namespace toric
