#pragma once

#include "pnn/predicates.h"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pnn {

enum class Containment { Outside = -1, Boundary = 0, Inside = 1 };

/// Counterclockwise convex polygon.  Canonical form: no duplicate vertices,
/// no three consecutive collinear vertices.  Degenerate sizes 1 (point) and
/// 2 (segment) are legal; empty-sample hull certificates use them.
struct ConvexPolygon {
    std::vector<ExactPoint> v;

    std::size_t size() const { return v.size(); }
    std::span<const ExactPoint> ring() const { return v; }
};

struct Ray {
    ExactPoint origin;
    ExactPoint through;  // origin != through
};

/// Affine function c0 + cx*x + cy*y; the halfplane keeps value >= 0.
struct Halfplane {
    Coordinate c0, cx, cy;

    /// Points at least as close to s as to t (the s side of the bisector).
    static Halfplane bisector(const ExactPoint& s, const ExactPoint& t);
    /// Points on or to the left of the directed line a -> b.
    static Halfplane left_of(const ExactPoint& a, const ExactPoint& b);

    Coordinate value(const ExactPoint& p) const { return c0 + cx * p.x + cy * p.y; }
    /// Sign of value(p); counted as an orientation test.
    int side(const ExactPoint& p) const;
};

/// Canonicalize a ccw weakly-convex ring (drops duplicates and flat
/// vertices; collapses fully collinear rings to a segment or point).
ConvexPolygon make_polygon(std::vector<ExactPoint> ring);

ConvexPolygon convex_hull(std::span<const ExactPoint> pts);

/// Exact containment, O(log n) orientation tests via fan binary search.
Containment point_in_convex(std::span<const ExactPoint> poly, const ExactPoint& q);
inline Containment point_in_convex(const ConvexPolygon& p, const ExactPoint& q) {
    return point_in_convex(p.ring(), q);
}

/// Index of the boundary edge (v[i] -> v[i+1]) crossed by r, whose origin
/// must be strictly inside.  A ray exactly through vertex v[i] reports edge
/// i, the edge counterclockwise of that vertex.  O(log n) via binary search
/// on vertex directions.
std::size_t ray_exit_edge(std::span<const ExactPoint> poly, const Ray& r);
inline std::size_t ray_exit_edge(const ConvexPolygon& p, const Ray& r) {
    return ray_exit_edge(p.ring(), r);
}

/// Sutherland-Hodgman clip of a convex ring; raw (uncanonicalized) result.
std::vector<ExactPoint> clip_halfplane(std::span<const ExactPoint> ring, const Halfplane& h);

/// Intersection of two convex polygons (either may be degenerate).
/// Nullopt when the intersection is empty.
std::optional<ConvexPolygon> intersect_convex(std::span<const ExactPoint> a,
                                              std::span<const ExactPoint> b);

/// Parameter interval [t0,t1] of segment a+t*(b-a) inside a convex polygon
/// (closed).  Nullopt when the segment misses the polygon.
std::optional<std::pair<Coordinate, Coordinate>> segment_in_convex(
    std::span<const ExactPoint> poly, const ExactPoint& a, const ExactPoint& b);

/// Signed area times two; >0 for ccw rings of positive area.
Coordinate twice_signed_area(std::span<const ExactPoint> ring);

bool on_segment(const ExactPoint& a, const ExactPoint& b, const ExactPoint& q);

}  // namespace pnn
