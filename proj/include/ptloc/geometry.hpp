#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ptloc/rational.hpp"

namespace ptloc {

struct Point {
    Rat x, y;
    Point() : x(0), y(0) {}
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

// Lexicographic order (x first, then y). Vertical degeneracies are resolved
// everywhere through this order: conceptually each point p is ranked by the
// sheared abscissa x + eps*y for an infinitesimal eps > 0, so two points tie
// only if they coincide. The "vertical line through p" used for slab
// boundaries is the level curve of that sheared abscissa.
inline bool lex_less(const Point& a, const Point& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return a.y < b.y;
}
inline bool lex_leq(const Point& a, const Point& b) {
    return !lex_less(b, a);
}
inline const Point& lex_min(const Point& a, const Point& b) {
    return lex_less(b, a) ? b : a;
}
inline const Point& lex_max(const Point& a, const Point& b) {
    return lex_less(a, b) ? b : a;
}

struct LexLess {
    bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

// Twice the signed area of triangle (a, b, c); positive iff counterclockwise.
// Invariant under the shear x' = x + eps*y (the shear has determinant 1), so
// every orientation-based predicate agrees between the plain and the sheared
// picture.
inline Rat cross(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline int orient(const Point& a, const Point& b, const Point& c) {
    return sgn(cross(a, b, c));
}

// Orientation of the symbolically perturbed query q* = q + (delta^2, -delta)
// for an infinitesimal delta > 0, relative to the directed line a -> b.
// Never returns 0 for a != b, so a perturbed query lies strictly inside some
// cell of any subdivision. The same perturbation is used by the structures
// and by the reference oracles, so tie-breaking can never disagree.
inline int orient_perturbed(const Point& a, const Point& b, const Point& q) {
    int s = orient(a, b, q);
    if (s != 0) return s;
    // cross(a, b, q*) = cross(a, b, q) - delta*(b.x - a.x) - delta^2*(b.y - a.y)
    s = sgn(b.x - a.x);
    if (s != 0) return -s;
    return -sgn(b.y - a.y);
}

// Which side of the slab boundary through p does the perturbed query q* fall
// on. The boundary is half-open: a query exactly on the line through p
// belongs to the right slab, which is exactly where q* = q + (delta^2,-delta)
// lands (its sheared abscissa exceeds the one of p when q == p).
enum class Side { Left, Right };
inline Side side_of_line(const Point& q, const Point& p) {
    return lex_less(q, p) ? Side::Left : Side::Right;
}

struct Segment {
    Point a, b;
};

struct Triangle {
    std::array<Point, 3> p;
};

struct Box {
    Rat x0, y0, x1, y1;
    Point ll() const { return {x0, y0}; }
    Point lr() const { return {x1, y0}; }
    Point ul() const { return {x0, y1}; }
    Point ur() const { return {x1, y1}; }
    bool contains(const Point& q) const {
        return q.x >= x0 && q.x <= x1 && q.y >= y0 && q.y <= y1;
    }
};

// A slab is the set of points between two sheared vertical lines, identified
// by the points that define them. Membership is half-open: the left boundary
// belongs to the slab, the right one does not, except that the root slab of a
// tree closes its right boundary so the keys tile the bounding box exactly.
struct Slab {
    Point left, right;
    bool right_closed = false;
    bool contains(const Point& q) const {
        if (lex_less(q, left)) return false;
        if (lex_less(q, right)) return true;
        return right_closed && q == right;
    }
};

inline bool slab_is_degenerate(const Slab& s) { return s.left == s.right; }

// Lexicographic extremes of simple objects.
inline const Point& lex_min3(const Triangle& t) {
    return lex_min(lex_min(t.p[0], t.p[1]), t.p[2]);
}
inline const Point& lex_max3(const Triangle& t) {
    return lex_max(lex_max(t.p[0], t.p[1]), t.p[2]);
}

// An object intersects the open slab iff its lex range overlaps the open lex
// interval (left, right); it spans the slab iff its lex range covers the
// closed interval. With these rules an object touching a boundary line at a
// single point does not intersect the slab but may span a degenerate one.
inline bool lexrange_intersects_slab(const Point& lo, const Point& hi, const Slab& s) {
    return lex_less(s.left, hi) && lex_less(lo, s.right);
}
inline bool lexrange_spans_slab(const Point& lo, const Point& hi, const Slab& s) {
    return lex_leq(lo, s.left) && lex_leq(s.right, hi);
}
inline bool triangle_intersects_slab(const Triangle& t, const Slab& s) {
    return lexrange_intersects_slab(lex_min3(t), lex_max3(t), s);
}
inline bool triangle_spans_slab(const Triangle& t, const Slab& s) {
    return lexrange_spans_slab(lex_min3(t), lex_max3(t), s);
}
inline bool segment_intersects_slab(const Segment& e, const Slab& s) {
    return lexrange_intersects_slab(lex_min(e.a, e.b), lex_max(e.a, e.b), s);
}
inline bool segment_spans_slab(const Segment& e, const Slab& s) {
    return lexrange_spans_slab(lex_min(e.a, e.b), lex_max(e.a, e.b), s);
}

// Convex polygon utilities. Vertices are in counterclockwise order; an empty
// vector denotes an empty region. Degenerate (zero area) outputs are allowed.
using Polygon = std::vector<Point>;

Rat polygon_area2(const Polygon& poly);

// Clip a convex polygon against the halfplane {x <= c} or {x >= c}.
Polygon clip_left_of(const Polygon& poly, const Rat& c);
Polygon clip_right_of(const Polygon& poly, const Rat& c);

// Clip against the halfplane on the left of the directed line a -> b
// (keeps points with orient(a,b,p) >= 0).
Polygon clip_halfplane(const Polygon& poly, const Point& a, const Point& b);

// Probability mass computations treat a slab by plain x range only: the shear
// moves no mass across a vertical line, so clipping by x is exact for areas.
inline Polygon clip_to_xrange(const Polygon& poly, const Rat& x0, const Rat& x1) {
    return clip_left_of(clip_right_of(poly, x0), x1);
}

Polygon triangle_poly(const Triangle& t);

// Centroid of a polygon with nonzero area; centroid of the vertex set if the
// polygon is degenerate.
Point polygon_centroid(const Polygon& poly);

// Convex hull in counterclockwise order, collinear points dropped.
Polygon convex_hull(std::vector<Point> pts);

bool point_in_convex_polygon(const Polygon& poly, const Point& q);

// Do the closed segments intersect / does the open interior of segment e
// cross the open interior of the triangle?
bool segments_intersect(const Segment& a, const Segment& b);
bool segment_crosses_triangle_interior(const Segment& e, const Triangle& t);

// Intersection point of segment (a,b) with the vertical line x = c,
// requires a.x != b.x and c within the x range.
Point segment_at_x(const Point& a, const Point& b, const Rat& c);

}  // namespace ptloc
