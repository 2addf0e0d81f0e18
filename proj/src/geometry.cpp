#include "ptloc/geometry.hpp"

#include <algorithm>

namespace ptloc {

Rat polygon_area2(const Polygon& poly) {
    Rat a(0);
    size_t n = poly.size();
    if (n < 3) return a;
    for (size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return a;
}

namespace {

// Generic convex clip against a predicate "inside" with an edge intersection
// callback producing the boundary crossing point.
template <class InsideF, class CrossF>
Polygon clip_generic(const Polygon& poly, InsideF inside, CrossF crossing) {
    Polygon out;
    size_t n = poly.size();
    if (n == 0) return out;
    for (size_t i = 0; i < n; ++i) {
        const Point& cur = poly[i];
        const Point& nxt = poly[(i + 1) % n];
        int ci = inside(cur);
        int ni = inside(nxt);
        if (ci >= 0) out.push_back(cur);
        if ((ci > 0 && ni < 0) || (ci < 0 && ni > 0)) out.push_back(crossing(cur, nxt));
    }
    // Drop immediate duplicates introduced by vertices on the clip line.
    Polygon dedup;
    for (const Point& p : out) {
        if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
    }
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    return dedup;
}

}  // namespace

Polygon clip_left_of(const Polygon& poly, const Rat& c) {
    return clip_generic(
        poly, [&](const Point& p) { return cmp(c, p.x); },
        [&](const Point& a, const Point& b) { return segment_at_x(a, b, c); });
}

Polygon clip_right_of(const Polygon& poly, const Rat& c) {
    return clip_generic(
        poly, [&](const Point& p) { return cmp(p.x, c); },
        [&](const Point& a, const Point& b) { return segment_at_x(a, b, c); });
}

Polygon clip_halfplane(const Polygon& poly, const Point& a, const Point& b) {
    return clip_generic(
        poly, [&](const Point& p) { return orient(a, b, p); },
        [&](const Point& u, const Point& v) {
            // Line a->b hits segment u->v; solve for the affine parameter.
            Rat du = cross(a, b, u);
            Rat dv = cross(a, b, v);
            Rat t = du / (du - dv);
            return Point(u.x + t * (v.x - u.x), u.y + t * (v.y - u.y));
        });
}

Polygon triangle_poly(const Triangle& t) {
    Polygon p{t.p[0], t.p[1], t.p[2]};
    if (polygon_area2(p) < 0) std::swap(p[1], p[2]);
    return p;
}

Point segment_at_x(const Point& a, const Point& b, const Rat& c) {
    Rat dx = b.x - a.x;
    PTLOC_CHECK(dx != 0, "segment_at_x on vertical segment");
    Rat t = (c - a.x) / dx;
    return Point(c, a.y + t * (b.y - a.y));
}

Point polygon_centroid(const Polygon& poly) {
    PTLOC_CHECK(!poly.empty(), "centroid of empty polygon");
    Rat a2 = polygon_area2(poly);
    if (a2 == 0) {
        Rat sx(0), sy(0);
        for (const Point& p : poly) {
            sx += p.x;
            sy += p.y;
        }
        Rat n(static_cast<long>(poly.size()));
        return Point(sx / n, sy / n);
    }
    Rat cx(0), cy(0);
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        Rat w = p.x * q.y - q.x * p.y;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    Rat denom = 3 * a2;
    return Point(cx / denom, cy / denom);
}

Polygon convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n < 3) return pts;
    Polygon h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool point_in_convex_polygon(const Polygon& poly, const Point& q) {
    size_t n = poly.size();
    if (n == 0) return false;
    if (n == 1) return poly[0] == q;
    if (n == 2) {
        if (orient(poly[0], poly[1], q) != 0) return false;
        return lex_leq(lex_min(poly[0], poly[1]), q) && lex_leq(q, lex_max(poly[0], poly[1]));
    }
    for (size_t i = 0; i < n; ++i) {
        if (orient(poly[i], poly[(i + 1) % n], q) < 0) return false;
    }
    return true;
}

namespace {
bool on_segment_closed(const Point& a, const Point& b, const Point& q) {
    if (orient(a, b, q) != 0) return false;
    return lex_leq(lex_min(a, b), q) && lex_leq(q, lex_max(a, b));
}
}  // namespace

bool segments_intersect(const Segment& s1, const Segment& s2) {
    int d1 = orient(s2.a, s2.b, s1.a);
    int d2 = orient(s2.a, s2.b, s1.b);
    int d3 = orient(s1.a, s1.b, s2.a);
    int d4 = orient(s1.a, s1.b, s2.b);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment_closed(s2.a, s2.b, s1.a)) return true;
    if (d2 == 0 && on_segment_closed(s2.a, s2.b, s1.b)) return true;
    if (d3 == 0 && on_segment_closed(s1.a, s1.b, s2.a)) return true;
    if (d4 == 0 && on_segment_closed(s1.a, s1.b, s2.b)) return true;
    return false;
}

bool segment_crosses_triangle_interior(const Segment& e, const Triangle& t) {
    // The open segment meets the open triangle iff the clipped piece of the
    // segment inside the closed triangle has positive length and is not
    // contained in the boundary.
    Polygon tri = triangle_poly(t);
    if (tri.size() < 3) return false;
    // Clip the segment by the three halfplanes.
    Point a = e.a, b = e.b;
    bool nonempty = true;
    for (size_t i = 0; i < 3 && nonempty; ++i) {
        const Point& u = tri[i];
        const Point& v = tri[(i + 1) % 3];
        int da = orient(u, v, a);
        int db = orient(u, v, b);
        if (da < 0 && db < 0) {
            nonempty = false;
        } else if (da < 0) {
            Rat ca = cross(u, v, a), cb = cross(u, v, b);
            Rat s = ca / (ca - cb);
            a = Point(a.x + s * (b.x - a.x), a.y + s * (b.y - a.y));
        } else if (db < 0) {
            Rat ca = cross(u, v, a), cb = cross(u, v, b);
            Rat s = ca / (ca - cb);
            b = Point(a.x + s * (b.x - a.x), a.y + s * (b.y - a.y));
        }
    }
    if (!nonempty || a == b) return false;
    // Midpoint of the clipped piece must be strictly interior.
    Point mid((a.x + b.x) / 2, (a.y + b.y) / 2);
    for (size_t i = 0; i < 3; ++i) {
        if (orient(tri[i], tri[(i + 1) % 3], mid) <= 0) return false;
    }
    return true;
}

}  // namespace ptloc
