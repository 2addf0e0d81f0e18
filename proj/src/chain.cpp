#include "ptloc/chain.hpp"

namespace ptloc {

Chain::Chain(std::vector<Point> p) : pts(std::move(p)) {
    PTLOC_VALIDATE(pts.size() >= 2, "chain needs at least two points");
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        PTLOC_VALIDATE(lex_less(pts[i], pts[i + 1]), "chain points must be lex increasing");
}

Chain::Chain(const Point& a, const Point& b) {
    PTLOC_VALIDATE(a != b, "degenerate chain");
    if (lex_less(a, b)) {
        pts = {a, b};
    } else {
        pts = {b, a};
    }
}

size_t Chain::corner_edges() const {
    size_t n = 1;
    for (size_t i = 1; i + 1 < pts.size(); ++i) {
        if (orient(pts[i - 1], pts[i], pts[i + 1]) != 0) ++n;
    }
    return n;
}

Chain upper_chain(const Triangle& t) {
    std::array<Point, 3> v = t.p;
    std::sort(v.begin(), v.end(), LexLess{});
    int o = orient(v[0], v[2], v[1]);
    PTLOC_CHECK(o != 0, "degenerate triangle has no chains");
    if (o > 0) return Chain(std::vector<Point>{v[0], v[1], v[2]});
    return Chain(v[0], v[2]);
}

Chain lower_chain(const Triangle& t) {
    std::array<Point, 3> v = t.p;
    std::sort(v.begin(), v.end(), LexLess{});
    int o = orient(v[0], v[2], v[1]);
    PTLOC_CHECK(o != 0, "degenerate triangle has no chains");
    if (o < 0) return Chain(std::vector<Point>{v[0], v[1], v[2]});
    return Chain(v[0], v[2]);
}

KeyCross chain_cross_at(const Chain& c, const Point& k) {
    PTLOC_CHECK(c.covers(k), "chain does not cover key");
    // Lex order is the order of sheared abscissae, so the edge the sheared
    // line crosses is the one bracketing k lexicographically.
    size_t i = 0;
    while (i + 2 < c.pts.size() && lex_leq(c.pts[i + 1], k)) ++i;
    const Point& a = c.pts[i];
    const Point& b = c.pts[i + 1];
    if (k == a) return {a.y, true, a, b};
    if (k == b) return {b.y, true, a, b};
    if (a.x == b.x) {
        // Vertical edge: the sheared line through k meets it exactly at
        // height k.y.
        return {k.y, true, a, b};
    }
    Point p = segment_at_x(a, b, k.x);
    return {p.y, p.y == k.y, a, b};
}

int slope_cmp(const Point& a1, const Point& b1, const Point& a2, const Point& b2) {
    Rat dx1 = b1.x - a1.x, dy1 = b1.y - a1.y;
    Rat dx2 = b2.x - a2.x, dy2 = b2.y - a2.y;
    bool v1 = dx1 == 0, v2 = dx2 == 0;
    if (v1 && v2) return 0;
    if (v1) return 1;
    if (v2) return -1;
    return cmp(dy1 * dx2, dy2 * dx1);
}

int chain_cmp_at(const Chain& c1, const Chain& c2, const Point& k) {
    KeyCross x1 = chain_cross_at(c1, k);
    KeyCross x2 = chain_cross_at(c2, k);
    int c = cmp(x1.y, x2.y);
    if (c != 0) return c;
    if (x1.at_key && x2.at_key && x1.y == k.y) return 0;
    // Same limit crossing point strictly off k: for a small positive shear the
    // order is decided by the governing slopes, reversed when the crossing
    // lies above the key point.
    int sc = slope_cmp(x1.ea, x1.eb, x2.ea, x2.eb);
    if (sc == 0) return 0;
    int side = cmp(k.y, x1.y);
    if (side == 0) return 0;
    return side > 0 ? sc : -sc;
}

ChainRel chain_relation(const Chain& c1, const Chain& c2, const Slab& s) {
    // Sample keys: both slab boundaries plus every chain vertex lex-strictly
    // inside. Between consecutive samples both chains are single edges, so
    // the sign of their difference cannot change there.
    std::vector<Point> keys{s.left};
    auto add_interior = [&](const Chain& c) {
        for (const Point& p : c.pts) {
            if (lex_less(s.left, p) && lex_less(p, s.right)) keys.push_back(p);
        }
    };
    add_interior(c1);
    add_interior(c2);
    if (lex_less(s.left, s.right)) keys.push_back(s.right);
    bool above = false, below = false, touch = false;
    for (const Point& k : keys) {
        // Raw crossing heights cannot separate chains fanning out of a pinch
        // vertex on a degenerate wall strip; the slope-aware comparison can.
        int c = chain_cmp_at(c1, c2, k);
        if (c > 0) above = true;
        else if (c < 0) below = true;
        else touch = true;
    }
    if (above && below) return ChainRel::Crossing;
    if (above) return touch ? ChainRel::AboveTouch : ChainRel::StrictAbove;
    if (below) return touch ? ChainRel::BelowTouch : ChainRel::StrictBelow;
    return ChainRel::Equal;
}

ChainPos chain_position_plain(const Chain& c, const Point& q) {
    KeyCross x = chain_cross_at(c, q);
    if (x.ea.x == x.eb.x && x.ea.x == q.x) {
        // Vertical governing edge through q's line.
        if (q.y >= x.ea.y && q.y <= x.eb.y) return ChainPos::On;
        return q.y > x.eb.y ? ChainPos::Above : ChainPos::Below;
    }
    int cy = cmp(q.y, x.y);
    if (cy == 0) return ChainPos::On;
    return cy > 0 ? ChainPos::Above : ChainPos::Below;
}

ChainPos chain_position_perturbed(const Chain& c, const Point& q) {
    PTLOC_CHECK(c.covers(q), "chain does not cover query");
    // The perturbed query moves lex-forward, so at a shared vertex the edge to
    // the right of q governs; lex bracketing with strict right end picks it.
    size_t i = 0;
    while (i + 2 < c.pts.size() && !lex_less(q, c.pts[i + 1])) ++i;
    int s = orient_perturbed(c.pts[i], c.pts[i + 1], q);
    return s > 0 ? ChainPos::Above : ChainPos::Below;
}

Rat area2_below_chain(const Polygon& poly, const Chain& c, const Rat& x0, const Rat& x1) {
    Rat total(0);
    if (x0 >= x1 || poly.size() < 3) return total;
    for (size_t i = 0; i + 1 < c.pts.size(); ++i) {
        const Point& a = c.pts[i];
        const Point& b = c.pts[i + 1];
        if (a.x == b.x) continue;
        Rat xa = rat_max(x0, a.x);
        Rat xb = rat_min(x1, b.x);
        if (xa >= xb) continue;
        Polygon strip = clip_to_xrange(poly, xa, xb);
        if (strip.size() < 3) continue;
        // Keep the part on or below the supporting line of edge a -> b.
        Polygon below = clip_halfplane(strip, b, a);
        total += polygon_area2(below);
    }
    return total;
}

Chain chain_concat(const Chain& a, const Chain& b) {
    PTLOC_CHECK(a.back() == b.front(), "chain_concat endpoints mismatch");
    std::vector<Point> pts = a.pts;
    pts.insert(pts.end(), b.pts.begin() + 1, b.pts.end());
    return Chain(std::move(pts));
}

}  // namespace ptloc
