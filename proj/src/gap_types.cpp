#include "ptloc/gap_types.hpp"

#include <algorithm>

namespace ptloc {

namespace {

// Crossing height of a chain with the plain vertical line at x, where x is
// strictly inside some non-vertical edge. Used only for the root strip, whose
// walls are plain vertical lines instead of sheared ones.
Rat plain_cross(const Chain& c, const Rat& x) {
    for (size_t i = 0; i + 1 < c.pts.size(); ++i) {
        const Point& a = c.pts[i];
        const Point& b = c.pts[i + 1];
        if (a.x < x && x < b.x) return segment_at_x(a, b, x).y;
    }
    PTLOC_CHECK(false, "no edge of the chain straddles the sample abscissa");
    return Rat(0);
}

}  // namespace

Chain chain_extended_to_slab(const Chain& c, const Slab& s) {
    bool pre = lex_less(s.left, c.front());
    bool post = lex_less(c.back(), s.right);
    if (!pre && !post) return c;
    std::vector<Point> pts;
    if (pre) {
        PTLOC_CHECK(c.front().x == s.left.x,
                    "chain falls short of the strip away from a wall");
        pts.push_back(s.left);
    }
    pts.insert(pts.end(), c.pts.begin(), c.pts.end());
    if (post) {
        PTLOC_CHECK(c.back().x == s.right.x,
                    "chain falls short of the strip away from a wall");
        pts.push_back(s.right);
    }
    return Chain(std::move(pts));
}

ChainRel spec_chain_relation(const Chain& c1, const Chain& c2, const SlabSpec& sp) {
    if (!sp.plain)
        return chain_relation(chain_extended_to_slab(c1, sp.s),
                              chain_extended_to_slab(c2, sp.s), sp.s);
    std::vector<Rat> xs{sp.s.left.x, sp.s.right.x};
    for (const Chain* c : {&c1, &c2})
        for (const Point& p : c->pts)
            if (sp.s.left.x < p.x && p.x < sp.s.right.x) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    bool above = false, below = false, touch = false;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        Rat mid = (xs[i] + xs[i + 1]) / 2;
        int s = sgn(plain_cross(c1, mid) - plain_cross(c2, mid));
        if (s > 0) above = true;
        else if (s < 0) below = true;
        else touch = true;
    }
    if (above && below) return ChainRel::Crossing;
    if (above) return touch ? ChainRel::AboveTouch : ChainRel::StrictAbove;
    if (below) return touch ? ChainRel::BelowTouch : ChainRel::StrictBelow;
    return ChainRel::Equal;
}

bool spec_band_above(const TriangleTiling& t, TriId a, TriId b, const SlabSpec& sp) {
    Triangle ta = t.triangle_of(a), tb = t.triangle_of(b);
    ChainRel r = spec_chain_relation(upper_chain(ta), upper_chain(tb), sp);
    if (r == ChainRel::Equal)
        r = spec_chain_relation(lower_chain(ta), lower_chain(tb), sp);
    PTLOC_CHECK(r != ChainRel::Crossing, "spanning triangles cross inside the strip");
    PTLOC_CHECK(r != ChainRel::Equal, "distinct spanning triangles with equal chains");
    return rel_somewhere_strictly_above(r);
}

GapWitness member_witness(const TriangleTiling& t, TriId id, const SlabSpec& sp) {
    Polygon tri = triangle_poly(t.triangle_of(id));
    const Rat& x0 = sp.s.left.x;
    const Rat& x1 = sp.s.right.x;
    Polygon clip = clip_to_xrange(tri, x0, x1);
    PTLOC_CHECK(!clip.empty(), "member triangle misses the strip's x window");
    if (polygon_area2(clip) > 0)
        return {polygon_centroid(clip), WitnessKind::Interior};

    Rat c = clip.front().x, ylo = clip.front().y, yhi = clip.front().y;
    for (const Point& p : clip) {
        PTLOC_CHECK(p.x == c, "zero-area presence not on a single wall line");
        ylo = rat_min(ylo, p.y);
        yhi = rat_max(yhi, p.y);
    }
    if (!sp.plain) {
        if (c == sp.s.left.x) ylo = rat_max(ylo, sp.s.left.y);
        if (c == sp.s.right.x) yhi = rat_min(yhi, sp.s.right.y);
    }
    PTLOC_CHECK(ylo <= yhi, "member triangle has empty presence in the strip");
    WitnessKind kind = WitnessKind::Touch;
    if (!sp.plain && ylo < yhi) {
        // Positive wall contact: the triangle occupies a real sliver of the
        // sheared strip. Which side of the wall its body lies on is also its
        // side in the strip's vertical order.
        bool all_left = true, all_right = true;
        for (const Point& p : tri) {
            if (p.x > c) all_left = false;
            if (p.x < c) all_right = false;
        }
        PTLOC_CHECK(all_left || all_right,
                    "wall sliver from a triangle crossing the wall");
        kind = all_left ? WitnessKind::WallAbove : WitnessKind::WallBelow;
    }
    return {Point{c, (ylo + yhi) / 2}, kind};
}

ChainPos witness_position(const Chain& c, const GapWitness& w) {
    ChainPos p = chain_position_plain(c, w.p);
    if (p != ChainPos::On) return p;
    if (w.kind == WitnessKind::WallAbove) return ChainPos::Above;
    if (w.kind == WitnessKind::WallBelow) return ChainPos::Below;
    return p;
}

}  // namespace ptloc
