#pragma once

#include <optional>

#include "ptloc/geometry.hpp"

namespace ptloc {

// An x-monotone polyline, stored as lex-increasing vertices with at least two
// points. Chains carry the full (unclipped) edge endpoints; restriction to a
// slab is always logical, so a chain object stays valid when the slab it is
// inspected in grows or shrinks.
struct Chain {
    std::vector<Point> pts;

    Chain() = default;
    explicit Chain(std::vector<Point> p);
    Chain(const Point& a, const Point& b);

    const Point& front() const { return pts.front(); }
    const Point& back() const { return pts.back(); }
    size_t edges() const { return pts.size() - 1; }
    bool covers(const Point& k) const {
        return lex_leq(front(), k) && lex_leq(k, back());
    }
    // Number of edges after merging maximal collinear runs.
    size_t corner_edges() const;
    bool operator==(const Chain& o) const { return pts == o.pts; }
};

// Chains of a nondegenerate triangle: the boundary path from the lex-min to
// the lex-max vertex along the top, respectively along the bottom.
Chain upper_chain(const Triangle& t);
Chain lower_chain(const Triangle& t);

// Crossing of the chain with the sheared vertical line through k. The limit
// crossing point is (k.x, y); at_key means the crossing is k itself. The
// governing edge is the one the crossing lies on for an infinitesimal shear,
// which by construction of the lex order is the edge found by lex bracketing.
struct KeyCross {
    Rat y;
    bool at_key;
    Point ea, eb;  // governing edge, lex-increasing
};

KeyCross chain_cross_at(const Chain& c, const Point& k);

// Slope comparison of lex-increasing edges; vertical edges sort as +infinity.
int slope_cmp(const Point& a1, const Point& b1, const Point& a2, const Point& b2);

// Order of two chains along the sheared line through k: negative if c1
// crosses strictly below c2, 0 if the crossings coincide for every small
// shear, positive if strictly above. Both chains must cover k.
int chain_cmp_at(const Chain& c1, const Chain& c2, const Point& k);

// Relation of two chains restricted to a slab both of them span. Crossing is
// never legitimate for gap boundaries and is reported so callers can raise.
enum class ChainRel { StrictAbove, AboveTouch, Equal, BelowTouch, StrictBelow, Crossing };

ChainRel chain_relation(const Chain& c1, const Chain& c2, const Slab& s);

inline bool rel_at_or_above(ChainRel r) {
    return r == ChainRel::StrictAbove || r == ChainRel::AboveTouch || r == ChainRel::Equal;
}
inline bool rel_somewhere_strictly_above(ChainRel r) {
    return r == ChainRel::StrictAbove || r == ChainRel::AboveTouch;
}
inline bool rel_somewhere_strictly_below(ChainRel r) {
    return r == ChainRel::StrictBelow || r == ChainRel::BelowTouch;
}

// Position of a point relative to a chain covering it.
enum class ChainPos { Above, On, Below };

// Plain geometric position (On possible).
ChainPos chain_position_plain(const Chain& c, const Point& q);

// Position of the perturbed query q* = q + (delta^2, -delta); never On.
ChainPos chain_position_perturbed(const Chain& c, const Point& q);

// Area of the part of convex polygon P that lies below the chain, restricted
// to x in [x0, x1]. The chain must cover that x range. Exact; used for the
// probability mass of gap regions.
Rat area2_below_chain(const Polygon& poly, const Chain& c, const Rat& x0, const Rat& x1);

// Concatenate chains that share an endpoint, merging duplicate joints.
Chain chain_concat(const Chain& a, const Chain& b);

}  // namespace ptloc
