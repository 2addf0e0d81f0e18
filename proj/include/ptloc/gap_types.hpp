#pragma once

#include "ptloc/chain.hpp"
#include "ptloc/tiling.hpp"

namespace ptloc {

// A vertical strip owned by a tree node. The root strip is a plain closed
// x interval so that exactly the two full-width filler triangles span it;
// every other strip is a half-open interval in the sheared (lex) order.
struct SlabSpec {
    Slab s;
    bool plain = false;
};

inline bool spec_contains(const SlabSpec& sp, const Point& q) {
    if (sp.plain) return sp.s.left.x <= q.x && q.x <= sp.s.right.x;
    return sp.s.contains(q);
}

inline bool spec_tri_spans(const SlabSpec& sp, const Triangle& t) {
    if (sp.plain)
        return lex_min3(t).x <= sp.s.left.x && lex_max3(t).x >= sp.s.right.x;
    return triangle_spans_slab(t, sp.s);
}

inline bool spec_tri_intersects(const SlabSpec& sp, const Triangle& t) {
    if (sp.plain)
        return lex_min3(t).x <= sp.s.right.x && lex_max3(t).x >= sp.s.left.x;
    return triangle_intersects_slab(t, sp.s);
}

// One gap of a strip, in the flat form used to compare a tree node against
// the reference derivation. A free gap is a single triangle spanning the
// strip; a blocked gap is the region between two consecutive spanning
// triangles, listing the triangles that meet the strip inside it. Boundary
// chains are the full triangle chains of the bounding triangles, so equal
// gaps compare equal pointwise.
struct GapDesc {
    bool blocked = false;
    Chain up, low;
    std::vector<TriId> members;  // sorted ascending

    bool operator==(const GapDesc& o) const {
        return blocked == o.blocked && up == o.up && low == o.low &&
               members == o.members;
    }
};

// Gaps grouped into maximal contiguous subsequences (runs), top to bottom.
// Runs break exactly where a triangle spanning the parent strip intervenes.
using GapRun = std::vector<GapDesc>;
using GapRuns = std::vector<GapRun>;

std::string gap_brief(const GapDesc& g);
std::string gap_runs_brief(const GapRuns& runs);

// Relation of two chains over the strip. Sheared strips defer to the chain
// machinery; the plain root strip samples midpoints between the vertex
// abscissae of both chains, which pins down the relation of two chains that
// never cross (and gap boundaries never do).
ChainRel spec_chain_relation(const Chain& c1, const Chain& c2, const SlabSpec& sp);

// True if spanning triangle a lies vertically above spanning triangle b
// inside the strip. Compares upper chains first; equal upper chains (the
// triangles share their top boundary within the strip) are broken by the
// lower chains.
bool spec_band_above(const TriangleTiling& t, TriId a, TriId b, const SlabSpec& sp);

// A sample point inside the presence region of a triangle that meets the
// strip without spanning it, used to assign the triangle to the gap holding
// it. A triangle whose plain clip collapses onto a wall line still has real
// presence in the sheared strip when its wall contact has positive length;
// such a witness is the midpoint of the clamped contact interval and records
// which side of the wall the triangle's body hangs on.
enum class WitnessKind {
    Interior,   // positive-area clip, witness at its centroid
    WallAbove,  // body lex-before the wall; rides above chains through the witness
    WallBelow,  // body lex-after the wall; rides below chains through the witness
    Touch,      // single-point contact, no presence in the strip
};

struct GapWitness {
    Point p;
    WitnessKind kind;
    bool zero_measure() const { return kind == WitnessKind::Touch; }
};
GapWitness member_witness(const TriangleTiling& t, TriId id, const SlabSpec& sp);

// Vertical position of a member's body relative to a chain crossing its
// strip. A witness landing exactly on a chain can only happen along a wall,
// where the body's side of the wall decides the sheared order.
ChainPos witness_position(const Chain& c, const GapWitness& w);

// Splice the strip's wall keys onto a chain that starts or ends strictly
// inside the strip at a bounding box wall, restoring lex coverage of the
// strip without moving any point of the chain. The region bounded by such a
// chain continues along the wall.
Chain chain_extended_to_slab(const Chain& c, const Slab& s);

}  // namespace ptloc
