#pragma once

#include "ptloc/slab_tree.hpp"

namespace ptloc {

// One region of update material inside a strip: either a single new triangle
// that meets the open strip without spanning the parent strip, or a maximal
// stack of parent-spanning new triangles glued along boundary chains that
// coincide over this strip. Stacks whose boundary carries no vertex strictly
// inside the strip are dropped before they reach a component.
struct UpdRegion {
    bool illegal = false;     // spans the parent strip (run-break material)
    std::vector<TriId> tris;  // top to bottom for merged stacks
    Chain up, low;
};

// Connected component of update regions inside one strip. Regions connect
// through triangle sides that cross the open strip, so one triangulation
// update can split into several components per strip. `spans` lists the
// strip-spanning regions top to bottom; `buckets[i]` holds the non-spanning
// regions between spans i-1 and i (buckets.size() == spans.size() + 1).
struct UpdComponent {
    std::vector<UpdRegion> spans;
    std::vector<std::vector<UpdRegion>> buckets;
    bool wall_to_wall = false;  // touches both bounding lines of the strip
    std::vector<TriId> tris;    // all constituent triangles
};

struct UpdDag {
    std::vector<UpdComponent> comps;  // wall-to-wall first, top to bottom
    long region_count = 0;
};

// Classifies `candidates` against the strip straight from the definition:
// keeps triangles meeting the open strip, merges parent-spanning ones into
// stacks, prunes stacks without a boundary vertex strictly inside, connects
// the survivors into components and orders the wall-to-wall ones top to
// bottom. Passing a node's own region triangles restricted to a child strip
// gives the same result as passing the full update set, which the tests
// exercise; the tree update uses the restricted form.
UpdDag make_update_dag(const TriangleTiling& t,
                       const std::vector<TriId>& candidates,
                       const SlabSpec& spec, const SlabSpec* parent_spec);

}  // namespace ptloc
