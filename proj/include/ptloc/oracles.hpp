#pragma once

#include "ptloc/distribution.hpp"
#include "ptloc/gap_types.hpp"

namespace ptloc {

// Reference point location by exhaustive scan: returns the unique alive
// triangle containing the perturbed query q* = q + (delta^2, -delta). The
// query must lie in the canonical domain [x0, x1) x (y0, y1] of the bounding
// box; outside it q* escapes every triangle.
TriId brute_locate(const TriangleTiling& t, const Point& q);

// Gap runs of a strip computed straight from the definition, independent of
// any tree bookkeeping. Triangles spanning the strip or any of its ancestor
// strips cut the strip into regions; every other intersecting triangle is
// bucketed between the two cutters that sandwich it. Cutters spanning an
// ancestor break the run list, cutters spanning only this strip become free
// gaps, and the regions in between become blocked gaps. `ancestors` lists the
// strips above this one, root first; pass an empty list for the root strip.
GapRuns brute_gaps(const TriangleTiling& t, const SlabSpec& node,
                   const std::vector<SlabSpec>& ancestors);

// Index of the site closest to q in squared euclidean distance; lowest index
// wins ties. The site list must be nonempty.
size_t brute_nearest(const std::vector<Point>& sites, const Point& q);

// Entropy in bits of the cell of a random query, the comparison lower bound
// any location structure is measured against. The distribution must be
// supported inside the tiling's bounding box.
double entropy_lower_bound(const TriangleTiling& t, const QueryDistribution& dist);

}  // namespace ptloc
