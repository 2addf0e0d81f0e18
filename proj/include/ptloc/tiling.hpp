#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ptloc/chain.hpp"
#include "ptloc/geometry.hpp"
#include "ptloc/rational.hpp"

namespace ptloc {

using VId = int;
using TriId = int;
inline constexpr int kNone = -1;

struct TilingVertex {
    Point p;
    bool alive = true;
};

struct TilingTri {
    std::array<VId, 3> v{kNone, kNone, kNone};
    bool alive = true;
    bool exterior = false;  // part of the box filler, never removed by updates
    int face = kNone;       // subdivision face label for interior triangles
};

// Undirected edge key; always stored with a < b.
struct EdgeKey {
    VId a, b;
    EdgeKey(VId x, VId y) : a(x < y ? x : y), b(x < y ? y : x) {}
    bool operator<(const EdgeKey& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
    bool operator==(const EdgeKey& o) const { return a == o.a && b == o.b; }
};

// A maximal straight stretch of the convex boundary between two strict
// corners.  The exterior filler puts a single triangle against the whole
// stretch, while the interior side may subdivide it arbitrarily, so the
// two sides need this explicit bridge instead of the plain edge map.
struct BoundaryArc {
    TriId filler = kNone;      // exterior triangle whose base covers the arc
    VId ca = kNone, cb = kNone; // strict corner endpoints
    std::vector<VId> run;      // current subdivision, endpoints included, in order
};

// One adjacency record: neighbouring triangle plus the shared segment.
struct TriNeighbor {
    TriId tri;
    Point a, b;  // shared segment, lex order a < b
};

struct TriangulationUpdate {
    std::vector<TriId> removed;
    struct NewTri {
        std::array<Point, 3> p;
        int face = kNone;
    };
    std::vector<NewTri> added;

    size_t size() const { return removed.size() + added.size(); }
};

class TriangleTiling {
  public:
    // Builds the full tiling of `box`: the given interior triangulation of a
    // convex region plus the exterior filler. `tris` index into `pts`;
    // `boundary` lists indices of the convex boundary cycle in ccw order
    // (collinear run vertices included).
    static TriangleTiling build(const Box& box, const std::vector<Point>& pts,
                                const std::vector<std::array<int, 3>>& tris,
                                const std::vector<int>& faces,
                                const std::vector<int>& boundary);

    const Box& box() const { return box_; }
    size_t vertex_rows() const { return verts_.size(); }
    size_t tri_rows() const { return tris_.size(); }
    const TilingVertex& vertex(VId v) const { return verts_.at(v); }
    const TilingTri& tri(TriId t) const { return tris_.at(t); }
    int interior_count() const { return interior_count_; }
    int alive_count() const { return alive_count_; }

    Point pt(VId v) const { return verts_.at(v).p; }
    Triangle triangle_of(TriId t) const;
    std::array<Point, 3> tri_points(TriId t) const;

    std::vector<TriId> alive_tris() const;
    std::vector<TriId> alive_interior_tris() const;
    std::vector<VId> alive_vertices() const;
    const std::vector<VId>& boundary_cycle() const { return boundary_; }
    const std::vector<BoundaryArc>& arcs() const { return arcs_; }

    std::optional<VId> find_vertex(const Point& p) const;
    const std::set<TriId>& incident(VId v) const { return incident_.at(v); }

    // All neighbours of t with the shared segments, including the
    // nonconforming boundary-arc contacts (segment = the overlap).
    std::vector<TriNeighbor> neighbors_of(TriId t) const;

    // Applies an update: `removed` interior triangles are replaced by
    // `added`, which must tile exactly the same region. New vertices are
    // allowed in the region's interior and on the convex boundary (splitting
    // a straight run), nowhere else. Throws validation_error on a malformed
    // update, never mutating on failure.
    void apply_update(const TriangulationUpdate& u);

    // Full structural audit; throws invariant_error on any breach.
    void check() const;

    // Exposed for construction code: adds a vertex, reusing an existing id
    // for a repeated point.
    VId intern_vertex(const Point& p);

  private:
    friend struct ExteriorBuilder;
    friend void build_exterior_filler(TriangleTiling& T);

    TriId push_tri(VId a, VId b, VId c, bool exterior, int face);
    void link_edges(TriId t);
    void unlink_edges(TriId t);
    std::optional<int> arc_of_edge(VId a, VId b) const;
    bool on_boundary_segment(int arc, const Point& p) const;

    Box box_{};
    std::vector<TilingVertex> verts_;
    std::vector<TilingTri> tris_;
    std::map<Point, VId, LexLess> vert_index_;
    std::map<EdgeKey, std::array<TriId, 2>> edge_map_;
    std::vector<std::set<TriId>> incident_;
    std::vector<VId> boundary_;  // current ∂ cycle, ccw, subdivided
    std::vector<BoundaryArc> arcs_;
    std::map<EdgeKey, int> boundary_edge_arc_;
    std::map<EdgeKey, int> arc_corner_edge_;
    int interior_count_ = 0;
    int alive_count_ = 0;
};

// Tiles box ∖ hull with the ring-layered filler; called once during build.
void build_exterior_filler(TriangleTiling& T);

// Balanced triangulation of a convex polygon (collinear runs allowed,
// fully collinear input rejected). Output triangles index into `poly`.
std::vector<std::array<int, 3>> dk_triangulate(const std::vector<Point>& poly);

// Number of output triangles a segment (a,b) properly intersects; used by
// the stabbing-bound tests.
int count_segment_crossings(const std::vector<Point>& poly,
                            const std::vector<std::array<int, 3>>& tris,
                            const Point& a, const Point& b);

// Topological order of `members` (triangle ids) by the above/below relation
// inside the open vertical strip (x0, x1): components listed top to bottom.
// A cycle means the tiling is corrupt and raises invariant_error.
std::vector<std::vector<TriId>> topological_components(
    const TriangleTiling& tiling, const std::vector<TriId>& members,
    const Rat& x0, const Rat& x1);

// Update compilers used by the harness and tests.
TriangulationUpdate make_flip(const TriangleTiling& t, TriId t1, TriId t2);
TriangulationUpdate make_insert_vertex(const TriangleTiling& t, TriId in,
                                       const Point& p);
TriangulationUpdate make_remove_vertex(const TriangleTiling& t, const Point& p);

}  // namespace ptloc
