#pragma once

#include <array>
#include <optional>

#include "ptloc/biased_tree.hpp"
#include "ptloc/distribution.hpp"
#include "ptloc/gap_types.hpp"

namespace ptloc {

using NodeId = int;

// One gap of a slab tree node. A free gap is a spanning triangle clipped to
// the strip; a blocked gap covers everything between two consecutive
// spanning triangles. `weight` is the exact query mass of the gap region.
// Blocked gaps of internal nodes address, per child slot, the run of the
// child that they induce.
struct SlabGap {
    bool blocked = false;
    Chain up, low;
    TriId tri = kNone;  // free gaps: the source triangle
    Rat weight;
    std::array<int, 3> child_run{{-1, -1, -1}};
};

// A maximal contiguous subsequence of a node's gap list with its biased
// search tree. Tree items are positions into `gaps`; item weights are gap
// weights raised to a 1/n floor so zero-mass gaps stay searchable. A run may
// be empty when the parent gap that induces it pinches to a chain over this
// strip; queries never reach an empty run.
struct SlabRun {
    std::vector<SlabGap> gaps;
    BiasedTree<int> tree;
};

struct SlabNode {
    SlabSpec spec;
    NodeId parent = kNone;
    int depth = 0;
    int line_lo = 0, line_hi = 0;  // bounding line indexes, inclusive
    std::array<NodeId, 3> child{{kNone, kNone, kNone}};  // left, middle, right
    std::vector<SlabRun> runs;  // one per blocked gap of the parent

    bool leaf() const {
        return child[0] == kNone && child[1] == kNone && child[2] == kNone;
    }
    size_t gap_count() const {
        size_t n = 0;
        for (const SlabRun& r : runs) n += r.gaps.size();
        return n;
    }
};

struct SlabTrace {
    long nodes_visited = 0;
    long comparisons = 0;  // gap records inspected across gap tree searches
    int level = 0;         // depth of the node where the walk ended
    bool backup_needed = false;
};

// Accounting for the incremental-versus-rebuild decision. An update of size
// k (triangles removed plus added) folds into the tree in place unless k
// exceeds half the current triangle count or the sizes accumulated since
// the last build exceed `fraction` times the triangle count at that build;
// either way the tree is rebuilt from scratch over a fresh line set.
struct RebuildPolicy {
    Rat fraction = Rat(1) / Rat(4);
    long accumulated = 0;
    long built_tris = 0;  // alive triangle count at the last build
};

struct UpdateStats {
    bool rebuilt = false;
    long update_size = 0;
    long touched_nodes = 0;       // nodes whose strip meets the update region
    long region_count = 0;        // legal + illegal regions over all of them
    long modify_components = 0;   // component iterations executed
    long invariant_checks = 0;    // instrumented prefix checks that ran
    // Runs whose search tree was rebuilt, as (node, run ordinal) pairs.
    std::vector<std::pair<NodeId, int>> updated_runs;
};

// Distribution-sensitive point location over a triangle tiling: a ternary
// tree of vertical strips whose left/right children each carry at most half
// of the parent's query mass, with per-node gap lists in biased search
// trees. A query walks root to leaf, locating the gap that contains it at
// every level; free gap means done, a blocked gap at a depth-capped leaf
// falls through to the caller's backup structure.
class SlabTree {
  public:
    // `lines` are the allowed strip boundaries: every alive tiling vertex
    // must appear among them exactly; extra vertex-free lines are allowed
    // (updates may land future vertices on them).
    static SlabTree build(const TriangleTiling& t, std::vector<Point> lines,
                          const QueryDistribution& d);

    // Locates the tiling triangle containing the perturbed query, or
    // nullopt when the walk ends in a blocked gap at a depth-capped leaf.
    // The query must lie in the canonical domain of the bounding box.
    std::optional<TriId> locate(const Point& q, SlabTrace* trace = nullptr) const;

    // Applies a triangulation update to the tiling (which must be the one
    // this tree was built over) and folds it into the tree: gap lists of
    // every strip the update region meets are re-spliced in place and child
    // runs are relinked, or the whole tree is rebuilt per `policy()`. Lines
    // stay fixed across in-place updates, so strips never move; new vertices
    // off the line set leave their strips searchable down to the depth where
    // a blocked leaf defers to the backup structure. With `instrument` set,
    // every component iteration of every splice re-derives the final gap
    // list from scratch and checks the spliced prefix against it.
    UpdateStats apply_update(TriangleTiling& t, const TriangulationUpdate& u,
                             bool instrument = false);

    RebuildPolicy& policy() { return policy_; }
    const RebuildPolicy& policy() const { return policy_; }
    bool updated_since_build() const { return updated_since_build_; }

    const SlabNode& node(NodeId id) const { return nodes_.at(id); }
    NodeId root() const { return 0; }
    NodeId node_count() const { return static_cast<NodeId>(nodes_.size()); }
    const TriangleTiling& tiling() const { return *tiling_; }
    const QueryDistribution& dist() const { return dist_; }
    const std::vector<Point>& lines() const { return lines_; }
    int depth_cap() const { return depth_cap_; }
    const Rat& weight_floor() const { return floor_; }

    // Walks every node in id order.
    template <class F>
    void for_each_node(F&& f) const {
        for (NodeId id = 0; id < static_cast<NodeId>(nodes_.size()); ++id)
            f(id, nodes_[id]);
    }

    // Full structural audit: probability halving, depth cap, gap alternation
    // and contact, boundary complexity, link consistency, biased tree
    // invariants, and exact area accounting of the gap partition per node.
    void check_invariants() const;

  private:
    explicit SlabTree(const TriangleTiling& t, QueryDistribution d)
        : tiling_(&t), dist_(std::move(d)) {}

    struct BuildGroup;
    int make_children(NodeId v);
    void build_node(NodeId v, std::vector<BuildGroup> groups);
    SlabRun emit_run(const SlabNode& node, BuildGroup& group,
                     std::vector<std::vector<TriId>>& blocked_buckets);
    Rat mass_between_lines(int a, int b) const;

    friend class SlabUpdater;

    const TriangleTiling* tiling_;
    QueryDistribution dist_;
    std::vector<Point> lines_;
    std::vector<char> line_has_vertex_;
    std::vector<int> vertex_prefix_;  // vertex lines among lines_[0..i]
    std::vector<Rat> mass_prefix_;    // query mass left of lines_[i]
    std::vector<SlabNode> nodes_;
    int depth_cap_ = 0;
    Rat floor_;
    RebuildPolicy policy_;
    bool updated_since_build_ = false;
};

}  // namespace ptloc
