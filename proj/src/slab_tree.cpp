#include "ptloc/slab_tree.hpp"

#include <algorithm>

namespace ptloc {

namespace {

// Position of the perturbed query against a gap boundary chain. A chain can
// start or end at a bounding box wall strictly inside the strip; the region
// boundary then continues vertically along the wall, and a query on that
// wall segment sits just right of it, which the perturbation rules resolve
// as below. Before the chain's front the first edge governs in the limit,
// which agrees with the wall continuation there.
ChainPos gap_side(const Chain& c, const Point& q) {
    if (lex_less(q, c.front())) {
        int s = orient_perturbed(c.pts[0], c.pts[1], q);
        return s > 0 ? ChainPos::Above : ChainPos::Below;
    }
    if (lex_less(c.back(), q)) return ChainPos::Below;
    return chain_position_perturbed(c, q);
}

int ceil_log2(size_t n) {
    int b = 0;
    while ((size_t{1} << b) < n) ++b;
    return b;
}

}  // namespace

// Triangles of one parent blocked gap that reach the current strip, with the
// gap's bounding chains threaded down verbatim so gap boundaries stay
// pointwise identical across levels.
struct SlabTree::BuildGroup {
    Chain up, low;
    std::vector<TriId> tris;
};

SlabTree SlabTree::build(const TriangleTiling& t, std::vector<Point> lines,
                         const QueryDistribution& d) {
    SlabTree tree(t, d);
    const Box& box = t.box();

    std::sort(lines.begin(), lines.end(), LexLess{});
    lines.erase(std::unique(lines.begin(), lines.end(),
                            [](const Point& a, const Point& b) { return a == b; }),
                lines.end());
    PTLOC_VALIDATE(lines.size() >= 2, "need at least two strip boundary lines");
    for (const Point& p : lines)
        PTLOC_VALIDATE(box.x0 <= p.x && p.x <= box.x1,
                       "strip boundary line outside the bounding box");
    for (VId v : t.alive_vertices())
        PTLOC_VALIDATE(
            std::binary_search(lines.begin(), lines.end(), t.pt(v), LexLess{}),
            "tiling vertex off every strip boundary line");
    PTLOC_VALIDATE(d.prob_of_xrange(box.x0, box.x1) == 1,
                   "query distribution mass escapes the bounding box");

    tree.lines_ = std::move(lines);
    const size_t L = tree.lines_.size();
    tree.line_has_vertex_.assign(L, 0);
    for (VId v : t.alive_vertices()) {
        auto it = std::lower_bound(tree.lines_.begin(), tree.lines_.end(), t.pt(v),
                                   LexLess{});
        tree.line_has_vertex_[it - tree.lines_.begin()] = 1;
    }
    tree.vertex_prefix_.assign(L + 1, 0);
    for (size_t i = 0; i < L; ++i)
        tree.vertex_prefix_[i + 1] = tree.vertex_prefix_[i] + tree.line_has_vertex_[i];
    tree.mass_prefix_.resize(L);
    for (size_t i = 0; i < L; ++i)
        tree.mass_prefix_[i] = d.prob_of_xrange(box.x0, tree.lines_[i].x);

    const size_t n = static_cast<size_t>(t.alive_count());
    tree.depth_cap_ = ceil_log2(std::max<size_t>(2, n));
    tree.floor_ = Rat(1) / Rat(static_cast<long>(std::max<size_t>(1, n)));
    tree.policy_.built_tris = static_cast<long>(n);

    SlabNode root;
    root.spec = SlabSpec{Slab{box.ll(), box.ur(), /*right_closed=*/true},
                         /*plain=*/true};
    root.line_lo = 0;
    root.line_hi = static_cast<int>(L) - 1;
    tree.nodes_.push_back(std::move(root));

    BuildGroup all{Chain(box.ul(), box.ur()), Chain(box.ll(), box.lr()),
                   t.alive_tris()};
    std::vector<BuildGroup> groups;
    groups.push_back(std::move(all));
    tree.build_node(0, std::move(groups));
    return tree;
}

Rat SlabTree::mass_between_lines(int a, int b) const {
    return mass_prefix_[b] - mass_prefix_[a];
}

SlabRun SlabTree::emit_run(const SlabNode& node, BuildGroup& group,
                           std::vector<std::vector<TriId>>& blocked_buckets) {
    const SlabSpec& sp = node.spec;
    std::vector<TriId> bands, members;
    for (TriId id : group.tris) {
        if (spec_tri_spans(sp, tiling_->triangle_of(id)))
            bands.push_back(id);
        else
            members.push_back(id);
    }
    std::sort(bands.begin(), bands.end(),
              [&](TriId a, TriId b) { return spec_band_above(*tiling_, a, b, sp); });

    const size_t m = bands.size();
    std::vector<Chain> ups(m), lows(m);
    for (size_t i = 0; i < m; ++i) {
        Triangle tr = tiling_->triangle_of(bands[i]);
        ups[i] = upper_chain(tr);
        lows[i] = lower_chain(tr);
    }

    // Assign each non-spanning triangle to the region between the spanning
    // triangles that sandwich its witness; region 0 hangs below the group's
    // upper chain, region m sits above its lower chain. The outer chains are
    // carried down verbatim, so coverage checks need their wall extensions.
    Chain gup = sp.plain ? group.up : chain_extended_to_slab(group.up, sp.s);
    Chain glow = sp.plain ? group.low : chain_extended_to_slab(group.low, sp.s);
    std::vector<std::vector<TriId>> bucket(m + 1);
    std::vector<bool> positive(m + 1, false);
    for (TriId id : members) {
        GapWitness w = member_witness(*tiling_, id, sp);
        size_t j = 0;
        while (j < m && witness_position(lows[j], w) != ChainPos::Above) ++j;
        if (!w.zero_measure()) {
            const Chain& below = (j < m) ? ups[j] : glow;
            const Chain& above = (j > 0) ? lows[j - 1] : gup;
            PTLOC_CHECK(witness_position(below, w) == ChainPos::Above,
                        "member witness under its receiving region");
            PTLOC_CHECK(witness_position(above, w) == ChainPos::Below,
                        "member witness over its receiving region");
            positive[j] = true;
        }
        bucket[j].push_back(id);
    }

    SlabRun run;
    auto emit_region = [&](const Chain& above, const Chain& below, size_t bidx) {
        ChainRel r = spec_chain_relation(above, below, sp);
        PTLOC_CHECK(rel_at_or_above(r), "gap boundaries out of vertical order");
        if (r == ChainRel::Equal) {
            // Pinched contact: no gap here, and only point contacts may have
            // landed in the bucket; they dissolve into the seam.
            PTLOC_CHECK(!positive[bidx], "member with presence in an empty contact");
            return;
        }
        // A gap diverging only in slope around a fan vertex has zero area but
        // still holds the fan triangles touching it there; they turn into
        // spanning triangles of the degenerate wall strips below it.
        PTLOC_CHECK(!bucket[bidx].empty(), "blocked gap without members");
        SlabGap g;
        g.blocked = true;
        g.up = above;
        g.low = below;
        g.weight = dist_.prob_between_chains(above, below, sp.s.left.x, sp.s.right.x);
        run.gaps.push_back(std::move(g));
        std::sort(bucket[bidx].begin(), bucket[bidx].end());
        blocked_buckets.push_back(std::move(bucket[bidx]));
    };

    const Chain* cursor = &group.up;
    for (size_t i = 0; i < m; ++i) {
        emit_region(*cursor, ups[i], i);
        SlabGap g;
        g.up = ups[i];
        g.low = lows[i];
        g.tri = bands[i];
        g.weight = dist_.prob_between_chains(g.up, g.low, sp.s.left.x, sp.s.right.x);
        run.gaps.push_back(std::move(g));
        cursor = &lows[i];
    }
    emit_region(*cursor, group.low, m);

    std::vector<std::pair<int, Rat>> items;
    items.reserve(run.gaps.size());
    for (size_t i = 0; i < run.gaps.size(); ++i)
        items.emplace_back(static_cast<int>(i), rat_max(run.gaps[i].weight, floor_));
    run.tree = BiasedTree<int>::build(items);
    return run;
}

int SlabTree::make_children(NodeId v) {
    const int lo = nodes_[v].line_lo;
    const int hi = nodes_[v].line_hi;
    const int depth = nodes_[v].depth;
    const bool vertex_inside = vertex_prefix_[hi] - vertex_prefix_[lo + 1] > 0;
    if (depth >= depth_cap_ || !vertex_inside) return -1;

    // Largest split line keeping the left mass at most half; the right mass
    // then stays under half as well.
    Rat half = mass_between_lines(lo, hi) / 2;
    int a = lo, b = hi - 1;
    while (a < b) {
        int mid = (a + b + 1) / 2;
        if (mass_between_lines(lo, mid) <= half)
            a = mid;
        else
            b = mid - 1;
    }
    const int j = a;

    auto add = [&](int slot, int la, int lb) {
        SlabNode c;
        c.spec = SlabSpec{Slab{lines_[la], lines_[lb]}, /*plain=*/false};
        c.parent = v;
        c.depth = depth + 1;
        c.line_lo = la;
        c.line_hi = lb;
        NodeId id = static_cast<NodeId>(nodes_.size());
        nodes_.push_back(std::move(c));
        nodes_[v].child[slot] = id;
    };
    if (j > lo) add(0, lo, j);
    add(1, j, j + 1);
    if (j + 1 < hi) add(2, j + 1, hi);
    return j;
}

void SlabTree::build_node(NodeId v, std::vector<BuildGroup> groups) {
    std::vector<std::vector<TriId>> blocked_buckets;
    nodes_[v].runs.reserve(groups.size());
    for (BuildGroup& g : groups) {
        SlabRun run = emit_run(nodes_[v], g, blocked_buckets);
        nodes_[v].runs.push_back(std::move(run));
    }

    make_children(v);
    if (nodes_[v].leaf()) return;

    // Blocked gaps of v, in vertical order, induce one run each at every
    // child; the run index equals the gap's ordinal.
    int ordinal = 0;
    for (SlabRun& run : nodes_[v].runs)
        for (SlabGap& g : run.gaps)
            if (g.blocked) {
                for (int slot = 0; slot < 3; ++slot)
                    if (nodes_[v].child[slot] != kNone) g.child_run[slot] = ordinal;
                ++ordinal;
            }

    for (int slot = 0; slot < 3; ++slot) {
        NodeId w = nodes_[v].child[slot];
        if (w == kNone) continue;
        std::vector<BuildGroup> cg;
        cg.reserve(blocked_buckets.size());
        int ord = 0;
        for (const SlabRun& run : nodes_[v].runs)
            for (const SlabGap& g : run.gaps)
                if (g.blocked) {
                    BuildGroup bg{g.up, g.low, {}};
                    for (TriId id : blocked_buckets[ord])
                        if (spec_tri_intersects(nodes_[w].spec, tiling_->triangle_of(id)))
                            bg.tris.push_back(id);
                    cg.push_back(std::move(bg));
                    ++ord;
                }
        build_node(w, std::move(cg));
    }
}

std::optional<TriId> SlabTree::locate(const Point& q, SlabTrace* trace) const {
    const Box& b = tiling_->box();
    PTLOC_VALIDATE(q.x >= b.x0 && q.x < b.x1 && q.y > b.y0 && q.y <= b.y1,
                   "query outside the canonical domain");
    SlabTrace local;
    SlabTrace& tr = trace ? *trace : local;
    tr = SlabTrace{};

    NodeId v = 0;
    int run_idx = 0;
    for (;;) {
        const SlabNode& node = nodes_[v];
        PTLOC_CHECK(run_idx >= 0 && run_idx < static_cast<int>(node.runs.size()),
                    "gap link outside the child's runs");
        const SlabRun& run = node.runs[run_idx];
        PTLOC_CHECK(!run.gaps.empty(), "query walked into an empty run");
        ++tr.nodes_visited;
        tr.level = node.depth;

        long visits = 0;
        size_t pos = run.tree.find(
            [&](const int& gi) {
                const SlabGap& g = run.gaps[gi];
                if (gap_side(g.up, q) == ChainPos::Above) return -1;
                if (gap_side(g.low, q) == ChainPos::Above) return 0;
                return 1;
            },
            &visits);
        tr.comparisons += visits;
        PTLOC_CHECK(pos != BiasedTree<int>::npos, "query escaped its gap run");
        const SlabGap& g = run.gaps[run.tree.item(pos)];
        if (!g.blocked) return g.tri;
        if (node.leaf()) {
            tr.backup_needed = true;
            return std::nullopt;
        }
        bool moved = false;
        for (int slot = 0; slot < 3 && !moved; ++slot) {
            NodeId w = node.child[slot];
            if (w != kNone && spec_contains(nodes_[w].spec, q)) {
                run_idx = g.child_run[slot];
                v = w;
                moved = true;
            }
        }
        PTLOC_CHECK(moved, "child strips fail to cover the query");
    }
}

void SlabTree::check_invariants() const {
    const Box& b = tiling_->box();
    QueryDistribution area(
        {{Rat(1), Polygon{b.ll(), b.lr(), b.ur(), b.ul()}}});

    auto blocked_count = [&](const SlabNode& n) {
        int c = 0;
        for (const SlabRun& run : n.runs)
            for (const SlabGap& g : run.gaps) c += g.blocked ? 1 : 0;
        return c;
    };

    for (NodeId id = 0; id < static_cast<NodeId>(nodes_.size()); ++id) {
        const SlabNode& n = nodes_[id];
        PTLOC_CHECK(n.depth <= depth_cap_, "node beyond the depth cap");
        if (!n.leaf()) PTLOC_CHECK(n.depth < depth_cap_, "internal node at the depth cap");

        if (n.parent == kNone) {
            PTLOC_CHECK(id == 0 && n.runs.size() == 1, "root must hold a single run");
            PTLOC_CHECK(n.runs[0].gaps.size() == 3 && !n.runs[0].gaps[0].blocked &&
                            n.runs[0].gaps[1].blocked && !n.runs[0].gaps[2].blocked,
                        "root gap list must be free/blocked/free");
        } else {
            const SlabNode& p = nodes_[n.parent];
            PTLOC_CHECK(static_cast<int>(n.runs.size()) == blocked_count(p),
                        "runs out of step with the parent's blocked gaps");
            if (id == p.child[0] || id == p.child[2]) {
                Rat mine = mass_between_lines(n.line_lo, n.line_hi);
                Rat theirs = mass_between_lines(p.line_lo, p.line_hi);
                PTLOC_CHECK(2 * mine <= theirs, "side child mass exceeds half the parent");
            }
            if (id == p.child[1])
                PTLOC_CHECK(n.line_hi == n.line_lo + 1, "middle child spans several lines");
        }
        const bool vertex_free = vertex_prefix_[n.line_hi] - vertex_prefix_[n.line_lo + 1] == 0;
        if (vertex_free)
            PTLOC_CHECK(n.leaf(), "vertex-free strip must be a leaf");

        Rat covered = 0;
        for (const SlabRun& run : n.runs) {
            PTLOC_CHECK(run.tree.size() == run.gaps.size(), "gap tree size mismatch");
            run.tree.check_invariants();
            for (size_t i = 0; i < run.gaps.size(); ++i) {
                const SlabGap& g = run.gaps[i];
                PTLOC_CHECK(run.tree.item(i) == static_cast<int>(i),
                            "gap tree order broken");
                PTLOC_CHECK(run.tree.weight(i) == rat_max(g.weight, floor_),
                            "gap tree weight out of date");
                PTLOC_CHECK(g.up.corner_edges() <= 2 && g.low.corner_edges() <= 2,
                            "gap boundary with more than two edges");
                if (g.blocked) {
                    if (i > 0)
                        PTLOC_CHECK(!run.gaps[i - 1].blocked, "adjacent blocked gaps");
                    if (n.leaf())
                        PTLOC_CHECK(g.child_run[0] == -1 && g.child_run[1] == -1 &&
                                        g.child_run[2] == -1,
                                    "leaf blocked gap with child links");
                    if (!updated_since_build_)
                        PTLOC_CHECK(!vertex_free, "blocked gap in a vertex-free strip");
                } else {
                    PTLOC_CHECK(g.tri != kNone, "free gap without a source triangle");
                    PTLOC_CHECK(spec_tri_spans(n.spec, tiling_->triangle_of(g.tri)),
                                "free gap triangle does not span the strip");
                    if (n.parent != kNone)
                        PTLOC_CHECK(
                            !spec_tri_spans(nodes_[n.parent].spec,
                                            tiling_->triangle_of(g.tri)),
                            "free gap triangle spans the parent strip");
                }
                if (i > 0)
                    PTLOC_CHECK(spec_chain_relation(run.gaps[i - 1].low, g.up, n.spec) ==
                                    ChainRel::Equal,
                                "gap contact broken inside a run");
                covered += area.prob_between_chains(g.up, g.low, n.spec.s.left.x,
                                                    n.spec.s.right.x);
            }
        }

        if (!n.leaf()) {
            int ordinal = 0;
            for (const SlabRun& run : n.runs)
                for (const SlabGap& g : run.gaps) {
                    if (!g.blocked) continue;
                    for (int slot = 0; slot < 3; ++slot) {
                        int want = n.child[slot] == kNone ? -1 : ordinal;
                        PTLOC_CHECK(g.child_run[slot] == want, "gap link out of order");
                    }
                    ++ordinal;
                }
            for (int slot = 0; slot < 3; ++slot) {
                NodeId w = n.child[slot];
                if (w == kNone) continue;
                PTLOC_CHECK(static_cast<int>(nodes_[w].runs.size()) == ordinal,
                            "child run count out of step");
            }
        }

        // Exact plain-x area accounting: this strip is tiled by its own gaps
        // plus the shadows of ancestor free gaps.
        Rat shadow = 0;
        for (NodeId a = n.parent; a != kNone; a = nodes_[a].parent)
            for (const SlabRun& run : nodes_[a].runs)
                for (const SlabGap& g : run.gaps)
                    if (!g.blocked)
                        shadow += area.prob_between_chains(g.up, g.low, n.spec.s.left.x,
                                                           n.spec.s.right.x);
        Rat total = area.prob_of_xrange(n.spec.s.left.x, n.spec.s.right.x);
        PTLOC_CHECK(covered + shadow == total, "gap partition does not tile the strip");
    }
}

}  // namespace ptloc
