#include "ptloc/oracles.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ptloc {


std::string gap_brief(const GapDesc& g) {
    std::ostringstream os;
    os << (g.blocked ? "blocked{" : "free{");
    for (size_t i = 0; i < g.members.size(); ++i)
        os << (i ? "," : "") << g.members[i];
    os << "}";
    return os.str();
}

std::string gap_runs_brief(const GapRuns& runs) {
    std::ostringstream os;
    for (size_t r = 0; r < runs.size(); ++r) {
        os << (r ? " | [" : "[");
        for (size_t i = 0; i < runs[r].size(); ++i)
            os << (i ? " " : "") << gap_brief(runs[r][i]);
        os << "]";
    }
    return os.str();
}

TriId brute_locate(const TriangleTiling& t, const Point& q) {
    const Box& b = t.box();
    PTLOC_VALIDATE(q.x >= b.x0 && q.x < b.x1 && q.y > b.y0 && q.y <= b.y1,
                   "query outside the canonical domain");
    TriId found = kNone;
    for (TriId id : t.alive_tris()) {
        auto tp = t.tri_points(id);
        if (orient_perturbed(tp[0], tp[1], q) > 0 &&
            orient_perturbed(tp[1], tp[2], q) > 0 &&
            orient_perturbed(tp[2], tp[0], q) > 0) {
            PTLOC_CHECK(found == kNone, "perturbed query inside two triangles");
            found = id;
        }
    }
    PTLOC_CHECK(found != kNone, "perturbed query outside every triangle");
    return found;
}

GapRuns brute_gaps(const TriangleTiling& t, const SlabSpec& node,
                   const std::vector<SlabSpec>& ancestors) {
    // Cutters are the triangles whose chains cross the whole strip: those
    // spanning the strip itself (bands) and those spanning an ancestor strip
    // (shadows, already answered higher up). The two are collected separately
    // because near a box wall a shadow can cross a strip it does not span.
    struct Cutter {
        TriId id;
        bool shadow;
    };
    std::vector<Cutter> cutters;
    std::vector<TriId> members;
    for (TriId id : t.alive_tris()) {
        Triangle tr = t.triangle_of(id);
        if (!spec_tri_intersects(node, tr)) continue;
        bool shadow = false;
        for (const SlabSpec& a : ancestors)
            if (spec_tri_spans(a, tr)) {
                shadow = true;
                break;
            }
        if (shadow || spec_tri_spans(node, tr))
            cutters.push_back({id, shadow});
        else
            members.push_back(id);
    }
    PTLOC_CHECK(!cutters.empty(), "no triangle crosses the strip");
    std::sort(cutters.begin(), cutters.end(), [&](const Cutter& a, const Cutter& b) {
        return spec_band_above(t, a.id, b.id, node);
    });

    const size_t k = cutters.size();
    std::vector<Chain> lows(k), ups(k);
    for (size_t i = 0; i < k; ++i) {
        Triangle tr = t.triangle_of(cutters[i].id);
        ups[i] = upper_chain(tr);
        lows[i] = lower_chain(tr);
    }

    // Bucket each member between the two cutters that sandwich its witness;
    // bucket 0 sits above every cutter and bucket k below every cutter. The
    // witness resolves an exact hit on a cutter chain through the wall side
    // its body hangs on; shadow chains need their wall extensions to cover
    // every witness of the strip.
    std::vector<Chain> lows_x(k), ups_x(k);
    for (size_t i = 0; i < k; ++i) {
        lows_x[i] = node.plain ? lows[i] : chain_extended_to_slab(lows[i], node.s);
        ups_x[i] = node.plain ? ups[i] : chain_extended_to_slab(ups[i], node.s);
    }
    std::vector<std::vector<TriId>> bucket(k + 1);
    std::vector<bool> positive(k + 1, false);
    for (TriId id : members) {
        GapWitness w = member_witness(t, id, node);
        size_t j = 0;
        while (j < k && witness_position(lows_x[j], w) != ChainPos::Above) ++j;
        if (!w.zero_measure()) {
            PTLOC_CHECK(j >= 1 && j <= k - 1,
                        "member outside the span of the strip's cutters");
            PTLOC_CHECK(witness_position(ups_x[j], w) == ChainPos::Above,
                        "member witness inside a spanning triangle");
            positive[j] = true;
        }
        bucket[j].push_back(id);
    }

    // The strip of the box above the top cutter and below the bottom cutter
    // must pinch to nothing; the box edge chains stand in for the missing
    // neighbors there.
    const Box& bx = t.box();
    Chain box_top(bx.ul(), bx.ur());
    Chain box_bottom(bx.ll(), bx.lr());

    GapRuns runs;
    GapRun cur;
    auto flush = [&] {
        if (!cur.empty()) runs.push_back(std::move(cur));
        cur.clear();
    };
    for (size_t i = 0; i <= k; ++i) {
        const Chain& above = (i == 0) ? box_top : lows[i - 1];
        const Chain& below = (i == k) ? box_bottom : ups[i];
        ChainRel r = spec_chain_relation(above, below, node);
        PTLOC_CHECK(rel_at_or_above(r), "cutters out of vertical order");
        if (i == 0 || i == k)
            PTLOC_CHECK(r == ChainRel::Equal,
                        "strip region beyond the extreme cutters");
        if (r != ChainRel::Equal) {
            // Zero-area gaps around a fan vertex carry only point contacts,
            // so membership rather than presence is what must be nonempty.
            PTLOC_CHECK(!bucket[i].empty(), "region between cutters left uncovered");
            std::sort(bucket[i].begin(), bucket[i].end());
            cur.push_back(GapDesc{true, lows[i - 1], ups[i], bucket[i]});
        } else {
            PTLOC_CHECK(!positive[i],
                        "member with presence bucketed into an empty contact");
        }
        if (i == k) break;
        if (cutters[i].shadow)
            flush();
        else
            cur.push_back(GapDesc{false, ups[i], lows[i], {cutters[i].id}});
    }
    flush();
    return runs;
}

size_t brute_nearest(const std::vector<Point>& sites, const Point& q) {
    PTLOC_VALIDATE(!sites.empty(), "nearest-site query over an empty site set");
    size_t best = 0;
    Rat bestd;
    for (size_t i = 0; i < sites.size(); ++i) {
        Rat dx = sites[i].x - q.x, dy = sites[i].y - q.y;
        Rat d = dx * dx + dy * dy;
        if (i == 0 || d < bestd) {
            bestd = d;
            best = i;
        }
    }
    return best;
}

double entropy_lower_bound(const TriangleTiling& t, const QueryDistribution& dist) {
    std::vector<Rat> ps;
    Rat total = 0;
    for (TriId id : t.alive_tris()) {
        Rat p = dist.prob_of_triangle(t.triangle_of(id));
        total += p;
        ps.push_back(p);
    }
    PTLOC_VALIDATE(total == 1, "distribution mass escapes the tiling");
    return entropy_bits(ps);
}

}  // namespace ptloc
