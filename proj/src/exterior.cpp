#include <algorithm>

#include "ptloc/tiling.hpp"

namespace ptloc {

namespace {

struct LayerVtx {
    VId id;
    bool corner;
};

// Intersection of line(a1,a2) with line(b1,b2); caller checks non-parallel.
Point line_intersect(const Point& a1, const Point& a2, const Point& b1,
                     const Point& b2) {
    Rat dax = a2.x - a1.x, day = a2.y - a1.y;
    Rat dbx = b2.x - b1.x, dby = b2.y - b1.y;
    Rat den = dax * dby - day * dbx;
    Rat t = ((b1.x - a1.x) * dby - (b1.y - a1.y) * dbx) / den;
    return Point{a1.x + t * dax, a1.y + t * day};
}

}  // namespace

// The box minus the convex region is tiled in two stages. Ring stage: the
// strict-corner polygon is coarsened by extending alternate edge lines until
// they meet; each skipped edge gets a pocket cell between that intersection
// point and its stretch, corner count halves per layer, and surviving
// vertices stay in the next layer as collinear points on the coarser edges so
// everything stays edge-conforming. Corner stage: once at most eight corners
// remain, four box corner triangles, four corner pockets per straight piece
// and two middle triangles finish the job. Pockets are triangulated with
// balanced chords rather than plain fans, so a segment running nearly
// parallel to a subdivided base crosses logarithmically many cells of the
// pocket instead of all of them.
void build_exterior_filler(TriangleTiling& T) {
    const Box& box = T.box_;

    std::vector<LayerVtx> layer;
    for (const auto& arc : T.arcs_) layer.push_back({arc.ca, true});

    auto assign_arc_filler = [&](VId a, VId b, TriId t) {
        auto it = T.arc_corner_edge_.find(EdgeKey(a, b));
        if (it == T.arc_corner_edge_.end()) return;
        PTLOC_CHECK(T.arcs_[it->second].filler == kNone,
                    "arc filler assigned twice");
        T.arcs_[it->second].filler = t;
    };

    auto strictly_inside_box = [&](const Point& p) {
        return box.x0 < p.x && p.x < box.x1 && box.y0 < p.y && p.y < box.y1;
    };

    // Triangulate the pocket between an apex and a straight (possibly
    // subdivided) base run. Base sub-edges that coincide with an original
    // boundary edge become the filler of that arc.
    auto emit_pocket = [&](VId apexId, std::vector<VId> base) {
        PTLOC_CHECK(base.size() >= 2, "pocket base too short");
        const Point ap = T.verts_[apexId].p;
        if (orient(ap, T.verts_[base.front()].p, T.verts_[base.back()].p) < 0)
            std::reverse(base.begin(), base.end());
        if (base.size() == 2) {
            TriId tri = T.push_tri(base[0], base[1], apexId, true, kNone);
            assign_arc_filler(base[0], base[1], tri);
            return;
        }
        std::vector<Point> poly;
        poly.reserve(base.size() + 1);
        poly.push_back(ap);
        for (VId v : base) poly.push_back(T.verts_[v].p);
        auto tris = dk_triangulate(poly);
        auto vid = [&](int i) { return i == 0 ? apexId : base[(size_t)i - 1]; };
        for (const auto& tr : tris) {
            TriId tri = T.push_tri(vid(tr[0]), vid(tr[1]), vid(tr[2]), true, kNone);
            for (int j = 0; j < 3; ++j) {
                int a = tr[j], b = tr[(j + 1) % 3];
                if (a > b) std::swap(a, b);
                if (a >= 1 && b == a + 1) assign_arc_filler(vid(a), vid(b), tri);
            }
        }
    };

    // ---- ring stage ----
    while (true) {
        std::vector<size_t> cpos;
        for (size_t i = 0; i < layer.size(); ++i)
            if (layer[i].corner) cpos.push_back(i);
        const size_t m = cpos.size();
        if (m <= 8) break;

        auto cpt = [&](size_t c) { return T.verts_[layer[cpos[c % m]].id].p; };

        // candidate apexes for the odd (skipped) edges
        // skipped edges are the odd-indexed ones; for odd m the last edge is
        // kept and sits next to edge 0, so the shared corner survives as is
        std::vector<Point> apex(m);
        bool ok = true;
        for (size_t s = 1; s < m && ok; s += 2) {
            Point a1 = cpt(s - 1), a2 = cpt(s);      // previous kept edge
            Point b1 = cpt(s + 1), b2 = cpt(s + 2);  // next kept edge
            Rat den = (a2.x - a1.x) * (b2.y - b1.y) - (a2.y - a1.y) * (b2.x - b1.x);
            if (den <= 0) { ok = false; break; }
            Point w = line_intersect(a1, a2, b1, b2);
            if (!strictly_inside_box(w) || orient(cpt(s), cpt(s + 1), w) >= 0) {
                ok = false;
                break;
            }
            apex[s] = w;
        }
        if (!ok) break;  // cannot coarsen further; finish from this layer

        auto stretch = [&](size_t c) {
            // layer vertices of corner edge c, endpoints inclusive
            std::vector<size_t> out;
            size_t i = cpos[c % m];
            size_t end = cpos[(c + 1) % m];
            for (;; i = (i + 1) % layer.size()) {
                out.push_back(i);
                if (i == end) break;
            }
            return out;
        };

        std::vector<LayerVtx> next;
        for (size_t s = 1; s < m; s += 2) {
            VId wid = T.intern_vertex(apex[s]);
            std::vector<VId> base;
            for (size_t i : stretch(s)) base.push_back(layer[i].id);
            emit_pocket(wid, std::move(base));
        }
        for (size_t a = 0; a < m; a += 2) {
            for (size_t i : stretch(a)) {
                if (!next.empty() && next.back().id == layer[i].id) continue;
                bool seam = (m % 2 == 1 && i == cpos[0]);
                next.push_back({layer[i].id, seam});
            }
            if (a + 1 < m) next.push_back({T.intern_vertex(apex[a + 1]), true});
        }
        // drop the duplicated wrap-around vertex if present
        if (next.size() > 1 && next.front().id == next.back().id) next.pop_back();
        layer = std::move(next);
    }

    // ---- corner stage ----
    VId UL = T.intern_vertex(Point{box.x0, box.y1});
    VId UR = T.intern_vertex(Point{box.x1, box.y1});
    VId LL = T.intern_vertex(Point{box.x0, box.y0});
    VId LR = T.intern_vertex(Point{box.x1, box.y0});

    auto better = [&](VId a, VId b, auto cmp) { return cmp(T.verts_[b].p, T.verts_[a].p) ? b : a; };
    VId hs = kNone, ls = kNone, us = kNone, vs = kNone;
    for (const auto& lv : layer) {
        if (!lv.corner) continue;
        if (hs == kNone) { hs = ls = us = vs = lv.id; continue; }
        auto ybig = [](const Point& x, const Point& y) {
            return x.y != y.y ? x.y > y.y : x.x > y.x;
        };
        hs = better(hs, lv.id, ybig);
        ls = better(ls, lv.id, [&](const Point& x, const Point& y) { return ybig(y, x); });
        us = better(us, lv.id, [](const Point& x, const Point& y) { return lex_less(x, y); });
        vs = better(vs, lv.id, [](const Point& x, const Point& y) { return lex_less(y, x); });
    }
    PTLOC_CHECK(hs != kNone && hs != ls, "degenerate final layer");

    // ccw from the top corner to the bottom corner is the left chain
    size_t posH = 0;
    while (layer[posH].id != hs) ++posH;
    std::vector<LayerVtx> left, right;
    {
        size_t i = posH;
        for (;; i = (i + 1) % layer.size()) {
            left.push_back(layer[i]);
            if (layer[i].id == ls) break;
        }
        for (;; i = (i + 1) % layer.size()) {
            right.push_back(layer[i]);
            if (layer[i].id == hs) break;
        }
        std::reverse(right.begin(), right.end());  // now h* .. l* clockwise
    }

    // one pocket per straight piece of the chain between two strict corners
    auto fan = [&](VId apexId, const std::vector<LayerVtx>& chain, size_t from,
                   size_t to) {
        size_t i = from;
        while (i < to) {
            size_t j = i + 1;
            while (j < to && !chain[j].corner) ++j;
            std::vector<VId> base;
            for (size_t k = i; k <= j; ++k) base.push_back(chain[k].id);
            emit_pocket(apexId, std::move(base));
            i = j;
        }
    };
    auto index_of = [&](const std::vector<LayerVtx>& chain, VId v) {
        for (size_t i = 0; i < chain.size(); ++i)
            if (chain[i].id == v) return i;
        PTLOC_CHECK(false, "chain split vertex missing");
        return size_t(0);
    };

    size_t iu = index_of(left, us), iv = index_of(right, vs);
    T.push_tri(UL, UR, hs, true, kNone);
    T.push_tri(LL, LR, ls, true, kNone);
    fan(UL, left, 0, iu);
    T.push_tri(UL, us, LL, true, kNone);
    fan(LL, left, iu, left.size() - 1);
    fan(UR, right, 0, iv);
    T.push_tri(UR, vs, LR, true, kNone);
    fan(LR, right, iv, right.size() - 1);
}

}  // namespace ptloc
