#include "ptloc/tiling.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ptloc {

namespace {

Rat cycle_area2(const std::vector<Point>& pts) {
    Rat s = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % pts.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return s;
}

bool on_segment_closed(const Point& a, const Point& b, const Point& p) {
    if (orient(a, b, p) != 0) return false;
    const Point lo = lex_min(a, b), hi = lex_max(a, b);
    return lex_leq(lo, p) && lex_leq(p, hi);
}

}  // namespace

Triangle TriangleTiling::triangle_of(TriId t) const {
    const auto& tt = tris_.at(t);
    return Triangle{{verts_[tt.v[0]].p, verts_[tt.v[1]].p, verts_[tt.v[2]].p}};
}

std::array<Point, 3> TriangleTiling::tri_points(TriId t) const {
    const auto& tt = tris_.at(t);
    return {verts_[tt.v[0]].p, verts_[tt.v[1]].p, verts_[tt.v[2]].p};
}

std::vector<TriId> TriangleTiling::alive_tris() const {
    std::vector<TriId> out;
    for (size_t i = 0; i < tris_.size(); ++i)
        if (tris_[i].alive) out.push_back((TriId)i);
    return out;
}

std::vector<TriId> TriangleTiling::alive_interior_tris() const {
    std::vector<TriId> out;
    for (size_t i = 0; i < tris_.size(); ++i)
        if (tris_[i].alive && !tris_[i].exterior) out.push_back((TriId)i);
    return out;
}

std::vector<VId> TriangleTiling::alive_vertices() const {
    std::vector<VId> out;
    for (size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i].alive) out.push_back((VId)i);
    return out;
}

std::optional<VId> TriangleTiling::find_vertex(const Point& p) const {
    auto it = vert_index_.find(p);
    if (it == vert_index_.end()) return std::nullopt;
    return it->second;
}

VId TriangleTiling::intern_vertex(const Point& p) {
    auto it = vert_index_.find(p);
    if (it != vert_index_.end()) return it->second;
    VId id = (VId)verts_.size();
    verts_.push_back(TilingVertex{p, true});
    incident_.emplace_back();
    vert_index_.emplace(p, id);
    return id;
}

TriId TriangleTiling::push_tri(VId a, VId b, VId c, bool exterior, int face) {
    Rat o = cross(verts_.at(a).p, verts_.at(b).p, verts_.at(c).p);
    PTLOC_CHECK(sgn(o) != 0, "degenerate triangle pushed into tiling");
    if (o < 0) std::swap(b, c);
    TriId id = (TriId)tris_.size();
    tris_.push_back(TilingTri{{a, b, c}, true, exterior, face});
    link_edges(id);
    incident_[a].insert(id);
    incident_[b].insert(id);
    incident_[c].insert(id);
    ++alive_count_;
    if (!exterior) ++interior_count_;
    return id;
}

void TriangleTiling::link_edges(TriId t) {
    const auto& v = tris_[t].v;
    for (int i = 0; i < 3; ++i) {
        EdgeKey k(v[i], v[(i + 1) % 3]);
        auto [it, fresh] = edge_map_.try_emplace(k, std::array<TriId, 2>{kNone, kNone});
        auto& occ = it->second;
        if (occ[0] == kNone)
            occ[0] = t;
        else if (occ[1] == kNone)
            occ[1] = t;
        else
            PTLOC_CHECK(false, "edge shared by more than two triangles");
        (void)fresh;
    }
}

void TriangleTiling::unlink_edges(TriId t) {
    const auto& v = tris_[t].v;
    for (int i = 0; i < 3; ++i) {
        EdgeKey k(v[i], v[(i + 1) % 3]);
        auto it = edge_map_.find(k);
        PTLOC_CHECK(it != edge_map_.end(), "unlinking unknown edge");
        auto& occ = it->second;
        if (occ[0] == t)
            occ[0] = occ[1], occ[1] = kNone;
        else if (occ[1] == t)
            occ[1] = kNone;
        else
            PTLOC_CHECK(false, "unlinking edge not owned by triangle");
        if (occ[0] == kNone) edge_map_.erase(it);
    }
}

std::optional<int> TriangleTiling::arc_of_edge(VId a, VId b) const {
    auto it = boundary_edge_arc_.find(EdgeKey(a, b));
    if (it == boundary_edge_arc_.end()) return std::nullopt;
    return it->second;
}

bool TriangleTiling::on_boundary_segment(int arc, const Point& p) const {
    const BoundaryArc& ba = arcs_.at(arc);
    return on_segment_closed(verts_[ba.ca].p, verts_[ba.cb].p, p);
}

std::vector<TriNeighbor> TriangleTiling::neighbors_of(TriId t) const {
    const TilingTri& tt = tris_.at(t);
    PTLOC_CHECK(tt.alive, "neighbors_of on dead triangle");
    std::vector<TriNeighbor> out;
    for (int i = 0; i < 3; ++i) {
        VId a = tt.v[i], b = tt.v[(i + 1) % 3];
        EdgeKey k(a, b);
        auto it = edge_map_.find(k);
        PTLOC_CHECK(it != edge_map_.end(), "triangle edge missing from edge map");
        const auto& occ = it->second;
        if (occ[1] != kNone) {
            TriId other = occ[0] == t ? occ[1] : occ[0];
            out.push_back(TriNeighbor{other, lex_min(verts_[a].p, verts_[b].p),
                                      lex_max(verts_[a].p, verts_[b].p)});
            continue;
        }
        if (!tt.exterior) {
            auto arc = arc_of_edge(a, b);
            if (arc) {
                const BoundaryArc& ba = arcs_[*arc];
                PTLOC_CHECK(ba.filler != kNone, "arc without filler");
                out.push_back(TriNeighbor{ba.filler,
                                          lex_min(verts_[a].p, verts_[b].p),
                                          lex_max(verts_[a].p, verts_[b].p)});
                continue;
            }
        } else {
            auto ce = arc_corner_edge_.find(k);
            if (ce != arc_corner_edge_.end() &&
                arcs_[ce->second].filler == t) {
                const BoundaryArc& ba = arcs_[ce->second];
                for (size_t j = 0; j + 1 < ba.run.size(); ++j) {
                    EdgeKey sk(ba.run[j], ba.run[j + 1]);
                    auto sit = edge_map_.find(sk);
                    PTLOC_CHECK(sit != edge_map_.end(), "boundary sub-edge missing");
                    TriId owner = kNone;
                    for (TriId o : sit->second)
                        if (o != kNone && !tris_[o].exterior) owner = o;
                    PTLOC_CHECK(owner != kNone,
                                "boundary sub-edge must have one interior owner");
                    out.push_back(TriNeighbor{
                        owner, lex_min(verts_[ba.run[j]].p, verts_[ba.run[j + 1]].p),
                        lex_max(verts_[ba.run[j]].p, verts_[ba.run[j + 1]].p)});
                }
                continue;
            }
        }
        // remaining case: edge on the box boundary, no neighbour
    }
    return out;
}

TriangleTiling TriangleTiling::build(const Box& box, const std::vector<Point>& pts,
                                     const std::vector<std::array<int, 3>>& tris,
                                     const std::vector<int>& faces,
                                     const std::vector<int>& boundary) {
    PTLOC_VALIDATE(faces.size() == tris.size(), "faces/tris size mismatch");
    PTLOC_VALIDATE(boundary.size() >= 3, "boundary cycle too short");
    PTLOC_VALIDATE(!tris.empty(), "empty interior triangulation");
    PTLOC_VALIDATE(box.x0 < box.x1 && box.y0 < box.y1, "degenerate box");

    TriangleTiling T;
    T.box_ = box;
    for (const Point& p : pts) {
        PTLOC_VALIDATE(!T.find_vertex(p), "duplicate vertex coordinates");
        T.intern_vertex(p);
    }

    const size_t n = boundary.size();
    std::vector<Point> bpts;
    for (int id : boundary) {
        PTLOC_VALIDATE(id >= 0 && (size_t)id < pts.size(), "boundary id out of range");
        const Point& p = pts[id];
        PTLOC_VALIDATE(box.x0 < p.x && p.x < box.x1 && box.y0 < p.y && p.y < box.y1,
                       "boundary vertex must be strictly inside the box");
        bpts.push_back(p);
    }
    int strict = 0;
    for (size_t i = 0; i < n; ++i) {
        Rat o = cross(bpts[(i + n - 1) % n], bpts[i], bpts[(i + 1) % n]);
        PTLOC_VALIDATE(o >= 0, "boundary not convex counterclockwise");
        if (o > 0) ++strict;
    }
    PTLOC_VALIDATE(strict >= 3, "boundary degenerate");
    Rat barea = cycle_area2(bpts);
    PTLOC_VALIDATE(barea > 0, "boundary must have positive area");

    // conformity pre-scan before any triangle is pushed
    std::map<EdgeKey, int> cnt;
    Rat tarea = 0;
    for (const auto& tr : tris) {
        for (int j = 0; j < 3; ++j) {
            PTLOC_VALIDATE(tr[j] >= 0 && (size_t)tr[j] < pts.size(),
                           "triangle vertex id out of range");
        }
        Rat o = cross(pts[tr[0]], pts[tr[1]], pts[tr[2]]);
        PTLOC_VALIDATE(sgn(o) != 0, "degenerate interior triangle");
        tarea += rat_abs(o);
        for (int j = 0; j < 3; ++j) {
            EdgeKey k(tr[j], tr[(j + 1) % 3]);
            PTLOC_VALIDATE(++cnt[k] <= 2, "edge shared by more than two triangles");
        }
    }
    PTLOC_VALIDATE(tarea == barea, "interior triangles do not tile the region");
    std::set<EdgeKey> bset;
    for (size_t i = 0; i < n; ++i) {
        EdgeKey k(boundary[i], boundary[(i + 1) % n]);
        auto it = cnt.find(k);
        PTLOC_VALIDATE(it != cnt.end() && it->second == 1,
                       "boundary edge must belong to exactly one triangle");
        bset.insert(k);
    }
    for (const auto& [k, c] : cnt)
        PTLOC_VALIDATE(c == 2 || bset.count(k),
                       "dangling interior edge (triangulation not conforming)");

    for (size_t i = 0; i < tris.size(); ++i)
        T.push_tri(tris[i][0], tris[i][1], tris[i][2], false, faces[i]);

    T.boundary_.assign(boundary.begin(), boundary.end());

    // boundary arcs between strict corners
    std::vector<size_t> cidx;
    for (size_t i = 0; i < n; ++i) {
        if (orient(bpts[(i + n - 1) % n], bpts[i], bpts[(i + 1) % n]) > 0)
            cidx.push_back(i);
    }
    for (size_t c = 0; c < cidx.size(); ++c) {
        size_t i0 = cidx[c], i1 = cidx[(c + 1) % cidx.size()];
        BoundaryArc arc;
        arc.ca = boundary[i0];
        arc.cb = boundary[i1];
        for (size_t i = i0;; i = (i + 1) % n) {
            arc.run.push_back(boundary[i]);
            if (i == i1) break;
        }
        int aidx = (int)T.arcs_.size();
        for (size_t j = 0; j + 1 < arc.run.size(); ++j)
            T.boundary_edge_arc_.emplace(EdgeKey(arc.run[j], arc.run[j + 1]), aidx);
        T.arc_corner_edge_.emplace(EdgeKey(arc.ca, arc.cb), aidx);
        T.arcs_.push_back(std::move(arc));
    }

    build_exterior_filler(T);
    for (const auto& a : T.arcs_)
        PTLOC_CHECK(a.filler != kNone, "boundary arc left without a filler triangle");
    T.check();
    return T;
}

void TriangleTiling::apply_update(const TriangulationUpdate& u) {
    if (u.removed.empty() && u.added.empty()) return;  // identity update
    PTLOC_VALIDATE(!u.removed.empty() && !u.added.empty(),
                   "update must remove and add at least one triangle");

    std::set<TriId> rem(u.removed.begin(), u.removed.end());
    PTLOC_VALIDATE(rem.size() == u.removed.size(), "duplicate removed triangle");
    Rat remArea = 0;
    std::map<EdgeKey, int> remCnt;
    for (TriId t : rem) {
        PTLOC_VALIDATE(t >= 0 && (size_t)t < tris_.size() && tris_[t].alive,
                       "removed triangle not alive");
        PTLOC_VALIDATE(!tris_[t].exterior, "exterior filler cannot be updated");
        const auto& v = tris_[t].v;
        remArea += cross(verts_[v[0]].p, verts_[v[1]].p, verts_[v[2]].p);
        for (int j = 0; j < 3; ++j) ++remCnt[EdgeKey(v[j], v[(j + 1) % 3])];
    }

    // removed-region boundary, split into exactly matched internal edges and
    // convex-boundary stretches that may be re-subdivided
    using PSeg = std::pair<Point, Point>;  // lex-ordered
    struct PSegLess {
        bool operator()(const PSeg& x, const PSeg& y) const {
            if (x.first != y.first) return lex_less(x.first, y.first);
            return lex_less(x.second, y.second);
        }
    };
    std::map<PSeg, int, PSegLess> internalBoundary;  // matched 1:1 by the new side
    std::map<int, std::vector<PSeg>> arcSide;
    for (const auto& [k, c] : remCnt) {
        if (c == 2) continue;
        PTLOC_VALIDATE(c == 1, "broken removed-edge count");
        PSeg s{lex_min(verts_[k.a].p, verts_[k.b].p),
               lex_max(verts_[k.a].p, verts_[k.b].p)};
        auto arc = arc_of_edge(k.a, k.b);
        if (arc)
            arcSide[*arc].push_back(s);
        else
            ++internalBoundary[s];
    }

    Rat addArea = 0;
    std::map<PSeg, int, PSegLess> addCnt;
    std::map<Point, int, LexLess> newPts;
    for (const auto& nt : u.added) {
        Rat o = cross(nt.p[0], nt.p[1], nt.p[2]);
        PTLOC_VALIDATE(sgn(o) != 0, "degenerate new triangle");
        addArea += rat_abs(o);
        for (int j = 0; j < 3; ++j) {
            newPts.emplace(nt.p[j], 0);
            PSeg s{lex_min(nt.p[j], nt.p[(j + 1) % 3]),
                   lex_max(nt.p[j], nt.p[(j + 1) % 3])};
            PTLOC_VALIDATE(++addCnt[s] <= 2, "new edge shared by more than two triangles");
        }
    }
    PTLOC_VALIDATE(addArea == remArea, "new triangles do not cover the removed region");

    std::map<int, std::vector<PSeg>> arcSideNew;
    for (const auto& [s, c] : addCnt) {
        if (c == 2) continue;
        auto it = internalBoundary.find(s);
        if (it != internalBoundary.end()) {
            PTLOC_VALIDATE(--it->second >= 0, "boundary edge matched twice");
            if (it->second == 0) internalBoundary.erase(it);
            continue;
        }
        // otherwise both endpoints must lie on one affected arc
        bool placed = false;
        for (auto& [aidx, segs] : arcSide) {
            if (on_boundary_segment(aidx, s.first) && on_boundary_segment(aidx, s.second)) {
                arcSideNew[aidx].push_back(s);
                placed = true;
                break;
            }
        }
        PTLOC_VALIDATE(placed, "new boundary edge does not match the removed region");
    }
    PTLOC_VALIDATE(internalBoundary.empty(),
                   "removed-region boundary not covered by new triangles");

    // per-arc interval agreement (subdivision may change, the union may not)
    auto merged = [](std::vector<PSeg> v) {
        std::sort(v.begin(), v.end(), [](const PSeg& x, const PSeg& y) {
            return lex_less(x.first, y.first);
        });
        std::vector<PSeg> out;
        for (const auto& s : v) {
            if (!out.empty() && out.back().second == s.first)
                out.back().second = s.second;
            else
                out.push_back(s);
        }
        return out;
    };
    for (const auto& [aidx, segs] : arcSide) {
        auto a = merged(segs);
        auto b = merged(arcSideNew.count(aidx) ? arcSideNew[aidx] : std::vector<PSeg>{});
        PTLOC_VALIDATE(a == b, "convex-boundary stretch changed by update");
    }
    for (const auto& [aidx, segs] : arcSideNew)
        PTLOC_VALIDATE(arcSide.count(aidx), "new boundary edge on untouched arc");

    // genuinely new vertices must sit inside the region or on an affected arc
    for (auto& [p, tag] : newPts) {
        (void)tag;
        if (find_vertex(p)) continue;
        bool ok = false;
        for (const auto& [aidx, segs] : arcSide) {
            (void)segs;
            if (on_boundary_segment(aidx, p)) { ok = true; break; }
        }
        if (!ok) {
            for (TriId t : rem) {
                auto tp = tri_points(t);
                Rat o0 = cross(tp[0], tp[1], p);
                Rat o1 = cross(tp[1], tp[2], p);
                Rat o2 = cross(tp[2], tp[0], p);
                if (o0 > 0 && o1 > 0 && o2 > 0) { ok = true; break; }
                // on an internal edge of the removed region
                for (int j = 0; j < 3; ++j) {
                    const auto& v = tris_[t].v;
                    if (remCnt[EdgeKey(v[j], v[(j + 1) % 3])] == 2 &&
                        on_segment_closed(verts_[v[j]].p, verts_[v[(j + 1) % 3]].p, p)) {
                        ok = true;
                        break;
                    }
                }
                if (ok) break;
            }
        }
        PTLOC_VALIDATE(ok, "new vertex outside the updated region");
    }

    // ---- commit ----
    std::set<VId> touched;
    for (TriId t : rem)
        for (VId v : tris_[t].v) touched.insert(v);
    for (TriId t : rem) {
        tris_[t].alive = false;
        unlink_edges(t);
        for (VId v : tris_[t].v) incident_[v].erase(t);
        --alive_count_;
        --interior_count_;
    }
    for (const auto& nt : u.added) {
        VId a = intern_vertex(nt.p[0]);
        VId b = intern_vertex(nt.p[1]);
        VId c = intern_vertex(nt.p[2]);
        push_tri(a, b, c, false, nt.face);
    }
    for (VId v : touched) {
        if (incident_[v].empty()) {
            verts_[v].alive = false;
            vert_index_.erase(verts_[v].p);
        }
    }

    // refresh affected arcs: the run is every current vertex on the stretch
    if (!arcSide.empty()) {
        for (const auto& [aidx, segs] : arcSide) {
            (void)segs;
            BoundaryArc& arc = arcs_[aidx];
            for (size_t j = 0; j + 1 < arc.run.size(); ++j)
                boundary_edge_arc_.erase(EdgeKey(arc.run[j], arc.run[j + 1]));
            std::vector<VId> run;
            for (VId v : arc.run)
                if (verts_[v].alive) run.push_back(v);
            for (const auto& [p, tag] : newPts) {
                (void)tag;
                if (on_boundary_segment(aidx, p)) {
                    VId id = *find_vertex(p);
                    if (std::find(run.begin(), run.end(), id) == run.end())
                        run.push_back(id);
                }
            }
            const Point pa = verts_[arc.ca].p;
            std::sort(run.begin(), run.end(), [&](VId x, VId y) {
                // order along the arc away from ca
                const Point& px = verts_[x].p;
                const Point& py = verts_[y].p;
                if (lex_less(pa, verts_[arc.cb].p)) return lex_less(px, py);
                return lex_less(py, px);
            });
            PTLOC_CHECK(run.front() == arc.ca && run.back() == arc.cb,
                        "arc endpoints lost in update");
            arc.run = std::move(run);
            for (size_t j = 0; j + 1 < arc.run.size(); ++j) {
                EdgeKey k(arc.run[j], arc.run[j + 1]);
                auto it = edge_map_.find(k);
                PTLOC_CHECK(it != edge_map_.end(), "boundary sub-edge missing");
                int owners = 0;
                for (TriId o : it->second)
                    if (o != kNone && !tris_[o].exterior) ++owners;
                PTLOC_CHECK(owners == 1,
                            "boundary sub-edge must have one interior owner");
                boundary_edge_arc_.emplace(k, aidx);
            }
        }
        boundary_.clear();
        for (const auto& arc : arcs_)
            for (size_t j = 0; j + 1 < arc.run.size(); ++j)
                boundary_.push_back(arc.run[j]);
    }
}

void TriangleTiling::check() const {
    Rat total = 0;
    int alive = 0, interior = 0;
    for (size_t t = 0; t < tris_.size(); ++t) {
        if (!tris_[t].alive) continue;
        ++alive;
        if (!tris_[t].exterior) ++interior;
        auto tp = tri_points((TriId)t);
        Rat o = cross(tp[0], tp[1], tp[2]);
        PTLOC_CHECK(o > 0, "alive triangle not counterclockwise");
        total += o;
        for (int j = 0; j < 3; ++j)
            PTLOC_CHECK(verts_[tris_[t].v[j]].alive, "triangle uses dead vertex");
    }
    PTLOC_CHECK(alive == alive_count_ && interior == interior_count_,
                "triangle counts out of sync");
    Rat boxArea = (box_.x1 - box_.x0) * (box_.y1 - box_.y0) * 2;
    PTLOC_CHECK(total == boxArea, "tiling area does not match the box");

    for (const auto& [k, occ] : edge_map_) {
        PTLOC_CHECK(occ[0] != kNone, "empty edge entry");
        for (TriId t : occ) {
            if (t == kNone) continue;
            PTLOC_CHECK(tris_[t].alive, "edge map references dead triangle");
            const auto& v = tris_[t].v;
            bool has = false;
            for (int j = 0; j < 3; ++j)
                if (EdgeKey(v[j], v[(j + 1) % 3]) == k) has = true;
            PTLOC_CHECK(has, "edge map references wrong triangle");
        }
    }

    // every alive triangle edge must resolve to a neighbour, an arc bridge or
    // the box boundary
    auto on_box_side = [&](const Point& a, const Point& b) {
        return (a.x == box_.x0 && b.x == box_.x0) || (a.x == box_.x1 && b.x == box_.x1) ||
               (a.y == box_.y0 && b.y == box_.y0) || (a.y == box_.y1 && b.y == box_.y1);
    };
    for (size_t t = 0; t < tris_.size(); ++t) {
        if (!tris_[t].alive) continue;
        const auto& v = tris_[t].v;
        for (int j = 0; j < 3; ++j) {
            VId a = v[j], b = v[(j + 1) % 3];
            auto it = edge_map_.find(EdgeKey(a, b));
            PTLOC_CHECK(it != edge_map_.end(), "triangle edge missing from map");
            if (it->second[1] != kNone) continue;
            if (on_box_side(verts_[a].p, verts_[b].p)) continue;
            if (!tris_[t].exterior) {
                PTLOC_CHECK(arc_of_edge(a, b).has_value(),
                            "interior edge with no neighbour off the boundary");
            } else {
                auto ce = arc_corner_edge_.find(EdgeKey(a, b));
                PTLOC_CHECK(ce != arc_corner_edge_.end() &&
                                arcs_[ce->second].filler == (TriId)t,
                            "filler edge with no neighbour off an arc base");
            }
        }
    }

    for (size_t vtx = 0; vtx < verts_.size(); ++vtx) {
        for (TriId t : incident_[vtx]) {
            PTLOC_CHECK(tris_[t].alive, "incident set references dead triangle");
            const auto& v = tris_[t].v;
            PTLOC_CHECK(v[0] == (VId)vtx || v[1] == (VId)vtx || v[2] == (VId)vtx,
                        "incident set references wrong triangle");
        }
        if (verts_[vtx].alive) {
            auto it = vert_index_.find(verts_[vtx].p);
            PTLOC_CHECK(it != vert_index_.end() && it->second == (VId)vtx,
                        "vertex index out of sync");
        }
    }

    // boundary cycle and arcs
    PTLOC_CHECK(!boundary_.empty(), "missing boundary cycle");
    const size_t n = boundary_.size();
    for (size_t i = 0; i < n; ++i) {
        Rat o = cross(pt(boundary_[(i + n - 1) % n]), pt(boundary_[i]),
                       pt(boundary_[(i + 1) % n]));
        PTLOC_CHECK(o >= 0, "boundary cycle lost convexity");
    }
    size_t covered = 0;
    for (const auto& arc : arcs_) {
        PTLOC_CHECK(arc.filler != kNone && tris_[arc.filler].alive &&
                        tris_[arc.filler].exterior,
                    "broken arc filler");
        PTLOC_CHECK(arc.run.size() >= 2 && arc.run.front() == arc.ca &&
                        arc.run.back() == arc.cb,
                    "broken arc run");
        for (VId v : arc.run) {
            PTLOC_CHECK(verts_[v].alive, "dead vertex on boundary");
            PTLOC_CHECK(orient(pt(arc.ca), pt(arc.cb), pt(v)) == 0,
                        "arc run not collinear");
        }
        covered += arc.run.size() - 1;
    }
    PTLOC_CHECK(covered == n, "arc runs do not cover the boundary cycle");
}

}  // namespace ptloc
