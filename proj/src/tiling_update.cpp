#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "ptloc/tiling.hpp"

namespace ptloc {

namespace {

// Largest y of the component's triangles along the vertical line at x.
Rat max_y_at(const TriangleTiling& T, const std::vector<TriId>& comp, const Rat& x) {
    bool got = false;
    Rat best = 0;
    for (TriId t : comp) {
        auto p = T.tri_points(t);
        for (int i = 0; i < 3; ++i) {
            const Point& a = p[i];
            const Point& b = p[(i + 1) % 3];
            if (rat_min(a.x, b.x) > x || rat_max(a.x, b.x) < x) continue;
            Rat y;
            if (a.x == b.x)
                y = rat_max(a.y, b.y);
            else
                y = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
            if (!got || y > best) best = y, got = true;
        }
    }
    PTLOC_CHECK(got, "component does not touch the strip");
    return best;
}

}  // namespace

std::vector<std::vector<TriId>> topological_components(
    const TriangleTiling& tiling, const std::vector<TriId>& members,
    const Rat& x0, const Rat& x1) {
    std::set<TriId> mset(members.begin(), members.end());
    PTLOC_CHECK(mset.size() == members.size(), "duplicate member triangle");

    // adjacency restricted to contacts crossing the open strip
    std::map<TriId, std::vector<TriId>> undirected;
    std::map<TriId, std::vector<TriId>> below;  // DAG edges upper -> lower
    std::map<TriId, int> indeg;
    for (TriId t : members) indeg[t] = 0;
    for (TriId t : members) {
        for (const TriNeighbor& nb : tiling.neighbors_of(t)) {
            if (!mset.count(nb.tri)) continue;
            if (!(nb.b.x > x0 && nb.a.x < x1)) continue;
            undirected[t].push_back(nb.tri);
            if (nb.tri < t) continue;  // handle each pair once
            auto side = [&](TriId tr) {
                auto p = tiling.tri_points(tr);
                for (int i = 0; i < 3; ++i) {
                    int s = sgn(orient(nb.a, nb.b, p[i]));
                    if (s != 0) return s;
                }
                PTLOC_CHECK(false, "triangle flat against its own edge");
                return 0;
            };
            int st = side(t), so = side(nb.tri);
            PTLOC_CHECK(st * so < 0, "neighbours on the same side of a shared edge");
            TriId up = st > 0 ? t : nb.tri;
            TriId dn = st > 0 ? nb.tri : t;
            below[up].push_back(dn);
            ++indeg[dn];
        }
    }

    // cycle check over the whole member set
    std::priority_queue<TriId, std::vector<TriId>, std::greater<TriId>> q;
    for (auto& [t, d] : indeg)
        if (d == 0) q.push(t);
    size_t popped = 0;
    while (!q.empty()) {
        TriId t = q.top();
        q.pop();
        ++popped;
        for (TriId d : below[t])
            if (--indeg[d] == 0) q.push(d);
    }
    PTLOC_CHECK(popped == members.size(), "cycle in the above/below relation");

    // connected components
    std::set<TriId> seen;
    std::vector<std::vector<TriId>> comps;
    for (TriId t : members) {
        if (seen.count(t)) continue;
        std::vector<TriId> comp, stack{t};
        seen.insert(t);
        while (!stack.empty()) {
            TriId c = stack.back();
            stack.pop_back();
            comp.push_back(c);
            for (TriId nb : undirected[c])
                if (!seen.count(nb)) seen.insert(nb), stack.push_back(nb);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }

    // top-to-bottom: where x-extents overlap inside the strip, compare the
    // upper envelopes at a shared abscissa; otherwise fall back to the
    // highest vertex
    auto extent = [&](const std::vector<TriId>& comp) {
        Rat lo = x1, hi = x0;
        for (TriId t : comp) {
            for (const Point& p : tiling.tri_points(t)) {
                lo = rat_min(lo, p.x);
                hi = rat_max(hi, p.x);
            }
        }
        return std::pair<Rat, Rat>{rat_max(lo, x0), rat_min(hi, x1)};
    };
    auto topmost = [&](const std::vector<TriId>& comp) {
        Rat best = tiling.tri_points(comp[0])[0].y;
        for (TriId t : comp)
            for (const Point& p : tiling.tri_points(t)) best = rat_max(best, p.y);
        return best;
    };
    std::stable_sort(comps.begin(), comps.end(),
                     [&](const std::vector<TriId>& a, const std::vector<TriId>& b) {
                         auto ea = extent(a), eb = extent(b);
                         Rat lo = rat_max(ea.first, eb.first);
                         Rat hi = rat_min(ea.second, eb.second);
                         if (lo < hi) {
                             Rat x = (lo + hi) / 2;
                             Rat ya = max_y_at(tiling, a, x);
                             Rat yb = max_y_at(tiling, b, x);
                             PTLOC_CHECK(ya != yb, "overlapping components");
                             return ya > yb;
                         }
                         return topmost(a) > topmost(b);
                     });
    return comps;
}

TriangulationUpdate make_flip(const TriangleTiling& t, TriId t1, TriId t2) {
    PTLOC_VALIDATE(t1 != t2, "flip needs two distinct triangles");
    std::optional<TriNeighbor> shared;
    for (const TriNeighbor& nb : t.neighbors_of(t1))
        if (nb.tri == t2) shared = nb;
    PTLOC_VALIDATE(shared.has_value(), "triangles do not share an edge");
    PTLOC_VALIDATE(!t.tri(t1).exterior && !t.tri(t2).exterior,
                   "cannot flip filler triangles");
    PTLOC_VALIDATE(t.tri(t1).face == t.tri(t2).face,
                   "flip across a face boundary");

    auto apexOf = [&](TriId tr) {
        for (const Point& p : t.tri_points(tr))
            if (sgn(orient(shared->a, shared->b, p)) != 0) return p;
        PTLOC_CHECK(false, "flat triangle");
        return Point{};
    };
    Point c = apexOf(t1), d = apexOf(t2);
    // the full edge must be shared, otherwise the quad is not a quad
    for (TriId tr : {t1, t2}) {
        auto p = t.tri_points(tr);
        bool hasA = false, hasB = false;
        for (const Point& q : p) {
            if (q == shared->a) hasA = true;
            if (q == shared->b) hasB = true;
        }
        PTLOC_VALIDATE(hasA && hasB, "edge only partially shared; cannot flip");
    }
    int sa = sgn(orient(c, d, shared->a));
    int sb = sgn(orient(c, d, shared->b));
    PTLOC_VALIDATE(sa * sb < 0, "flip quad not strictly convex");

    TriangulationUpdate u;
    u.removed = {t1, t2};
    u.added.push_back({{c, d, shared->a}, t.tri(t1).face});
    u.added.push_back({{c, d, shared->b}, t.tri(t1).face});
    return u;
}

TriangulationUpdate make_insert_vertex(const TriangleTiling& t, TriId in,
                                       const Point& p) {
    PTLOC_VALIDATE(!t.tri(in).exterior, "cannot split filler triangles");
    auto tp = t.tri_points(in);
    for (int i = 0; i < 3; ++i)
        PTLOC_VALIDATE(orient(tp[i], tp[(i + 1) % 3], p) > 0,
                       "new vertex must be strictly inside the triangle");
    TriangulationUpdate u;
    u.removed = {in};
    for (int i = 0; i < 3; ++i)
        u.added.push_back({{tp[i], tp[(i + 1) % 3], p}, t.tri(in).face});
    return u;
}

TriangulationUpdate make_remove_vertex(const TriangleTiling& t, const Point& p) {
    auto vid = t.find_vertex(p);
    PTLOC_VALIDATE(vid.has_value(), "no vertex at that point");
    const auto& inc = t.incident(*vid);
    PTLOC_VALIDATE(inc.size() == 3, "vertex degree must be exactly 3");
    int face = -1;
    std::vector<Point> ring;
    for (TriId tr : inc) {
        PTLOC_VALIDATE(t.tri(tr).alive, "stale incidence");
        PTLOC_VALIDATE(!t.tri(tr).exterior, "cannot remove a filler vertex");
        if (face < 0) face = t.tri(tr).face;
        PTLOC_VALIDATE(t.tri(tr).face == face, "vertex sits on a face boundary");
        for (const Point& q : t.tri_points(tr)) {
            if (q == p) continue;
            bool seen = false;
            for (const Point& r : ring) seen = seen || r == q;
            if (!seen) ring.push_back(q);
        }
    }
    PTLOC_VALIDATE(ring.size() == 3, "link of the vertex is not a triangle");
    // the hole left behind must be a genuine triangle
    PTLOC_VALIDATE(sgn(orient(ring[0], ring[1], ring[2])) != 0,
                   "link triangle is degenerate");
    TriangulationUpdate u;
    u.removed.assign(inc.begin(), inc.end());
    u.added.push_back({{ring[0], ring[1], ring[2]}, face});
    return u;
}

}  // namespace ptloc
