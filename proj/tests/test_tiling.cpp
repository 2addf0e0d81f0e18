#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <vector>

#include "ptloc/tiling.hpp"

using namespace ptloc;

namespace {

Point P(long x, long y) { return Point(Rat(x), Rat(y)); }

// n distinct rational points on a circle, counterclockwise, strictly convex.
std::vector<Point> circle_points(int n, long cx, long cy, long r) {
    std::vector<Point> out;
    out.reserve(n);
    for (int k = 0; k < n; ++k) {
        Rat t = Rat(8 * k - 4 * n) / Rat(n);
        Rat t2 = t * t;
        Rat den = Rat(1) + t2;
        out.push_back(Point(Rat(cx) + Rat(r) * (Rat(1) - t2) / den,
                            Rat(cy) + Rat(r) * Rat(2) * t / den));
    }
    return out;
}

std::vector<Point> square_pts() {
    return {P(200, 200), P(800, 200), P(800, 800), P(200, 800)};
}

std::vector<Point> hexagon_pts() {
    return {P(200, 0), P(600, 0), P(800, 400), P(600, 800), P(200, 800), P(0, 400)};
}

// Square boundary with each side cut into `k` equal pieces.
std::vector<Point> subdivided_square(long lo, long hi, int k) {
    std::vector<Point> out;
    long step = (hi - lo) / k;
    for (int i = 0; i < k; ++i) out.push_back(P(lo + i * step, lo));
    for (int i = 0; i < k; ++i) out.push_back(P(hi, lo + i * step));
    for (int i = 0; i < k; ++i) out.push_back(P(hi - i * step, hi));
    for (int i = 0; i < k; ++i) out.push_back(P(lo, hi - i * step));
    return out;
}

void check_conforming(const std::vector<Point>& poly,
                      const std::vector<std::array<int, 3>>& tris) {
    REQUIRE(tris.size() == poly.size() - 2);
    int n = static_cast<int>(poly.size());
    Rat total = 0;
    std::map<std::pair<int, int>, int> edges;
    for (const auto& t : tris) {
        Rat a2 = cross(poly[t[0]], poly[t[1]], poly[t[2]]);
        CHECK(a2 > 0);
        total += a2;
        for (int i = 0; i < 3; ++i) {
            int u = t[i], v = t[(i + 1) % 3];
            if (u > v) std::swap(u, v);
            edges[{u, v}] += 1;
        }
    }
    CHECK(total == polygon_area2(poly));
    int boundary_edges = 0;
    for (const auto& [e, c] : edges) {
        CHECK(c <= 2);
        if (c == 1) {
            bool on_cycle =
                (e.second == e.first + 1) || (e.first == 0 && e.second == n - 1);
            CHECK(on_cycle);
            ++boundary_edges;
        }
    }
    CHECK(boundary_edges == n);
}

int max_chord_crossings(const std::vector<Point>& poly,
                        const std::vector<std::array<int, 3>>& tris) {
    int best = 0;
    int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int c = count_segment_crossings(poly, tris, poly[i], poly[j]);
            if (c > best) best = c;
        }
    return best;
}

TriangleTiling make_tiling(const Box& box, const std::vector<Point>& poly) {
    auto tris = dk_triangulate(poly);
    std::vector<int> faces(tris.size(), 0);
    std::vector<int> boundary(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) boundary[i] = static_cast<int>(i);
    return TriangleTiling::build(box, poly, tris, faces, boundary);
}

TriId tri_with_points(const TriangleTiling& T, const std::vector<Point>& want,
                      bool interior_only = true) {
    for (TriId t : T.alive_tris()) {
        if (interior_only && T.tri(t).exterior) continue;
        auto pts = T.tri_points(t);
        bool all = true;
        for (const auto& w : want) {
            if (!(pts[0] == w || pts[1] == w || pts[2] == w)) {
                all = false;
                break;
            }
        }
        if (all) return t;
    }
    return kNone;
}

// True iff the closed segment p-q meets the closed convex hull region.
bool segment_hits_hull(const std::vector<Point>& hull, const Point& p, const Point& q) {
    Rat lo = 0, hi = 1;
    int n = static_cast<int>(hull.size());
    for (int i = 0; i < n; ++i) {
        const Point& a = hull[i];
        const Point& b = hull[(i + 1) % n];
        Rat f0 = cross(a, b, p);
        Rat f1 = cross(a, b, q);
        Rat d = f1 - f0;
        if (d == 0) {
            if (f0 < 0) return false;
        } else {
            Rat t = -f0 / d;
            if (d > 0) {
                if (t > lo) lo = t;
            } else {
                if (t < hi) hi = t;
            }
        }
        if (lo > hi) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("dk_triangulate rejects bad input") {
    CHECK_THROWS_AS(dk_triangulate({P(0, 0), P(4, 0)}), validation_error);
    // fully collinear
    CHECK_THROWS_AS(dk_triangulate({P(0, 0), P(2, 0), P(5, 0)}), validation_error);
    CHECK_THROWS_AS(dk_triangulate({P(0, 0), P(2, 2), P(4, 4), P(6, 6)}),
                    validation_error);
    // clockwise
    CHECK_THROWS_AS(dk_triangulate({P(0, 0), P(0, 4), P(4, 4), P(4, 0)}),
                    validation_error);
    // reflex vertex
    CHECK_THROWS_AS(dk_triangulate({P(0, 0), P(8, 0), P(4, 3), P(4, 8)}),
                    validation_error);
    // duplicate vertex
    CHECK_THROWS_AS(dk_triangulate({P(0, 0), P(8, 0), P(8, 8), P(0, 0), P(0, 8)}),
                    validation_error);
}

TEST_CASE("dk_triangulate small polygons") {
    auto sq = square_pts();
    auto sq_tris = dk_triangulate(sq);
    CHECK(sq_tris.size() == 2);
    check_conforming(sq, sq_tris);

    auto hex = hexagon_pts();
    auto hex_tris = dk_triangulate(hex);
    CHECK(hex_tris.size() == 4);
    check_conforming(hex, hex_tris);
    CHECK(max_chord_crossings(hex, hex_tris) <= 3);
}

TEST_CASE("dk_triangulate 64-gon chord bound") {
    auto poly = circle_points(64, 512, 512, 400);
    auto tris = dk_triangulate(poly);
    CHECK(tris.size() == 62);
    check_conforming(poly, tris);
    // balanced recursion keeps every chord under 2*log2(64) crossings
    CHECK(max_chord_crossings(poly, tris) <= 12);
}

TEST_CASE("dk_triangulate with collinear runs") {
    auto poly = subdivided_square(0, 12, 3);
    auto tris = dk_triangulate(poly);
    check_conforming(poly, tris);

    // triangle with each side split in two
    std::vector<Point> tr = {P(0, 0), P(4, 0),  P(8, 0),
                             P(6, 4), P(4, 8), P(2, 4)};
    auto tr_tris = dk_triangulate(tr);
    check_conforming(tr, tr_tris);

    // one long run next to a short opposite side
    std::vector<Point> mix = {P(0, 0), P(2, 0), P(4, 0), P(6, 0), P(8, 0),
                              P(8, 6), P(0, 6)};
    auto mix_tris = dk_triangulate(mix);
    check_conforming(mix, mix_tris);
}

TEST_CASE("tiling build on a square") {
    Box box{Rat(0), Rat(0), Rat(1024), Rat(1024)};
    auto T = make_tiling(box, square_pts());
    T.check();

    CHECK(T.interior_count() == 2);
    CHECK(T.alive_count() == 10);  // 8 exterior filler triangles
    CHECK(T.boundary_cycle().size() == 4);
    REQUIRE(T.arcs().size() == 4);
    for (const auto& arc : T.arcs()) {
        CHECK(arc.filler != kNone);
        CHECK(T.tri(arc.filler).exterior);
        CHECK(arc.run.size() == 2);
    }

    // each interior triangle touches the other one plus two arc fillers
    for (TriId t : T.alive_interior_tris()) {
        auto nb = T.neighbors_of(t);
        CHECK(nb.size() == 3);
    }

    CHECK(T.find_vertex(P(200, 200)).has_value());
    CHECK(!T.find_vertex(P(5, 5)).has_value());
    CHECK(T.find_vertex(box.ul()).has_value());
}

TEST_CASE("tiling build rejects bad boundaries") {
    Box box{Rat(0), Rat(0), Rat(1024), Rat(1024)};

    // reflex boundary vertex, interior triangulation itself consistent
    std::vector<Point> dent = {P(200, 200), P(800, 200), P(800, 800),
                               P(500, 500), P(200, 800)};
    std::vector<std::array<int, 3>> dent_tris = {{0, 1, 3}, {1, 2, 3}, {0, 3, 4}};
    std::vector<int> faces(dent_tris.size(), 0);
    std::vector<int> cyc = {0, 1, 2, 3, 4};
    CHECK_THROWS_AS(TriangleTiling::build(box, dent, dent_tris, faces, cyc),
                    validation_error);

    // boundary touching the box edge
    Box tight{Rat(200), Rat(200), Rat(1024), Rat(1024)};
    CHECK_THROWS_AS(make_tiling(tight, square_pts()), validation_error);

    // interior triangulation that does not cover the region
    auto sq = square_pts();
    std::vector<Point> pts = sq;
    pts.push_back(P(500, 500));
    std::vector<std::array<int, 3>> gap = {{0, 1, 4}, {1, 2, 4}, {0, 2, 3}};
    std::vector<int> f3(3, 0);
    CHECK_THROWS_AS(TriangleTiling::build(box, pts, gap, f3, {0, 1, 2, 3}),
                    validation_error);
}

TEST_CASE("tiling build with subdivided boundary runs") {
    Box box{Rat(0), Rat(0), Rat(1024), Rat(1024)};
    auto poly = subdivided_square(200, 800, 2);  // midpoint on each side
    auto T = make_tiling(box, poly);
    T.check();

    CHECK(T.interior_count() == 6);
    CHECK(T.boundary_cycle().size() == 8);
    REQUIRE(T.arcs().size() == 4);
    for (const auto& arc : T.arcs()) {
        CHECK(arc.run.size() == 3);
        // the arc filler bridges to the interior triangles on each sub-edge
        auto nb = T.neighbors_of(arc.filler);
        int interior_touch = 0;
        for (const auto& r : nb)
            if (!T.tri(r.tri).exterior) ++interior_touch;
        CHECK(interior_touch == 2);
    }
}

TEST_CASE("tiling build on a 48-gon with ring layers") {
    Box box{Rat(0), Rat(0), Rat(1024), Rat(1024)};
    auto poly = circle_points(48, 512, 512, 400);
    auto T = make_tiling(box, poly);
    T.check();
    CHECK(T.interior_count() == 46);
    for (const auto& arc : T.arcs()) CHECK(arc.filler != kNone);

    // exterior stabbing stays logarithmic: random segments outside the hull
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<long> coord(1, 1023);
    std::vector<TriId> ext;
    for (TriId t : T.alive_tris())
        if (T.tri(t).exterior) ext.push_back(t);
    int tried = 0, max_cross = 0;
    while (tried < 100) {
        Point a = P(coord(rng), coord(rng));
        Point b = P(coord(rng), coord(rng));
        if (a == b || segment_hits_hull(poly, a, b)) continue;
        ++tried;
        int c = 0;
        for (TriId t : ext)
            if (segment_crosses_triangle_interior(Segment{a, b}, T.triangle_of(t))) ++c;
        if (c > max_cross) max_cross = c;
    }
    CHECK(max_cross <= 40);  // loose sanity bound; growth is checked elsewhere
}

TEST_CASE("flip update") {
    Box box{Rat(0), Rat(0), Rat(1024), Rat(1024)};
    auto T = make_tiling(box, square_pts());
    auto before_ext = std::set<TriId>();
    for (TriId t : T.alive_tris())
        if (T.tri(t).exterior) before_ext.insert(t);

    auto ints = T.alive_interior_tris();
    REQUIRE(ints.size() == 2);
    auto u = make_flip(T, ints[0], ints[1]);
    CHECK(u.removed.size() == 2);
    CHECK(u.added.size() == 2);

    // which diagonal does the triangulation use now?
    bool had_main = tri_with_points(T, {P(200, 200), P(800, 800)}) != kNone;
    T.apply_update(u);
    T.check();
    CHECK(T.interior_count() == 2);
    bool has_main = tri_with_points(T, {P(200, 200), P(800, 800)}) != kNone;
    CHECK(had_main != has_main);

    // flip back
    ints = T.alive_interior_tris();
    T.apply_update(make_flip(T, ints[0], ints[1]));
    T.check();
    CHECK((tri_with_points(T, {P(200, 200), P(800, 800)}) != kNone) == had_main);

    auto after_ext = std::set<TriId>();
    for (TriId t : T.alive_tris())
        if (T.tri(t).exterior) after_ext.insert(t);
    CHECK(before_ext == after_ext);
}

TEST_CASE("vertex insertion update") {
    Box box{Rat(0), Rat(0), Rat(1024), Rat(1024)};
    auto T = make_tiling(box, square_pts());
    TriId t0 = T.alive_interior_tris()[0];
    auto pts = T.tri_points(t0);
    Point c((pts[0].x + pts[1].x + pts[2].x) / 3, (pts[0].y + pts[1].y + pts[2].y) / 3);

    auto u = make_insert_vertex(T, t0, c);
    CHECK(u.removed.size() == 1);
    CHECK(u.added.size() == 3);
    T.apply_update(u);
    T.check();
    CHECK(T.interior_count() == 4);
    CHECK(T.find_vertex(c).has_value());
}

TEST_CASE("boundary run split and merge") {
    Box box{Rat(0), Rat(0), Rat(1024), Rat(1024)};
    auto T = make_tiling(box, square_pts());
    Point A = P(200, 200), B = P(800, 200), M = P(500, 200);

    TriId owner = tri_with_points(T, {A, B});
    REQUIRE(owner != kNone);
    auto pts = T.tri_points(owner);
    Point X;
    for (const auto& p : pts)
        if (p != A && p != B) X = p;

    TriangulationUpdate split;
    split.removed = {owner};
    split.added.push_back({{A, M, X}, 0});
    split.added.push_back({{M, B, X}, 0});
    T.apply_update(split);
    T.check();

    CHECK(T.boundary_cycle().size() == 5);
    CHECK(T.interior_count() == 3);
    int split_arc = -1;
    for (size_t i = 0; i < T.arcs().size(); ++i)
        if (T.arcs()[i].run.size() == 3) split_arc = static_cast<int>(i);
    REQUIRE(split_arc >= 0);
    const auto& arc = T.arcs()[split_arc];
    CHECK(T.pt(arc.run[1]) == M);
    auto nb = T.neighbors_of(arc.filler);
    int interior_touch = 0;
    for (const auto& r : nb)
        if (!T.tri(r.tri).exterior) ++interior_touch;
    CHECK(interior_touch == 2);

    // merge the run back together
    TriId left = tri_with_points(T, {A, M, X});
    TriId right = tri_with_points(T, {M, B, X});
    REQUIRE(left != kNone);
    REQUIRE(right != kNone);
    TriangulationUpdate merge;
    merge.removed = {left, right};
    merge.added.push_back({{A, B, X}, 0});
    T.apply_update(merge);
    T.check();
    CHECK(T.boundary_cycle().size() == 4);
    CHECK(!T.find_vertex(M).has_value());
}

TEST_CASE("apply_update rejects malformed updates") {
    Box box{Rat(0), Rat(0), Rat(1024), Rat(1024)};
    auto T = make_tiling(box, square_pts());
    auto ints = T.alive_interior_tris();
    REQUIRE(ints.size() == 2);

    // identity is a no-op
    T.apply_update(TriangulationUpdate{});
    T.check();

    // area mismatch
    TriangulationUpdate bad;
    bad.removed = {ints[0]};
    auto pts = T.tri_points(ints[0]);
    Point c((pts[0].x + pts[1].x + pts[2].x) / 3, (pts[0].y + pts[1].y + pts[2].y) / 3);
    bad.added.push_back({{pts[0], pts[1], c}, 0});
    CHECK_THROWS_AS(T.apply_update(bad), validation_error);
    T.check();
    CHECK(T.interior_count() == 2);

    // T-junction: new vertex on the internal boundary of the removed region
    auto diag_pts = T.tri_points(ints[0]);
    // find the edge shared with the other interior triangle
    Point d1, d2, apex;
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i) {
        Point u = diag_pts[i], v = diag_pts[(i + 1) % 3];
        auto other = T.tri_points(ints[1]);
        int hits = 0;
        for (const auto& p : other)
            if (p == u || p == v) ++hits;
        if (hits == 2) {
            d1 = u;
            d2 = v;
            apex = diag_pts[(i + 2) % 3];
            found = true;
        }
    }
    REQUIRE(found);
    Point mid((d1.x + d2.x) / 2, (d1.y + d2.y) / 2);
    TriangulationUpdate tj;
    tj.removed = {ints[0]};
    tj.added.push_back({{d1, mid, apex}, 0});
    tj.added.push_back({{mid, d2, apex}, 0});
    CHECK_THROWS_AS(T.apply_update(tj), validation_error);
    T.check();
    CHECK(!T.find_vertex(mid).has_value());

    // removing an exterior triangle
    TriId ext = kNone;
    for (TriId t : T.alive_tris())
        if (T.tri(t).exterior) ext = t;
    REQUIRE(ext != kNone);
    TriangulationUpdate rem_ext;
    rem_ext.removed = {ext};
    auto ep = T.tri_points(ext);
    rem_ext.added.push_back({{ep[0], ep[1], ep[2]}, 0});
    CHECK_THROWS_AS(T.apply_update(rem_ext), validation_error);

    // referencing a dead id
    auto flip = make_flip(T, ints[0], ints[1]);
    T.apply_update(flip);
    TriangulationUpdate dead;
    dead.removed = {ints[0]};  // no longer alive
    dead.added.push_back({{diag_pts[0], diag_pts[1], diag_pts[2]}, 0});
    CHECK_THROWS_AS(T.apply_update(dead), validation_error);
}

TEST_CASE("topological components in a strip") {
    Box box{Rat(0), Rat(0), Rat(1024), Rat(1024)};
    auto T = make_tiling(box, square_pts());

    TriId top = tri_with_points(T, {box.ul(), box.ur()}, false);
    TriId bottom = tri_with_points(T, {box.ll(), box.lr()}, false);
    REQUIRE(top != kNone);
    REQUIRE(bottom != kNone);

    // two isolated fillers, top listed first
    auto comps = topological_components(T, {bottom, top}, Rat(400), Rat(600));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<TriId>{top});
    CHECK(comps[1] == std::vector<TriId>{bottom});

    // the interior triangles share the diagonal inside the strip
    auto ints = T.alive_interior_tris();
    auto joint = topological_components(T, ints, Rat(400), Rat(600));
    REQUIRE(joint.size() == 1);
    CHECK(joint[0].size() == 2);

    // all triangles meeting the strip: top filler first, bottom filler last
    std::vector<TriId> members;
    for (TriId t : T.alive_tris()) {
        auto tp = T.tri_points(t);
        Rat lo = tp[0].x, hi = tp[0].x;
        for (const auto& p : tp) {
            lo = rat_min(lo, p.x);
            hi = rat_max(hi, p.x);
        }
        if (hi > 400 && lo < 600) members.push_back(t);
    }
    auto all = topological_components(T, members, Rat(400), Rat(600));
    size_t listed = 0;
    for (const auto& c : all) listed += c.size();
    CHECK(listed == members.size());
    bool top_first = false, bottom_last = false;
    for (TriId t : all.front())
        if (t == top) top_first = true;
    for (TriId t : all.back())
        if (t == bottom) bottom_last = true;
    CHECK(top_first);
    CHECK(bottom_last);

    // deterministic
    auto again = topological_components(T, members, Rat(400), Rat(600));
    CHECK(again == all);
}
