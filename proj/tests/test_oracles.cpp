#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ptloc/oracles.hpp"

using namespace ptloc;

namespace {

Point P(long x, long y) { return Point(Rat(x), Rat(y)); }

Chain C(std::vector<Point> pts) { return Chain(std::move(pts)); }

// The unit test workhorse: a diagonally split square centered in the box,
// with the deterministic exterior filler around it.
TriangleTiling diagonal_square() {
    Box box{0, 0, 1024, 1024};
    std::vector<Point> pts{P(200, 200), P(800, 200), P(800, 800), P(200, 800)};
    std::vector<std::array<int, 3>> tris{{0, 1, 2}, {0, 2, 3}};
    return TriangleTiling::build(box, pts, tris, {0, 0}, {0, 1, 2, 3});
}

// A convex hexagon fanned from its leftmost vertex. Its two middle fan
// triangles are much wider than the top and bottom ones, which is exactly
// the shape needed to exercise run splitting at parent-spanning triangles.
TriangleTiling fan_hexagon() {
    Box box{0, 0, 1024, 1024};
    std::vector<Point> pts{P(350, 100), P(650, 100), P(850, 500),
                           P(650, 900), P(350, 900), P(150, 500)};
    std::vector<std::array<int, 3>> tris{{5, 0, 1}, {5, 1, 2}, {5, 2, 3}, {5, 3, 4}};
    return TriangleTiling::build(box, pts, tris, {0, 0, 0, 0}, {0, 1, 2, 3, 4, 5});
}

// Look a triangle up by its (unordered) vertex set so the tests do not bake
// in construction order.
TriId find_tri(const TriangleTiling& t, const Point& a, const Point& b, const Point& c) {
    for (TriId id : t.alive_tris()) {
        auto tp = t.tri_points(id);
        for (int r = 0; r < 3; ++r) {
            if (tp[r % 3] == a && tp[(r + 1) % 3] == b && tp[(r + 2) % 3] == c) return id;
            if (tp[r % 3] == a && tp[(r + 2) % 3] == b && tp[(r + 1) % 3] == c) return id;
        }
    }
    REQUIRE(false);
    return 0;
}

std::vector<TriId> sorted_ids(std::vector<TriId> v) {
    std::sort(v.begin(), v.end());
    return v;
}

SlabSpec root_spec(const Box& box) {
    return SlabSpec{Slab{box.ll(), box.ur(), /*right_closed=*/true}, /*plain=*/true};
}

SlabSpec lex_spec(const Point& l, const Point& r) {
    return SlabSpec{Slab{l, r}, /*plain=*/false};
}

}  // namespace

TEST_CASE("exhaustive point location on the split square") {
    auto t = diagonal_square();
    TriId i_low = find_tri(t, P(200, 200), P(800, 200), P(800, 800));
    TriId i_up = find_tri(t, P(200, 200), P(800, 800), P(200, 800));
    TriId t_bot = find_tri(t, P(0, 0), P(1024, 0), P(200, 200));
    TriId f3 = find_tri(t, P(0, 1024), P(0, 0), P(200, 200));

    CHECK(brute_locate(t, P(500, 400)) == i_low);
    CHECK(brute_locate(t, P(400, 500)) == i_up);
    // On the diagonal the perturbed query drops below it.
    CHECK(brute_locate(t, P(500, 500)) == i_low);
    // On the square's top side it drops into the upper triangle.
    CHECK(brute_locate(t, P(500, 800)) == i_up);
    // At the square's corner the nearly-downward perturbation direction
    // lands in the filler wedge under it.
    CHECK(brute_locate(t, P(200, 200)) == t_bot);
    // Box corner and left box edge both resolve to the left filler.
    CHECK(brute_locate(t, P(0, 1024)) == f3);
    CHECK(brute_locate(t, P(0, 500)) == f3);

    // The canonical query domain is half-open: right edge and bottom edge
    // belong to the neighboring copies of the plane.
    CHECK_THROWS_AS(brute_locate(t, P(1024, 500)), validation_error);
    CHECK_THROWS_AS(brute_locate(t, P(500, 0)), validation_error);
    CHECK_THROWS_AS(brute_locate(t, P(0, 0)), validation_error);

    // A coarse grid must cover every triangle and never fail the
    // exactly-one-container check.
    std::set<TriId> hit;
    for (long x = 0; x < 1024; x += 64)
        for (long y = 64; y <= 1024; y += 64) hit.insert(brute_locate(t, P(x, y)));
    CHECK(hit.size() == t.alive_tris().size());
}

TEST_CASE("gap runs of the root strip") {
    auto t = diagonal_square();
    TriId t_top = find_tri(t, P(0, 1024), P(800, 800), P(1024, 1024));
    TriId t_bot = find_tri(t, P(0, 0), P(1024, 0), P(200, 200));

    auto runs = brute_gaps(t, root_spec(t.box()), {});
    REQUIRE(runs.size() == 1);
    REQUIRE(runs[0].size() == 3);

    const GapDesc& top = runs[0][0];
    CHECK_FALSE(top.blocked);
    CHECK(top.members == std::vector<TriId>{t_top});
    CHECK(top.up == C({P(0, 1024), P(1024, 1024)}));
    CHECK(top.low == C({P(0, 1024), P(800, 800), P(1024, 1024)}));

    const GapDesc& mid = runs[0][1];
    CHECK(mid.blocked);
    CHECK(mid.members.size() == t.alive_tris().size() - 2);
    CHECK(mid.up == C({P(0, 1024), P(800, 800), P(1024, 1024)}));
    CHECK(mid.low == C({P(0, 0), P(200, 200), P(1024, 0)}));

    const GapDesc& bot = runs[0][2];
    CHECK_FALSE(bot.blocked);
    CHECK(bot.members == std::vector<TriId>{t_bot});
    CHECK(bot.up == C({P(0, 0), P(200, 200), P(1024, 0)}));
    CHECK(bot.low == C({P(0, 0), P(1024, 0)}));
}

TEST_CASE("strip through the middle of the square sees only free gaps") {
    auto t = diagonal_square();
    TriId i_low = find_tri(t, P(200, 200), P(800, 200), P(800, 800));
    TriId i_up = find_tri(t, P(200, 200), P(800, 800), P(200, 800));
    TriId f1 = find_tri(t, P(200, 800), P(800, 800), P(0, 1024));
    TriId f6 = find_tri(t, P(800, 200), P(200, 200), P(1024, 0));

    auto runs = brute_gaps(t, lex_spec(P(350, 0), P(650, 0)), {root_spec(t.box())});
    REQUIRE(runs.size() == 1);
    REQUIRE(runs[0].size() == 4);
    std::vector<TriId> order{f1, i_up, i_low, f6};
    for (size_t i = 0; i < 4; ++i) {
        CHECK_FALSE(runs[0][i].blocked);
        CHECK(runs[0][i].members == std::vector<TriId>{order[i]});
    }
    CHECK(runs[0][1].up == C({P(200, 200), P(200, 800), P(800, 800)}));
    CHECK(runs[0][1].low == C({P(200, 200), P(800, 800)}));
    CHECK(runs[0][2].up == C({P(200, 200), P(800, 800)}));
}

TEST_CASE("strip overlapping the square's left part yields one blocked gap") {
    auto t = diagonal_square();
    TriId i_low = find_tri(t, P(200, 200), P(800, 200), P(800, 800));
    TriId i_up = find_tri(t, P(200, 200), P(800, 800), P(200, 800));
    TriId f1 = find_tri(t, P(200, 800), P(800, 800), P(0, 1024));
    TriId f2 = find_tri(t, P(200, 200), P(200, 800), P(0, 1024));
    TriId f3 = find_tri(t, P(0, 1024), P(0, 0), P(200, 200));
    TriId f6 = find_tri(t, P(800, 200), P(200, 200), P(1024, 0));
    auto members = sorted_ids({i_low, i_up, f2, f3, f6});

    auto runs = brute_gaps(t, lex_spec(P(150, 0), P(450, 0)), {root_spec(t.box())});
    REQUIRE(runs.size() == 1);
    REQUIRE(runs[0].size() == 2);

    const GapDesc& free = runs[0][0];
    CHECK_FALSE(free.blocked);
    CHECK(free.members == std::vector<TriId>{f1});
    CHECK(free.up == C({P(0, 1024), P(800, 800)}));
    CHECK(free.low == C({P(0, 1024), P(200, 800), P(800, 800)}));

    const GapDesc& blk = runs[0][1];
    CHECK(blk.blocked);
    CHECK(blk.members == members);
    CHECK(blk.up == C({P(0, 1024), P(200, 800), P(800, 800)}));
    CHECK(blk.low == C({P(0, 0), P(200, 200), P(1024, 0)}));

    // With a narrower parent the free band spans it too and stops emitting
    // a gap; only the blocked gap survives, unchanged.
    auto runs2 = brute_gaps(t, lex_spec(P(150, 0), P(450, 0)),
                            {lex_spec(P(100, 0), P(700, 0))});
    REQUIRE(runs2.size() == 1);
    REQUIRE(runs2[0].size() == 1);
    CHECK(runs2[0][0] == blk);
}

TEST_CASE("degenerate strip on the box wall holds the wall triangle") {
    auto t = diagonal_square();
    TriId f3 = find_tri(t, P(0, 1024), P(0, 0), P(200, 200));

    auto runs = brute_gaps(t, lex_spec(P(0, 0), P(0, 1024)), {root_spec(t.box())});
    REQUIRE(runs.size() == 1);
    REQUIRE(runs[0].size() == 1);
    CHECK_FALSE(runs[0][0].blocked);
    CHECK(runs[0][0].members == std::vector<TriId>{f3});
    CHECK(runs[0][0].up == C({P(0, 0), P(0, 1024), P(200, 200)}));
    CHECK(runs[0][0].low == C({P(0, 0), P(200, 200)}));
}

TEST_CASE("parent-spanning triangles split the gap list into runs") {
    auto t = fan_hexagon();
    TriId fan_b = find_tri(t, P(150, 500), P(350, 100), P(650, 100));
    TriId fan_t = find_tri(t, P(150, 500), P(650, 900), P(350, 900));
    TriId e_top = find_tri(t, P(350, 900), P(650, 900), P(0, 1024));
    TriId e_tl = find_tri(t, P(150, 500), P(350, 900), P(0, 1024));
    TriId e_bl = find_tri(t, P(350, 100), P(150, 500), P(0, 0));
    TriId e_tr = find_tri(t, P(650, 900), P(850, 500), P(1024, 1024));
    TriId e_br = find_tri(t, P(850, 500), P(650, 100), P(1024, 0));
    TriId e_bot = find_tri(t, P(650, 100), P(350, 100), P(1024, 0));
    TriId wide_b = find_tri(t, P(150, 500), P(650, 100), P(850, 500));
    TriId wide_t = find_tri(t, P(150, 500), P(850, 500), P(650, 900));

    // Against the root, the strip sees four gaps in one run. The upper
    // blocked gap is pinched to a point at (650,900) but remains one gap.
    auto runs = brute_gaps(t, lex_spec(P(250, 0), P(750, 0)), {root_spec(t.box())});
    REQUIRE(runs.size() == 1);
    REQUIRE(runs[0].size() == 4);

    const GapDesc& above = runs[0][0];
    CHECK(above.blocked);
    CHECK(above.members == sorted_ids({fan_t, e_top, e_tl, e_tr}));
    CHECK(above.up == C({P(0, 1024), P(650, 900), P(1024, 1024)}));
    CHECK(above.low == C({P(150, 500), P(650, 900), P(850, 500)}));

    CHECK_FALSE(runs[0][1].blocked);
    CHECK(runs[0][1].members == std::vector<TriId>{wide_t});
    CHECK_FALSE(runs[0][2].blocked);
    CHECK(runs[0][2].members == std::vector<TriId>{wide_b});
    CHECK(runs[0][1].low == C({P(150, 500), P(850, 500)}));
    CHECK(runs[0][2].up == C({P(150, 500), P(850, 500)}));

    const GapDesc& below = runs[0][3];
    CHECK(below.blocked);
    CHECK(below.members == sorted_ids({fan_b, e_bl, e_br, e_bot}));
    CHECK(below.up == C({P(150, 500), P(650, 100), P(850, 500)}));
    CHECK(below.low == C({P(0, 0), P(350, 100), P(1024, 0)}));

    // Under a parent the wide fan triangles span, they turn into silent
    // separators and the same two blocked gaps come back as separate runs.
    auto split = brute_gaps(t, lex_spec(P(250, 0), P(750, 0)),
                            {lex_spec(P(200, 0), P(800, 0))});
    REQUIRE(split.size() == 2);
    REQUIRE(split[0].size() == 1);
    REQUIRE(split[1].size() == 1);
    CHECK(split[0][0] == above);
    CHECK(split[1][0] == below);
}

TEST_CASE("nearest site breaks ties toward the lower index") {
    std::vector<Point> sites{P(0, 0), P(10, 0), P(5, 5)};
    CHECK(brute_nearest(sites, P(2, 1)) == 0);
    CHECK(brute_nearest(sites, P(9, 1)) == 1);
    CHECK(brute_nearest(sites, P(5, 4)) == 2);
    // (5,0) is equidistant from all three sites.
    CHECK(brute_nearest(sites, P(5, 0)) == 0);
    CHECK_THROWS_AS(brute_nearest({}, P(0, 0)), validation_error);
}

TEST_CASE("entropy lower bound of distributions over the split square") {
    auto t = diagonal_square();

    QueryDistribution uniform({{Rat(1),
        Polygon{P(200, 200), P(800, 200), P(800, 800), P(200, 800)}}});
    CHECK(entropy_lower_bound(t, uniform) == doctest::Approx(1.0).epsilon(1e-12));

    QueryDistribution skewed({
        {Rat(3) / Rat(4), Polygon{P(200, 200), P(800, 800), P(200, 800)}},
        {Rat(1) / Rat(4), Polygon{P(200, 200), P(800, 200), P(800, 800)}}});
    CHECK(entropy_lower_bound(t, skewed) ==
          doctest::Approx(0.8112781244591328).epsilon(1e-12));

    // Mass outside the tiling's box is a caller error.
    QueryDistribution escaping({{Rat(1),
        Polygon{P(900, 900), P(1100, 900), P(1100, 1100)}}});
    CHECK_THROWS_AS(entropy_lower_bound(t, escaping), validation_error);
}

TEST_CASE("random strips satisfy the gap partition invariants") {
    auto square = diagonal_square();
    auto hexagon = fan_hexagon();
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> coord(0, 1024);

    int done = 0;
    while (done < 60) {
        const TriangleTiling& t = (done % 2 == 0) ? square : hexagon;
        Point l = P(coord(rng), coord(rng));
        Point r = P(coord(rng), coord(rng));
        if (lex_less(r, l)) std::swap(l, r);
        if (l == r) continue;
        SlabSpec node = lex_spec(l, r);
        SlabSpec parent = root_spec(t.box());
        auto runs = brute_gaps(t, node, {parent});
        ++done;

        std::vector<TriId> seen;
        for (const auto& run : runs) {
            REQUIRE_FALSE(run.empty());
            for (const GapDesc& g : run) {
                REQUIRE_FALSE(g.members.empty());
                for (TriId id : g.members) seen.push_back(id);
                if (!g.blocked) {
                    REQUIRE(g.members.size() == 1);
                    CHECK(spec_tri_spans(node, Triangle{t.tri_points(g.members[0])}));
                }
            }
        }
        // No triangle is reported twice.
        auto dup = seen;
        std::sort(dup.begin(), dup.end());
        CHECK(std::adjacent_find(dup.begin(), dup.end()) == dup.end());

        // Every triangle meeting the strip is reported, except triangles
        // spanning the parent and zero-width slivers dropped on a wall.
        for (TriId id : t.alive_tris()) {
            Triangle tri{t.tri_points(id)};
            bool reported = std::binary_search(dup.begin(), dup.end(), id);
            if (!spec_tri_intersects(node, tri) || spec_tri_spans(parent, tri)) {
                CHECK_FALSE(reported);
                continue;
            }
            Polygon clip = clip_to_xrange(triangle_poly(tri), l.x, r.x);
            bool flat = clip.empty() || polygon_area2(clip) == 0;
            if (!flat || spec_tri_spans(node, tri)) CHECK(reported);
        }
    }
}
