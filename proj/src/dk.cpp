#include <algorithm>

#include "ptloc/tiling.hpp"

namespace ptloc {

namespace {

struct DkBuilder {
    const std::vector<Point>& P;
    std::vector<std::array<int, 3>> out;

    explicit DkBuilder(const std::vector<Point>& pts) : P(pts) {}

    void emit(int a, int b, int c) {
        PTLOC_CHECK(sgn(orient(P[a], P[b], P[c])) != 0, "degenerate dk triangle");
        out.push_back({a, b, c});
    }

    std::vector<int> path(int i, int j) const {  // vertices strictly between
        std::vector<int> v;
        const int n = (int)P.size();
        for (int k = (i + 1) % n; k != j; k = (k + 1) % n) v.push_back(k);
        return v;
    }

    // In convex position the vertices between i and j are either all on the
    // chord or all strictly off it, so one probe settles straightness.
    bool straight(int i, int j, const std::vector<int>& between) const {
        if (between.empty()) return true;
        return sgn(orient(P[i], P[j], P[between[(between.size() - 1) / 2]])) == 0;
    }

    // Region between chord (i,j) and the boundary path i..j; the caller
    // guarantees at least one off-chord vertex in between.
    void bisect(int i, int j) {
        auto mids = path(i, j);
        PTLOC_CHECK(!mids.empty(), "bisect on empty side");
        int m = mids[(mids.size() - 1) / 2];
        PTLOC_CHECK(sgn(orient(P[i], P[j], P[m])) != 0, "bisect on straight side");
        auto left = path(i, m);
        auto rightv = path(m, j);
        bool sl = straight(i, m, left);
        bool sr = straight(m, j, rightv);
        if (!sl && !sr) {
            emit(i, m, j);
            bisect(i, m);
            bisect(m, j);
        } else if (sl && !sr) {
            fan_over(j, i, m);  // covers triangle (i,m,j) with the run split
            bisect(m, j);
        } else if (!sl && sr) {
            fan_over(i, m, j);
            bisect(i, m);
        } else {
            std::vector<int> cyc;
            cyc.push_back(i);
            for (int k : left) cyc.push_back(k);
            cyc.push_back(m);
            for (int k : rightv) cyc.push_back(k);
            cyc.push_back(j);
            center(cyc);
        }
    }

    // Fan from apex over the boundary path a..b (inclusive endpoints).
    void fan_over(int apex, int a, int b) {
        const int n = (int)P.size();
        for (int k = a; k != b; k = (k + 1) % n) emit(apex, k, (k + 1) % n);
    }

    // Convex cycle with collinear runs: split run vertices off toward a
    // vertex outside their line until only strict corners remain.
    void center(const std::vector<int>& cyc) {
        const size_t n = cyc.size();
        if (n < 3) return;
        for (size_t r = 0; r < n; ++r) {
            int pv = cyc[(r + n - 1) % n], cv = cyc[r], nv = cyc[(r + 1) % n];
            if (sgn(orient(P[pv], P[cv], P[nv])) != 0) continue;
            size_t z = n;
            for (size_t c = 0; c < n; ++c) {
                if (sgn(orient(P[pv], P[cv], P[cyc[c]])) != 0) { z = c; break; }
            }
            PTLOC_CHECK(z != n, "flat center cycle");
            std::vector<int> c1, c2;
            for (size_t k = r;; k = (k + 1) % n) {
                c1.push_back(cyc[k]);
                if (k == z) break;
            }
            for (size_t k = z;; k = (k + 1) % n) {
                c2.push_back(cyc[k]);
                if (k == r) break;
            }
            center(c1);
            center(c2);
            return;
        }
        for (size_t k = 1; k + 1 < n; ++k) emit(cyc[0], cyc[k], cyc[k + 1]);
    }
};

}  // namespace

std::vector<std::array<int, 3>> dk_triangulate(const std::vector<Point>& P) {
    const int n = (int)P.size();
    PTLOC_VALIDATE(n >= 3, "polygon needs at least three vertices");
    Rat area = 0;
    for (int i = 0; i < n; ++i) {
        const Point& a = P[i];
        const Point& b = P[(i + 1) % n];
        area += a.x * b.y - b.x * a.y;
    }
    PTLOC_VALIDATE(area > 0, "polygon must be counterclockwise and non-degenerate");
    std::vector<int> corners;
    for (int i = 0; i < n; ++i) {
        Rat o = cross(P[(i + n - 1) % n], P[i], P[(i + 1) % n]);
        PTLOC_VALIDATE(o >= 0, "polygon not convex");
        if (o > 0) corners.push_back(i);
    }
    PTLOC_VALIDATE((int)corners.size() >= 3, "degenerate polygon");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            PTLOC_VALIDATE(!(P[i] == P[j]), "repeated polygon vertex");

    DkBuilder B(P);
    const size_t t = corners.size();
    int x = corners[0];
    int y = corners[(t + 2) / 3];      // ⌈t/3⌉
    int z = corners[(2 * t + 2) / 3];  // ⌈2t/3⌉
    std::vector<int> cyc;
    for (int side = 0; side < 3; ++side) {
        int a = side == 0 ? x : side == 1 ? y : z;
        int b = side == 0 ? y : side == 1 ? z : x;
        cyc.push_back(a);
        auto between = B.path(a, b);
        if (B.straight(a, b, between)) {
            for (int k : between) cyc.push_back(k);
        } else {
            B.bisect(a, b);
        }
    }
    B.center(cyc);
    PTLOC_CHECK((int)B.out.size() == n - 2, "dk triangle count off");
    return B.out;
}

int count_segment_crossings(const std::vector<Point>& poly,
                            const std::vector<std::array<int, 3>>& tris,
                            const Point& a, const Point& b) {
    int c = 0;
    for (const auto& t : tris) {
        Triangle tr{{poly[t[0]], poly[t[1]], poly[t[2]]}};
        if (segment_crosses_triangle_interior(Segment{a, b}, tr)) ++c;
    }
    return c;
}

}  // namespace ptloc
