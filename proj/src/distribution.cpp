#include "ptloc/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ptloc {

Rat random_unit(Rng& rng) {
    unsigned long bits = static_cast<unsigned long>(rng() >> 11);
    Rat r(bits);
    mpq_class denom(1);
    denom <<= 53;
    return Rat(r / denom);
}

XMassProfile XMassProfile::build(const std::vector<std::pair<Polygon, Rat>>& weighted) {
    XMassProfile pr;
    // Per x breakpoint, accumulated deltas of the linear width integrand
    // (c0 + c1*x). A ccw polygon contributes +line over leftward edges (its
    // upper boundary) and -line over rightward edges (its lower boundary).
    std::map<Rat, std::pair<Rat, Rat>> deltas;
    for (const auto& [poly, mass] : weighted) {
        if (poly.size() < 3 || mass == 0) continue;
        Rat area2 = polygon_area2(poly);
        PTLOC_CHECK(area2 > 0, "profile polygon must be ccw with positive area");
        Rat scale = 2 * mass / area2;  // density per unit area times dy factor
        size_t n = poly.size();
        for (size_t i = 0; i < n; ++i) {
            const Point& p = poly[i];
            const Point& q = poly[(i + 1) % n];
            if (p.x == q.x) continue;
            Rat m = (q.y - p.y) / (q.x - p.x);
            Rat y0 = p.y - m * p.x;
            Rat sgn_edge = p.x < q.x ? Rat(-1) : Rat(1);
            Rat xa = rat_min(p.x, q.x), xb = rat_max(p.x, q.x);
            Rat dc0 = sgn_edge * scale * y0;
            Rat dc1 = sgn_edge * scale * m;
            auto& da = deltas[xa];
            da.first += dc0;
            da.second += dc1;
            auto& db = deltas[xb];
            db.first -= dc0;
            db.second -= dc1;
        }
    }
    if (deltas.empty()) return pr;
    Rat f(0), c0(0), c1(0);
    Rat prev;
    bool first = true;
    for (const auto& [x, d] : deltas) {
        if (!first) {
            f += c0 * (x - prev) + c1 * (x * x - prev * prev) / 2;
        }
        c0 += d.first;
        c1 += d.second;
        pr.xs_.push_back(x);
        pr.f0_.push_back(f);
        pr.c0_.push_back(c0);
        pr.c1_.push_back(c1);
        prev = x;
        first = false;
    }
    pr.total_ = pr.f0_.back();
    PTLOC_CHECK(pr.c0_.back() == 0 && pr.c1_.back() == 0,
                "x mass profile must flatten after the last breakpoint");
    return pr;
}

Rat XMassProfile::eval(const Rat& x) const {
    if (xs_.empty() || x <= xs_.front()) return 0;
    if (x >= xs_.back()) return total_;
    size_t i = std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin() - 1;
    return f0_[i] + c0_[i] * (x - xs_[i]) + c1_[i] * (x * x - xs_[i] * xs_[i]) / 2;
}

Rat XMassProfile::mass_of_xrange(const Rat& x0, const Rat& x1) const {
    if (x1 <= x0) return 0;
    return eval(x1) - eval(x0);
}

QueryDistribution::QueryDistribution(std::vector<std::pair<Rat, Polygon>> comps) {
    Rat sum(0);
    for (auto& [w, poly] : comps) {
        PTLOC_VALIDATE(w >= 0, "component weight must be nonnegative");
        Rat area2 = polygon_area2(poly);
        if (area2 < 0) {
            std::reverse(poly.begin(), poly.end());
            area2 = -area2;
        }
        PTLOC_VALIDATE(area2 > 0, "component support must have positive area");
        size_t n = poly.size();
        for (size_t i = 0; i < n; ++i) {
            PTLOC_VALIDATE(orient(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) >= 0,
                           "component support must be convex");
        }
        sum += w;
        if (w > 0) comps_.push_back({w, poly, area2});
    }
    PTLOC_VALIDATE(sum == 1, "component weights must sum to one");
    PTLOC_VALIDATE(!comps_.empty(), "distribution needs positive-weight components");
    std::vector<std::pair<Polygon, Rat>> weighted;
    for (const auto& c : comps_) weighted.emplace_back(c.support, c.weight);
    profile_ = XMassProfile::build(weighted);
}

Rat QueryDistribution::prob_of_region(const Polygon& r) const {
    if (r.size() < 3) return 0;
    Rat p(0);
    for (const auto& c : comps_) {
        Polygon cut = r;
        size_t n = c.support.size();
        for (size_t i = 0; i < n && cut.size() >= 3; ++i) {
            cut = clip_halfplane(cut, c.support[i], c.support[(i + 1) % n]);
        }
        if (cut.size() >= 3) p += c.weight * polygon_area2(cut) / c.area2;
    }
    return p;
}

Rat QueryDistribution::prob_of_triangle(const Triangle& t) const {
    return prob_of_region(triangle_poly(t));
}

Rat QueryDistribution::prob_of_xrange(const Rat& x0, const Rat& x1) const {
    return profile_.mass_of_xrange(x0, x1);
}

Rat QueryDistribution::prob_between_chains(const Chain& up, const Chain& low,
                                           const Rat& x0, const Rat& x1) const {
    if (x0 >= x1) return 0;
    Rat p(0);
    for (const auto& c : comps_) {
        Rat hi = area2_below_chain(c.support, up, x0, x1);
        Rat lo = area2_below_chain(c.support, low, x0, x1);
        p += c.weight * (hi - lo) / c.area2;
    }
    return p;
}

Point QueryDistribution::sample(Rng& rng) const {
    Rat u = random_unit(rng);
    size_t ci = comps_.size() - 1;
    Rat acc(0);
    for (size_t i = 0; i < comps_.size(); ++i) {
        acc += comps_[i].weight;
        if (u < acc) {
            ci = i;
            break;
        }
    }
    const Polygon& poly = comps_[ci].support;
    // Pick a fan triangle by area, then sample the triangle.
    Rat v = random_unit(rng) * comps_[ci].area2;
    size_t ti = poly.size() - 2;
    Rat area_acc(0);
    for (size_t i = 1; i + 1 < poly.size(); ++i) {
        area_acc += cross(poly[0], poly[i], poly[i + 1]);
        if (v < area_acc) {
            ti = i;
            break;
        }
    }
    if (ti + 1 >= poly.size()) ti = poly.size() - 2;
    const Point& a = poly[0];
    const Point& b = poly[ti];
    const Point& c = poly[ti + 1];
    Rat r1 = random_unit(rng);
    Rat r2 = random_unit(rng);
    if (r1 + r2 > 1) {
        r1 = 1 - r1;
        r2 = 1 - r2;
    }
    return Point(a.x + r1 * (b.x - a.x) + r2 * (c.x - a.x),
                 a.y + r1 * (b.y - a.y) + r2 * (c.y - a.y));
}

Box QueryDistribution::support_box() const {
    Box b;
    bool first = true;
    for (const auto& c : comps_) {
        for (const Point& p : c.support) {
            if (first) {
                b = {p.x, p.y, p.x, p.y};
                first = false;
            } else {
                b.x0 = rat_min(b.x0, p.x);
                b.y0 = rat_min(b.y0, p.y);
                b.x1 = rat_max(b.x1, p.x);
                b.y1 = rat_max(b.y1, p.y);
            }
        }
    }
    return b;
}

double entropy_bits(const std::vector<Rat>& probs) {
    double h = 0;
    for (const Rat& p : probs) {
        double d = rat_to_double(p);
        if (d > 0) h -= d * std::log2(d);
    }
    return h;
}

}  // namespace ptloc
