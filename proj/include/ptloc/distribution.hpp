#pragma once

#include <random>

#include "ptloc/chain.hpp"
#include "ptloc/geometry.hpp"

namespace ptloc {

using Rng = std::mt19937_64;

// Uniform random dyadic rational in [0, 1) with 53 random bits.
Rat random_unit(Rng& rng);

struct MixtureComponent {
    Rat weight;
    Polygon support;  // convex, counterclockwise, positive area
    Rat area2;        // cached twice area of support
};

// Cumulative mass along the x axis of a weighted collection of polygons:
// F(x) = total mass on {(u, v) : u <= x}. Piecewise quadratic between vertex
// abscissae; evaluated exactly. A vertical line carries no mass, so slabs can
// be measured by plain x range even under the sheared boundary convention.
class XMassProfile {
  public:
    XMassProfile() = default;
    // Each entry is a ccw simple polygon with the total mass it carries,
    // spread uniformly over its area.
    static XMassProfile build(const std::vector<std::pair<Polygon, Rat>>& weighted);

    Rat eval(const Rat& x) const;
    Rat mass_of_xrange(const Rat& x0, const Rat& x1) const;
    const Rat& total() const { return total_; }
    bool empty() const { return xs_.empty(); }

  private:
    std::vector<Rat> xs_;  // breakpoints, strictly increasing
    // Piece i covers [xs_[i], xs_[i+1]): F(x) = f0[i] + c0[i]*(x-xs_[i]) +
    // c1[i]*(x^2-xs_[i]^2)/2.
    std::vector<Rat> f0_, c0_, c1_;
    Rat total_ = 0;
};

// Finite mixture of uniform densities over convex polygons with exact
// rational weights summing to one.
class QueryDistribution {
  public:
    // Component list: (weight, convex support polygon).
    using Spec = std::vector<std::pair<Rat, Polygon>>;

    explicit QueryDistribution(Spec comps);

    const std::vector<MixtureComponent>& components() const { return comps_; }

    // Exact probability of a convex region, of a plain x range, and of the
    // region between two chains restricted to an x range.
    Rat prob_of_region(const Polygon& r) const;
    Rat prob_of_triangle(const Triangle& t) const;
    Rat prob_of_xrange(const Rat& x0, const Rat& x1) const;
    Rat prob_between_chains(const Chain& up, const Chain& low, const Rat& x0,
                            const Rat& x1) const;

    Point sample(Rng& rng) const;

    const XMassProfile& profile() const { return profile_; }

    // Bounding box of the support.
    Box support_box() const;

  private:
    std::vector<MixtureComponent> comps_;
    XMassProfile profile_;
};

// Entropy in bits of a partition of the plane given per-cell probabilities.
double entropy_bits(const std::vector<Rat>& probs);

}  // namespace ptloc
