#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "premet/id_set.hpp"
#include "premet/space.hpp"
#include "premet/value_lattice.hpp"

namespace premet {

/// Caps on the derived ground sets; constructions past them throw
/// SizeLimitExceeded instead of running out of memory.
struct SizeLimits {
  /// Elements of a product ground (tuples of positive representatives).
  std::size_t max_ground = 1'000'000;
  /// Elements of a function ground (assignments Y → V_≺).
  std::size_t max_functions = 4096;
  /// Positive representatives per lattice.
  std::size_t max_representatives = 4096;
};

/// One leg of a cone: a total assignment from the apex points into a space.
struct ConeLeg {
  Assignment assignment;
  SpacePtr target;
};

/// A set-indexed cone over the underlying point sets.
struct Cone {
  IdSet apex;
  std::vector<ConeLeg> legs;
};

/// A constructed space together with its structure maps (projections,
/// inclusions, injections or quotients, depending on the construction).
struct Lift {
  SpacePtr space;
  std::vector<SpaceMap> legs;
};

/// d_j(f(x), f(y)) on the apex, over the target's lattice.
ContinuitySpace pullback_premetric(const IdSet& apex, const Assignment& assignment,
                                   const ContinuitySpace& target);

/// The ground of the lifted Ω: tuples with one positive representative per
/// coordinate. With finitely many coordinates every tuple has finite support.
struct ProductGround {
  std::vector<ValueLattice> lattices;
  /// Positive representatives of each coordinate lattice.
  std::vector<std::vector<Value>> representatives;
  /// Ground ids: composite ids of the coordinate value ids.
  IdSetPtr ground;
  /// tuples[i][j] indexes representatives[j] for the ground element i.
  std::vector<std::vector<std::size_t>> tuples;
};

/// `realized[j]` lists the values coordinate j can take; it decides the
/// representatives for the infinite and Ω kinds. Throws NotValueDistributive
/// and SizeLimitExceeded.
ProductGround positives_product_ground(std::span<const ValueLattice> lattices,
                                       std::span<const std::vector<Value>> realized,
                                       const SizeLimits& limits = {});

/// Principal family on {a ∈ U : a_j ≻ x_j for every j}.
DownSetFamily phi_embed(const ProductGround& ground, std::span<const Value> x);

/// Initial structure on the cone apex: Ω(U) with U built from every leg's
/// realized distances, one coordinate per leg.
Lift initial_lift(const Cone& cone, const SizeLimits& limits = {});

/// Cartesian product of the point sets (composite ids) with the initial
/// structure of the projections. The nullary product is a single point.
Lift product(std::span<const SpacePtr> spaces, const SizeLimits& limits = {});

/// {x : f(x) = g(x)} with the restricted distances and its inclusion.
/// Throws InvalidMap when f and g are not parallel.
Lift equaliser(const SpaceMap& f, const SpaceMap& g);

}  // namespace premet
