#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "premet/bitset.hpp"
#include "premet/id_set.hpp"
#include "premet/topology.hpp"
#include "premet/value_lattice.hpp"

namespace premet {

/// A continuity space (X, V, d): finite points, a value lattice, and a total
/// distance table with d(x, x) = bottom. Neither symmetry nor the triangle
/// inequality is assumed.
class ContinuitySpace {
 public:
  /// `distances` is row-major, distances[x * n + y] = d(x, y). Throws
  /// InvalidSpace on a wrong-sized table or a nonzero diagonal, and the
  /// lattice's membership error for foreign values.
  ContinuitySpace(IdSet points, ValueLattice lattice, std::vector<Value> distances);

  static ContinuitySpace build(IdSet points, ValueLattice lattice,
                               const std::function<Value(std::size_t, std::size_t)>& d);

  const IdSet& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const ValueLattice& lattice() const noexcept { return lattice_; }
  const Value& distance(std::size_t x, std::size_t y) const { return d_[x * size() + y]; }
  const std::vector<Value>& distances() const noexcept { return d_; }

  /// Distinct values of d, canonically sorted.
  std::vector<Value> realized_values() const;

  bool operator==(const ContinuitySpace& other) const = default;

 private:
  IdSet points_;
  ValueLattice lattice_;
  std::vector<Value> d_;
};

using SpacePtr = std::shared_ptr<const ContinuitySpace>;

/// A function between the point sets of two continuity spaces.
struct SpaceMap {
  SpacePtr source;
  SpacePtr target;
  Assignment assignment;
};

/// Checks the assignment is total and lands in the target. Throws InvalidMap.
SpaceMap make_map(SpacePtr source, SpacePtr target, Assignment assignment);

/// B_ε(x) = {y : ε ≻ d(x, y)}, centre-first. Throws EpsNotPositive.
Bitset ball(const ContinuitySpace& space, std::size_t x, const Value& eps);

/// Balls of every point at every ε of the space's epsilon basis. Building it
/// once lets many continuity checks share the ball computations.
struct BallSystem {
  std::vector<Value> basis;
  /// balls[x][k] = B_{basis[k]}(x)
  std::vector<std::vector<Bitset>> balls;
  /// Smallest ball at each point (the basis balls at a point are nested).
  std::vector<Bitset> smallest;
};

BallSystem ball_system(const ContinuitySpace& space);

/// U is open iff every x ∈ U has a basis ball B_ε(x) ⊆ U.
FiniteTopology generate_topology(const ContinuitySpace& space);
FiniteTopology generate_topology(const IdSet& points, const BallSystem& balls);

/// A point and a target ε for which no source δ works.
struct EpsDeltaViolation {
  std::size_t point = 0;
  Value eps;
};

/// First violation of: ∀x ∀ε ∃δ, f[B_δ(x)] ⊆ B_ε(f(x)); nullopt if none.
std::optional<EpsDeltaViolation> eps_delta_violation(const BallSystem& source,
                                                     const BallSystem& target,
                                                     const Assignment& f);
std::optional<EpsDeltaViolation> eps_delta_violation(const SpaceMap& f);
bool is_eps_delta_continuous(const SpaceMap& f);

/// Continuity between the generated topologies.
bool is_top_continuous(const SpaceMap& f);

/// Flagg's space of a topology: Ω over the open sets, with d(x, y) the
/// principal family generated by {U open : x ∈ U ⇒ y ∈ U}. Ground ids are the
/// composite ids of the open sets.
ContinuitySpace flagg(const FiniteTopology& topology);

/// [0, inf]-valued premetric with d(x, y) = 0 when y lies in the core of x
/// and 1 otherwise; it generates the topology back.
ContinuitySpace premetrize(const FiniteTopology& topology);

}  // namespace premet
