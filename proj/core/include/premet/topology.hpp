#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "premet/bitset.hpp"
#include "premet/id_set.hpp"

namespace premet {

/// Total function between two canonically ordered point sets, by index.
using Assignment = std::vector<std::size_t>;

/// A topology on a finite point set. Finite topologies are Alexandrov, so the
/// value is stored as the minimal open neighbourhood (core) of every point;
/// the open sets are exactly the sets containing the core of each member.
class FiniteTopology {
 public:
  /// Checks that `opens` contains ∅ and the whole set and is closed under
  /// binary union and intersection. Throws NotATopology.
  static FiniteTopology from_opens(IdSet points, const std::vector<Bitset>& opens);
  /// Topology whose opens are the sets U with neighbourhoods[x] ⊆ U for all
  /// x ∈ U (i.e. the Alexandrov topology of the reachability preorder).
  static FiniteTopology from_neighbourhoods(IdSet points, const std::vector<Bitset>& neighbourhoods);
  static FiniteTopology discrete(IdSet points);
  static FiniteTopology indiscrete(IdSet points);

  const IdSet& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Bitset& core(std::size_t x) const { return cores_[x]; }
  const std::vector<Bitset>& cores() const noexcept { return cores_; }

  bool is_open(const Bitset& set) const;
  /// Largest open subset.
  Bitset interior(const Bitset& set) const;
  /// All open sets, canonically sorted.
  std::vector<Bitset> opens() const;

  /// Every open set of `other` (on the same points) is open here.
  bool finer_or_equal(const FiniteTopology& other) const;

  bool operator==(const FiniteTopology&) const = default;

 private:
  FiniteTopology(IdSet points, std::vector<Bitset> cores)
      : points_(std::move(points)), cores_(std::move(cores)) {}

  IdSet points_;
  std::vector<Bitset> cores_;
};

/// Preimages of opens are open.
bool is_top_continuous(const FiniteTopology& source, const FiniteTopology& target,
                       const Assignment& f);

/// Image of a set under an assignment into a universe of `target_size` points.
Bitset image(const Bitset& set, const Assignment& f, std::size_t target_size);
Bitset preimage(const Bitset& set, const Assignment& f);

/// Coarsest topology on `points` making every leg (points → leg space)
/// continuous.
FiniteTopology initial_topology(IdSet points,
                                std::span<const std::pair<FiniteTopology, Assignment>> legs);
/// Finest topology on `points` making every leg (leg space → points)
/// continuous.
FiniteTopology final_topology(IdSet points,
                              std::span<const std::pair<FiniteTopology, Assignment>> legs);

inline constexpr std::size_t kMaxEnumeratedPoints = 4;

/// All labelled topologies on the points "p0".."p{n-1}", one per preorder.
/// Throws NTooLarge above kMaxEnumeratedPoints.
std::vector<FiniteTopology> enumerate_topologies(std::size_t n);

}  // namespace premet
