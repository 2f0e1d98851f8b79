#pragma once

#include <span>
#include <string>
#include <vector>

#include "premet/bitset.hpp"
#include "premet/finite_lattice.hpp"
#include "premet/id_set.hpp"

namespace premet {

/// A downward-closed family of subsets of a finite ground set, i.e. an element
/// of Ω(ground), stored as the antichain of its maximal members.
///
/// The order is reverse inclusion of families: the full powerset (generator
/// list [ground]) is the bottom, the empty family (no generators) is the top.
class DownSetFamily {
 public:
  const IdSetPtr& ground() const noexcept { return ground_; }
  std::size_t ground_size() const noexcept { return ground_->size(); }
  /// Canonically sorted antichain.
  const std::vector<Bitset>& generators() const noexcept { return generators_; }

  /// F ∈ family: F is contained in some generator.
  bool contains(const Bitset& member) const;
  /// Union of all generators (∅ for the top).
  Bitset generator_union() const;
  bool is_top() const noexcept { return generators_.empty(); }
  bool is_bottom() const;

  friend bool operator==(const DownSetFamily& a, const DownSetFamily& b);

 private:
  friend DownSetFamily normalize(IdSetPtr ground, std::vector<Bitset> subsets);
  DownSetFamily(IdSetPtr ground, std::vector<Bitset> generators)
      : ground_(std::move(ground)), generators_(std::move(generators)) {}

  IdSetPtr ground_;
  std::vector<Bitset> generators_;
};

/// Family generated by `subsets`: dominated sets dropped, duplicates removed,
/// generators canonically sorted.
DownSetFamily normalize(IdSetPtr ground, std::vector<Bitset> subsets);
/// Same, with subsets given by ground ids; throws IdNotInGround.
DownSetFamily normalize(IdSetPtr ground, const std::vector<std::vector<std::string>>& subsets);

/// family(p) ⊇ family(q). Throws GroundMismatch.
bool leq(const DownSetFamily& p, const DownSetFamily& q);

/// Union of families; the empty meet is the top.
DownSetFamily meet(const IdSetPtr& ground, std::span<const DownSetFamily> values);
/// Intersection of families; the empty join is the bottom.
DownSetFamily join(const IdSetPtr& ground, std::span<const DownSetFamily> values);
DownSetFamily meet(const DownSetFamily& a, const DownSetFamily& b);
DownSetFamily join(const DownSetFamily& a, const DownSetFamily& b);

/// q ≻ p in Ω(ground).
///
/// For a finite ground this holds exactly when the union G_q of q's
/// generators is itself a member of p. If G_q ∈ p, any S with ⋀S ≤ p covers
/// G_q with one of its members s, and then family(s) ⊇ ↓G_q ⊇ family(q).
/// Conversely the covering S = {↓F : F ∈ p} has ⋀S = p, so q ≻ p forces
/// q ≥ ↓F for some F ∈ p, i.e. every generator of q (hence G_q) lies in F.
/// This characterisation is derived here, not quoted; the tests check it
/// against the generic lattice test on the materialised Ω for grounds ≤ 3.
bool well_above_omega(const DownSetFamily& q, const DownSetFamily& p);

/// ↓F, the family of all subsets of F. Throws IdNotInGround.
DownSetFamily principal(IdSetPtr ground, Bitset subset);
DownSetFamily principal(IdSetPtr ground, const std::vector<std::string>& subset);
DownSetFamily omega_top(IdSetPtr ground);
DownSetFamily omega_bottom(IdSetPtr ground);

/// Compact canonical JSON text of the generator list, e.g. [["u","v"],["w"]].
std::string canonical_text(const DownSetFamily& value);

inline constexpr std::size_t kMaxMaterializedGround = 4;

/// Ω(ground) as an explicit FiniteLattice whose element ids are canonical_text
/// of each family. The order is computed from family membership directly, not
/// from the generator rule. Throws GroundTooLarge above kMaxMaterializedGround.
FiniteLattice materialize(const IdSet& ground);

}  // namespace premet
