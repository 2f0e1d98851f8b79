#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "premet/bitset.hpp"
#include "premet/id_set.hpp"

namespace premet {

/// Index of an element in a FiniteLattice (canonical id order).
struct Element {
  std::uint32_t index = 0;
  auto operator<=>(const Element&) const = default;
};

/// An explicit finite bounded lattice. Built only through validate_lattice,
/// which closes the given relation and precomputes all binary meets/joins.
class FiniteLattice {
 public:
  std::size_t size() const noexcept { return ids_.size(); }
  const IdSet& ids() const noexcept { return ids_; }
  const std::string& id(Element e) const { return ids_[e.index]; }
  /// Throws ElementNotInLattice.
  Element element(std::string_view id) const;
  bool contains(Element e) const noexcept { return e.index < size(); }

  bool leq(Element a, Element b) const { return down_[b.index].test(a.index); }
  Element meet(Element a, Element b) const { return meet_[a.index * size() + b.index]; }
  Element join(Element a, Element b) const { return join_[a.index * size() + b.index]; }
  /// Empty meet is top, empty join is bottom.
  Element meet(std::span<const Element> es) const;
  Element join(std::span<const Element> es) const;
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  const Bitset& down_set(Element e) const { return down_[e.index]; }
  const Bitset& up_set(Element e) const { return up_[e.index]; }

  /// y ≻ x: whenever x ≥ ⋀S some s ∈ S has y ≥ s.
  bool well_above(Element y, Element x) const;

  /// Covering pairs (lo, hi) of the Hasse diagram.
  std::vector<std::pair<Element, Element>> covers() const;

  bool operator==(const FiniteLattice& other) const {
    return ids_ == other.ids_ && down_ == other.down_;
  }

 private:
  friend FiniteLattice validate_lattice(std::vector<std::string>,
                                        const std::vector<std::pair<std::string, std::string>>&);
  FiniteLattice() = default;

  IdSet ids_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  // ⋀{s : s ≰ y} for each y; y ≻ x iff this is not ≤ x.
  std::vector<Element> complement_meet_;
  Element bottom_;
  Element top_;
};

/// Reflexive-transitive closure of `leq_pairs` over `elements`, checked to be
/// a bounded lattice. Throws NotAPartialOrder (cycle), NotALattice (pair with
/// no unique meet/join, or no elements) or ElementNotInLattice.
FiniteLattice validate_lattice(std::vector<std::string> elements,
                               const std::vector<std::pair<std::string, std::string>>& leq_pairs);

bool is_completely_distributive(const FiniteLattice& lattice);

/// Outcome of the value-distributivity test with the data needed to explain
/// a negative answer.
struct ValueDistributivity {
  bool completely_distributive = false;
  std::vector<Element> well_above_zero;
  bool upward_closed = true;
  /// Two elements ≻ 0 whose meet is not ≻ 0, when the filter test fails.
  std::optional<std::pair<Element, Element>> meet_witness;

  bool value_distributive() const {
    return completely_distributive && !well_above_zero.empty() && upward_closed && !meet_witness;
  }
};

ValueDistributivity value_distributivity(const FiniteLattice& lattice);
bool is_value_distributive(const FiniteLattice& lattice);

/// ⋀V_≺; throws NotValueDistributive.
Element least_well_above_zero(const FiniteLattice& lattice);

/// A chain of `n` elements with the given ids in increasing order.
FiniteLattice chain_lattice(const std::vector<std::string>& ids);

}  // namespace premet
