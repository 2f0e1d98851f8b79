#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "premet/finite_lattice.hpp"
#include "premet/omega.hpp"
#include "premet/rational.hpp"

namespace premet {

enum class LatticeKind { finite, ext_rationals, omega };
std::string_view to_string(LatticeKind kind);

/// A lattice value of any supported kind; which alternative is valid is
/// decided by the owning ValueLattice.
using Value = std::variant<Element, ExtRational, DownSetFamily>;

/// Uniform handle over the three value-lattice kinds: explicit finite
/// lattices, [0, inf] over exact rationals, and Ω(N) for a finite ground N.
/// Cheap to copy; the underlying lattice data is shared and immutable.
class ValueLattice {
 public:
  static ValueLattice finite(FiniteLattice lattice);
  static ValueLattice finite(std::shared_ptr<const FiniteLattice> lattice);
  static ValueLattice ext_rationals();
  static ValueLattice omega(IdSetPtr ground);

  LatticeKind kind() const noexcept;
  /// Throw InvalidInput when the handle is of another kind.
  const FiniteLattice& finite_lattice() const;
  const IdSetPtr& omega_ground() const;

  bool contains(const Value& v) const;
  /// Throws ElementNotInLattice (GroundMismatch for Ω values over another ground).
  void require(const Value& v) const;

  bool leq(const Value& a, const Value& b) const;
  Value meet(std::span<const Value> values) const;
  Value join(std::span<const Value> values) const;
  Value bottom() const;
  Value top() const;

  /// y ≻ x. For [0, inf] this is y > x.
  bool well_above(const Value& y, const Value& x) const;
  bool is_value_distributive() const;

  /// Finite T ⊆ V_≺ such that any predicate monotone in ε holds for every
  /// ε ≻ 0 iff it holds on T, given that only `realized` distances occur.
  /// Throws NotValueDistributive for a finite lattice that is not.
  std::vector<Value> epsilon_basis(std::span<const Value> realized) const;

  /// Finite stand-in for V_≺ used when a construction needs V_≺ as a set
  /// (product grounds, function grounds). Finite lattices give all of V_≺.
  /// [0, inf] gives the positive realized values plus inf, and Ω gives one
  /// principal family per distinct behaviour of `x ≻ d` over the realized d.
  /// Either way every ε ≻ 0 has a representative with the same balls.
  /// Throws SizeLimitExceeded past `cap` candidates.
  std::vector<Value> positive_representatives(std::span<const Value> realized,
                                              std::size_t cap) const;

  /// Canonical text of a value: element id, "p/q"/"inf", or canonical_text.
  std::string value_id(const Value& v) const;
  /// Total order within one lattice used for canonical listings.
  bool canonical_less(const Value& a, const Value& b) const;
  /// Deduplicated, canonically sorted copy.
  std::vector<Value> distinct(std::span<const Value> values) const;

  bool operator==(const ValueLattice& other) const;

 private:
  struct ExtRationals {};
  using Impl = std::variant<std::shared_ptr<const FiniteLattice>, ExtRationals, IdSetPtr>;
  explicit ValueLattice(Impl impl) : impl_(std::move(impl)) {}

  Impl impl_;
};

}  // namespace premet
