#include "premet/finite_lattice.hpp"

#include "premet/error.hpp"

namespace premet {

namespace {

// Index of the greatest element of `candidates` w.r.t. the order whose
// principal down-sets (or up-sets, for joins) are `cones`.
std::optional<std::uint32_t> extremum(const Bitset& candidates, const std::vector<Bitset>& cones) {
  for (auto c = candidates.find_first(); c != Bitset::npos; c = candidates.find_next(c)) {
    if (candidates.is_subset_of(cones[c])) return static_cast<std::uint32_t>(c);
  }
  return std::nullopt;
}

}  // namespace

Element FiniteLattice::element(std::string_view id) const {
  return Element{static_cast<std::uint32_t>(ids_.index_of(id, ErrorKind::ElementNotInLattice))};
}

Element FiniteLattice::meet(std::span<const Element> es) const {
  Element acc = top_;
  for (auto e : es) acc = meet(acc, e);
  return acc;
}

Element FiniteLattice::join(std::span<const Element> es) const {
  Element acc = bottom_;
  for (auto e : es) acc = join(acc, e);
  return acc;
}

bool FiniteLattice::well_above(Element y, Element x) const {
  if (!contains(y) || !contains(x)) {
    throw Error(ErrorKind::ElementNotInLattice, "element index out of range");
  }
  // In the one-element lattice 0 ≻ 0 (see the value-distributivity contract).
  if (size() == 1) return true;
  return !leq(complement_meet_[y.index], x);
}

std::vector<std::pair<Element, Element>> FiniteLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  const auto n = size();
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (a == b || !up_[a].test(b)) continue;
      // strictly between a and b
      Bitset between = up_[a] & down_[b];
      between.reset(a);
      between.reset(b);
      if (between.none()) out.emplace_back(Element{a}, Element{b});
    }
  }
  return out;
}

FiniteLattice validate_lattice(std::vector<std::string> elements,
                               const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  FiniteLattice l;
  l.ids_ = IdSet(std::move(elements));
  const auto n = l.ids_.size();
  if (n == 0) throw Error(ErrorKind::NotALattice, "a lattice needs at least one element");

  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].set(i);
  for (const auto& [lo, hi] : leq_pairs) {
    up[l.ids_.index_of(lo, ErrorKind::ElementNotInLattice)].set(
        l.ids_.index_of(hi, ErrorKind::ElementNotInLattice));
  }
  // Warshall closure on the up-set rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
  std::vector<Bitset> down(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = up[i].find_first(); j != Bitset::npos; j = up[i].find_next(j)) {
      if (j != i && up[j].test(i)) {
        throw Error(ErrorKind::NotAPartialOrder,
                    "cycle between '" + l.ids_[i] + "' and '" + l.ids_[j] + "'", l.ids_[i]);
      }
      down[j].set(i);
    }
  }

  l.meet_.resize(n * n);
  l.join_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto m = extremum(down[a] & down[b], down);
      auto j = extremum(up[a] & up[b], up);
      if (!m || !j) {
        throw Error(ErrorKind::NotALattice,
                    "no unique " + std::string(m ? "join" : "meet") + " for ('" + l.ids_[a] +
                        "', '" + l.ids_[b] + "')",
                    l.ids_[a] + "," + l.ids_[b]);
      }
      l.meet_[a * n + b] = l.meet_[b * n + a] = Element{*m};
      l.join_[a * n + b] = l.join_[b * n + a] = Element{*j};
    }
  }
  l.up_ = std::move(up);
  l.down_ = std::move(down);

  Element bottom{0}, top{0};
  for (std::uint32_t i = 1; i < n; ++i) {
    bottom = l.meet(bottom, Element{i});
    top = l.join(top, Element{i});
  }
  l.bottom_ = bottom;
  l.top_ = top;

  l.complement_meet_.resize(n);
  for (std::uint32_t y = 0; y < n; ++y) {
    Element acc = top;
    for (std::uint32_t s = 0; s < n; ++s) {
      if (!l.down_[y].test(s)) acc = l.meet(acc, Element{s});
    }
    l.complement_meet_[y] = acc;
  }
  return l;
}

bool is_completely_distributive(const FiniteLattice& lattice) {
  const auto n = static_cast<std::uint32_t>(lattice.size());
  for (std::uint32_t y = 0; y < n; ++y) {
    Element acc = lattice.top();
    for (std::uint32_t a = 0; a < n; ++a) {
      if (lattice.well_above(Element{a}, Element{y})) acc = lattice.meet(acc, Element{a});
    }
    if (acc != Element{y}) return false;
  }
  return true;
}

ValueDistributivity value_distributivity(const FiniteLattice& lattice) {
  ValueDistributivity out;
  out.completely_distributive = is_completely_distributive(lattice);
  const auto n = static_cast<std::uint32_t>(lattice.size());
  for (std::uint32_t a = 0; a < n; ++a) {
    if (lattice.well_above(Element{a}, lattice.bottom())) out.well_above_zero.push_back(Element{a});
  }
  for (auto a : out.well_above_zero) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (lattice.leq(a, Element{b}) && !lattice.well_above(Element{b}, lattice.bottom())) {
        out.upward_closed = false;
      }
    }
  }
  for (auto a : out.well_above_zero) {
    for (auto b : out.well_above_zero) {
      if (b < a) continue;
      if (!lattice.well_above(lattice.meet(a, b), lattice.bottom())) {
        out.meet_witness = std::make_pair(a, b);
        return out;
      }
    }
  }
  return out;
}

bool is_value_distributive(const FiniteLattice& lattice) {
  return value_distributivity(lattice).value_distributive();
}

Element least_well_above_zero(const FiniteLattice& lattice) {
  auto vd = value_distributivity(lattice);
  if (!vd.value_distributive()) {
    throw Error(ErrorKind::NotValueDistributive, "lattice is not value distributive");
  }
  return lattice.meet(vd.well_above_zero);
}

FiniteLattice chain_lattice(const std::vector<std::string>& ids) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) pairs.emplace_back(ids[i], ids[i + 1]);
  return validate_lattice(ids, pairs);
}

}  // namespace premet
