#include "premet/topology.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "premet/error.hpp"

namespace premet {

namespace {

void check_assignment(const Assignment& f, std::size_t source_size, std::size_t target_size) {
  if (f.size() != source_size) {
    throw Error(ErrorKind::InvalidMap, "assignment does not cover the source points");
  }
  for (auto y : f) {
    if (y >= target_size) throw Error(ErrorKind::InvalidMap, "assignment leaves the target");
  }
}

}  // namespace

FiniteTopology FiniteTopology::from_opens(IdSet points, const std::vector<Bitset>& opens) {
  const auto n = points.size();
  std::unordered_set<Bitset, BitsetHash> family;
  for (const auto& o : opens) {
    if (o.size() != n) throw Error(ErrorKind::NotATopology, "open set has the wrong width");
    family.insert(o);
  }
  if (!family.contains(Bitset(n))) {
    throw Error(ErrorKind::NotATopology, "the empty set must be open", "opens");
  }
  if (!family.contains(full_set(n))) {
    throw Error(ErrorKind::NotATopology, "the whole point set must be open", "opens");
  }
  for (const auto& a : family) {
    for (const auto& b : family) {
      if (!family.contains(a | b) || !family.contains(a & b)) {
        throw Error(ErrorKind::NotATopology, "opens are not closed under union and intersection",
                    "opens");
      }
    }
  }
  std::vector<Bitset> cores(n, full_set(n));
  for (const auto& o : family) {
    for (auto x = o.find_first(); x != Bitset::npos; x = o.find_next(x)) cores[x] &= o;
  }
  return FiniteTopology(std::move(points), std::move(cores));
}

FiniteTopology FiniteTopology::from_neighbourhoods(IdSet points,
                                                   const std::vector<Bitset>& neighbourhoods) {
  const auto n = points.size();
  if (neighbourhoods.size() != n) {
    throw Error(ErrorKind::InvalidInput, "one neighbourhood per point expected");
  }
  std::vector<Bitset> reach = neighbourhoods;
  for (std::size_t x = 0; x < n; ++x) reach[x].set(x);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (reach[i].test(k)) reach[i] |= reach[k];
    }
  }
  return FiniteTopology(std::move(points), std::move(reach));
}

FiniteTopology FiniteTopology::discrete(IdSet points) {
  const auto n = points.size();
  std::vector<Bitset> cores(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) cores[x].set(x);
  return FiniteTopology(std::move(points), std::move(cores));
}

FiniteTopology FiniteTopology::indiscrete(IdSet points) {
  const auto n = points.size();
  return FiniteTopology(std::move(points), std::vector<Bitset>(n, full_set(n)));
}

bool FiniteTopology::is_open(const Bitset& set) const {
  for (auto x = set.find_first(); x != Bitset::npos; x = set.find_next(x)) {
    if (!cores_[x].is_subset_of(set)) return false;
  }
  return true;
}

Bitset FiniteTopology::interior(const Bitset& set) const {
  Bitset out(size());
  for (auto x = set.find_first(); x != Bitset::npos; x = set.find_next(x)) {
    if (cores_[x].is_subset_of(set)) out.set(x);
  }
  return out;
}

std::vector<Bitset> FiniteTopology::opens() const {
  std::unordered_set<Bitset, BitsetHash> seen{Bitset(size())};
  std::vector<Bitset> out{Bitset(size())};
  for (const auto& core : cores_) {
    const auto existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) {
      Bitset u = out[i] | core;
      if (seen.insert(u).second) out.push_back(std::move(u));
    }
  }
  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    return canonical_less(a, b);
  });
  return out;
}

bool FiniteTopology::finer_or_equal(const FiniteTopology& other) const {
  if (points_ != other.points_) throw Error(ErrorKind::InvalidInput, "topologies on different points");
  for (std::size_t x = 0; x < size(); ++x) {
    if (!cores_[x].is_subset_of(other.cores_[x])) return false;
  }
  return true;
}

Bitset image(const Bitset& set, const Assignment& f, std::size_t target_size) {
  Bitset out(target_size);
  for (auto x = set.find_first(); x != Bitset::npos; x = set.find_next(x)) out.set(f[x]);
  return out;
}

Bitset preimage(const Bitset& set, const Assignment& f) {
  Bitset out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (set.test(f[x])) out.set(x);
  }
  return out;
}

bool is_top_continuous(const FiniteTopology& source, const FiniteTopology& target,
                       const Assignment& f) {
  check_assignment(f, source.size(), target.size());
  // Preimages of opens are open iff every core maps into the core of its
  // centre's image (cores generate the topology).
  for (std::size_t x = 0; x < source.size(); ++x) {
    if (!image(source.core(x), f, target.size()).is_subset_of(target.core(f[x]))) return false;
  }
  return true;
}

FiniteTopology initial_topology(IdSet points,
                                std::span<const std::pair<FiniteTopology, Assignment>> legs) {
  const auto n = points.size();
  std::vector<Bitset> nbhd(n, full_set(n));
  for (const auto& [space, f] : legs) {
    check_assignment(f, n, space.size());
    for (std::size_t x = 0; x < n; ++x) nbhd[x] &= preimage(space.core(f[x]), f);
  }
  return FiniteTopology::from_neighbourhoods(std::move(points), nbhd);
}

FiniteTopology final_topology(IdSet points,
                              std::span<const std::pair<FiniteTopology, Assignment>> legs) {
  const auto n = points.size();
  std::vector<Bitset> nbhd(n, Bitset(n));
  for (const auto& [space, f] : legs) {
    check_assignment(f, space.size(), n);
    for (std::size_t y = 0; y < space.size(); ++y) nbhd[f[y]] |= image(space.core(y), f, n);
  }
  return FiniteTopology::from_neighbourhoods(std::move(points), nbhd);
}

std::vector<FiniteTopology> enumerate_topologies(std::size_t n) {
  if (n > kMaxEnumeratedPoints) {
    throw Error(ErrorKind::NTooLarge, "topology enumeration supports at most " +
                                          std::to_string(kMaxEnumeratedPoints) + " points");
  }
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  const IdSet points(ids);

  std::vector<std::pair<std::size_t, std::size_t>> off_diagonal;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) off_diagonal.emplace_back(i, j);
    }
  }
  std::vector<FiniteTopology> out;
  const std::uint64_t relations = std::uint64_t{1} << off_diagonal.size();
  for (std::uint64_t mask = 0; mask < relations; ++mask) {
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) up[i].set(i);
    for (std::size_t b = 0; b < off_diagonal.size(); ++b) {
      if ((mask >> b) & 1) up[off_diagonal[b].first].set(off_diagonal[b].second);
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (auto j = up[i].find_first(); j != Bitset::npos; j = up[i].find_next(j)) {
        if (!up[j].is_subset_of(up[i])) {
          transitive = false;
          break;
        }
      }
    }
    if (transitive) out.push_back(FiniteTopology::from_neighbourhoods(points, up));
  }
  return out;
}

}  // namespace premet
