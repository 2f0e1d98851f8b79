#include "premet/limits.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "premet/error.hpp"

namespace premet {

namespace {

// Mixed-radix walk over all index tuples with the given radices.
template <class Visit>
void for_each_tuple(const std::vector<std::size_t>& radices, Visit&& visit) {
  for (auto r : radices) {
    if (r == 0) return;
  }
  std::vector<std::size_t> digits(radices.size(), 0);
  while (true) {
    visit(digits);
    std::size_t j = radices.size();
    while (j > 0) {
      --j;
      if (++digits[j] < radices[j]) break;
      digits[j] = 0;
      if (j == 0) return;
    }
    if (radices.empty()) return;
  }
}

std::size_t checked_product(const std::vector<std::size_t>& factors, std::size_t cap,
                            const char* what) {
  std::size_t total = 1;
  for (auto f : factors) {
    if (f != 0 && total > cap / f) {
      throw Error(ErrorKind::SizeLimitExceeded,
                  std::string(what) + " exceeds the limit of " + std::to_string(cap));
    }
    total *= f;
  }
  if (total > cap) {
    throw Error(ErrorKind::SizeLimitExceeded,
                std::string(what) + " exceeds the limit of " + std::to_string(cap));
  }
  return total;
}

std::vector<Value> image_distances(const ContinuitySpace& target, const Assignment& f) {
  std::vector<Value> out;
  for (auto x : f) {
    for (auto y : f) out.push_back(target.distance(x, y));
  }
  return target.lattice().distinct(out);
}

}  // namespace

ContinuitySpace pullback_premetric(const IdSet& apex, const Assignment& assignment,
                                   const ContinuitySpace& target) {
  if (assignment.size() != apex.size()) {
    throw Error(ErrorKind::InvalidMap, "assignment does not cover the apex");
  }
  for (auto y : assignment) {
    if (y >= target.size()) throw Error(ErrorKind::InvalidMap, "assignment leaves the target");
  }
  return ContinuitySpace::build(apex, target.lattice(), [&](std::size_t x, std::size_t y) {
    return target.distance(assignment[x], assignment[y]);
  });
}

ProductGround positives_product_ground(std::span<const ValueLattice> lattices,
                                       std::span<const std::vector<Value>> realized,
                                       const SizeLimits& limits) {
  if (realized.size() != lattices.size()) {
    throw Error(ErrorKind::InvalidInput, "one realized-value list per lattice expected");
  }
  ProductGround out;
  out.lattices.assign(lattices.begin(), lattices.end());
  std::vector<std::size_t> radices;
  for (std::size_t j = 0; j < lattices.size(); ++j) {
    if (!lattices[j].is_value_distributive()) {
      throw Error(ErrorKind::NotValueDistributive, "coordinate lattice is not value distributive");
    }
    out.representatives.push_back(
        lattices[j].positive_representatives(realized[j], limits.max_representatives));
    radices.push_back(out.representatives.back().size());
  }
  checked_product(radices, limits.max_ground, "product ground");

  std::vector<std::pair<std::string, std::vector<std::size_t>>> entries;
  for_each_tuple(radices, [&](const std::vector<std::size_t>& digits) {
    std::vector<std::string> parts;
    parts.reserve(digits.size());
    for (std::size_t j = 0; j < digits.size(); ++j) {
      parts.push_back(out.lattices[j].value_id(out.representatives[j][digits[j]]));
    }
    entries.emplace_back(composite_id(parts), digits);
  });
  std::sort(entries.begin(), entries.end());
  std::vector<std::string> ids;
  ids.reserve(entries.size());
  for (auto& [id, tuple] : entries) {
    ids.push_back(id);
    out.tuples.push_back(std::move(tuple));
  }
  out.ground = std::make_shared<const IdSet>(std::move(ids));
  return out;
}

DownSetFamily phi_embed(const ProductGround& ground, std::span<const Value> x) {
  if (x.size() != ground.lattices.size()) {
    throw Error(ErrorKind::InvalidInput, "tuple has the wrong number of coordinates");
  }
  std::vector<std::vector<bool>> above(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (const auto& a : ground.representatives[j]) {
      above[j].push_back(ground.lattices[j].well_above(a, x[j]));
    }
  }
  Bitset generator(ground.tuples.size());
  for (std::size_t i = 0; i < ground.tuples.size(); ++i) {
    bool all = true;
    for (std::size_t j = 0; j < x.size() && all; ++j) all = above[j][ground.tuples[i][j]];
    if (all) generator.set(i);
  }
  return principal(ground.ground, std::move(generator));
}

Lift initial_lift(const Cone& cone, const SizeLimits& limits) {
  std::vector<ValueLattice> lattices;
  std::vector<std::vector<Value>> realized;
  for (const auto& leg : cone.legs) {
    if (!leg.target) throw Error(ErrorKind::InvalidMap, "cone leg without a target");
    if (leg.assignment.size() != cone.apex.size()) {
      throw Error(ErrorKind::InvalidMap, "cone leg does not cover the apex");
    }
    for (auto y : leg.assignment) {
      if (y >= leg.target->size()) throw Error(ErrorKind::InvalidMap, "cone leg leaves its target");
    }
    lattices.push_back(leg.target->lattice());
    realized.push_back(image_distances(*leg.target, leg.assignment));
  }
  const auto ground = positives_product_ground(lattices, realized, limits);

  auto space = std::make_shared<const ContinuitySpace>(ContinuitySpace::build(
      cone.apex, ValueLattice::omega(ground.ground), [&](std::size_t x, std::size_t y) {
        std::vector<Value> tuple;
        tuple.reserve(cone.legs.size());
        for (const auto& leg : cone.legs) {
          tuple.push_back(leg.target->distance(leg.assignment[x], leg.assignment[y]));
        }
        return Value(phi_embed(ground, tuple));
      }));
  Lift out{space, {}};
  for (const auto& leg : cone.legs) out.legs.push_back(make_map(space, leg.target, leg.assignment));
  return out;
}

Lift product(std::span<const SpacePtr> spaces, const SizeLimits& limits) {
  std::vector<std::size_t> radices;
  for (const auto& s : spaces) {
    if (!s) throw Error(ErrorKind::InvalidInput, "null factor space");
    radices.push_back(s->size());
  }
  checked_product(radices, limits.max_ground, "product point set");

  std::vector<std::pair<std::string, std::vector<std::size_t>>> entries;
  for_each_tuple(radices, [&](const std::vector<std::size_t>& digits) {
    std::vector<std::string> parts;
    for (std::size_t j = 0; j < digits.size(); ++j) parts.push_back(spaces[j]->points()[digits[j]]);
    entries.emplace_back(composite_id(parts), digits);
  });
  std::sort(entries.begin(), entries.end());

  Cone cone;
  std::vector<std::string> ids;
  for (const auto& e : entries) ids.push_back(e.first);
  cone.apex = IdSet(std::move(ids));
  for (std::size_t j = 0; j < spaces.size(); ++j) {
    Assignment projection;
    projection.reserve(entries.size());
    for (const auto& e : entries) projection.push_back(e.second[j]);
    cone.legs.push_back({std::move(projection), spaces[j]});
  }
  return initial_lift(cone, limits);
}

Lift equaliser(const SpaceMap& f, const SpaceMap& g) {
  if (!f.source || !g.source || !f.target || !g.target || !(*f.source == *g.source) ||
      !(*f.target == *g.target)) {
    throw Error(ErrorKind::InvalidMap, "equaliser needs two parallel maps");
  }
  const auto& source = *f.source;
  std::vector<std::size_t> kept;
  std::vector<std::string> ids;
  for (std::size_t x = 0; x < source.size(); ++x) {
    if (f.assignment[x] == g.assignment[x]) {
      kept.push_back(x);
      ids.push_back(source.points()[x]);
    }
  }
  // Ids of a subset keep their relative canonical order, so `kept` is
  // already indexed like the new IdSet.
  auto space = std::make_shared<const ContinuitySpace>(
      ContinuitySpace::build(IdSet(std::move(ids)), source.lattice(),
                             [&](std::size_t x, std::size_t y) {
                               return source.distance(kept[x], kept[y]);
                             }));
  return Lift{space, {make_map(space, f.source, kept)}};
}

}  // namespace premet
