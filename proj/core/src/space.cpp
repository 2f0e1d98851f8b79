#include "premet/space.hpp"

#include "premet/error.hpp"

namespace premet {

ContinuitySpace::ContinuitySpace(IdSet points, ValueLattice lattice, std::vector<Value> distances)
    : points_(std::move(points)), lattice_(std::move(lattice)), d_(std::move(distances)) {
  const auto n = points_.size();
  if (d_.size() != n * n) {
    throw Error(ErrorKind::InvalidSpace, "distance table must have one entry per ordered pair", "d");
  }
  if (!lattice_.is_value_distributive()) {
    throw Error(ErrorKind::NotValueDistributive, "continuity spaces need a value distributive lattice",
                "lattice");
  }
  for (const auto& v : d_) lattice_.require(v);
  const auto zero = lattice_.bottom();
  for (std::size_t x = 0; x < n; ++x) {
    if (!lattice_.leq(distance(x, x), zero)) {
      throw Error(ErrorKind::InvalidSpace, "d(x,x) must be the bottom element", points_[x]);
    }
  }
}

ContinuitySpace ContinuitySpace::build(IdSet points, ValueLattice lattice,
                                       const std::function<Value(std::size_t, std::size_t)>& d) {
  const auto n = points.size();
  std::vector<Value> table;
  table.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) table.push_back(d(x, y));
  }
  return ContinuitySpace(std::move(points), std::move(lattice), std::move(table));
}

std::vector<Value> ContinuitySpace::realized_values() const { return lattice_.distinct(d_); }

SpaceMap make_map(SpacePtr source, SpacePtr target, Assignment assignment) {
  if (!source || !target) throw Error(ErrorKind::InvalidMap, "map needs a source and a target");
  if (assignment.size() != source->size()) {
    throw Error(ErrorKind::InvalidMap, "assignment does not cover the source points");
  }
  for (auto y : assignment) {
    if (y >= target->size()) throw Error(ErrorKind::InvalidMap, "assignment leaves the target");
  }
  return SpaceMap{std::move(source), std::move(target), std::move(assignment)};
}

Bitset ball(const ContinuitySpace& space, std::size_t x, const Value& eps) {
  const auto& lattice = space.lattice();
  if (!lattice.well_above(eps, lattice.bottom())) {
    throw Error(ErrorKind::EpsNotPositive, "ball radius must be well above bottom");
  }
  if (x >= space.size()) throw Error(ErrorKind::PointNotInSpace, "ball centre outside the space");
  Bitset out(space.size());
  for (std::size_t y = 0; y < space.size(); ++y) {
    if (lattice.well_above(eps, space.distance(x, y))) out.set(y);
  }
  return out;
}

BallSystem ball_system(const ContinuitySpace& space) {
  BallSystem sys;
  const auto realized = space.realized_values();
  sys.basis = space.lattice().epsilon_basis(realized);
  const auto n = space.size();
  sys.balls.resize(n);
  sys.smallest.assign(n, full_set(n));
  for (std::size_t x = 0; x < n; ++x) {
    sys.balls[x].reserve(sys.basis.size());
    for (const auto& eps : sys.basis) {
      sys.balls[x].push_back(ball(space, x, eps));
      sys.smallest[x] &= sys.balls[x].back();
    }
  }
  return sys;
}

FiniteTopology generate_topology(const IdSet& points, const BallSystem& balls) {
  // Basis balls at a point are nested (≻ is monotone in ε), so some basis
  // ball fits inside U exactly when the smallest one does.
  return FiniteTopology::from_neighbourhoods(points, balls.smallest);
}

FiniteTopology generate_topology(const ContinuitySpace& space) {
  return generate_topology(space.points(), ball_system(space));
}

std::optional<EpsDeltaViolation> eps_delta_violation(const BallSystem& source,
                                                     const BallSystem& target,
                                                     const Assignment& f) {
  const auto target_size = target.balls.size();
  for (std::size_t x = 0; x < source.balls.size(); ++x) {
    for (std::size_t k = 0; k < target.basis.size(); ++k) {
      const auto& want = target.balls[f[x]][k];
      bool found = false;
      for (const auto& b : source.balls[x]) {
        if (image(b, f, target_size).is_subset_of(want)) {
          found = true;
          break;
        }
      }
      if (!found) return EpsDeltaViolation{x, target.basis[k]};
    }
  }
  return std::nullopt;
}

std::optional<EpsDeltaViolation> eps_delta_violation(const SpaceMap& f) {
  return eps_delta_violation(ball_system(*f.source), ball_system(*f.target), f.assignment);
}

bool is_eps_delta_continuous(const SpaceMap& f) { return !eps_delta_violation(f).has_value(); }

bool is_top_continuous(const SpaceMap& f) {
  return is_top_continuous(generate_topology(*f.source), generate_topology(*f.target),
                           f.assignment);
}

ContinuitySpace flagg(const FiniteTopology& topology) {
  const auto& points = topology.points();
  const auto opens = topology.opens();
  std::vector<std::string> ids;
  ids.reserve(opens.size());
  for (const auto& o : opens) {
    std::vector<std::string> names;
    for (auto i : members(o)) names.push_back(points[i]);
    ids.push_back(composite_id(names));
  }
  // position of each open set in the canonical ground order
  std::vector<std::size_t> slot(opens.size());
  auto ground = std::make_shared<const IdSet>(ids);
  for (std::size_t i = 0; i < opens.size(); ++i) {
    slot[i] = ground->index_of(ids[i], ErrorKind::IdNotInGround);
  }
  return ContinuitySpace::build(points, ValueLattice::omega(ground), [&](std::size_t x, std::size_t y) {
    Bitset generator(opens.size());
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if (!opens[i].test(x) || opens[i].test(y)) generator.set(slot[i]);
    }
    return Value(principal(ground, std::move(generator)));
  });
}

ContinuitySpace premetrize(const FiniteTopology& topology) {
  return ContinuitySpace::build(topology.points(), ValueLattice::ext_rationals(),
                                [&](std::size_t x, std::size_t y) {
                                  return Value(topology.core(x).test(y) ? ExtRational()
                                                                        : ExtRational(1, 1));
                                });
}

}  // namespace premet
