#include "premet/colimits.hpp"

#include <algorithm>
#include <utility>

#include "premet/error.hpp"

namespace premet {

namespace {

constexpr std::size_t kUnlabelled = static_cast<std::size_t>(-1);

std::string tag(std::size_t summand, const std::string& id) {
  return composite_id({std::to_string(summand), id});
}

}  // namespace

FunctionGround function_ground(const ContinuitySpace& source, const SizeLimits& limits) {
  FunctionGround out;
  const auto realized = source.realized_values();
  out.representatives =
      source.lattice().positive_representatives(realized, limits.max_representatives);
  const auto radix = out.representatives.size();
  const auto n = source.size();
  if (radix == 0) throw Error(ErrorKind::NotValueDistributive, "no element is well above bottom");

  std::size_t total = 1;
  for (std::size_t y = 0; y < n; ++y) {
    if (total > limits.max_functions / radix) {
      throw Error(ErrorKind::SizeLimitExceeded,
                  "function ground |V_≺|^|Y| = " + std::to_string(radix) + "^" +
                      std::to_string(n) + " exceeds the limit of " +
                      std::to_string(limits.max_functions) +
                      "; use fewer points or a smaller value lattice");
    }
    total *= radix;
  }

  std::vector<std::string> rep_ids;
  for (const auto& r : out.representatives) rep_ids.push_back(source.lattice().value_id(r));
  std::vector<std::pair<std::string, std::vector<std::size_t>>> entries;
  entries.reserve(total);
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t i = 0; i < total; ++i) {
    std::vector<std::string> parts;
    parts.reserve(n);
    for (auto d : digits) parts.push_back(rep_ids[d]);
    entries.emplace_back(composite_id(parts), digits);
    for (std::size_t y = n; y > 0; --y) {
      if (++digits[y - 1] < radix) break;
      digits[y - 1] = 0;
    }
  }
  std::sort(entries.begin(), entries.end());
  std::vector<std::string> ids;
  ids.reserve(total);
  for (auto& [id, h] : entries) {
    ids.push_back(id);
    out.functions.push_back(std::move(h));
  }
  out.ground = std::make_shared<const IdSet>(std::move(ids));
  return out;
}

AdmitsInstance admits_instance(SpacePtr source, Assignment f, std::size_t target_size) {
  if (!source) throw Error(ErrorKind::InvalidMap, "admits instance without a source");
  if (f.size() != source->size()) {
    throw Error(ErrorKind::InvalidMap, "assignment does not cover the source points");
  }
  for (auto x : f) {
    if (x >= target_size) throw Error(ErrorKind::InvalidMap, "assignment leaves the target");
  }
  return AdmitsInstance{std::move(source), std::move(f), target_size};
}

AdmitsGraph::AdmitsGraph(AdmitsInstance inst, const FunctionGround& functions)
    : inst_(std::move(inst)) {
  const auto& space = *inst_.source;
  const auto n = space.size();
  if (inst_.labels.size() != n) throw Error(ErrorKind::InvalidMap, "one label per point expected");
  fibres_.assign(inst_.label_count, Bitset(n));
  for (std::size_t y = 0; y < n; ++y) {
    if (inst_.labels[y] >= inst_.label_count) {
      throw Error(ErrorKind::InvalidMap, "label out of range", space.points()[y]);
    }
    fibres_[inst_.labels[y]].set(y);
  }
  balls_.resize(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (const auto& r : functions.representatives) balls_[y].push_back(ball(space, y, r));
  }
}

std::vector<Bitset> AdmitsGraph::admitted_labels(const std::vector<std::size_t>& h,
                                                 Admission mode) const {
  const auto n = balls_.size();
  if (h.size() != n) throw Error(ErrorKind::InvalidInput, "h must cover the source");
  std::vector<Bitset> reach(n);
  for (std::size_t y = 0; y < n; ++y) reach[y] = balls_[y][h[y]];
  if (mode == Admission::paths) {
    for (std::size_t y = 0; y < n; ++y) reach[y] |= fibres_[inst_.labels[y]];
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (reach[i].test(k)) reach[i] |= reach[k];
      }
    }
  }
  std::vector<Bitset> out(inst_.label_count, Bitset(inst_.label_count));
  for (std::size_t y = 0; y < n; ++y) {
    auto& row = out[inst_.labels[y]];
    for (auto z = reach[y].find_first(); z != Bitset::npos; z = reach[y].find_next(z)) {
      row.set(inst_.labels[z]);
    }
  }
  return out;
}

bool AdmitsGraph::admits_in_one_step(const std::vector<std::size_t>& h, std::size_t a,
                                     std::size_t b) const {
  for (auto label : {a, b}) {
    if (label >= inst_.label_count || fibres_[label].none()) {
      throw Error(ErrorKind::PointNotInImage, "admits needs points in the image");
    }
  }
  if (h.size() != balls_.size()) throw Error(ErrorKind::InvalidInput, "h must cover the source");
  const auto& from = fibres_[a];
  for (auto y = from.find_first(); y != Bitset::npos; y = from.find_next(y)) {
    if (balls_[y][h[y]].intersects(fibres_[b])) return true;
  }
  return false;
}

bool AdmitsGraph::admits(const std::vector<std::size_t>& h, std::size_t a, std::size_t b) const {
  for (auto label : {a, b}) {
    if (label >= inst_.label_count || fibres_[label].none()) {
      throw Error(ErrorKind::PointNotInImage, "admits needs points in the image");
    }
  }
  if (h.size() != balls_.size()) throw Error(ErrorKind::InvalidInput, "h must cover the source");
  Bitset reached = fibres_[a];
  Bitset frontier = reached;
  while (frontier.any()) {
    Bitset next(reached.size());
    for (auto y = frontier.find_first(); y != Bitset::npos; y = frontier.find_next(y)) {
      next |= balls_[y][h[y]];
      next |= fibres_[inst_.labels[y]];
    }
    frontier = next - reached;
    reached |= next;
  }
  return reached.intersects(fibres_[b]);
}

Bitset admit_set(const AdmitsGraph& graph, const FunctionGround& functions, std::size_t a,
                 std::size_t b, Admission mode) {
  Bitset out(functions.functions.size());
  for (std::size_t i = 0; i < functions.functions.size(); ++i) {
    const auto& h = functions.functions[i];
    if (mode == Admission::paths ? graph.admits(h, a, b) : graph.admits_in_one_step(h, a, b)) {
      out.set(i);
    }
  }
  return out;
}

ContinuitySpace final_space(const AdmitsInstance& inst, const IdSet& points,
                            const SizeLimits& limits, Admission mode) {
  if (points.size() != inst.label_count) {
    throw Error(ErrorKind::InvalidInput, "one target point per label expected");
  }
  const auto functions = function_ground(*inst.source, limits);
  const AdmitsGraph graph(inst, functions);
  const auto n = points.size();
  const auto m = functions.functions.size();
  std::vector<Bitset> admitted(n * n, Bitset(m));
  for (std::size_t i = 0; i < m; ++i) {
    const auto reach = graph.admitted_labels(functions.functions[i], mode);
    for (std::size_t a = 0; a < n; ++a) {
      for (auto b = reach[a].find_first(); b != Bitset::npos; b = reach[a].find_next(b)) {
        admitted[a * n + b].set(i);
      }
    }
  }
  Bitset image(n);
  for (auto label : inst.labels) image.set(label);
  const auto lattice = ValueLattice::omega(functions.ground);
  return ContinuitySpace::build(points, lattice, [&](std::size_t a, std::size_t b) -> Value {
    if (a == b) return lattice.bottom();
    if (!image.test(a) || !image.test(b)) return lattice.top();
    return principal(functions.ground, admitted[a * n + b]);
  });
}

CoproductGround coproduct_ground(std::span<const SpacePtr> spaces, const SizeLimits& limits) {
  CoproductGround out;
  std::vector<std::string> ids;
  for (std::size_t j = 0; j < spaces.size(); ++j) {
    if (!spaces[j]) throw Error(ErrorKind::InvalidInput, "null summand space");
    const auto& lattice = spaces[j]->lattice();
    out.lattices.push_back(lattice);
    out.representatives.push_back(
        lattice.positive_representatives(spaces[j]->realized_values(), limits.max_representatives));
    for (const auto& r : out.representatives.back()) ids.push_back(tag(j, lattice.value_id(r)));
    if (ids.size() > limits.max_ground) {
      throw Error(ErrorKind::SizeLimitExceeded,
                  "coproduct ground exceeds the limit of " + std::to_string(limits.max_ground));
    }
  }
  out.ground = std::make_shared<const IdSet>(ids);
  for (std::size_t j = 0; j < spaces.size(); ++j) {
    out.offsets.emplace_back();
    for (const auto& r : out.representatives[j]) {
      out.offsets[j].push_back(
          out.ground->index_of(tag(j, out.lattices[j].value_id(r)), ErrorKind::IdNotInGround));
    }
  }
  return out;
}

DownSetFamily coproduct_embed(const CoproductGround& ground, std::size_t summand, const Value& a) {
  if (summand >= ground.lattices.size()) throw Error(ErrorKind::InvalidInput, "no such summand");
  ground.lattices[summand].require(a);
  Bitset generator(ground.ground->size());
  for (std::size_t j = 0; j < ground.lattices.size(); ++j) {
    for (std::size_t r = 0; r < ground.representatives[j].size(); ++r) {
      if (j != summand || ground.lattices[j].well_above(ground.representatives[j][r], a)) {
        generator.set(ground.offsets[j][r]);
      }
    }
  }
  return principal(ground.ground, std::move(generator));
}

Lift coproduct(std::span<const SpacePtr> spaces, const SizeLimits& limits) {
  const auto ground = coproduct_ground(spaces, limits);
  std::vector<std::string> ids;
  for (std::size_t j = 0; j < spaces.size(); ++j) {
    for (const auto& p : spaces[j]->points()) ids.push_back(tag(j, p));
  }
  IdSet points(std::move(ids));
  std::vector<std::pair<std::size_t, std::size_t>> origin(points.size());
  std::vector<Assignment> injections(spaces.size());
  for (std::size_t j = 0; j < spaces.size(); ++j) {
    for (std::size_t y = 0; y < spaces[j]->size(); ++y) {
      const auto i = points.index_of(tag(j, spaces[j]->points()[y]), ErrorKind::PointNotInSpace);
      origin[i] = {j, y};
      injections[j].push_back(i);
    }
  }
  const auto lattice = ValueLattice::omega(ground.ground);
  auto space = std::make_shared<const ContinuitySpace>(
      ContinuitySpace::build(points, lattice, [&](std::size_t x, std::size_t y) -> Value {
        const auto [jx, px] = origin[x];
        const auto [jy, py] = origin[y];
        if (jx != jy) return lattice.top();
        return coproduct_embed(ground, jx, spaces[jx]->distance(px, py));
      }));
  Lift out{space, {}};
  for (std::size_t j = 0; j < spaces.size(); ++j) {
    out.legs.push_back(make_map(spaces[j], space, std::move(injections[j])));
  }
  return out;
}

Partition partition_from_blocks(const IdSet& points,
                                const std::vector<std::vector<std::string>>& blocks) {
  std::vector<std::size_t> block_of(points.size(), kUnlabelled);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorKind::InvalidInput, "empty block in relation");
    classes.emplace_back();
    for (const auto& id : blocks[b]) {
      const auto y = points.index_of(id, ErrorKind::PointNotInSpace);
      if (block_of[y] != kUnlabelled) {
        throw Error(ErrorKind::InvalidInput, "point appears in two blocks", id);
      }
      block_of[y] = classes.size() - 1;
      classes.back().push_back(y);
    }
  }
  for (std::size_t y = 0; y < points.size(); ++y) {
    if (block_of[y] == kUnlabelled) {
      block_of[y] = classes.size();
      classes.push_back({y});
    }
  }
  std::vector<std::string> class_names;
  for (auto& members : classes) {
    std::sort(members.begin(), members.end());
    std::vector<std::string> names;
    for (auto y : members) names.push_back(points[y]);
    class_names.push_back(composite_id(names));
  }
  Partition out{{}, IdSet(class_names)};
  for (std::size_t y = 0; y < points.size(); ++y) {
    out.labels.push_back(
        out.class_ids.index_of(class_names[block_of[y]], ErrorKind::PointNotInSpace));
  }
  return out;
}

Lift coequaliser(SpacePtr space, const std::vector<std::vector<std::string>>& blocks,
                 const SizeLimits& limits, Admission mode) {
  if (!space) throw Error(ErrorKind::InvalidInput, "null space");
  auto partition = partition_from_blocks(space->points(), blocks);
  const auto inst = admits_instance(space, partition.labels, partition.class_ids.size());
  auto quotient = std::make_shared<const ContinuitySpace>(
      final_space(inst, partition.class_ids, limits, mode));
  return Lift{quotient, {make_map(space, quotient, std::move(partition.labels))}};
}

Lift final_lift(const IdSet& points, std::span<const CoconeLeg> legs, const SizeLimits& limits,
                Admission mode) {
  std::vector<SpacePtr> sources;
  for (const auto& leg : legs) {
    if (!leg.source) throw Error(ErrorKind::InvalidMap, "cocone leg without a source");
    if (leg.assignment.size() != leg.source->size()) {
      throw Error(ErrorKind::InvalidMap, "cocone leg does not cover its source");
    }
    for (auto x : leg.assignment) {
      if (x >= points.size()) throw Error(ErrorKind::InvalidMap, "cocone leg leaves the apex");
    }
    sources.push_back(leg.source);
  }
  const auto sum = coproduct(sources, limits);
  Assignment induced(sum.space->size());
  for (std::size_t j = 0; j < legs.size(); ++j) {
    for (std::size_t y = 0; y < legs[j].assignment.size(); ++y) {
      induced[sum.legs[j].assignment[y]] = legs[j].assignment[y];
    }
  }
  auto space = std::make_shared<const ContinuitySpace>(
      final_space(admits_instance(sum.space, std::move(induced), points.size()), points, limits,
                  mode));
  Lift out{space, {}};
  for (const auto& leg : legs) out.legs.push_back(make_map(leg.source, space, leg.assignment));
  return out;
}

}  // namespace premet
