#include "premet/json_io.hpp"

#include <algorithm>
#include <map>

#include "premet/error.hpp"

namespace premet {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& path, const std::string& message) {
  throw Error(kind, message, path.empty() ? "/" : path);
}

void expect(bool ok, const std::string& path, const std::string& message) {
  if (!ok) fail(ErrorKind::InvalidInput, path, message);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

// Runs `body`, reporting library errors at `path`. A field the library named
// (a point id, an element) moves into the message.
template <class Body>
auto located(const std::string& path, Body&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    std::string message = e.what();
    if (!e.field().empty() && e.field().front() != '/') message += " ('" + e.field() + "')";
    throw Error(e.kind(), message, path.empty() ? "/" : path);
  }
}

const Json& member(const Json& j, const std::string& path, const char* key) {
  expect(j.is_object(), path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::InvalidInput, child(path, key), "missing field");
  return *it;
}

std::string string_at(const Json& j, const std::string& path) {
  expect(j.is_string(), path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_at(const Json& j, const std::string& path) {
  expect(j.is_array(), path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_at(j[i], child(path, i)));
  return out;
}

IdSet id_set_at(const Json& j, const std::string& path) {
  auto ids = strings_at(j, path);
  return located(path, [&] { return IdSet(std::move(ids)); });
}

std::size_t point_at(const IdSet& points, const Json& j, const std::string& path) {
  const auto id = string_at(j, path);
  const auto found = points.find(id);
  if (!found) fail(ErrorKind::PointNotInSpace, path, "unknown point '" + id + "'");
  return *found;
}

Json ids_to_json(const IdSet& ids, const Bitset& set) {
  Json out = Json::array();
  for (auto i : members(set)) out.push_back(ids[i]);
  return out;
}

}  // namespace

Json lattice_to_json(const ValueLattice& lattice) {
  switch (lattice.kind()) {
    case LatticeKind::finite: {
      const auto& l = lattice.finite_lattice();
      Json leq = Json::array();
      for (const auto& [lo, hi] : l.covers()) leq.push_back({l.id(lo), l.id(hi)});
      return {{"kind", "finite"}, {"elements", l.ids().ids()}, {"leq", leq}};
    }
    case LatticeKind::ext_rationals:
      return {{"kind", "ext_rationals"}};
    case LatticeKind::omega:
      return {{"kind", "omega"}, {"ground", lattice.omega_ground()->ids()}};
  }
  return {};
}

ValueLattice lattice_from_json(const Json& j, const std::string& path) {
  const auto kind = string_at(member(j, path, "kind"), child(path, "kind"));
  if (kind == "finite") {
    const auto elements = strings_at(member(j, path, "elements"), child(path, "elements"));
    const auto& leq = member(j, path, "leq");
    const auto leq_path = child(path, "leq");
    expect(leq.is_array(), leq_path, "expected an array of pairs");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < leq.size(); ++i) {
      const auto pair = strings_at(leq[i], child(leq_path, i));
      expect(pair.size() == 2, child(leq_path, i), "expected a [lo, hi] pair");
      pairs.emplace_back(pair[0], pair[1]);
    }
    return located(path, [&] { return ValueLattice::finite(validate_lattice(elements, pairs)); });
  }
  if (kind == "ext_rationals") return ValueLattice::ext_rationals();
  if (kind == "omega") {
    auto ground = id_set_at(member(j, path, "ground"), child(path, "ground"));
    return ValueLattice::omega(std::make_shared<const IdSet>(std::move(ground)));
  }
  fail(ErrorKind::InvalidInput, child(path, "kind"), "unknown lattice kind '" + kind + "'");
}

Json value_to_json(const ValueLattice& lattice, const Value& v) {
  lattice.require(v);
  switch (lattice.kind()) {
    case LatticeKind::finite:
    case LatticeKind::ext_rationals:
      return lattice.value_id(v);
    case LatticeKind::omega: {
      const auto& family = std::get<DownSetFamily>(v);
      Json out = Json::array();
      for (const auto& g : family.generators()) out.push_back(ids_to_json(*family.ground(), g));
      return out;
    }
  }
  return {};
}

Value value_from_json(const ValueLattice& lattice, const Json& j, const std::string& path) {
  switch (lattice.kind()) {
    case LatticeKind::finite: {
      const auto id = string_at(j, path);
      return located(path, [&] { return Value(lattice.finite_lattice().element(id)); });
    }
    case LatticeKind::ext_rationals:
      if (j.is_number_integer()) {
        if (j.get<std::int64_t>() < 0) fail(ErrorKind::ElementNotInLattice, path, "negative distance");
        return ExtRational(j.get<std::int64_t>(), 1);
      }
      expect(j.is_string(), path, "expected a rational string such as \"3/2\" or \"inf\"");
      return located(path, [&] { return Value(ExtRational::parse(j.get<std::string>())); });
    case LatticeKind::omega: {
      expect(j.is_array(), path, "expected a list of generators");
      std::vector<std::vector<std::string>> generators;
      for (std::size_t i = 0; i < j.size(); ++i) {
        generators.push_back(strings_at(j[i], child(path, i)));
      }
      return located(path, [&] { return Value(normalize(lattice.omega_ground(), generators)); });
    }
  }
  fail(ErrorKind::InvalidInput, path, "unsupported lattice kind");
}

Json space_to_json(const ContinuitySpace& space) {
  Json d = Json::array();
  const auto& points = space.points();
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      if (x != y) d.push_back({points[x], points[y], value_to_json(space.lattice(), space.distance(x, y))});
    }
  }
  return {{"points", points.ids()}, {"lattice", lattice_to_json(space.lattice())}, {"d", d}};
}

ContinuitySpace space_from_json(const Json& j, const std::string& path) {
  auto points = id_set_at(member(j, path, "points"), child(path, "points"));
  const auto lattice = lattice_from_json(member(j, path, "lattice"), child(path, "lattice"));
  const auto& d = member(j, path, "d");
  const auto d_path = child(path, "d");
  expect(d.is_array(), d_path, "expected an array of [x, y, value] entries");

  const auto n = points.size();
  std::vector<std::optional<Value>> table(n * n);
  for (std::size_t x = 0; x < n; ++x) table[x * n + x] = lattice.bottom();
  std::vector<bool> given(n * n, false);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto entry_path = child(d_path, i);
    const auto& entry = d[i];
    expect(entry.is_array() && entry.size() == 3, entry_path, "expected [x, y, value]");
    const auto x = point_at(points, entry[0], child(entry_path, 0));
    const auto y = point_at(points, entry[1], child(entry_path, 1));
    if (given[x * n + y]) fail(ErrorKind::InvalidSpace, entry_path, "distance given twice");
    given[x * n + y] = true;
    auto v = value_from_json(lattice, entry[2], child(entry_path, 2));
    if (x == y && !lattice.leq(v, lattice.bottom())) {
      fail(ErrorKind::InvalidSpace, child(entry_path, 2), "d(x,x) must be the bottom element");
    }
    table[x * n + y] = std::move(v);
  }
  std::vector<Value> values;
  values.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!table[x * n + y]) {
        fail(ErrorKind::InvalidSpace, d_path,
             "missing distance from '" + points[x] + "' to '" + points[y] + "'");
      }
      values.push_back(std::move(*table[x * n + y]));
    }
  }
  return located(path, [&] { return ContinuitySpace(std::move(points), lattice, std::move(values)); });
}

Json topology_to_json(const FiniteTopology& topology) {
  Json opens = Json::array();
  for (const auto& o : topology.opens()) opens.push_back(ids_to_json(topology.points(), o));
  return {{"points", topology.points().ids()}, {"opens", opens}};
}

FiniteTopology topology_from_json(const Json& j, const std::string& path) {
  auto points = id_set_at(member(j, path, "points"), child(path, "points"));
  const auto& opens = member(j, path, "opens");
  const auto opens_path = child(path, "opens");
  expect(opens.is_array(), opens_path, "expected an array of point lists");
  std::vector<Bitset> sets;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    const auto open_path = child(opens_path, i);
    expect(opens[i].is_array(), open_path, "expected a list of point ids");
    Bitset set(points.size());
    for (std::size_t k = 0; k < opens[i].size(); ++k) {
      set.set(point_at(points, opens[i][k], child(open_path, k)));
    }
    sets.push_back(std::move(set));
  }
  return located(opens_path, [&] { return FiniteTopology::from_opens(std::move(points), sets); });
}

Json assignment_to_json(const IdSet& source, const IdSet& target, const Assignment& f) {
  Json out = Json::object();
  for (std::size_t x = 0; x < f.size(); ++x) out[source[x]] = target[f[x]];
  return out;
}

Assignment assignment_from_json(const IdSet& source, const IdSet& target, const Json& j,
                                const std::string& path) {
  expect(j.is_object(), path, "expected an object from source ids to target ids");
  Assignment f(source.size(), 0);
  std::vector<bool> seen(source.size(), false);
  for (const auto& [key, value] : j.items()) {
    const auto found = source.find(key);
    if (!found) fail(ErrorKind::PointNotInSpace, child(path, key), "unknown source point");
    seen[*found] = true;
    f[*found] = point_at(target, value, child(path, key));
  }
  for (std::size_t x = 0; x < source.size(); ++x) {
    if (!seen[x]) fail(ErrorKind::InvalidMap, path, "no image for point '" + source[x] + "'");
  }
  return f;
}

Json map_to_json(const SpaceMap& map) {
  return {{"source", space_to_json(*map.source)},
          {"target", space_to_json(*map.target)},
          {"assignment", assignment_to_json(map.source->points(), map.target->points(), map.assignment)}};
}

SpaceMap map_from_json(const Json& j, const std::string& path) {
  auto source = std::make_shared<const ContinuitySpace>(
      space_from_json(member(j, path, "source"), child(path, "source")));
  auto target = std::make_shared<const ContinuitySpace>(
      space_from_json(member(j, path, "target"), child(path, "target")));
  auto f = assignment_from_json(source->points(), target->points(), member(j, path, "assignment"),
                                child(path, "assignment"));
  return make_map(std::move(source), std::move(target), std::move(f));
}

std::vector<std::vector<std::string>> relation_from_json(const Json& j, const std::string& path) {
  expect(j.is_array(), path, "expected a list of blocks of point ids");
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(strings_at(j[i], child(path, i)));
  return out;
}

Cone cone_from_json(const Json& j, const std::string& path) {
  Cone cone;
  cone.apex = id_set_at(member(j, path, "apex"), child(path, "apex"));
  const auto& legs = member(j, path, "legs");
  const auto legs_path = child(path, "legs");
  expect(legs.is_array(), legs_path, "expected an array of legs");
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const auto leg_path = child(legs_path, i);
    auto target = std::make_shared<const ContinuitySpace>(
        space_from_json(member(legs[i], leg_path, "target"), child(leg_path, "target")));
    auto f = assignment_from_json(cone.apex, target->points(), member(legs[i], leg_path, "assignment"),
                                  child(leg_path, "assignment"));
    cone.legs.push_back({std::move(f), std::move(target)});
  }
  return cone;
}

Cocone cocone_from_json(const Json& j, const std::string& path) {
  Cocone cocone;
  cocone.points = id_set_at(member(j, path, "points"), child(path, "points"));
  const auto& legs = member(j, path, "legs");
  const auto legs_path = child(path, "legs");
  expect(legs.is_array(), legs_path, "expected an array of legs");
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const auto leg_path = child(legs_path, i);
    auto source = std::make_shared<const ContinuitySpace>(
        space_from_json(member(legs[i], leg_path, "source"), child(leg_path, "source")));
    auto f = assignment_from_json(source->points(), cocone.points,
                                  member(legs[i], leg_path, "assignment"), child(leg_path, "assignment"));
    cocone.legs.push_back({std::move(source), std::move(f)});
  }
  return cocone;
}

Json lift_to_json(const Lift& lift) {
  Json legs = Json::array();
  for (const auto& leg : lift.legs) {
    legs.push_back({{"source", leg.source->points().ids()},
                    {"target", leg.target->points().ids()},
                    {"assignment", assignment_to_json(leg.source->points(), leg.target->points(),
                                                      leg.assignment)}});
  }
  return {{"space", space_to_json(*lift.space)}, {"legs", legs}};
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace premet
