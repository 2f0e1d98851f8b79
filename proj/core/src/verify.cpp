#include "premet/verify.hpp"

#include <map>

#include "premet/error.hpp"

namespace premet {

namespace {

Assignment compose(const Assignment& outer, const Assignment& inner) {
  Assignment out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[inner[x]];
  return out;
}

std::size_t function_count(std::size_t source, std::size_t target) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < source; ++i) {
    if (target != 0 && total > kMaxProbeFunctions / target) {
      throw Error(ErrorKind::ProbeTooLarge,
                  std::to_string(target) + "^" + std::to_string(source) +
                      " functions exceed the enumeration limit");
    }
    total *= target;
  }
  return total;
}

// Calls visit(f) for every total f : {0..source-1} → {0..target-1}.
template <class Visit>
void for_each_function(std::size_t source, std::size_t target, Visit&& visit) {
  const auto total = function_count(source, target);
  if (source > 0 && target == 0) return;
  Assignment f(source, 0);
  for (std::size_t i = 0; i < total; ++i) {
    visit(f);
    for (std::size_t x = source; x > 0; --x) {
      if (++f[x - 1] < target) break;
      f[x - 1] = 0;
    }
  }
}

std::vector<Bitset> smallest_balls(const ContinuitySpace& space) {
  return ball_system(space).smallest;
}

std::vector<bool> derived_objects(const UniversalInstance& inst) {
  std::vector<bool> derived(inst.diagram.objects.size(), false);
  for (const auto& a : inst.diagram.arrows) derived[inst.colimit ? a.from : a.to] = true;
  return derived;
}

SpaceMap leg_map(const UniversalInstance& inst, std::size_t i) {
  const auto& object = inst.diagram.objects[i];
  return inst.colimit ? make_map(object, inst.candidate.apex, inst.candidate.legs[i])
                      : make_map(inst.candidate.apex, object, inst.candidate.legs[i]);
}

}  // namespace

Json instance_to_json(const UniversalInstance& inst) {
  Json objects = Json::array();
  for (const auto& o : inst.diagram.objects) objects.push_back(space_to_json(*o));
  Json arrows = Json::array();
  for (const auto& a : inst.diagram.arrows) {
    arrows.push_back({{"from", a.from},
                      {"to", a.to},
                      {"assignment", assignment_to_json(inst.diagram.objects[a.from]->points(),
                                                        inst.diagram.objects[a.to]->points(),
                                                        a.assignment)}});
  }
  Json legs = Json::array();
  for (std::size_t i = 0; i < inst.candidate.legs.size(); ++i) {
    const auto m = leg_map(inst, i);
    legs.push_back(assignment_to_json(m.source->points(), m.target->points(), m.assignment));
  }
  return {{"kind", inst.kind},     {"colimit", inst.colimit}, {"objects", objects},
          {"arrows", arrows},      {"apex", space_to_json(*inst.candidate.apex)},
          {"legs", legs}};
}

namespace {

UniversalInstance explicit_instance(const Json& j) {
  UniversalInstance inst;
  inst.kind = j.at("kind").get<std::string>();
  inst.colimit = j.at("colimit").get<bool>();
  for (const auto& o : j.at("objects")) {
    inst.diagram.objects.push_back(std::make_shared<const ContinuitySpace>(space_from_json(o)));
  }
  for (const auto& a : j.at("arrows")) {
    DiagramArrow arrow{a.at("from").get<std::size_t>(), a.at("to").get<std::size_t>(), {}};
    arrow.assignment = assignment_from_json(inst.diagram.objects.at(arrow.from)->points(),
                                            inst.diagram.objects.at(arrow.to)->points(),
                                            a.at("assignment"));
    inst.diagram.arrows.push_back(std::move(arrow));
  }
  inst.candidate.apex = std::make_shared<const ContinuitySpace>(space_from_json(j.at("apex")));
  const auto& legs = j.at("legs");
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const auto& object = inst.diagram.objects.at(i)->points();
    const auto& apex = inst.candidate.apex->points();
    inst.candidate.legs.push_back(inst.colimit ? assignment_from_json(object, apex, legs[i])
                                               : assignment_from_json(apex, object, legs[i]));
  }
  return inst;
}

// Continuous legs into (limit) or out of (colimit) each object, by probe.
struct ProbeContext {
  std::vector<Bitset> probe;
  std::vector<Bitset> apex;
  std::vector<std::vector<Bitset>> objects;
};

bool map_continuous(const ProbeContext& ctx, bool colimit, std::size_t object,
                    const Assignment& f) {
  return colimit ? continuous_on_smallest_balls(ctx.objects[object], ctx.probe, f)
                 : continuous_on_smallest_balls(ctx.probe, ctx.objects[object], f);
}

// Fills derived legs from the free ones; false when arrows disagree or a
// derived leg is discontinuous.
bool complete_cone(const UniversalInstance& inst, const ProbeContext& ctx,
                   const std::vector<bool>& derived, std::vector<std::optional<Assignment>>& legs) {
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (derived[i]) legs[i].reset();
  }
  for (const auto& a : inst.diagram.arrows) {
    const auto free_end = inst.colimit ? a.to : a.from;
    const auto derived_end = inst.colimit ? a.from : a.to;
    auto value = inst.colimit ? compose(*legs[free_end], a.assignment)
                              : compose(a.assignment, *legs[free_end]);
    if (legs[derived_end] && *legs[derived_end] != value) return false;
    legs[derived_end] = std::move(value);
  }
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (derived[i] && (!legs[i] || !map_continuous(ctx, inst.colimit, i, *legs[i]))) return false;
  }
  return true;
}

std::vector<std::size_t> cone_key(const std::vector<bool>& derived,
                                  const std::vector<std::optional<Assignment>>& legs) {
  std::vector<std::size_t> key;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (derived[i]) continue;
    key.insert(key.end(), legs[i]->begin(), legs[i]->end());
  }
  return key;
}

Json cone_to_json(const UniversalInstance& inst, const ContinuitySpace& probe,
                  const std::vector<std::optional<Assignment>>& legs) {
  Json out = Json::array();
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const auto& object = inst.diagram.objects[i]->points();
    out.push_back(inst.colimit ? assignment_to_json(object, probe.points(), *legs[i])
                               : assignment_to_json(probe.points(), object, *legs[i]));
  }
  return out;
}

// Number of continuous mediators between the candidate apex and the probe
// whose induced cone is `cone`.
std::size_t count_mediators(const UniversalInstance& inst, const ProbeContext& ctx,
                            const std::vector<bool>& derived,
                            const std::vector<std::optional<Assignment>>& cone) {
  const auto key = cone_key(derived, cone);
  const auto apex_size = inst.candidate.apex->size();
  const auto probe_size = ctx.probe.size();
  std::size_t count = 0;
  const auto src = inst.colimit ? apex_size : probe_size;
  const auto dst = inst.colimit ? probe_size : apex_size;
  for_each_function(src, dst, [&](const Assignment& u) {
    const bool ok = inst.colimit ? continuous_on_smallest_balls(ctx.apex, ctx.probe, u)
                                 : continuous_on_smallest_balls(ctx.probe, ctx.apex, u);
    if (!ok) return;
    std::vector<std::optional<Assignment>> induced(cone.size());
    for (std::size_t i = 0; i < cone.size(); ++i) {
      if (derived[i]) continue;
      induced[i] = inst.colimit ? compose(u, inst.candidate.legs[i])
                                : compose(inst.candidate.legs[i], u);
    }
    if (cone_key(derived, induced) == key) ++count;
  });
  return count;
}

ProbeContext make_context(const UniversalInstance& inst, const ContinuitySpace& probe) {
  ProbeContext ctx{smallest_balls(probe), smallest_balls(*inst.candidate.apex), {}};
  for (const auto& o : inst.diagram.objects) ctx.objects.push_back(smallest_balls(*o));
  return ctx;
}

// First leg failure (continuity or commutation), as a counterexample.
Json leg_failure(const UniversalInstance& inst) {
  for (std::size_t i = 0; i < inst.candidate.legs.size(); ++i) {
    const auto m = leg_map(inst, i);
    if (const auto v = eps_delta_violation(m)) {
      return {{"reason", "leg_not_continuous"},
              {"instance", instance_to_json(inst)},
              {"leg", i},
              {"point", m.source->points()[v->point]},
              {"eps", value_to_json(m.target->lattice(), v->eps)}};
    }
  }
  for (std::size_t k = 0; k < inst.diagram.arrows.size(); ++k) {
    const auto& a = inst.diagram.arrows[k];
    const auto& legs = inst.candidate.legs;
    const bool commutes = inst.colimit ? compose(legs[a.to], a.assignment) == legs[a.from]
                                       : compose(a.assignment, legs[a.from]) == legs[a.to];
    if (!commutes) {
      return {{"reason", "leg_not_commuting"}, {"instance", instance_to_json(inst)}, {"arrow", k}};
    }
  }
  return nullptr;
}

VerificationReport check_universal_impl(const UniversalInstance& inst,
                                        std::span<const SpacePtr> probes) {
  VerificationReport report;
  report.claim = inst.colimit ? "colimit" : "limit";
  report.instance = inst.kind;
  if (inst.candidate.legs.size() != inst.diagram.objects.size()) {
    throw Error(ErrorKind::InvalidInput, "candidate needs one leg per diagram object");
  }
  if (auto failure = leg_failure(inst); !failure.is_null()) {
    report.passed = false;
    report.counterexample = std::move(failure);
    return report;
  }
  const auto derived = derived_objects(inst);
  const auto n_objects = inst.diagram.objects.size();
  const auto apex_size = inst.candidate.apex->size();

  for (const auto& probe : probes) {
    const auto ctx = make_context(inst, *probe);
    const auto probe_size = probe->size();

    // Continuous mediators, grouped by the cone they induce.
    std::map<std::vector<std::size_t>, std::size_t> mediators;
    const auto src = inst.colimit ? apex_size : probe_size;
    const auto dst = inst.colimit ? probe_size : apex_size;
    for_each_function(src, dst, [&](const Assignment& u) {
      const bool ok = inst.colimit ? continuous_on_smallest_balls(ctx.apex, ctx.probe, u)
                                   : continuous_on_smallest_balls(ctx.probe, ctx.apex, u);
      if (!ok) return;
      std::vector<std::optional<Assignment>> induced(n_objects);
      for (std::size_t i = 0; i < n_objects; ++i) {
        if (derived[i]) continue;
        induced[i] = inst.colimit ? compose(u, inst.candidate.legs[i])
                                  : compose(inst.candidate.legs[i], u);
      }
      ++mediators[cone_key(derived, induced)];
    });

    // Continuous maps between the probe and each free object.
    std::vector<std::vector<Assignment>> options(n_objects);
    bool empty_factor = false;
    for (std::size_t i = 0; i < n_objects; ++i) {
      if (derived[i]) continue;
      const auto object_size = inst.diagram.objects[i]->size();
      for_each_function(inst.colimit ? object_size : probe_size,
                        inst.colimit ? probe_size : object_size, [&](const Assignment& k) {
                          if (map_continuous(ctx, inst.colimit, i, k)) options[i].push_back(k);
                        });
      empty_factor = empty_factor || options[i].empty();
    }
    if (empty_factor) continue;

    std::vector<std::size_t> choice(n_objects, 0);
    while (true) {
      std::vector<std::optional<Assignment>> cone(n_objects);
      for (std::size_t i = 0; i < n_objects; ++i) {
        if (!derived[i]) cone[i] = options[i][choice[i]];
      }
      if (complete_cone(inst, ctx, derived, cone)) {
        ++report.checked;
        const auto it = mediators.find(cone_key(derived, cone));
        const std::size_t count = it == mediators.end() ? 0 : it->second;
        if (count != 1) {
          report.passed = false;
          report.counterexample = {{"reason", "mediator_count"},
                                   {"instance", instance_to_json(inst)},
                                   {"probe", space_to_json(*probe)},
                                   {"cone", cone_to_json(inst, *probe, cone)},
                                   {"mediators", count}};
          return report;
        }
      }
      std::size_t i = n_objects;
      while (i > 0) {
        --i;
        if (derived[i]) continue;
        if (++choice[i] < options[i].size()) break;
        choice[i] = 0;
        if (i == 0) break;
      }
      bool done = true;
      for (std::size_t k = 0; k < n_objects; ++k) done = done && choice[k] == 0;
      if (done) break;
    }
  }
  report.details["probes"] = probes.size();
  return report;
}

SpacePtr with_distances(const ContinuitySpace& space, bool top_off_diagonal) {
  const auto& lattice = space.lattice();
  return std::make_shared<const ContinuitySpace>(
      ContinuitySpace::build(space.points(), lattice, [&](std::size_t x, std::size_t y) {
        return x != y && top_off_diagonal ? lattice.top() : lattice.bottom();
      }));
}

}  // namespace

UniversalInstance instance_from_json(const Json& j, const SizeLimits& limits, Admission mode) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw Error(ErrorKind::InvalidInput, "instance needs a string kind", "/kind");
  }
  try {
    if (j.contains("apex")) return explicit_instance(j);
    const auto kind = j.at("kind").get<std::string>();
    auto read_spaces = [&] {
      std::vector<SpacePtr> spaces;
      const auto& list = j.at("spaces");
      for (std::size_t i = 0; i < list.size(); ++i) {
        spaces.push_back(std::make_shared<const ContinuitySpace>(
            space_from_json(list.at(i), "/spaces/" + std::to_string(i))));
      }
      return spaces;
    };
    if (kind == "product") return product_instance(read_spaces(), limits);
    if (kind == "coproduct") return coproduct_instance(read_spaces(), limits);
    if (kind == "equaliser") {
      return equaliser_instance(map_from_json(j.at("f"), "/f"), map_from_json(j.at("g"), "/g"));
    }
    if (kind == "coequaliser") {
      auto space = std::make_shared<const ContinuitySpace>(space_from_json(j.at("space"), "/space"));
      return coequaliser_instance(std::move(space), relation_from_json(j.at("relation"), "/relation"),
                                  limits, mode);
    }
    throw Error(ErrorKind::InvalidInput, "unknown instance kind '" + kind + "'", "/kind");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, e.what());
  }
}

bool continuous_on_smallest_balls(const std::vector<Bitset>& source,
                                  const std::vector<Bitset>& target, const Assignment& f) {
  for (std::size_t x = 0; x < source.size(); ++x) {
    const auto& allowed = target[f[x]];
    const auto& near = source[x];
    for (auto y = near.find_first(); y != Bitset::npos; y = near.find_next(y)) {
      if (!allowed.test(f[y])) return false;
    }
  }
  return true;
}

Json report_to_json(const VerificationReport& report) {
  return {{"claim", report.claim},
          {"instance", report.instance},
          {"verdict", report.passed ? "pass" : "fail"},
          {"checked", report.checked},
          {"counterexample", report.counterexample},
          {"details", report.details}};
}

UniversalInstance product_instance(std::span<const SpacePtr> spaces, const SizeLimits& limits) {
  const auto lift = product(spaces, limits);
  UniversalInstance inst{"product", false, {{spaces.begin(), spaces.end()}, {}}, {lift.space, {}}};
  for (const auto& leg : lift.legs) inst.candidate.legs.push_back(leg.assignment);
  return inst;
}

UniversalInstance equaliser_instance(const SpaceMap& f, const SpaceMap& g) {
  const auto lift = equaliser(f, g);
  const auto& inclusion = lift.legs.front().assignment;
  return UniversalInstance{
      "equaliser",
      false,
      {{f.source, f.target}, {{0, 1, f.assignment}, {0, 1, g.assignment}}},
      {lift.space, {inclusion, compose(f.assignment, inclusion)}}};
}

UniversalInstance coproduct_instance(std::span<const SpacePtr> spaces, const SizeLimits& limits) {
  const auto lift = coproduct(spaces, limits);
  UniversalInstance inst{"coproduct", true, {{spaces.begin(), spaces.end()}, {}}, {lift.space, {}}};
  for (const auto& leg : lift.legs) inst.candidate.legs.push_back(leg.assignment);
  return inst;
}

UniversalInstance coequaliser_instance(SpacePtr space,
                                       const std::vector<std::vector<std::string>>& blocks,
                                       const SizeLimits& limits, Admission mode) {
  const auto lift = coequaliser(space, blocks, limits, mode);
  const auto& quotient = lift.legs.front().assignment;
  const auto partition = partition_from_blocks(space->points(), blocks);

  std::vector<std::string> pair_ids;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < space->size(); ++x) {
    for (std::size_t y = 0; y < space->size(); ++y) {
      if (partition.labels[x] == partition.labels[y]) {
        pair_ids.push_back(composite_id({space->points()[x], space->points()[y]}));
      }
    }
  }
  const IdSet relation_points(pair_ids);
  Assignment first(relation_points.size()), second(relation_points.size());
  for (std::size_t x = 0; x < space->size(); ++x) {
    for (std::size_t y = 0; y < space->size(); ++y) {
      if (partition.labels[x] != partition.labels[y]) continue;
      const auto i = relation_points.index_of(composite_id({space->points()[x], space->points()[y]}),
                                              ErrorKind::PointNotInSpace);
      first[i] = x;
      second[i] = y;
    }
  }
  const auto two = chain(2);
  auto relation = std::make_shared<const ContinuitySpace>(ContinuitySpace::build(
      relation_points, two, [&](std::size_t a, std::size_t b) {
        return a == b ? two.bottom() : two.top();
      }));
  return UniversalInstance{"coequaliser",
                           true,
                           {{space, relation}, {{1, 0, first}, {1, 0, second}}},
                           {lift.space, {quotient, compose(quotient, first)}}};
}

VerificationReport check_limit(const UniversalInstance& instance, std::span<const SpacePtr> probes) {
  if (instance.colimit) throw Error(ErrorKind::InvalidInput, "instance is a colimit");
  return check_universal_impl(instance, probes);
}

VerificationReport check_colimit(const UniversalInstance& instance,
                                 std::span<const SpacePtr> probes) {
  if (!instance.colimit) throw Error(ErrorKind::InvalidInput, "instance is a limit");
  return check_universal_impl(instance, probes);
}

VerificationReport check_universal(const UniversalInstance& instance,
                                   std::span<const SpacePtr> probes) {
  return check_universal_impl(instance, probes);
}

std::vector<std::pair<std::string, UniversalInstance>> mutants(const UniversalInstance& instance) {
  std::vector<std::pair<std::string, UniversalInstance>> out;
  const auto original = smallest_balls(*instance.candidate.apex);
  for (const bool top : {false, true}) {
    auto mutant = instance;
    mutant.candidate.apex = with_distances(*instance.candidate.apex, top);
    if (smallest_balls(*mutant.candidate.apex) == original) continue;
    out.emplace_back(top ? "all_top_off_diagonal" : "all_bottom", std::move(mutant));
  }
  return out;
}

VerificationReport check_adjunction(const FiniteTopology& topology,
                                    std::span<const SpacePtr> probes) {
  VerificationReport report{"adjunction", "", true, 0, nullptr, Json::object()};
  const auto dual = flagg(topology);
  const auto dual_balls = ball_system(dual);
  std::size_t agreeing = 0;
  for (const auto& probe : probes) {
    const auto probe_topology = generate_topology(*probe);
    const auto probe_balls = ball_system(*probe);
    bool mismatch = false;
    for_each_function(probe->size(), topology.size(), [&](const Assignment& g) {
      if (mismatch) return;
      ++report.checked;
      const bool top = is_top_continuous(probe_topology, topology, g);
      const bool metric = !eps_delta_violation(probe_balls, dual_balls, g).has_value();
      if (top == metric) {
        if (top) ++agreeing;
        return;
      }
      mismatch = true;
      report.passed = false;
      report.counterexample = {{"reason", "adjunction_mismatch"},
                               {"topology", topology_to_json(topology)},
                               {"probe", space_to_json(*probe)},
                               {"assignment", assignment_to_json(probe->points(), topology.points(), g)},
                               {"top_continuous", top},
                               {"eps_delta_continuous", metric}};
    });
    if (mismatch) return report;
  }
  report.details["continuous_maps"] = agreeing;
  report.details["probes"] = probes.size();
  return report;
}

VerificationReport check_O_preservation(const UniversalInstance& instance) {
  VerificationReport report{"preservation", instance.kind, true, 1, nullptr, Json::object()};
  const auto& apex = *instance.candidate.apex;
  const auto generated = generate_topology(apex);
  std::vector<std::pair<FiniteTopology, Assignment>> legs;
  for (std::size_t i = 0; i < instance.diagram.objects.size(); ++i) {
    legs.emplace_back(generate_topology(*instance.diagram.objects[i]), instance.candidate.legs[i]);
  }
  const auto expected = instance.colimit ? final_topology(apex.points(), legs)
                                         : initial_topology(apex.points(), legs);
  report.passed = instance.colimit ? generated == expected : generated.finer_or_equal(expected);
  report.details["relation"] = instance.colimit ? "equal" : "finer_or_equal";
  report.details["equal"] = generated == expected;
  if (!report.passed) {
    report.counterexample = {{"reason", "preservation"},
                             {"instance", instance_to_json(instance)},
                             {"generated", topology_to_json(generated)},
                             {"expected", topology_to_json(expected)}};
  }
  return report;
}

VerificationReport round_trip_suite(std::size_t n) {
  VerificationReport report{"round_trip", "n=" + std::to_string(n), true, 0, nullptr,
                            Json::object()};
  std::size_t flagg_ok = 0;
  std::size_t premetrize_ok = 0;
  for (const auto& t : enumerate_topologies(n)) {
    ++report.checked;
    const bool via_flagg = generate_topology(flagg(t)) == t;
    const bool via_premetric = generate_topology(premetrize(t)) == t;
    flagg_ok += via_flagg;
    premetrize_ok += via_premetric;
    if ((!via_flagg || !via_premetric) && report.passed) {
      report.passed = false;
      report.counterexample = {{"reason", "round_trip"},
                               {"construction", via_flagg ? "premetrize" : "flagg"},
                               {"topology", topology_to_json(t)}};
    }
  }
  report.details = {{"topologies", report.checked}, {"flagg", flagg_ok}, {"premetrize", premetrize_ok}};
  return report;
}

bool balls_open(const ContinuitySpace& space) {
  const auto sys = ball_system(space);
  const auto t = generate_topology(space.points(), sys);
  for (const auto& at_point : sys.balls) {
    for (const auto& b : at_point) {
      if (!t.is_open(b)) return false;
    }
  }
  return true;
}

VerificationReport continuity_gap_search(const ContinuitySpace& source,
                                         const ContinuitySpace& target) {
  VerificationReport report{"gap", "", true, 0, nullptr, Json::object()};
  const auto src_balls = ball_system(source);
  const auto dst_balls = ball_system(target);
  const auto src_top = generate_topology(source.points(), src_balls);
  const auto dst_top = generate_topology(target.points(), dst_balls);
  const bool open = balls_open(target);
  Json gaps = Json::array();
  for_each_function(source.size(), target.size(), [&](const Assignment& f) {
    ++report.checked;
    if (!is_top_continuous(src_top, dst_top, f)) return;
    const auto violation = eps_delta_violation(src_balls, dst_balls, f);
    if (!violation) return;
    gaps.push_back({{"assignment", assignment_to_json(source.points(), target.points(), f)},
                    {"point", source.points()[violation->point]},
                    {"eps", value_to_json(target.lattice(), violation->eps)}});
    if (open && report.passed) {
      report.passed = false;
      report.counterexample = {{"reason", "gap"},
                               {"source", space_to_json(source)},
                               {"target", space_to_json(target)},
                               {"assignment", gaps.back()["assignment"]}};
    }
  });
  report.details = {{"balls_open", open}, {"gaps", gaps}};
  return report;
}

bool replay(const Json& counterexample) {
  if (!counterexample.is_object() || !counterexample.contains("reason")) {
    throw Error(ErrorKind::InvalidInput, "counterexample without a reason", "/reason");
  }
  const auto reason = counterexample.at("reason").get<std::string>();
  if (reason == "leg_not_continuous") {
    const auto inst = instance_from_json(counterexample.at("instance"));
    return !is_eps_delta_continuous(leg_map(inst, counterexample.at("leg").get<std::size_t>()));
  }
  if (reason == "leg_not_commuting") {
    const auto inst = instance_from_json(counterexample.at("instance"));
    const auto& a = inst.diagram.arrows.at(counterexample.at("arrow").get<std::size_t>());
    const auto& legs = inst.candidate.legs;
    return inst.colimit ? compose(legs[a.to], a.assignment) != legs[a.from]
                        : compose(a.assignment, legs[a.from]) != legs[a.to];
  }
  if (reason == "mediator_count") {
    const auto inst = instance_from_json(counterexample.at("instance"));
    const auto probe = space_from_json(counterexample.at("probe"));
    const auto ctx = make_context(inst, probe);
    const auto derived = derived_objects(inst);
    const auto& cone_json = counterexample.at("cone");
    std::vector<std::optional<Assignment>> cone(inst.diagram.objects.size());
    for (std::size_t i = 0; i < cone.size(); ++i) {
      const auto& object = inst.diagram.objects[i]->points();
      cone[i] = inst.colimit ? assignment_from_json(object, probe.points(), cone_json.at(i))
                             : assignment_from_json(probe.points(), object, cone_json.at(i));
      if (!derived[i] && !map_continuous(ctx, inst.colimit, i, *cone[i])) return false;
    }
    if (!complete_cone(inst, ctx, derived, cone)) return false;
    return count_mediators(inst, ctx, derived, cone) != 1;
  }
  if (reason == "adjunction_mismatch") {
    const auto t = topology_from_json(counterexample.at("topology"));
    const auto probe = std::make_shared<const ContinuitySpace>(space_from_json(counterexample.at("probe")));
    const auto g = assignment_from_json(probe->points(), t.points(), counterexample.at("assignment"));
    const bool top = is_top_continuous(generate_topology(*probe), t, g);
    const auto dual = std::make_shared<const ContinuitySpace>(flagg(t));
    return top != is_eps_delta_continuous(make_map(probe, dual, g));
  }
  if (reason == "preservation") {
    return !check_O_preservation(instance_from_json(counterexample.at("instance"))).passed;
  }
  if (reason == "round_trip") {
    const auto t = topology_from_json(counterexample.at("topology"));
    const auto construction = counterexample.at("construction").get<std::string>();
    return generate_topology(construction == "flagg" ? flagg(t) : premetrize(t)) != t;
  }
  if (reason == "gap") {
    auto source = std::make_shared<const ContinuitySpace>(space_from_json(counterexample.at("source")));
    auto target = std::make_shared<const ContinuitySpace>(space_from_json(counterexample.at("target")));
    const auto f = assignment_from_json(source->points(), target->points(),
                                        counterexample.at("assignment"));
    const auto map = make_map(source, target, f);
    return balls_open(*target) && is_top_continuous(map) && !is_eps_delta_continuous(map);
  }
  throw Error(ErrorKind::InvalidInput, "unknown counterexample reason '" + reason + "'", "/reason");
}

std::vector<SpacePtr> all_spaces(std::size_t n, const ValueLattice& lattice,
                                 std::span<const Value> values) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  const IdSet points(ids);
  std::vector<SpacePtr> out;
  const auto off_diagonal = n * (n - (n > 0 ? 1 : 0));
  for_each_function(off_diagonal, values.size(), [&](const Assignment& choice) {
    std::size_t k = 0;
    std::vector<Value> table;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        table.push_back(x == y ? lattice.bottom() : values[choice[k++]]);
      }
    }
    out.push_back(std::make_shared<const ContinuitySpace>(points, lattice, std::move(table)));
  });
  return out;
}

SpacePtr counterexample_space() {
  const auto lattice = ValueLattice::ext_rationals();
  const IdSet points({"a", "b", "c", "d"});
  return std::make_shared<const ContinuitySpace>(
      ContinuitySpace::build(points, lattice, [&](std::size_t x, std::size_t y) -> Value {
        if (x == y) return ExtRational();
        const auto lo = std::min(x, y);
        const auto hi = std::max(x, y);
        // indices follow a, b, c, d
        if ((lo == 0 && hi == 1) || (lo == 1 && hi == 2)) return ExtRational();
        if (lo == 0 && hi == 2) return ExtRational(2, 1);
        return ExtRational(1, 1);
      }));
}

ValueLattice chain(std::size_t size) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < size; ++i) ids.push_back(std::to_string(i));
  return ValueLattice::finite(chain_lattice(ids));
}

std::vector<SpacePtr> default_probes() {
  std::vector<SpacePtr> out;
  for (const std::size_t size : {2, 3}) {
    const auto lattice = chain(size);
    std::vector<Value> values;
    for (std::size_t i = 0; i < size; ++i) {
      values.emplace_back(lattice.finite_lattice().element(std::to_string(i)));
    }
    for (const std::size_t n : {1, 2}) {
      for (auto& s : all_spaces(n, lattice, values)) out.push_back(std::move(s));
    }
  }
  out.push_back(counterexample_space());
  return out;
}

}  // namespace premet
