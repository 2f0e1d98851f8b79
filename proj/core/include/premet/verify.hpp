#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "premet/colimits.hpp"
#include "premet/json_io.hpp"
#include "premet/limits.hpp"
#include "premet/space.hpp"
#include "premet/topology.hpp"

namespace premet {

/// Outcome of one exhaustive check. A failing report always carries a
/// counterexample that `replay` can re-run on its own.
struct VerificationReport {
  std::string claim;
  std::string instance;
  bool passed = true;
  /// Elementary cases examined (maps, cones, topologies, ...).
  std::size_t checked = 0;
  Json counterexample;  // null when passed
  Json details = Json::object();
};

Json report_to_json(const VerificationReport& report);

/// Re-runs a recorded counterexample through the base checkers; true when
/// the failure reproduces. Throws InvalidInput on an unknown payload.
bool replay(const Json& counterexample);

/// A map of the diagram, between object indices.
struct DiagramArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  Assignment assignment;
};

/// Finite diagram with one level of arrows: for limits every arrow starts at
/// an object no arrow enters, for colimits every arrow ends at an object no
/// arrow leaves. Legs at the other end are determined by composition.
struct Diagram {
  std::vector<SpacePtr> objects;
  std::vector<DiagramArrow> arrows;
};

/// Apex with one leg per diagram object (into it for limits, out of it for
/// colimits).
struct Candidate {
  SpacePtr apex;
  std::vector<Assignment> legs;
};

struct UniversalInstance {
  std::string kind;  // product, equaliser, coproduct, coequaliser
  bool colimit = false;
  Diagram diagram;
  Candidate candidate;
};

UniversalInstance product_instance(std::span<const SpacePtr> spaces, const SizeLimits& limits = {});
UniversalInstance equaliser_instance(const SpaceMap& f, const SpaceMap& g);
UniversalInstance coproduct_instance(std::span<const SpacePtr> spaces, const SizeLimits& limits = {});
/// The diagram is the pair of projections out of the relation, viewed as a
/// discrete space, so cocones are exactly the maps constant on blocks.
UniversalInstance coequaliser_instance(SpacePtr space,
                                       const std::vector<std::vector<std::string>>& blocks,
                                       const SizeLimits& limits = {},
                                       Admission mode = Admission::one_step);

/// {"kind", "colimit", "objects", "arrows", "apex", "legs"}, the form
/// embedded in counterexamples.
Json instance_to_json(const UniversalInstance& instance);
/// Reads the form above, or builds the candidate from a construction
/// request: {"kind": "product" | "coproduct", "spaces": [...]},
/// {"kind": "equaliser", "f": map, "g": map} or
/// {"kind": "coequaliser", "space": space, "relation": blocks}.
UniversalInstance instance_from_json(const Json& j, const SizeLimits& limits = {},
                                     Admission mode = Admission::one_step);

/// Largest number of candidate mediators (|apex|^|probe| or its dual)
/// enumerated per probe before ProbeTooLarge.
inline constexpr std::size_t kMaxProbeFunctions = 1'000'000;

/// Legs continuous and commuting; for every probe and every compatible
/// continuous cone, exactly one continuous mediator.
VerificationReport check_limit(const UniversalInstance& instance, std::span<const SpacePtr> probes);
/// Dual of check_limit.
VerificationReport check_colimit(const UniversalInstance& instance,
                                 std::span<const SpacePtr> probes);
/// Dispatches on instance.colimit.
VerificationReport check_universal(const UniversalInstance& instance,
                                   std::span<const SpacePtr> probes);

/// Corrupted copies of the candidate: all distances bottom, and all
/// off-diagonal distances top. Copies whose smallest-ball relation equals the
/// original's are skipped, since no probe can tell them apart.
std::vector<std::pair<std::string, UniversalInstance>> mutants(const UniversalInstance& instance);

/// For every probe Y and every g : Y → T: g continuous from the generated
/// topology into T iff g is ε-δ continuous into flagg(T).
VerificationReport check_adjunction(const FiniteTopology& topology,
                                    std::span<const SpacePtr> probes);

/// Colimits: the generated topology of the apex equals the final topology of
/// the legs. Limits: it is finer than or equal to the initial topology.
VerificationReport check_O_preservation(const UniversalInstance& instance);

/// flagg and premetrize round trips over every topology on n points.
VerificationReport round_trip_suite(std::size_t n);

/// Every map that is topologically but not ε-δ continuous. The report fails
/// only when such a map exists although every basis ball of the target is
/// open in its generated topology.
VerificationReport continuity_gap_search(const ContinuitySpace& source,
                                         const ContinuitySpace& target);

/// Every basis ball of the space is open in the generated topology.
bool balls_open(const ContinuitySpace& space);

/// ε-δ continuity decided on smallest balls: f[S(x)] ⊆ S'(f x) for all x.
bool continuous_on_smallest_balls(const std::vector<Bitset>& source,
                                  const std::vector<Bitset>& target, const Assignment& f);

/// Every space on points "p0".."p{n-1}" whose off-diagonal distances range
/// over `values`.
std::vector<SpacePtr> all_spaces(std::size_t n, const ValueLattice& lattice,
                                 std::span<const Value> values);

/// The four-point [0, inf] premetric on a, b, c, d with d = 0 on {a,b} and
/// {b,c}, 2 on {a,c} and 1 elsewhere off the diagonal.
SpacePtr counterexample_space();

/// Chain lattice "0" < "1" < ... with `size` elements.
ValueLattice chain(std::size_t size);

/// All spaces on at most two points over the 2- and 3-chains, plus the
/// four-point counterexample space.
std::vector<SpacePtr> default_probes();

}  // namespace premet
