#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "premet/colimits.hpp"
#include "premet/limits.hpp"
#include "premet/space.hpp"
#include "premet/topology.hpp"
#include "premet/value_lattice.hpp"

namespace premet {

using Json = nlohmann::json;

// Readers throw Error with field() set to a JSON-pointer-like path into the
// document (for example "/d/3/2"); `path` is the prefix for that path.

/// {"kind": "finite", "elements": [...], "leq": [[lo, hi], ...]},
/// {"kind": "ext_rationals"} or {"kind": "omega", "ground": [...]}.
/// Finite lattices are written with their covering pairs only.
Json lattice_to_json(const ValueLattice& lattice);
ValueLattice lattice_from_json(const Json& j, const std::string& path = "");

/// Element id, "p/q" / "inf", or the generator list of an Ω value.
Json value_to_json(const ValueLattice& lattice, const Value& v);
Value value_from_json(const ValueLattice& lattice, const Json& j, const std::string& path = "");

/// {"points": [...], "lattice": {...}, "d": [[x, y, value], ...]}. Diagonal
/// entries may be omitted on input and are never written.
Json space_to_json(const ContinuitySpace& space);
ContinuitySpace space_from_json(const Json& j, const std::string& path = "");

/// {"points": [...], "opens": [[...], ...]}
Json topology_to_json(const FiniteTopology& topology);
FiniteTopology topology_from_json(const Json& j, const std::string& path = "");

/// {"source": space, "target": space, "assignment": {"x": "y", ...}}
Json map_to_json(const SpaceMap& map);
SpaceMap map_from_json(const Json& j, const std::string& path = "");

/// Assignment as an object from source ids to target ids.
Json assignment_to_json(const IdSet& source, const IdSet& target, const Assignment& f);
Assignment assignment_from_json(const IdSet& source, const IdSet& target, const Json& j,
                                const std::string& path = "");

/// List of blocks of point ids.
std::vector<std::vector<std::string>> relation_from_json(const Json& j,
                                                         const std::string& path = "");

/// {"apex": [...], "legs": [{"target": space, "assignment": {...}}, ...]}
Cone cone_from_json(const Json& j, const std::string& path = "");

/// {"points": [...], "legs": [{"source": space, "assignment": {...}}, ...]}
struct Cocone {
  IdSet points;
  std::vector<CoconeLeg> legs;
};
Cocone cocone_from_json(const Json& j, const std::string& path = "");

/// {"space": ..., "legs": [{"source": ids, "target": ids, "assignment": {...}}]}
/// where the leg endpoints are named by their point lists.
Json lift_to_json(const Lift& lift);

/// Two-space-indented dump with sorted keys and a trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace premet
