#pragma once

#include <string>

#include "premet/topology.hpp"
#include "premet/value_lattice.hpp"

namespace premet {

/// Hasse diagram, bottom at the bottom. Ω lattices are materialised first
/// (GroundTooLarge past kMaxMaterializedGround); [0, inf] has no finite
/// diagram and is rejected with InvalidInput.
std::string lattice_to_dot(const ValueLattice& lattice);

/// Specialisation order: an edge x -> y when every open set containing x
/// also contains y, transitively reduced. Topologically indistinguishable
/// points are joined by an undirected edge.
std::string topology_to_dot(const FiniteTopology& topology);

}  // namespace premet
