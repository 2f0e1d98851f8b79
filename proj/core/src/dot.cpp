#include "premet/dot.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "premet/error.hpp"

namespace premet {

namespace {

// DOT string literal; JSON escaping is a valid subset of DOT's.
std::string quoted(const std::string& id) { return nlohmann::json(id).dump(); }

std::string hasse(const FiniteLattice& l) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& id : l.ids()) out << "  " << quoted(id) << ";\n";
  for (const auto& [lo, hi] : l.covers()) {
    out << "  " << quoted(l.id(lo)) << " -> " << quoted(l.id(hi)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string lattice_to_dot(const ValueLattice& lattice) {
  switch (lattice.kind()) {
    case LatticeKind::finite:
      return hasse(lattice.finite_lattice());
    case LatticeKind::omega:
      return hasse(materialize(*lattice.omega_ground()));
    case LatticeKind::ext_rationals:
      break;
  }
  throw Error(ErrorKind::InvalidInput, "[0, inf] has no finite Hasse diagram");
}

std::string topology_to_dot(const FiniteTopology& topology) {
  const auto& points = topology.points();
  const auto n = topology.size();
  auto below = [&](std::size_t x, std::size_t y) { return topology.core(x).test(y); };
  auto equivalent = [&](std::size_t x, std::size_t y) { return below(x, y) && below(y, x); };

  std::ostringstream out;
  out << "digraph specialization {\n  node [shape=circle];\n";
  for (const auto& id : points) out << "  " << quoted(id) << ";\n";
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !below(x, y)) continue;
      if (equivalent(x, y)) {
        // one undirected edge per pair, chained to the next class member
        bool earlier = false;
        for (std::size_t z = x + 1; z < y; ++z) earlier = earlier || equivalent(x, z);
        if (x < y && !earlier) {
          out << "  " << quoted(points[x]) << " -> " << quoted(points[y]) << " [dir=none];\n";
        }
        continue;
      }
      bool covered = true;
      for (std::size_t z = 0; z < n && covered; ++z) {
        if (below(x, z) && below(z, y) && !equivalent(z, x) && !equivalent(z, y)) covered = false;
      }
      if (covered) out << "  " << quoted(points[x]) << " -> " << quoted(points[y]) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace premet
