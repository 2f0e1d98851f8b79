#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace premet {

/// Subset of a canonically ordered id set; bit i stands for the i-th id.
using Bitset = boost::dynamic_bitset<std::uint64_t>;

std::vector<std::size_t> members(const Bitset& set);
Bitset from_members(std::size_t universe, const std::vector<std::size_t>& indices);
Bitset full_set(std::size_t universe);

/// Canonical order on subsets: compare the ascending member-index sequences
/// lexicographically (so {0} < {0,1} < {1}).
bool canonical_less(const Bitset& a, const Bitset& b);

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const;
};

}  // namespace premet
