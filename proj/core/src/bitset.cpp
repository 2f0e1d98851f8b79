#include "premet/bitset.hpp"

#include <boost/functional/hash.hpp>

namespace premet {

std::vector<std::size_t> members(const Bitset& set) {
  std::vector<std::size_t> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != Bitset::npos; i = set.find_next(i)) out.push_back(i);
  return out;
}

Bitset from_members(std::size_t universe, const std::vector<std::size_t>& indices) {
  Bitset b(universe);
  for (auto i : indices) b.set(i);
  return b;
}

Bitset full_set(std::size_t universe) {
  Bitset b(universe);
  b.set();
  return b;
}

bool canonical_less(const Bitset& a, const Bitset& b) {
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != Bitset::npos && j != Bitset::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  // a is a proper prefix of b
  return i == Bitset::npos && j != Bitset::npos;
}

std::size_t BitsetHash::operator()(const Bitset& b) const {
  std::size_t seed = b.size();
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) {
    boost::hash_combine(seed, i);
  }
  return seed;
}

}  // namespace premet
