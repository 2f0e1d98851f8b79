#include "premet/omega.hpp"

#include <algorithm>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "premet/error.hpp"

namespace premet {

namespace {

void require_same_ground(const IdSetPtr& a, const IdSetPtr& b) {
  if (a != b && *a != *b) throw Error(ErrorKind::GroundMismatch, "values over different grounds");
}

Bitset subset_from_ids(const IdSet& ground, const std::vector<std::string>& ids) {
  Bitset b(ground.size());
  for (const auto& id : ids) b.set(ground.index_of(id, ErrorKind::IdNotInGround));
  return b;
}

}  // namespace

bool DownSetFamily::contains(const Bitset& member) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Bitset& g) { return member.is_subset_of(g); });
}

Bitset DownSetFamily::generator_union() const {
  Bitset u(ground_->size());
  for (const auto& g : generators_) u |= g;
  return u;
}

bool DownSetFamily::is_bottom() const {
  return generators_.size() == 1 && generators_.front().all();
}

bool operator==(const DownSetFamily& a, const DownSetFamily& b) {
  return (a.ground_ == b.ground_ || *a.ground_ == *b.ground_) && a.generators_ == b.generators_;
}

DownSetFamily normalize(IdSetPtr ground, std::vector<Bitset> subsets) {
  for (const auto& s : subsets) {
    if (s.size() != ground->size()) {
      throw Error(ErrorKind::GroundMismatch, "subset width differs from the ground size");
    }
  }
  // Larger sets first, so every kept set is maximal among those seen so far.
  std::sort(subsets.begin(), subsets.end(), [](const Bitset& a, const Bitset& b) {
    auto ca = a.count(), cb = b.count();
    return ca != cb ? ca > cb : canonical_less(a, b);
  });
  std::vector<Bitset> kept;
  for (auto& s : subsets) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const Bitset& k) { return s.is_subset_of(k); });
    if (!dominated) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end(), canonical_less);
  return DownSetFamily(std::move(ground), std::move(kept));
}

DownSetFamily normalize(IdSetPtr ground, const std::vector<std::vector<std::string>>& subsets) {
  std::vector<Bitset> bits;
  bits.reserve(subsets.size());
  for (const auto& s : subsets) bits.push_back(subset_from_ids(*ground, s));
  return normalize(std::move(ground), std::move(bits));
}

bool leq(const DownSetFamily& p, const DownSetFamily& q) {
  require_same_ground(p.ground(), q.ground());
  return std::all_of(q.generators().begin(), q.generators().end(),
                     [&](const Bitset& g) { return p.contains(g); });
}

DownSetFamily meet(const IdSetPtr& ground, std::span<const DownSetFamily> values) {
  std::vector<Bitset> all;
  for (const auto& v : values) {
    require_same_ground(ground, v.ground());
    all.insert(all.end(), v.generators().begin(), v.generators().end());
  }
  return normalize(ground, std::move(all));
}

DownSetFamily join(const IdSetPtr& ground, std::span<const DownSetFamily> values) {
  std::vector<Bitset> acc{full_set(ground->size())};
  for (const auto& v : values) {
    require_same_ground(ground, v.ground());
    std::vector<Bitset> next;
    next.reserve(acc.size() * v.generators().size());
    for (const auto& a : acc) {
      for (const auto& g : v.generators()) next.push_back(a & g);
    }
    acc = normalize(ground, std::move(next)).generators();
  }
  return normalize(ground, std::move(acc));
}

DownSetFamily meet(const DownSetFamily& a, const DownSetFamily& b) {
  const DownSetFamily both[] = {a, b};
  return meet(a.ground(), both);
}

DownSetFamily join(const DownSetFamily& a, const DownSetFamily& b) {
  const DownSetFamily both[] = {a, b};
  return join(a.ground(), both);
}

bool well_above_omega(const DownSetFamily& q, const DownSetFamily& p) {
  require_same_ground(q.ground(), p.ground());
  return p.contains(q.generator_union());
}

DownSetFamily principal(IdSetPtr ground, Bitset subset) {
  std::vector<Bitset> one;
  one.push_back(std::move(subset));
  return normalize(std::move(ground), std::move(one));
}

DownSetFamily principal(IdSetPtr ground, const std::vector<std::string>& subset) {
  auto bits = subset_from_ids(*ground, subset);
  return principal(std::move(ground), std::move(bits));
}

DownSetFamily omega_top(IdSetPtr ground) { return normalize(std::move(ground), std::vector<Bitset>{}); }

DownSetFamily omega_bottom(IdSetPtr ground) {
  auto full = full_set(ground->size());
  return principal(std::move(ground), std::move(full));
}

std::string canonical_text(const DownSetFamily& value) {
  auto out = nlohmann::json::array();
  for (const auto& g : value.generators()) {
    auto members_json = nlohmann::json::array();
    for (auto i : members(g)) members_json.push_back((*value.ground())[i]);
    out.push_back(std::move(members_json));
  }
  return out.dump();
}

FiniteLattice materialize(const IdSet& ground) {
  const auto k = ground.size();
  if (k > kMaxMaterializedGround) {
    throw Error(ErrorKind::GroundTooLarge,
                "materialize supports grounds of at most " +
                    std::to_string(kMaxMaterializedGround) + " ids");
  }
  auto shared = std::make_shared<const IdSet>(ground);
  const std::uint32_t subsets = 1u << k;
  const std::uint64_t families = std::uint64_t{1} << subsets;

  // A family is a bitmask over the 2^k subset masks.
  std::vector<std::uint32_t> down_closed;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    bool closed = true;
    for (std::uint32_t s = 0; s < subsets && closed; ++s) {
      if (!((fam >> s) & 1)) continue;
      for (std::uint32_t i = 0; i < k; ++i) {
        if (((s >> i) & 1) && !((fam >> (s & ~(1u << i))) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) down_closed.push_back(static_cast<std::uint32_t>(fam));
  }

  std::vector<std::string> ids;
  ids.reserve(down_closed.size());
  for (auto fam : down_closed) {
    std::vector<Bitset> member_sets;
    for (std::uint32_t s = 0; s < subsets; ++s) {
      if ((fam >> s) & 1) member_sets.push_back(Bitset(k, s));
    }
    ids.push_back(canonical_text(normalize(shared, std::move(member_sets))));
  }

  std::vector<std::pair<std::string, std::string>> order;
  for (std::size_t a = 0; a < down_closed.size(); ++a) {
    for (std::size_t b = 0; b < down_closed.size(); ++b) {
      // a ≤ b iff family(a) ⊇ family(b)
      if ((down_closed[b] & ~down_closed[a]) == 0) order.emplace_back(ids[a], ids[b]);
    }
  }
  return validate_lattice(std::move(ids), order);
}

}  // namespace premet
