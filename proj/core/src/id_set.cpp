#include "premet/id_set.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace premet {

IdSet::IdSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  auto dup = std::adjacent_find(ids_.begin(), ids_.end());
  if (dup != ids_.end()) {
    throw Error(ErrorKind::DuplicateId, "duplicate id '" + *dup + "'", *dup);
  }
}

std::optional<std::size_t> IdSet::find(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t IdSet::index_of(std::string_view id, ErrorKind missing) const {
  if (auto i = find(id)) return *i;
  throw Error(missing, "unknown id '" + std::string(id) + "'", std::string(id));
}

std::string composite_id(const std::vector<std::string>& parts) {
  return nlohmann::json(parts).dump();
}

}  // namespace premet
