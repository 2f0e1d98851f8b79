#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "premet/error.hpp"

namespace premet {

/// A finite set of string ids kept in canonical (lexicographic) order. The
/// position of an id in that order is its index everywhere else: bitset
/// positions, distance-table rows, assignment entries.
class IdSet {
 public:
  IdSet() = default;
  /// Sorts the ids; throws DuplicateId on repeats.
  explicit IdSet(std::vector<std::string> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const std::string& operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Like find, but throws `Error(missing, ...)` naming the id.
  std::size_t index_of(std::string_view id, ErrorKind missing) const;

  bool operator==(const IdSet&) const = default;

 private:
  std::vector<std::string> ids_;
};

using IdSetPtr = std::shared_ptr<const IdSet>;

/// Id of a composite object (tuple, tagged point, subset): the compact JSON
/// array of its parts, e.g. ["a","b"]. Unambiguous for arbitrary part ids.
std::string composite_id(const std::vector<std::string>& parts);

}  // namespace premet
