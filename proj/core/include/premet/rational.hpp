#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace premet {

/// A value of [0, inf] restricted to exact rationals plus infinity.
class ExtRational {
 public:
  using Finite = boost::rational<std::int64_t>;

  ExtRational() = default;
  /// Throws InvalidInput when `value` is negative.
  explicit ExtRational(Finite value);
  ExtRational(std::int64_t num, std::int64_t den) : ExtRational(Finite(num, den)) {}

  static ExtRational infinity() {
    ExtRational r;
    r.infinite_ = true;
    return r;
  }
  /// Accepts "p/q", "p" and "inf".
  static ExtRational parse(std::string_view text);

  bool is_infinite() const noexcept { return infinite_; }
  bool is_zero() const noexcept { return !infinite_ && value_.numerator() == 0; }
  const Finite& finite_value() const noexcept { return value_; }

  /// "p/q" in lowest terms, or "inf".
  std::string to_string() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  bool infinite_ = false;
  Finite value_{0};
};

}  // namespace premet
