#include "premet/rational.hpp"

#include <charconv>

#include "premet/error.hpp"

namespace premet {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::InvalidInput,
                "malformed rational literal '" + std::string(whole) + "'", std::string(whole));
  }
  return v;
}

}  // namespace

ExtRational::ExtRational(Finite value) : value_(value) {
  if (value_.numerator() < 0) {
    throw Error(ErrorKind::InvalidInput, "negative distance value");
  }
}

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "inf") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExtRational(Finite(parse_int(text, text)));
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'",
                std::string(text));
  }
  return ExtRational(Finite(parse_int(text.substr(0, slash), text), den));
}

std::string ExtRational::to_string() const {
  if (infinite_) return "inf";
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

}  // namespace premet
