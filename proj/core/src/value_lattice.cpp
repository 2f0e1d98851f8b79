#include "premet/value_lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "premet/error.hpp"

namespace premet {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Element& as_element(const Value& v) {
  if (auto e = std::get_if<Element>(&v)) return *e;
  throw Error(ErrorKind::ElementNotInLattice, "expected a finite-lattice element");
}

const ExtRational& as_rational(const Value& v) {
  if (auto r = std::get_if<ExtRational>(&v)) return *r;
  throw Error(ErrorKind::ElementNotInLattice, "expected a value of [0, inf]");
}

const DownSetFamily& as_family(const Value& v) {
  if (auto f = std::get_if<DownSetFamily>(&v)) return *f;
  throw Error(ErrorKind::ElementNotInLattice, "expected an Ω value");
}

bool generators_less(const DownSetFamily& a, const DownSetFamily& b) {
  return std::lexicographical_compare(
      a.generators().begin(), a.generators().end(), b.generators().begin(), b.generators().end(),
      [](const Bitset& x, const Bitset& y) { return premet::canonical_less(x, y); });
}

}  // namespace

std::string_view to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::finite: return "finite";
    case LatticeKind::ext_rationals: return "ext_rationals";
    case LatticeKind::omega: return "omega";
  }
  return "unknown";
}

ValueLattice ValueLattice::finite(FiniteLattice lattice) {
  return ValueLattice(std::make_shared<const FiniteLattice>(std::move(lattice)));
}

ValueLattice ValueLattice::finite(std::shared_ptr<const FiniteLattice> lattice) {
  return ValueLattice(Impl(std::move(lattice)));
}

ValueLattice ValueLattice::ext_rationals() { return ValueLattice(Impl(ExtRationals{})); }

ValueLattice ValueLattice::omega(IdSetPtr ground) { return ValueLattice(Impl(std::move(ground))); }

LatticeKind ValueLattice::kind() const noexcept {
  switch (impl_.index()) {
    case 0: return LatticeKind::finite;
    case 1: return LatticeKind::ext_rationals;
    default: return LatticeKind::omega;
  }
}

const FiniteLattice& ValueLattice::finite_lattice() const {
  if (auto p = std::get_if<std::shared_ptr<const FiniteLattice>>(&impl_)) return **p;
  throw Error(ErrorKind::InvalidInput, "lattice is not a finite lattice");
}

const IdSetPtr& ValueLattice::omega_ground() const {
  if (auto p = std::get_if<IdSetPtr>(&impl_)) return *p;
  throw Error(ErrorKind::InvalidInput, "lattice is not an Ω lattice");
}

bool ValueLattice::contains(const Value& v) const {
  return std::visit(
      Overloaded{
          [&](const std::shared_ptr<const FiniteLattice>& l) {
            auto e = std::get_if<Element>(&v);
            return e != nullptr && l->contains(*e);
          },
          [&](ExtRationals) { return std::holds_alternative<ExtRational>(v); },
          [&](const IdSetPtr& g) {
            auto f = std::get_if<DownSetFamily>(&v);
            return f != nullptr && (f->ground() == g || *f->ground() == *g);
          },
      },
      impl_);
}

void ValueLattice::require(const Value& v) const {
  if (contains(v)) return;
  if (kind() == LatticeKind::omega && std::holds_alternative<DownSetFamily>(v)) {
    throw Error(ErrorKind::GroundMismatch, "Ω value over a different ground");
  }
  throw Error(ErrorKind::ElementNotInLattice,
              "value does not belong to the " + std::string(to_string(kind())) + " lattice");
}

bool ValueLattice::leq(const Value& a, const Value& b) const {
  require(a);
  require(b);
  return std::visit(
      Overloaded{
          [&](const std::shared_ptr<const FiniteLattice>& l) {
            return l->leq(as_element(a), as_element(b));
          },
          [&](ExtRationals) { return as_rational(a) <= as_rational(b); },
          [&](const IdSetPtr&) { return premet::leq(as_family(a), as_family(b)); },
      },
      impl_);
}

Value ValueLattice::meet(std::span<const Value> values) const {
  for (const auto& v : values) require(v);
  return std::visit(
      Overloaded{
          [&](const std::shared_ptr<const FiniteLattice>& l) -> Value {
            Element acc = l->top();
            for (const auto& v : values) acc = l->meet(acc, as_element(v));
            return acc;
          },
          [&](ExtRationals) -> Value {
            ExtRational acc = ExtRational::infinity();
            for (const auto& v : values) acc = std::min(acc, as_rational(v));
            return acc;
          },
          [&](const IdSetPtr& g) -> Value {
            std::vector<DownSetFamily> fs;
            for (const auto& v : values) fs.push_back(as_family(v));
            return premet::meet(g, fs);
          },
      },
      impl_);
}

Value ValueLattice::join(std::span<const Value> values) const {
  for (const auto& v : values) require(v);
  return std::visit(
      Overloaded{
          [&](const std::shared_ptr<const FiniteLattice>& l) -> Value {
            Element acc = l->bottom();
            for (const auto& v : values) acc = l->join(acc, as_element(v));
            return acc;
          },
          [&](ExtRationals) -> Value {
            ExtRational acc;
            for (const auto& v : values) acc = std::max(acc, as_rational(v));
            return acc;
          },
          [&](const IdSetPtr& g) -> Value {
            std::vector<DownSetFamily> fs;
            for (const auto& v : values) fs.push_back(as_family(v));
            return premet::join(g, fs);
          },
      },
      impl_);
}

Value ValueLattice::bottom() const {
  return std::visit(Overloaded{
                        [](const std::shared_ptr<const FiniteLattice>& l) -> Value { return l->bottom(); },
                        [](ExtRationals) -> Value { return ExtRational(); },
                        [](const IdSetPtr& g) -> Value { return omega_bottom(g); },
                    },
                    impl_);
}

Value ValueLattice::top() const {
  return std::visit(Overloaded{
                        [](const std::shared_ptr<const FiniteLattice>& l) -> Value { return l->top(); },
                        [](ExtRationals) -> Value { return ExtRational::infinity(); },
                        [](const IdSetPtr& g) -> Value { return omega_top(g); },
                    },
                    impl_);
}

bool ValueLattice::well_above(const Value& y, const Value& x) const {
  require(y);
  require(x);
  return std::visit(
      Overloaded{
          [&](const std::shared_ptr<const FiniteLattice>& l) {
            return l->well_above(as_element(y), as_element(x));
          },
          [&](ExtRationals) { return as_rational(y) > as_rational(x); },
          [&](const IdSetPtr&) { return well_above_omega(as_family(y), as_family(x)); },
      },
      impl_);
}

bool ValueLattice::is_value_distributive() const {
  if (auto p = std::get_if<std::shared_ptr<const FiniteLattice>>(&impl_)) {
    return premet::is_value_distributive(**p);
  }
  return true;
}

std::vector<Value> ValueLattice::epsilon_basis(std::span<const Value> realized) const {
  for (const auto& v : realized) require(v);
  return std::visit(
      Overloaded{
          [&](const std::shared_ptr<const FiniteLattice>& l) -> std::vector<Value> {
            return {least_well_above_zero(*l)};
          },
          [&](ExtRationals) -> std::vector<Value> {
            std::vector<Value> out;
            for (const auto& v : distinct(realized)) {
              if (!as_rational(v).is_zero()) out.push_back(v);
            }
            if (out.empty()) out.emplace_back(ExtRational(1, 1));
            return out;
          },
          // bottom ≻ bottom in Ω of a finite ground
          [&](const IdSetPtr& g) -> std::vector<Value> { return {omega_bottom(g)}; },
      },
      impl_);
}

std::vector<Value> ValueLattice::positive_representatives(std::span<const Value> realized,
                                                          std::size_t cap) const {
  for (const auto& v : realized) require(v);
  auto over_cap = [&](std::size_t n) {
    if (n > cap) {
      throw Error(ErrorKind::SizeLimitExceeded,
                  "more than " + std::to_string(cap) + " representatives of V_≺");
    }
  };
  return std::visit(
      Overloaded{
          [&](const std::shared_ptr<const FiniteLattice>& l) -> std::vector<Value> {
            auto vd = value_distributivity(*l);
            if (!vd.value_distributive()) {
              throw Error(ErrorKind::NotValueDistributive, "lattice is not value distributive");
            }
            over_cap(vd.well_above_zero.size());
            return {vd.well_above_zero.begin(), vd.well_above_zero.end()};
          },
          [&](ExtRationals) -> std::vector<Value> {
            std::vector<Value> out;
            for (const auto& v : distinct(realized)) {
              const auto& r = as_rational(v);
              if (!r.is_zero() && !r.is_infinite()) out.push_back(v);
            }
            out.emplace_back(ExtRational::infinity());
            over_cap(out.size());
            return out;
          },
          [&](const IdSetPtr& g) -> std::vector<Value> {
            // Every behaviour pattern {d : G ∈ d} is attained by an
            // intersection of generators, one per d in the pattern, so the
            // intersection closure of all realized generators (plus the
            // ground) contains a witness for each pattern.
            auto values = distinct(realized);
            std::unordered_set<Bitset, BitsetHash> closure{full_set(g->size())};
            for (const auto& v : values) {
              for (const auto& gen : as_family(v).generators()) closure.insert(gen);
            }
            std::vector<Bitset> frontier(closure.begin(), closure.end());
            while (!frontier.empty()) {
              std::vector<Bitset> next;
              for (const auto& a : frontier) {
                std::vector<Bitset> snapshot(closure.begin(), closure.end());
                for (const auto& b : snapshot) {
                  if (closure.insert(a & b).second) {
                    next.push_back(a & b);
                    over_cap(closure.size());
                  }
                }
              }
              frontier = std::move(next);
            }
            std::vector<Bitset> sets(closure.begin(), closure.end());
            std::sort(sets.begin(), sets.end(),
                      [](const Bitset& a, const Bitset& b) { return premet::canonical_less(a, b); });
            std::vector<std::vector<bool>> seen;
            std::vector<Value> out;
            for (auto& s : sets) {
              std::vector<bool> pattern;
              pattern.reserve(values.size());
              for (const auto& v : values) pattern.push_back(as_family(v).contains(s));
              if (std::find(seen.begin(), seen.end(), pattern) != seen.end()) continue;
              seen.push_back(std::move(pattern));
              out.emplace_back(principal(g, std::move(s)));
            }
            return out;
          },
      },
      impl_);
}

std::string ValueLattice::value_id(const Value& v) const {
  require(v);
  return std::visit(
      Overloaded{
          [&](const std::shared_ptr<const FiniteLattice>& l) { return l->id(as_element(v)); },
          [&](ExtRationals) { return as_rational(v).to_string(); },
          [&](const IdSetPtr&) { return canonical_text(as_family(v)); },
      },
      impl_);
}

bool ValueLattice::canonical_less(const Value& a, const Value& b) const {
  return std::visit(
      Overloaded{
          [&](const std::shared_ptr<const FiniteLattice>&) { return as_element(a) < as_element(b); },
          [&](ExtRationals) { return as_rational(a) < as_rational(b); },
          [&](const IdSetPtr&) { return generators_less(as_family(a), as_family(b)); },
      },
      impl_);
}

std::vector<Value> ValueLattice::distinct(std::span<const Value> values) const {
  std::vector<Value> out(values.begin(), values.end());
  std::sort(out.begin(), out.end(),
            [&](const Value& a, const Value& b) { return canonical_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ValueLattice::operator==(const ValueLattice& other) const {
  if (impl_.index() != other.impl_.index()) return false;
  return std::visit(
      Overloaded{
          [&](const std::shared_ptr<const FiniteLattice>& l) {
            const auto& r = std::get<std::shared_ptr<const FiniteLattice>>(other.impl_);
            return l == r || *l == *r;
          },
          [&](ExtRationals) { return true; },
          [&](const IdSetPtr& g) {
            const auto& r = std::get<IdSetPtr>(other.impl_);
            return g == r || *g == *r;
          },
      },
      impl_);
}

}  // namespace premet
