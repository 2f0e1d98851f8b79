#include <doctest.h>

#include <random>
#include <set>

#include <premet/error.hpp>
#include <premet/space.hpp>
#include <premet/topology.hpp>
#include <premet/verify.hpp>

#include "oracles.hpp"

using namespace premet;

namespace {

Bitset set_of(const IdSet& points, const std::vector<std::string>& ids) {
  Bitset b(points.size());
  for (const auto& id : ids) b.set(points.index_of(id, ErrorKind::PointNotInSpace));
  return b;
}

// Every ε ≻ 0 a test may quantify over: all of V_≺ for finite lattices, and
// for [0, inf] a grid fine enough to land in every gap between the small
// dyadic values the tests use.
std::vector<Value> positive_samples(const ValueLattice& lattice) {
  std::vector<Value> out;
  if (lattice.kind() == LatticeKind::ext_rationals) {
    for (int k = 1; k <= 48; ++k) out.emplace_back(ExtRational(k, 8));
    out.emplace_back(ExtRational::infinity());
    return out;
  }
  const auto& l = lattice.finite_lattice();
  for (std::uint32_t i = 0; i < l.size(); ++i) {
    if (l.well_above(Element{i}, l.bottom())) out.emplace_back(Element{i});
  }
  return out;
}

Bitset literal_ball(const ContinuitySpace& s, std::size_t x, const Value& eps) {
  Bitset b(s.size());
  for (std::size_t y = 0; y < s.size(); ++y) b[y] = s.lattice().well_above(eps, s.distance(x, y));
  return b;
}

// Open sets straight from the definition, quantifying over every sample ε.
std::set<std::uint32_t> literal_opens(const ContinuitySpace& s) {
  const auto eps = positive_samples(s.lattice());
  std::set<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    bool open = true;
    for (std::size_t x = 0; x < s.size() && open; ++x) {
      if (!(mask >> x & 1)) continue;
      bool fits = false;
      for (const auto& e : eps) {
        const auto b = literal_ball(s, x, e);
        bool inside = true;
        for (std::size_t y = 0; y < s.size(); ++y) inside = inside && (!b[y] || (mask >> y & 1));
        fits = fits || inside;
      }
      open = fits;
    }
    if (open) out.insert(mask);
  }
  return out;
}

std::set<std::uint32_t> masks(const FiniteTopology& t) {
  std::set<std::uint32_t> out;
  for (const auto& o : t.opens()) out.insert(static_cast<std::uint32_t>(o.to_ulong()));
  return out;
}

// ∀x ∀ε ∃δ over the sample sets, read literally.
bool literal_eps_delta(const ContinuitySpace& src, const ContinuitySpace& dst, const Assignment& f) {
  const auto deltas = positive_samples(src.lattice());
  for (std::size_t x = 0; x < src.size(); ++x) {
    for (const auto& e : positive_samples(dst.lattice())) {
      const auto target = literal_ball(dst, f[x], e);
      bool found = false;
      for (const auto& d : deltas) {
        const auto b = literal_ball(src, x, d);
        bool inside = true;
        for (std::size_t y = 0; y < src.size(); ++y) inside = inside && (!b[y] || target[f[y]]);
        found = found || inside;
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<Assignment> all_assignments(std::size_t from, std::size_t to) {
  std::vector<Assignment> out;
  Assignment f(from, 0);
  if (from > 0 && to == 0) return out;
  while (true) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < from && ++f[i] == to) f[i++] = 0;
    if (i == from) return out;
  }
}

std::vector<Value> chain_values(const ValueLattice& l) {
  std::vector<Value> out;
  for (std::uint32_t i = 0; i < l.finite_lattice().size(); ++i) out.emplace_back(Element{i});
  return out;
}

SpacePtr random_ext_space(std::mt19937& rng, std::size_t n) {
  const std::vector<Value> values{ExtRational(), ExtRational(1, 2), ExtRational(1, 1),
                                  ExtRational(2, 1), ExtRational::infinity()};
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("r" + std::to_string(i));
  return std::make_shared<const ContinuitySpace>(ContinuitySpace::build(
      IdSet(ids), ValueLattice::ext_rationals(),
      [&](std::size_t x, std::size_t y) { return x == y ? Value(ExtRational()) : values[pick(rng)]; }));
}

FiniteTopology sierpinski() {
  const IdSet pts({"x", "y"});
  return FiniteTopology::from_opens(pts, {Bitset(2), set_of(pts, {"x"}), full_set(2)});
}

}  // namespace

TEST_SUITE("space") {
  TEST_CASE("counterexample ball and interior") {
    const auto s = counterexample_space();
    const auto& pts = s->points();
    const auto b2 = ball(*s, 0, ExtRational(2, 1));
    CHECK(b2 == set_of(pts, {"a", "b", "d"}));
    const auto t = generate_topology(*s);
    CHECK(t.interior(b2) == set_of(pts, {"d"}));
    CHECK(masks(t) == literal_opens(*s));
  }

  TEST_CASE("balls contain their centre and need a positive radius") {
    const auto s = counterexample_space();
    for (std::size_t x = 0; x < s->size(); ++x) {
      for (const auto& e : positive_samples(s->lattice())) CHECK(ball(*s, x, e).test(x));
    }
    try {
      ball(*s, 0, ExtRational());
      FAIL("expected EpsNotPositive");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EpsNotPositive);
    }
  }

  TEST_CASE("construction checks the table") {
    const auto c = chain(2);
    const IdSet pts({"p", "q"});
    CHECK_THROWS_AS(ContinuitySpace(pts, c, {c.bottom(), c.top()}), Error);
    CHECK_THROWS_AS(ContinuitySpace(pts, c, {c.top(), c.top(), c.top(), c.bottom()}), Error);
    CHECK_THROWS_AS(ContinuitySpace(pts, c, {c.bottom(), Value(ExtRational(1, 1)), c.top(), c.bottom()}),
                    Error);
  }

  TEST_CASE("top off the diagonal generates the discrete topology") {
    for (std::size_t size : {2, 3, 4}) {
      const auto c = chain(size);
      const IdSet pts({"p", "q", "r"});
      const ContinuitySpace s = ContinuitySpace::build(
          pts, c, [&](std::size_t x, std::size_t y) { return x == y ? c.bottom() : c.top(); });
      CHECK(generate_topology(s) == FiniteTopology::discrete(pts));
    }
  }

  TEST_CASE("middle distance on the 3-chain is discrete") {
    const auto c = chain(3);
    const Value mid = Element{1};
    const ContinuitySpace s(IdSet({"p", "q"}), c, {c.bottom(), mid, mid, c.bottom()});
    const auto t = generate_topology(s);
    CHECK(t == FiniteTopology::discrete(s.points()));
    CHECK(masks(t) == literal_opens(s));
  }

  TEST_CASE("generated topology matches the literal definition") {
    for (std::size_t size : {2, 3}) {
      const auto c = chain(size);
      const auto values = chain_values(c);
      for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& s : all_spaces(n, c, values)) {
          const auto t = generate_topology(*s);
          CHECK(masks(t) == literal_opens(*s));
          CHECK(FiniteTopology::from_opens(t.points(), t.opens()) == t);
        }
      }
    }
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
      const auto s = random_ext_space(rng, 1 + i % 4);
      CHECK(masks(generate_topology(*s)) == literal_opens(*s));
    }
  }

  TEST_CASE("topology counts match brute force") {
    for (std::size_t n = 0; n <= 4; ++n) {
      const auto ts = enumerate_topologies(n);
      CHECK(ts.size() == oracle::count_topologies_brute_force(n));
      std::set<std::set<std::uint32_t>> distinct;
      for (const auto& t : ts) distinct.insert(masks(t));
      CHECK(distinct.size() == ts.size());
    }
    CHECK(enumerate_topologies(1).size() == 1);
    CHECK(enumerate_topologies(3).size() == 29);
    CHECK(enumerate_topologies(4).size() == 355);
    CHECK_THROWS_AS(enumerate_topologies(5), Error);
  }

  TEST_CASE("from_opens rejects non-topologies") {
    const IdSet pts({"x", "y"});
    CHECK_THROWS_AS(FiniteTopology::from_opens(pts, {Bitset(2), set_of(pts, {"x"})}), Error);
    CHECK_THROWS_AS(FiniteTopology::from_opens(pts, {set_of(pts, {"x"}), full_set(2)}), Error);
    const IdSet three({"x", "y", "z"});
    CHECK_THROWS_AS(FiniteTopology::from_opens(three, {Bitset(3), set_of(three, {"x"}),
                                                       set_of(three, {"y"}), full_set(3)}),
                    Error);
  }

  TEST_CASE("flagg of the Sierpinski space") {
    const auto t = sierpinski();
    const auto s = flagg(t);
    const auto& g = s.lattice().omega_ground();
    const auto& xy = std::get<DownSetFamily>(s.distance(0, 1));
    CHECK(xy == principal(g, std::vector<std::string>{composite_id({}), composite_id({"x", "y"})}));
    CHECK(std::get<DownSetFamily>(s.distance(1, 0)).is_bottom());
    CHECK(std::get<DownSetFamily>(s.distance(0, 0)).is_bottom());
    const auto eps = principal(g, std::vector<std::string>{composite_id({"x"})});
    CHECK(ball(s, 0, eps) == set_of(t.points(), {"x"}));
    CHECK(generate_topology(s) == t);
  }

  TEST_CASE("flagg of the discrete 2-point space") {
    const auto t = FiniteTopology::discrete(IdSet({"x", "y"}));
    const auto s = flagg(t);
    const auto& g = s.lattice().omega_ground();
    CHECK(std::get<DownSetFamily>(s.distance(0, 1)) ==
          principal(g, std::vector<std::string>{composite_id({}), composite_id({"y"}),
                                                composite_id({"x", "y"})}));
    CHECK(generate_topology(s) == t);
  }

  TEST_CASE("premetrize examples") {
    const auto d = premetrize(FiniteTopology::discrete(IdSet({"x", "y"})));
    CHECK(d.distance(0, 1) == Value(ExtRational(1, 1)));
    CHECK(d.distance(1, 0) == Value(ExtRational(1, 1)));
    CHECK(d.distance(0, 0) == Value(ExtRational()));
    const auto s = premetrize(sierpinski());
    CHECK(s.distance(1, 0) == Value(ExtRational()));
    CHECK(s.distance(0, 1) == Value(ExtRational(1, 1)));
    CHECK(generate_topology(s) == sierpinski());
    const auto ind = FiniteTopology::indiscrete(IdSet({"x", "y", "z"}));
    const auto i = premetrize(ind);
    for (const auto& v : i.distances()) CHECK(v == Value(ExtRational()));
    CHECK(generate_topology(i) == ind);
  }

  TEST_CASE("round trips on every topology up to four points") {
    for (std::size_t n = 0; n <= 4; ++n) {
      for (const auto& t : enumerate_topologies(n)) {
        CHECK(generate_topology(flagg(t)) == t);
        CHECK(generate_topology(premetrize(t)) == t);
      }
    }
  }

  TEST_CASE("flagg balls are open sets inside their generating open") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const auto& t : enumerate_topologies(n)) {
        const auto s = flagg(t);
        const auto& g = s.lattice().omega_ground();
        for (const auto& u : t.opens()) {
          std::vector<std::string> names;
          for (auto i : members(u)) names.push_back(t.points()[i]);
          const auto eps = principal(g, std::vector<std::string>{composite_id(names)});
          for (std::size_t x = 0; x < n; ++x) {
            if (!u.test(x)) continue;
            const auto b = ball(s, x, eps);
            CHECK(b.is_subset_of(u));
            CHECK(t.is_open(b));
          }
        }
      }
    }
  }

  TEST_CASE("eps-delta checker matches the literal quantifiers") {
    const auto ce = counterexample_space();
    const auto two = std::make_shared<const ContinuitySpace>(
        premetrize(FiniteTopology::discrete(IdSet({"p", "q"}))));
    const auto f = make_map(two, ce, {0, 2});
    CHECK(is_eps_delta_continuous(f) == literal_eps_delta(*two, *ce, f.assignment));

    for (std::size_t size : {2, 3}) {
      const auto c = chain(size);
      const auto values = chain_values(c);
      std::vector<SpacePtr> spaces;
      for (std::size_t n = 1; n <= 2; ++n) {
        for (auto& s : all_spaces(n, c, values)) spaces.push_back(s);
      }
      for (const auto& src : spaces) {
        for (const auto& dst : spaces) {
          for (const auto& a : all_assignments(src->size(), dst->size())) {
            const auto m = make_map(src, dst, a);
            const bool expected = literal_eps_delta(*src, *dst, a);
            CHECK(is_eps_delta_continuous(m) == expected);
            CHECK(eps_delta_violation(m).has_value() == !expected);
          }
        }
      }
    }

    std::mt19937 rng(11);
    for (int i = 0; i < 300; ++i) {
      const auto src = random_ext_space(rng, 1 + i % 3);
      const auto dst = random_ext_space(rng, 1 + (i / 3) % 3);
      for (const auto& a : all_assignments(src->size(), dst->size())) {
        CHECK(is_eps_delta_continuous(make_map(src, dst, a)) == literal_eps_delta(*src, *dst, a));
      }
    }
  }

  TEST_CASE("identity and constant maps are continuous") {
    const auto ce = counterexample_space();
    CHECK(is_eps_delta_continuous(make_map(ce, ce, {0, 1, 2, 3})));
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(is_eps_delta_continuous(make_map(ce, ce, Assignment(4, k))));
    }
    CHECK_THROWS_AS(make_map(ce, ce, {0, 1, 2}), Error);
    CHECK_THROWS_AS(make_map(ce, ce, {0, 1, 2, 4}), Error);
  }

  TEST_CASE("eps-delta continuity implies topological continuity") {
    std::mt19937 rng(3);
    std::size_t continuous = 0;
    for (int i = 0; i < 400; ++i) {
      const auto src = random_ext_space(rng, 1 + i % 4);
      const auto dst = random_ext_space(rng, 1 + (i / 4) % 3);
      for (const auto& a : all_assignments(src->size(), dst->size())) {
        const auto m = make_map(src, dst, a);
        if (is_eps_delta_continuous(m)) {
          ++continuous;
          CHECK(is_top_continuous(m));
        }
      }
    }
    CHECK(continuous > 0);
    const auto c = chain(3);
    const auto values = chain_values(c);
    for (const auto& src : all_spaces(2, c, values)) {
      for (const auto& dst : all_spaces(2, c, values)) {
        for (const auto& a : all_assignments(2, 2)) {
          const auto m = make_map(src, dst, a);
          if (is_eps_delta_continuous(m)) CHECK(is_top_continuous(m));
        }
      }
    }
  }

  TEST_CASE("maps out of discrete spaces are topologically continuous") {
    const auto src = std::make_shared<const ContinuitySpace>(
        premetrize(FiniteTopology::discrete(IdSet({"p", "q", "r"}))));
    const auto ce = counterexample_space();
    for (const auto& a : all_assignments(3, 4)) CHECK(is_top_continuous(make_map(src, ce, a)));
  }

  TEST_CASE("open balls close the gap between the two continuities") {
    const auto c = chain(2);
    const auto values = chain_values(c);
    std::vector<SpacePtr> targets;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& s : all_spaces(n, c, values)) targets.push_back(s);
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& t : enumerate_topologies(n)) {
        targets.push_back(std::make_shared<const ContinuitySpace>(flagg(t)));
      }
    }
    std::vector<SpacePtr> sources;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& s : all_spaces(n, c, values)) sources.push_back(s);
    }
    std::size_t open_targets = 0;
    for (const auto& dst : targets) {
      if (!balls_open(*dst)) continue;
      ++open_targets;
      for (const auto& src : sources) {
        for (const auto& a : all_assignments(src->size(), dst->size())) {
          const auto m = make_map(src, dst, a);
          CHECK(is_top_continuous(m) == is_eps_delta_continuous(m));
        }
      }
    }
    CHECK(open_targets > 0);
  }

  TEST_CASE("the counterexample space has a genuine gap") {
    const auto ce = counterexample_space();
    CHECK_FALSE(balls_open(*ce));
    const auto src = std::make_shared<const ContinuitySpace>(
        premetrize(FiniteTopology::indiscrete(IdSet({"p", "q"}))));
    bool gap = false;
    for (const auto& a : all_assignments(2, 4)) {
      const auto m = make_map(src, ce, a);
      CHECK(is_eps_delta_continuous(m) == literal_eps_delta(*src, *ce, a));
      gap = gap || (is_top_continuous(m) && !is_eps_delta_continuous(m));
    }
    CHECK(gap);
  }
}
