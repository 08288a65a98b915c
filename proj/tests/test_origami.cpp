#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "sqtile/origami.hpp"

using namespace sqtile;

namespace {

Perm identity(std::uint32_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm cycle(std::uint32_t n) {
  Perm p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

Perm power(const Perm& p, int e) {
  Perm r = identity(std::uint32_t(p.size()));
  for (int i = 0; i < e; ++i)
    for (auto& x : r) x = p[x];
  return r;
}

Origami l_shape() { return Origami({1, 2, 0}, {1, 0, 2}); }

}  // namespace

TEST_CASE("invalid permutations are rejected") {
  CHECK_THROWS(Origami({0, 0}, {0, 1}));
  CHECK_THROWS(Origami({0, 1}, {0, 1, 2}));
  CHECK(is_permutation(Perm{2, 0, 1}));
  CHECK_FALSE(is_permutation(Perm{2, 0, 0}));
  CHECK(inverse(Perm{1, 2, 0}) == Perm{2, 0, 1});
}

TEST_CASE("strata") {
  CHECK(stratum(Origami(cycle(4), identity(4))) == Stratum::Torus);
  const Origami l = l_shape();
  CHECK(cycle_type(commutator(l)) == CycleType{3});
  CHECK(stratum(l) == Stratum::H2);
  CHECK(stratum(build_from_params(ParamsA{1, 1, 2, 3, 4, 2})) == Stratum::H11);
}

TEST_CASE("connectivity") {
  CHECK_FALSE(is_connected(Origami(identity(2), identity(2))));
  CHECK(is_connected(Origami(cycle(6), identity(6))));
  CHECK(is_connected(Origami({1, 0, 3, 2}, {2, 3, 0, 1})));
  CHECK_THROWS(is_primitive_group(Origami(identity(2), identity(2))));
}

TEST_CASE("block test") {
  const Perm s = cycle(4);
  CHECK_FALSE(is_primitive_group(Origami(s, power(s, 2))));
  CHECK(is_primitive_group(l_shape()));
  for (std::uint32_t n = 3; n <= 9; ++n) {
    Perm t = identity(n);
    std::swap(t[0], t[1]);
    CHECK(is_primitive_group(Origami(cycle(n), t)));
  }
  // A prime number of squares with a transitive group is always primitive.
  CHECK(is_primitive_group(Origami(cycle(7), power(cycle(7), 3))));
  // Preserves the partition {0,1},{2,3},{4,5}.
  CHECK_FALSE(is_primitive_group(Origami({2, 3, 4, 5, 0, 1}, {1, 0, 3, 2, 5, 4})));
}

TEST_CASE("cylinder decomposition") {
  const auto torus = cylinder_decomposition(Origami(cycle(5), power(cycle(5), 2)));
  REQUIRE(torus.cylinders.size() == 1);
  CHECK(torus.cylinders[0].width == 5);
  CHECK(torus.cylinders[0].height == 1);
  CHECK(torus.cylinders[0].top_sc == 0);

  const auto b = cylinder_decomposition(build_from_params(ParamsB{2, 3, 1, 2, 2, 1, 1}));
  REQUIRE(b.cylinders.size() == 2);
  std::multiset<std::pair<unsigned, unsigned>> shape;
  for (const auto& c : b.cylinders) shape.insert({c.width, c.height});
  CHECK(shape == std::multiset<std::pair<unsigned, unsigned>>{{5, 2}, {2, 3}});
}

TEST_CASE("builders honour the prototype") {
  const Origami a = build_from_params(ParamsA{1, 1, 2, 3, 4, 2});
  CHECK(a.n() == 10);
  CHECK(cycle_type(a.sigma()) == CycleType{10});
  CHECK(cycle_type(commutator(a)) == CycleType{2, 2});
  CHECK(classify_diagram(a) == Diagram::A);

  const Origami c0 = build_from_params(ParamsC{1, 1, 1, 1, 1, 0, 0});
  const Origami c1 = build_from_params(ParamsC{1, 1, 1, 1, 1, 0, 1});
  CHECK(classify_diagram(c1) == Diagram::C);
  CHECK_FALSE(is_primitive_group(c0));
  CHECK(is_primitive_group(c1));
  for (const auto& c : cylinder_decomposition(c1).cylinders) {
    CHECK(c.width == 2);
    CHECK(c.height == 1);
  }

  const Origami d = build_from_params(ParamsD{1, 1, 1, 1, 1, 0, 0, 0});
  CHECK(cylinder_decomposition(d).cylinders.size() == 3);
  CHECK(classify_diagram(d) == Diagram::D);
  CHECK_FALSE(is_primitive_group(d));

  CHECK(classify_diagram(build_from_params(ParamsB{1, 1, 1, 1, 1, 0, 0})) == Diagram::B);
  CHECK_THROWS(classify_diagram(l_shape()));
}

TEST_CASE("builder contract for every tuple up to n = 8") {
  for (i64 n = 4; n <= 8; ++n) {
    auto check = [&](const auto& t, Diagram want) {
      const Origami o = build_from_params(t);
      CHECK(stratum(o) == Stratum::H11);
      CHECK(classify_diagram(o) == want);
      const bool prim = is_primitive_group(o);
      CHECK(prim == is_primitive_params(t));
      CHECK((absolute_period_lattice(o).index() == 1) == prim);
      unsigned area = 0;
      for (const auto& c : cylinder_decomposition(o).cylinders) area += c.width * c.height;
      CHECK(area == o.n());
    };
    for_each_params_A(n, [&](const ParamsA& t) { check(t, Diagram::A); });
    for_each_params_B(n, [&](const ParamsB& t) { check(t, Diagram::B); });
    for_each_params_C(n, [&](const ParamsC& t) { check(t, Diagram::C); });
    for_each_params_D(n, [&](const ParamsD& t) { check(t, Diagram::D); });
  }
}

TEST_CASE("canonical forms are conjugacy invariants") {
  std::mt19937 rng(12345);
  const Origami o = build_from_params(ParamsD{1, 2, 1, 2, 3, 1, 3, 2});
  const auto form = canonical_form(o);
  for (int rep = 0; rep < 20; ++rep) {
    Perm g = identity(o.n());
    std::shuffle(g.begin(), g.end(), rng);
    const Origami r = o.relabeled(g);
    CHECK(canonical_form(r) == form);
    CHECK(absolute_period_lattice(r) == absolute_period_lattice(o));
    CHECK(is_primitive_group(r) == is_primitive_group(o));
  }
}

TEST_CASE("dedup over the uniqueness sets") {
  std::vector<Origami> c4;
  for_each_params_C(4, [&](const ParamsC& t) {
    if (is_primitive_params(t)) c4.push_back(build_from_params(t));
  });
  CHECK(dedup(c4) == 1);

  std::vector<Origami> a5;
  for_each_params_A(5, [&](const ParamsA& t) {
    if (is_primitive_params(t)) a5.push_back(build_from_params(t));
  });
  CHECK(a5.size() == 5);
  CHECK(dedup(a5) == 5);
}

TEST_CASE("absolute periods") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const Lattice2 L = absolute_period_lattice(Origami(cycle(n), identity(n)));
    CHECK_FALSE(L.degenerate);
    CHECK(L.a == i64(n));
    CHECK(L.b == 0);
    CHECK(L.c == 1);
  }
  CHECK(absolute_period_lattice(l_shape()).index() == 1);
}

TEST_CASE("permutation sweep for n = 4 and 5") {
  const auto r4 = brute_force_census(4, 2);
  CHECK(r4.h11 == std::array<u64, 4>{0, 3, 1, 0});
  CHECK(r4.f == 4);
  CHECK(r4.g == 5);
  CHECK(r4.pairs_scanned == 576);
  const auto r5 = brute_force_census(5, 3);
  CHECK(r5.h11 == std::array<u64, 4>{5, 11, 6, 2});
  CHECK(r5.f == 10);
  CHECK(r5.g == 17);
  CHECK_THROWS(brute_force_census(3, 1));
  CHECK_THROWS(brute_force_census(9, 1));
}
