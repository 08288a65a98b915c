#include <vector>

#include "doctest.h"
#include "sqtile/params.hpp"

using namespace sqtile;

TEST_CASE("primitivity criteria on small tuples") {
  CHECK_FALSE(is_primitive_params(ParamsA{1, 1, 1, 1, 1, 0}));
  CHECK(is_primitive_params(ParamsC{1, 1, 1, 1, 1, 0, 1}));
  CHECK_FALSE(is_primitive_params(ParamsC{1, 1, 1, 1, 1, 0, 0}));
  CHECK_FALSE(is_primitive_params(ParamsD{1, 1, 1, 1, 1, 0, 0, 0}));
  // p+q and r+q both even kills D whatever the lengths and shears.
  for (i64 b = 0; b < 5; ++b) CHECK_FALSE(is_primitive_params(ParamsD{3, 1, 1, 2, 3, 1, b, 2}));
  CHECK_FALSE(is_primitive_params(ParamsA{2, 1, 2, 3, 4, 0}));  // height two
}

TEST_CASE("structural validity") {
  CHECK(is_valid(ParamsA{1, 1, 2, 3, 4, 2}));
  CHECK_FALSE(is_valid(ParamsA{1, 1, 2, 3, 4, 10}));
  CHECK_FALSE(is_valid(ParamsA{1, 2, 1, 3, 4, 0}));  // j is not the least
  CHECK(is_valid(ParamsA{1, 1, 1, 1, 1, 1}));
  CHECK_FALSE(is_valid(ParamsA{1, 1, 1, 1, 1, 2}));  // all equal halves the shear range
  CHECK_FALSE(is_valid(ParamsB{1, 1, 1, 1, 2, 0, 2}));
  CHECK(is_valid(ParamsC{1, 2, 1, 1, 1, 0, 0}));
  CHECK_FALSE(is_valid(ParamsC{2, 1, 1, 1, 1, 0, 0}));
  CHECK_FALSE(is_valid(ParamsC{1, 1, 1, 1, 1, 1, 0}));
  CHECK(is_valid(ParamsD{1, 1, 2, 1, 1, 0, 0, 0}));
  CHECK_FALSE(is_valid(ParamsD{2, 1, 1, 1, 1, 0, 0, 0}));
}

template <class P, class Each>
std::pair<int, int> tally(i64 n, Each each) {
  int all = 0, prim = 0;
  each(n, [&](const P& t) {
    ++all;
    CHECK(t.n() == n);
    CHECK(is_valid(t));
    prim += is_primitive_params(t);
  });
  return {all, prim};
}

TEST_CASE("enumerators at n = 4") {
  CHECK(tally<ParamsA>(4, [](i64 n, auto f) { for_each_params_A(n, f); }).second == 0);
  CHECK(tally<ParamsB>(4, [](i64 n, auto f) { for_each_params_B(n, f); }).second == 3);
  CHECK(tally<ParamsC>(4, [](i64 n, auto f) { for_each_params_C(n, f); }).second == 1);
  CHECK(tally<ParamsD>(4, [](i64 n, auto f) { for_each_params_D(n, f); }).second == 0);
}

TEST_CASE("enumerated counts match closed forms") {
  CHECK(count_by_enumeration(Diagram::A, 12, ShearMode::Explicit) == 312);
  CHECK(count_by_enumeration(Diagram::C, 4, ShearMode::Explicit) == 1);
  CHECK(count_by_enumeration(Diagram::D, 5, ShearMode::Explicit) == 2);
  const FormulaTables t(40);
  for (i64 n = 4; n <= 12; ++n) {
    const Counts k = t.counts(u64(n), ConvCoefficient::Sigma2Inverse);
    for (auto mode : {ShearMode::Explicit, ShearMode::Analytic}) {
      CHECK(count_by_enumeration(Diagram::A, n, mode) == k.a);
      CHECK(count_by_enumeration(Diagram::B, n, mode) == k.b);
      CHECK(count_by_enumeration(Diagram::C, n, mode) == k.c);
      CHECK(count_by_enumeration(Diagram::D, n, mode) == k.d);
    }
  }
  for (i64 n = 13; n <= 40; ++n) {
    const Counts k = t.counts(u64(n), ConvCoefficient::Sigma2Inverse);
    CHECK(count_by_enumeration(Diagram::B, n, ShearMode::Analytic) == k.b);
    CHECK(count_by_enumeration(Diagram::D, n, ShearMode::Analytic) == k.d);
  }
  CHECK_THROWS(count_by_enumeration(Diagram::A, kExplicitCap + 1, ShearMode::Explicit));
}

TEST_CASE("one-cylinder tuples and the quadruple set") {
  CHECK(count_omega(4) == 0);
  CHECK(count_omega(5) == 5);
  CHECK(count_omega(6) == 6);
  for (i64 n = 4; n <= 40; ++n) {
    CHECK(count_omega(n) == count_omega_direct(n));
    CHECK(count_omega(n) == count_A(u64(n)));
  }
}

TEST_CASE("bijection round trip") {
  for (i64 n = 4; n <= 16; ++n) {
    int seen = 0;
    for_each_params_A(n, [&](const ParamsA& a) {
      if (!is_primitive_params(a)) return;
      ++seen;
      const OmegaA w = omega_from_params(a);
      CHECK(in_omega(n, w));
      CHECK(params_from_omega(n, w) == a);
    });
    CHECK(i128(seen) == count_omega(n));
  }
  CHECK_THROWS_AS(omega_from_params(ParamsA{2, 1, 2, 3, 4, 0}), std::invalid_argument);
}

TEST_CASE("quadruple lemma") {
  CHECK(quadruple_count(4, 1) == 1);
  CHECK(quadruple_count(4, 2) == 1);
  CHECK(quadruple_count(4, 4) == 0);
  for (i64 n = 4; n <= 24; ++n)
    for (i64 d = 1; d <= n; ++d)
      if (n % d == 0) CHECK(quadruple_count(n, d) == quadruple_count_brute(n, d));
  CHECK_THROWS(quadruple_count(6, 4));
}

TEST_CASE("shear lemma") {
  CHECK(shear_count_formula(1, 1, 4, 4) == 8);
  CHECK(shear_count_formula(1, 1, 1, 1) == 1);
  CHECK(shear_count_formula(2, 3, 6, 4) == 12);
  CHECK(shear_count_brute(1, 1, 4, 4, 0, 0) == 8);
  CHECK(shear_count_brute(2, 3, 6, 4, 0, 0) == 12);
  // The count does not depend on where the box starts.
  CHECK(shear_count_brute(2, 3, 6, 4, 5, 11) == 12);
  CHECK_THROWS(shear_count_formula(2, 4, 3, 3));
}

TEST_CASE("auxiliary sums by direct evaluation") {
  CHECK(intermediate_direct(Intermediate::V, 2) == 1);
  CHECK(intermediate_direct(Intermediate::Y, 3) == 2);
  CHECK(intermediate_direct(Intermediate::X, 4) == 8);
  const FormulaTables t(60);
  for (i64 n = 4; n <= 60; ++n)
    for (auto w : {Intermediate::X, Intermediate::Y, Intermediate::U, Intermediate::V, Intermediate::W})
      CHECK(intermediate_closed(w, u64(n), t, ConvCoefficient::Sigma2Inverse) ==
            Rational{intermediate_direct(w, n), 1});
}
