#include <cmath>

#include "doctest.h"
#include "sqtile/formulas.hpp"

using namespace sqtile;

TEST_CASE("convolution term examples") {
  const auto printed = conv_term_batch(12, ConvCoefficient::MuSigma2);
  CHECK(printed[1] == 0);
  CHECK(printed[4] == 24);
  CHECK(printed[5] == 78);
  CHECK(printed[7] == 324);
  CHECK(printed[8] == 434);
  const auto inverse = conv_term_batch(12, ConvCoefficient::Sigma2Inverse);
  CHECK(inverse[8] == 438);
  // Same on squarefree n.
  for (std::size_t n : {1u, 2u, 3u, 5u, 6u, 7u, 10u, 11u}) CHECK(inverse[n] == printed[n]);
}

TEST_CASE("coefficient tables differ only off the squarefree integers") {
  SpfSieve sv(200);
  const auto a = coefficient_table(ConvCoefficient::MuSigma2, sv);
  const auto b = coefficient_table(ConvCoefficient::Sigma2Inverse, sv);
  const auto mu = tabulate(Fn::Mobius, 0, sv);
  for (std::size_t m = 1; m <= 200; ++m)
    if (mu[m] != 0) CHECK(a[m] == b[m]);
  CHECK(b[4] == 4);
  CHECK(b[9] == 9);
  CHECK(b[8] == 0);
  CHECK(a[4] == 0);
  // The inverse really inverts sigma_2.
  const auto e = dirichlet_convolve(b, tabulate(Fn::SigmaK, 2, sv));
  CHECK(e[1] == 1);
  for (std::size_t m = 2; m <= 200; ++m) CHECK(e[m] == 0);
}

TEST_CASE("closed-form counts at small n") {
  const FormulaTables t(20);
  const auto c = ConvCoefficient::MuSigma2;
  CHECK(t.counts(4, c) == Counts{0, 3, 1, 0, 4});
  CHECK(t.counts(5, c) == Counts{5, 11, 6, 2, 24});
  CHECK(t.counts(7, c) == Counts{35, 73, 40, 12, 160});
  CHECK(t.counts(8, c).e == 240);
  CHECK(t.counts(8, c).b == 118);
  CHECK(t.counts(8, c).d == 14);
  const auto k = ConvCoefficient::Sigma2Inverse;
  CHECK(t.counts(8, k) == Counts{48, 122, 60, 10, 240});
  CHECK(t.counts(12, k) == Counts{312, 724, 360, 44, 1440});
  CHECK(count_A(12) == 312);
  CHECK(count_E(6) == 48);
  for (u64 n = 1; n < 4; ++n) CHECK(t.counts(n, c) == Counts{});
}

TEST_CASE("single-value wrappers agree with the tables") {
  const FormulaTables t(200);
  for (auto c : {ConvCoefficient::MuSigma2, ConvCoefficient::Sigma2Inverse})
    for (u64 n = 4; n <= 200; ++n) {
      const Counts k = t.counts(n, c);
      CHECK(count_A(n) == k.a);
      CHECK(count_B(n, t.conv(c)) == k.b);
      CHECK(count_C(n) == k.c);
      CHECK(count_D(n, t.conv(c)) == k.d);
      CHECK(count_E(n) == k.e);
      CHECK(k.a + k.b + k.c + k.d == k.e);
      CHECK(4 * k.c == k.e);
      CHECK(count_B_factored_from(n, t.j1()[n], t.j2()[n], t.conv(c)[n]) == k.b);
    }
}

TEST_CASE("counts in the single-cone-point stratum") {
  CHECK(count_H2(3) == H2Counts{1, 2, 3});
  CHECK(count_H2(4) == H2Counts{4, 5, 9});
  CHECK(count_H2(5).f == 10);
  CHECK(count_H2(5).g == 17);
  for (u64 n = 3; n <= 500; ++n) {
    const auto h = count_H2(n);
    CHECK(h.f + h.g == h.h);
  }
}

TEST_CASE("intermediate closed forms") {
  const FormulaTables t(10);
  CHECK(intermediate_closed(Intermediate::X, 4, t) == Rational{8, 1});
  CHECK(intermediate_closed(Intermediate::Y, 3, t) == Rational{2, 1});
  // Not integral at n = 1; the defining sums are empty there.
  CHECK(intermediate_closed(Intermediate::W, 1, t) == Rational{-1, 12});
  CHECK(intermediate_closed(Intermediate::Y, 1, t) == Rational{-1, 24});
}

TEST_CASE("ratios are reduced") {
  CHECK(make_ratio(3, 4) == Rational{3, 4});
  CHECK(make_ratio(6, 24) == Rational{1, 4});
  CHECK(make_ratio(0, 7) == Rational{0, 1});
  CHECK(make_ratio(2, -4) == Rational{-1, 2});
}

TEST_CASE("limit densities") {
  const auto L = limit_densities();
  CHECK(L.limit_a == 0.25);
  CHECK(L.limit_c == 0.25);
  CHECK(L.limit_b >= 0.4534);
  CHECK(L.limit_b <= 0.4535);
  CHECK(L.limit_d >= 0.0465);
  CHECK(L.limit_d <= 0.0466);
  CHECK(std::fabs(L.limit_a + L.limit_b + L.limit_c + L.limit_d - 1.0) < 1e-10);
  CHECK(std::fabs(L.zeta3 - 1.2020569031595942) < 1e-12);
  CHECK(std::fabs(L.zeta5 - 1.0369277551433699) < 1e-12);
  CHECK(std::fabs(asym_constant_sigma1_sigma2() - 0.158903) < 1e-4);
}

TEST_CASE("additive term approaches its main term") {
  const auto s1 = tabulate(Fn::SigmaK, 1, 2000), s2 = tabulate(Fn::SigmaK, 2, 2000);
  const auto s12 = additive_convolve(s1, s2);
  const long double ratio = (long double)s12[2000] / asym_main_term_sigma1_sigma2(2000);
  CHECK(std::fabs((double)ratio - 1.0) * asym_constant_sigma1_sigma2() < 0.02);
}

TEST_CASE("coefficient names round trip") {
  for (auto c : {ConvCoefficient::MuSigma2, ConvCoefficient::Sigma2Inverse})
    CHECK(parse_coefficient(coefficient_name(c)) == c);
  CHECK_FALSE(parse_coefficient("bogus").has_value());
}
