#include "doctest.h"
#include "sqtile/arith.hpp"

using namespace sqtile;

TEST_CASE("sieve marks primes by their own smallest factor") {
  SpfSieve s(100);
  CHECK(s.spf(97) == 97);
  CHECK(s.spf(91) == 7);
  CHECK(s.is_prime(2));
  CHECK_FALSE(s.is_prime(1));
  auto f = s.factorize(72);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == std::pair<std::uint32_t, std::uint32_t>{2, 3});
  CHECK(f[1] == std::pair<std::uint32_t, std::uint32_t>{3, 2});
}

TEST_CASE("tabulated values") {
  const auto mu = tabulate(Fn::Mobius, 0, 20);
  CHECK(mu[1] == 1);
  CHECK(mu[12] == 0);
  CHECK(mu[6] == 1);
  CHECK(mu[7] == -1);
  CHECK(tabulate(Fn::JordanK, 2, 20)[4] == 12);
  CHECK(tabulate(Fn::SigmaK, 2, 20)[6] == 50);
  CHECK(tabulate(Fn::Phi, 0, 20)[12] == 4);
  CHECK(tabulate(Fn::IdK, 3, 20)[5] == 125);
  CHECK(tabulate(Fn::Eps, 0, 20)[1] == 1);
  CHECK(tabulate(Fn::Eps, 0, 20)[2] == 0);
  CHECK(jordan(2, 12) == 96);
  CHECK(jordan(1, 12) == 4);
  CHECK(mobius(30) == -1);
}

TEST_CASE("order above four is rejected") { CHECK_THROWS(tabulate(Fn::SigmaK, 5, 10)); }

TEST_CASE("Dirichlet convolution examples") {
  const std::size_t N = 60;
  const auto mu = tabulate(Fn::Mobius, 0, N), one = tabulate(Fn::One, 0, N);
  const auto e = dirichlet_convolve(mu, one);
  CHECK(e[1] == 1);
  for (std::size_t m = 2; m <= N; ++m) CHECK(e[m] == 0);
  CHECK(dirichlet_convolve(mu, tabulate(Fn::SigmaK, 1, N))[6] == 6);
  CHECK(dirichlet_convolve(mu, tabulate(Fn::IdK, 2, N))[4] == 12);
  CHECK_THROWS_AS(dirichlet_convolve(mu, tabulate(Fn::One, 0, N + 1)), std::invalid_argument);
}

TEST_CASE("additive convolution examples") {
  const std::size_t N = 10;
  const auto s1 = tabulate(Fn::SigmaK, 1, N), s2 = tabulate(Fn::SigmaK, 2, N);
  const auto s11 = additive_convolve(s1, s1), s12 = additive_convolve(s1, s2);
  CHECK(s11[1] == 0);
  CHECK(s11[2] == 1);
  CHECK(s11[4] == 17);
  CHECK(s12[4] == 29);
  CHECK(s12[5] == 78);
  CHECK(s12[1] == 0);
}

TEST_CASE("pointwise product examples") {
  const auto mu = tabulate(Fn::Mobius, 0, 10), s2 = tabulate(Fn::SigmaK, 2, 10);
  const auto p = pointwise_mul(mu, s2);
  CHECK(p[2] == -5);
  CHECK(p[4] == 0);
  CHECK(pointwise_mul(tabulate(Fn::IdK, 1, 10), mu)[1] == 1);
}

TEST_CASE("overflow is an error, not a wrap") {
  ArithTable big(3);
  big[1] = big[2] = big[3] = i128(1) << 100;
  CHECK_THROWS_AS(pointwise_mul(big, big), OverflowError);
  CHECK_THROWS_AS(additive_convolve(big, big), OverflowError);
}

TEST_CASE("int128 rendering") {
  CHECK(to_string(i128(0)) == "0");
  CHECK(to_string(-i128(12345)) == "-12345");
  CHECK(to_string(i128(1) << 100) == "1267650600228229401496703205376");
  CHECK_THROWS_AS(exact_div(7, 2, "t"), DivisibilityError);
}
