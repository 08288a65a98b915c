#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sqtile/arith.hpp"

namespace sqtile {

// Coefficient table c in the convolution term (c * (sigma_1 Delta sigma_2))(n)
// that enters B(n) and D(n).
//   MuSigma2      : c = mu . sigma_2 (pointwise), the commonly quoted form.
//   Sigma2Inverse : c = (Id_2 . mu) * mu, the Dirichlet inverse of sigma_2.
// The two agree on squarefree arguments only. At p^2 the inverse equals p^2
// while mu . sigma_2 vanishes, and only the inverse reproduces the parameter
// enumeration and the permutation brute force (e.g. B(8) = 122, D(8) = 10).
enum class ConvCoefficient { Sigma2Inverse, MuSigma2 };

const char* coefficient_name(ConvCoefficient c);
std::optional<ConvCoefficient> parse_coefficient(std::string_view s);

ArithTable coefficient_table(ConvCoefficient c, const SpfSieve& sieve);
ArithTable conv_term_batch(std::size_t n_max, ConvCoefficient c);

struct Counts {
  i128 a = 0, b = 0, c = 0, d = 0, e = 0;
  bool operator==(const Counts&) const = default;
};

struct H2Counts {
  i128 f = 0, g = 0, h = 0;
  bool operator==(const H2Counts&) const = default;
};

// Closed forms. All return 0 below their domain (n < 4 for the genus two
// two-singularity stratum, n < 3 for the single-singularity one).
i128 count_A(u64 n);
i128 count_C(u64 n);
i128 count_E(u64 n);
i128 count_B(u64 n, const ArithTable& conv);
i128 count_D(u64 n, const ArithTable& conv);
H2Counts count_H2(u64 n);

// Same formulas fed with precomputed J_1(n), J_2(n) and conv(n).
i128 count_A_from(u64 n, i128 j1, i128 j2);
i128 count_B_from(u64 n, i128 j1, i128 j2, i128 conv);
i128 count_B_factored_from(u64 n, i128 j1, i128 j2, i128 conv);
i128 count_C_from(u64 n, i128 j2);
i128 count_D_from(u64 n, i128 j2, i128 conv);
i128 count_E_from(u64 n, i128 j2);

struct Rational {
  i128 num = 0, den = 1;
  bool operator==(const Rational&) const = default;
};
Rational make_ratio(i128 num, i128 den);

struct CensusRow {
  u64 n = 0;
  Counts counts;
  Rational ra, rb, rc, rd;
};

// Every table the closed forms and the intermediate sums need, up to n_max.
class FormulaTables {
 public:
  explicit FormulaTables(std::size_t n_max);

  std::size_t n_max() const { return n_max_; }
  const SpfSieve& sieve() const { return sieve_; }
  const ArithTable& mu() const { return mu_; }
  const ArithTable& phi() const { return phi_; }
  const ArithTable& j1() const { return phi_; }
  const ArithTable& j2() const { return j2_; }
  const ArithTable& sigma(unsigned k) const { return sigma_[k - 1]; }
  const ArithTable& sigma1_add_sigma2() const { return s1s2_; }
  const ArithTable& conv(ConvCoefficient c) const {
    return c == ConvCoefficient::MuSigma2 ? conv_printed_ : conv_inverse_;
  }

  Counts counts(u64 n, ConvCoefficient c) const;
  CensusRow row(u64 n, ConvCoefficient c) const;

 private:
  std::size_t n_max_;
  SpfSieve sieve_;
  ArithTable mu_, phi_, j2_;
  ArithTable sigma_[4];
  ArithTable s1s2_, conv_printed_, conv_inverse_;
};

H2Counts count_H2_from(u64 n, i128 j1, i128 j2);

enum class Intermediate { X, Y, U, V, W };
const char* intermediate_name(Intermediate which);

// Closed forms of the five auxiliary sums, kept as reduced fractions because
// Y and W are not integral at n = 1. X depends on the coefficient choice
// through the convolution term.
Rational intermediate_closed(Intermediate which, u64 n, const FormulaTables& t,
                         ConvCoefficient c = ConvCoefficient::MuSigma2);

struct LimitDensities {
  double zeta2, zeta3, zeta5;
  double limit_a, limit_b, limit_c, limit_d;
};

// zeta(s) for s >= 3: 10^6 terms summed smallest first in long double plus an
// Euler-Maclaurin tail. Truncation error after the tail is below N^{-s-3};
// rounding error stays near 10^-16, far inside the 10^-12 budget.
long double zeta_series(unsigned s);
LimitDensities limit_densities();

// zeta(2)zeta(3)/(12 zeta(5)) * sigma_4(n); a diagnostic only.
long double asym_main_term_sigma1_sigma2(u64 n);
long double asym_constant_sigma1_sigma2();

}  // namespace sqtile
