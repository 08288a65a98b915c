#include "sqtile/formulas.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sqtile {

const char* coefficient_name(ConvCoefficient c) {
  return c == ConvCoefficient::MuSigma2 ? "printed" : "corrected";
}

std::optional<ConvCoefficient> parse_coefficient(std::string_view s) {
  if (s == "printed" || s == "mu-sigma2") return ConvCoefficient::MuSigma2;
  if (s == "corrected" || s == "sigma2-inverse") return ConvCoefficient::Sigma2Inverse;
  return std::nullopt;
}

ArithTable coefficient_table(ConvCoefficient c, const SpfSieve& sieve) {
  ArithTable mu = tabulate(Fn::Mobius, 0, sieve);
  if (c == ConvCoefficient::MuSigma2) return pointwise_mul(mu, tabulate(Fn::SigmaK, 2, sieve));
  return dirichlet_convolve(pointwise_mul(tabulate(Fn::IdK, 2, sieve), mu), mu);
}

ArithTable conv_term_batch(std::size_t n_max, ConvCoefficient c) {
  if (n_max > kAdditiveCap) throw std::invalid_argument("n_max above the additive-convolution cap");
  SpfSieve sieve(static_cast<std::uint32_t>(n_max));
  ArithTable s12 = additive_convolve(tabulate(Fn::SigmaK, 1, sieve), tabulate(Fn::SigmaK, 2, sieve));
  return dirichlet_convolve(coefficient_table(c, sieve), s12);
}

// Each closed form is evaluated as (denominator * value) in exact integers and
// divided at the end; a remainder means a transcription error.

i128 count_A_from(u64 n, i128 j1, i128 j2) {
  if (n < 4) return 0;
  const i128 N = n;
  i128 s = add_ck(mul_ck(12 * N, j1), mul_ck(N * N - 6 * N, j2));
  return exact_div(s, 24, "A(n)");
}

i128 count_B_from(u64 n, i128 j1, i128 j2, i128 conv) {
  if (n < 4) return 0;
  const i128 N = n;
  i128 s = mul_ck(24, conv);
  s = sub_ck(s, mul_ck(2 * N * N + 5 * N - 18, j2));
  s = sub_ck(s, mul_ck(12 * N, j1));
  return exact_div(s, 24, "B(n)");
}

i128 count_B_factored_from(u64 n, i128 j1, i128 j2, i128 conv) {
  if (n < 4) return 0;
  const i128 N = n;
  i128 s = mul_ck(24, conv);
  s = sub_ck(s, mul_ck((2 * N + 9) * (N - 2), j2));
  s = sub_ck(s, mul_ck(12 * N, j1));
  return exact_div(s, 24, "B(n) factored");
}

i128 count_C_from(u64 n, i128 j2) {
  if (n < 4) return 0;
  const i128 N = n;
  return exact_div(mul_ck((N - 2) * (N - 3), j2), 24, "C(n)");
}

i128 count_D_from(u64 n, i128 j2, i128 conv) {
  if (n < 4) return 0;
  const i128 N = n;
  i128 s = sub_ck(mul_ck(N * N - N, j2), mul_ck(6, conv));
  return exact_div(s, 6, "D(n)");
}

i128 count_E_from(u64 n, i128 j2) {
  if (n < 4) return 0;
  const i128 N = n;
  return exact_div(mul_ck((N - 2) * (N - 3), j2), 6, "E(n)");
}

H2Counts count_H2_from(u64 n, i128 j1, i128 j2) {
  if (n < 3) return {};
  const i128 N = n;
  H2Counts r;
  r.f = exact_div(sub_ck(mul_ck(N, j2), mul_ck(3 * N, j1)), 6, "F(n)");
  r.g = exact_div(add_ck(sub_ck(mul_ck(5 * N, j2), mul_ck(18, j2)), mul_ck(12 * N, j1)), 24, "G(n)");
  r.h = exact_div(mul_ck(3 * (N - 2), j2), 8, "H(n)");
  if (r.f + r.g != r.h) throw DivisibilityError("F + G != H");
  return r;
}

i128 count_A(u64 n) { return n < 4 ? 0 : count_A_from(n, jordan(1, n), jordan(2, n)); }
i128 count_C(u64 n) { return n < 4 ? 0 : count_C_from(n, jordan(2, n)); }
i128 count_E(u64 n) { return n < 4 ? 0 : count_E_from(n, jordan(2, n)); }

i128 count_B(u64 n, const ArithTable& conv) {
  if (n < 4) return 0;
  if (n > conv.n_max()) throw std::out_of_range("conv table too short");
  return count_B_from(n, jordan(1, n), jordan(2, n), conv[n]);
}

i128 count_D(u64 n, const ArithTable& conv) {
  if (n < 4) return 0;
  if (n > conv.n_max()) throw std::out_of_range("conv table too short");
  return count_D_from(n, jordan(2, n), conv[n]);
}

H2Counts count_H2(u64 n) { return n < 3 ? H2Counts{} : count_H2_from(n, jordan(1, n), jordan(2, n)); }

Rational make_ratio(i128 num, i128 den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

FormulaTables::FormulaTables(std::size_t n_max)
    : n_max_(n_max), sieve_(static_cast<std::uint32_t>(n_max)) {
  if (n_max > kAdditiveCap) throw std::invalid_argument("n_max above the additive-convolution cap");
  mu_ = tabulate(Fn::Mobius, 0, sieve_);
  phi_ = tabulate(Fn::Phi, 0, sieve_);
  j2_ = tabulate(Fn::JordanK, 2, sieve_);
  for (unsigned k = 1; k <= 4; ++k) sigma_[k - 1] = tabulate(Fn::SigmaK, k, sieve_);
  s1s2_ = additive_convolve(sigma_[0], sigma_[1]);
  conv_printed_ = dirichlet_convolve(coefficient_table(ConvCoefficient::MuSigma2, sieve_), s1s2_);
  conv_inverse_ = dirichlet_convolve(coefficient_table(ConvCoefficient::Sigma2Inverse, sieve_), s1s2_);
}

Counts FormulaTables::counts(u64 n, ConvCoefficient c) const {
  if (n > n_max_) throw std::out_of_range("n beyond formula tables");
  if (n < 4) return {};
  const i128 conv_n = conv(c)[n];
  return {count_A_from(n, phi_[n], j2_[n]), count_B_from(n, phi_[n], j2_[n], conv_n),
          count_C_from(n, j2_[n]), count_D_from(n, j2_[n], conv_n), count_E_from(n, j2_[n])};
}

CensusRow FormulaTables::row(u64 n, ConvCoefficient c) const {
  CensusRow r;
  r.n = n;
  r.counts = counts(n, c);
  const i128 e = r.counts.e;
  if (e == 0) throw std::domain_error("ratios need E(n) > 0");
  r.ra = make_ratio(r.counts.a, e);
  r.rb = make_ratio(r.counts.b, e);
  r.rc = make_ratio(r.counts.c, e);
  r.rd = make_ratio(r.counts.d, e);
  return r;
}

const char* intermediate_name(Intermediate which) {
  switch (which) {
    case Intermediate::X: return "X";
    case Intermediate::Y: return "Y";
    case Intermediate::U: return "U";
    case Intermediate::V: return "V";
    case Intermediate::W: return "W";
  }
  return "?";
}

Rational intermediate_closed(Intermediate which, u64 n, const FormulaTables& t, ConvCoefficient c) {
  if (n < 1 || n > t.n_max()) throw std::out_of_range("n beyond formula tables");
  const i128 N = n;
  const i128 j1 = t.j1()[n], j2 = t.j2()[n];
  switch (which) {
    case Intermediate::X:
      return make_ratio(sub_ck(mul_ck(12, t.conv(c)[n]), mul_ck(N * N, j2)), 12);
    case Intermediate::Y:
      return make_ratio(add_ck(sub_ck(mul_ck(5 * N, j2), mul_ck(18, j2)), mul_ck(12 * N, j1)), 24);
    case Intermediate::U: {
      // sum_{d|n} d^2 mu(d) [sigma_4 + 12 sigma_3 - (12e+1) sigma_2](e) / 24, e = n/d
      i128 s = 0;
      for (u64 d = 1; d <= n; ++d) {
        if (n % d != 0 || t.mu()[d] == 0) continue;
        const u64 e = n / d;
        i128 inner = add_ck(t.sigma(4)[e], mul_ck(12, t.sigma(3)[e]));
        inner = sub_ck(inner, mul_ck(12 * i128(e) + 1, t.sigma(2)[e]));
        s = add_ck(s, mul_ck(i128(d) * i128(d) * t.mu()[d], inner));
      }
      return make_ratio(s, 24);
    }
    case Intermediate::V: {
      // sum_{d|n} d mu(d) [5 sigma_3 + sigma_1 - 6 e sigma_1](e) / 12
      i128 s = 0;
      for (u64 d = 1; d <= n; ++d) {
        if (n % d != 0 || t.mu()[d] == 0) continue;
        const u64 e = n / d;
        i128 inner = add_ck(mul_ck(5, t.sigma(3)[e]), t.sigma(1)[e]);
        inner = sub_ck(inner, mul_ck(6 * i128(e), t.sigma(1)[e]));
        s = add_ck(s, mul_ck(i128(d) * t.mu()[d], inner));
      }
      return make_ratio(s, 12);
    }
    case Intermediate::W:
      return make_ratio(mul_ck(N * N - 2 * N, j2), 12);
  }
  throw std::logic_error("unknown intermediate sum");
}

long double zeta_series(unsigned s) {
  if (s < 3) throw std::invalid_argument("zeta_series needs s >= 3");
  constexpr unsigned long kTerms = 1000000;
  long double sum = 0.0L;
  for (unsigned long k = kTerms; k >= 1; --k) sum += std::pow((long double)k, -(long double)s);
  // sum_{k>N} k^-s = N^{1-s}/(s-1) - N^{-s}/2 + s N^{-s-1}/12 + O(N^{-s-3})
  const long double N = kTerms;
  sum += std::pow(N, 1.0L - s) / (s - 1) - std::pow(N, -(long double)s) / 2 +
         s * std::pow(N, -(long double)s - 1) / 12;
  return sum;
}

LimitDensities limit_densities() {
  const long double pi = std::numbers::pi_v<long double>;
  const long double z2 = pi * pi / 6, z3 = zeta_series(3), z5 = zeta_series(5);
  const long double ratio = z2 * z3 / (2 * z5);
  LimitDensities L;
  L.zeta2 = (double)z2;
  L.zeta3 = (double)z3;
  L.zeta5 = (double)z5;
  L.limit_a = 0.25;
  L.limit_c = 0.25;
  L.limit_b = (double)(ratio - 0.5L);
  L.limit_d = (double)(1.0L - ratio);
  return L;
}

long double asym_constant_sigma1_sigma2() {
  const long double pi = std::numbers::pi_v<long double>;
  return (pi * pi / 6) * zeta_series(3) / (12 * zeta_series(5));
}

long double asym_main_term_sigma1_sigma2(u64 n) {
  long double s4 = 0;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s4 += std::pow((long double)d, 4.0L);
    if (d * d != n) s4 += std::pow((long double)(n / d), 4.0L);
  }
  return asym_constant_sigma1_sigma2() * s4;
}

}  // namespace sqtile
