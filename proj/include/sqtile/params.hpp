#pragma once

#include <optional>
#include <string_view>

#include "sqtile/formulas.hpp"
#include "sqtile/int128.hpp"

namespace sqtile {

enum class Diagram { A, B, C, D };
inline constexpr Diagram kDiagrams[] = {Diagram::A, Diagram::B, Diagram::C, Diagram::D};
const char* diagram_name(Diagram d);

// One-cylinder diagram: height p, saddle lengths j,k,l,m, shear alpha.
struct ParamsA {
  i64 p, j, k, l, m, alpha;
  i64 n() const { return p * (j + k + l + m); }
  bool operator==(const ParamsA&) const = default;
};

// Long cylinder (height p, width k+l+m, shear alpha) over a short one
// (height q, width m, shear beta).
struct ParamsB {
  i64 p, q, k, l, m, alpha, beta;
  i64 n() const { return p * (k + l + m) + q * m; }
};

// Two cylinders of widths k+l and l+m sharing a saddle connection of length l.
struct ParamsC {
  i64 p, q, k, l, m, alpha, beta;
  i64 n() const { return p * (k + l) + q * (l + m); }
};

// Middle cylinder (height q, width k+l) with cylinders of widths k and l
// (heights p and r) stacked on its two top saddle connections.
struct ParamsD {
  i64 p, q, r, k, l, alpha, beta, gamma;
  i64 n() const { return (p + q) * k + (r + q) * l; }
};

struct OmegaA {
  i64 x, y, z, t;
  bool operator==(const OmegaA&) const = default;
};

// Structural validity including membership in the uniqueness set.
bool is_valid(const ParamsA& a);
bool is_valid(const ParamsB& b);
bool is_valid(const ParamsC& c);
bool is_valid(const ParamsD& d);

// gcd primitivity criteria per diagram.
bool is_primitive_params(const ParamsA& a);
bool is_primitive_params(const ParamsB& b);
bool is_primitive_params(const ParamsC& c);
bool is_primitive_params(const ParamsD& d);

// Shear bound of a one-cylinder tuple: alpha < n/p, or alpha < n/(2p) when
// all four lengths agree.
inline i64 shear_bound_A(i64 w, bool all_equal) { return all_equal ? (w + 1) / 2 : w; }

inline bool in_sigma_A(i64 j, i64 k, i64 l, i64 m) {
  return (j < k && j < l && j < m) || (j == l && l < k && k <= m) ||
         (j == k && k < l && k < m) || (j == k && k == l && l < m) ||
         (j == k && k == l && l == m);
}

// Enumerators: every member of the uniqueness set for n, lexicographic in the
// field order of the params type.
template <class F>
void for_each_params_A(i64 n, F&& f) {
  for (i64 p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    const i64 w = n / p;
    for (i64 j = 1; j < w; ++j)
      for (i64 k = 1; j + k < w; ++k)
        for (i64 l = 1; j + k + l < w; ++l) {
          const i64 m = w - j - k - l;
          if (!in_sigma_A(j, k, l, m)) continue;
          const i64 bound = shear_bound_A(w, j == k && k == l && l == m);
          for (i64 a = 0; a < bound; ++a) f(ParamsA{p, j, k, l, m, a});
        }
  }
}

template <class F>
void for_each_params_B(i64 n, F&& f) {
  for (i64 p = 1; p <= n; ++p)
    for (i64 q = 1; p + q <= n; ++q)
      for (i64 k = 1; p * k < n; ++k)
        for (i64 l = 1; p * (k + l) < n; ++l) {
          const i64 rest = n - p * (k + l);
          if (rest % (p + q) != 0) continue;
          const i64 m = rest / (p + q);
          for (i64 a = 0; a < k + l + m; ++a)
            for (i64 b = 0; b < m; ++b) f(ParamsB{p, q, k, l, m, a, b});
        }
}

template <class F>
void for_each_params_C(i64 n, F&& f) {
  for (i64 p = 1; p <= n; ++p)
    for (i64 q = 1; p + q <= n; ++q)
      for (i64 k = 1; p * k < n; ++k)
        for (i64 l = 1; p * (k + l) + q * l < n; ++l) {
          const i64 rest = n - p * (k + l) - q * l;
          if (rest % q != 0) continue;
          const i64 m = rest / q;
          if (k > m || (k == m && p > q)) continue;
          for (i64 a = 0; a < k + l; ++a)
            for (i64 b = (k == m && p == q) ? a : 0; b < l + m; ++b)
              f(ParamsC{p, q, k, l, m, a, b});
        }
}

template <class F>
void for_each_params_D(i64 n, F&& f) {
  for (i64 p = 1; p <= n; ++p)
    for (i64 q = 1; p + q <= n; ++q)
      for (i64 r = 1; p + q + r <= n; ++r)
        for (i64 k = 1; (p + q) * k < n; ++k) {
          const i64 rest = n - (p + q) * k;
          if (rest % (r + q) != 0) continue;
          const i64 l = rest / (r + q);
          if (k > l || (k == l && p > r)) continue;
          for (i64 a = 0; a < k; ++a)
            for (i64 b = 0; b < k + l; ++b)
              for (i64 c = (k == l && p == r) ? a : 0; c < l; ++c)
                f(ParamsD{p, q, r, k, l, a, b, c});
        }
}

// The bijection between primitive one-cylinder tuples and Omega, both ways.
OmegaA omega_from_params(const ParamsA& a);
ParamsA params_from_omega(i64 n, const OmegaA& w);
bool in_omega(i64 n, const OmegaA& w);

i128 count_omega(i64 n);         // prefix sums over the last coordinate
i128 count_omega_direct(i64 n);  // literal quadruple loop

i128 quadruple_count(i64 n, i64 d);
i128 quadruple_count_brute(i64 n, i64 d);

i128 shear_count_formula(i64 p, i64 q, i64 k, i64 l);
i128 shear_count_brute(i64 p, i64 q, i64 k, i64 l, i64 beta1, i64 beta2);

enum class ShearMode { Explicit, Analytic };
inline constexpr i64 kExplicitCap = 24;
inline constexpr i64 kAnalyticCap = 300;

// Number of primitive tuples in the uniqueness set for one diagram.
i128 count_by_enumeration(Diagram d, i64 n, ShearMode mode);

// Direct evaluation of the auxiliary sums. phi(g)/g is applied per term
// after multiplying by phi(g), which is exact because g^2 divides kl.
i128 intermediate_direct(Intermediate which, i64 n);

}  // namespace sqtile
