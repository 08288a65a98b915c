#include "sqtile/params.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace sqtile {

namespace {

i64 phi_of(i64 n) {
  i64 r = n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

// x * phi(g) / g, exact whenever g divides x.
i128 times_phi_prime(i128 x, i64 g) { return exact_div(mul_ck(x, phi_of(g)), g, "phi'(g) term"); }

i128 binom(i64 n, i64 k) {
  if (k < 0 || n < k) return 0;
  i128 r = 1;
  for (i64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

const char* diagram_name(Diagram d) {
  switch (d) {
    case Diagram::A: return "A";
    case Diagram::B: return "B";
    case Diagram::C: return "C";
    case Diagram::D: return "D";
  }
  return "?";
}

bool is_valid(const ParamsA& a) {
  if (a.p < 1 || a.j < 1 || a.k < 1 || a.l < 1 || a.m < 1 || a.alpha < 0) return false;
  if (!in_sigma_A(a.j, a.k, a.l, a.m)) return false;
  const bool eq = a.j == a.k && a.k == a.l && a.l == a.m;
  return a.alpha < shear_bound_A(a.j + a.k + a.l + a.m, eq);
}

bool is_valid(const ParamsB& b) {
  if (b.p < 1 || b.q < 1 || b.k < 1 || b.l < 1 || b.m < 1) return false;
  return 0 <= b.alpha && b.alpha < b.k + b.l + b.m && 0 <= b.beta && b.beta < b.m;
}

bool is_valid(const ParamsC& c) {
  if (c.p < 1 || c.q < 1 || c.k < 1 || c.l < 1 || c.m < 1) return false;
  if (c.alpha < 0 || c.alpha >= c.k + c.l || c.beta < 0 || c.beta >= c.l + c.m) return false;
  return c.k < c.m || (c.k == c.m && c.p < c.q) || (c.k == c.m && c.p == c.q && c.alpha <= c.beta);
}

bool is_valid(const ParamsD& d) {
  if (d.p < 1 || d.q < 1 || d.r < 1 || d.k < 1 || d.l < 1) return false;
  if (d.alpha < 0 || d.alpha >= d.k || d.beta < 0 || d.beta >= d.k + d.l || d.gamma < 0 ||
      d.gamma >= d.l)
    return false;
  // Equal widths with p = r fall to the shear tie-break; p <= r would count
  // those tuples twice.
  return d.k < d.l || (d.k == d.l && d.p < d.r) || (d.k == d.l && d.p == d.r && d.alpha <= d.gamma);
}

bool is_primitive_params(const ParamsA& a) {
  return a.p == 1 && gcd64(a.j + a.k, a.k + a.l, a.n()) == 1;
}

bool is_primitive_params(const ParamsB& b) {
  return gcd64(b.p, b.q) == 1 &&
         gcd64(b.k + b.l, b.m, b.p * b.beta - b.q * b.alpha + (b.p + b.q) * b.l) == 1;
}

bool is_primitive_params(const ParamsC& c) {
  return gcd64(c.p, c.q) == 1 && gcd64(c.k + c.l, c.l + c.m, c.p * c.beta - c.q * c.alpha) == 1;
}

bool is_primitive_params(const ParamsD& d) {
  return gcd64(d.p + d.q, d.r + d.q) == 1 &&
         gcd64(d.k, d.l, (d.p - d.r) * d.beta + (d.p + d.q) * d.gamma - (d.r + d.q) * d.alpha) == 1;
}

bool in_omega(i64 n, const OmegaA& w) {
  return 1 <= w.x && w.x < w.y && w.y < w.z && w.z < w.t && w.t <= n &&
         gcd64(w.z - w.x, w.t - w.y, n) == 1;
}

OmegaA omega_from_params(const ParamsA& a) {
  if (a.p != 1) throw std::invalid_argument("Omega is defined for height-one tuples");
  const i64 n = a.n();
  std::array<i64, 4> v{};
  const i64 offs[4] = {0, a.j, a.j + a.m, a.j + a.m + a.l};
  for (int i = 0; i < 4; ++i) v[i] = (a.alpha + offs[i]) % n + 1;
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2], v[3]};
}

ParamsA params_from_omega(i64 n, const OmegaA& w) {
  // Gaps read cyclically as (j, m, l, k) starting from the point that opens j.
  const std::array<i64, 4> I{w.y - w.x, w.z - w.y, w.t - w.z, n - w.t + w.x};
  const std::array<i64, 4> xs{w.x, w.y, w.z, w.t};
  const i64 lo = *std::min_element(I.begin(), I.end());
  std::vector<int> at;
  for (int i = 0; i < 4; ++i)
    if (I[i] == lo) at.push_back(i);
  const int big = int(std::max_element(I.begin(), I.end()) - I.begin());
  int js;
  if (at.size() == 1) {
    js = at[0];
  } else if (at.size() == 2) {
    const int a = at[0], b = at[1];
    if ((a + 1) % 4 == b)
      js = b;  // consecutive smallest (a, b): k = I[a], j = I[b]
    else if ((b + 1) % 4 == a)
      js = a;
    else
      js = (big + 3) % 4;
  } else if (at.size() == 3) {
    js = (big + 3) % 4;
  } else {
    throw std::invalid_argument("all four gaps equal: not in Omega");
  }
  ParamsA r{1, I[js], I[(js + 3) % 4], I[(js + 2) % 4], I[(js + 1) % 4], 0};
  r.alpha = ((xs[js] - 1) % n + n) % n;
  return r;
}

i128 count_omega_direct(i64 n) {
  i128 c = 0;
  for (i64 x = 1; x <= n; ++x)
    for (i64 y = x + 1; y <= n; ++y)
      for (i64 z = y + 1; z <= n; ++z)
        for (i64 t = z + 1; t <= n; ++t)
          if (gcd64(z - x, t - y, n) == 1) ++c;
  return c;
}

i128 count_omega(i64 n) {
  // For fixed x < y < z the admissible t are those with t - y coprime to
  // g = gcd(z - x, n); count them with a prefix table per divisor g.
  std::vector<std::vector<i64>> cop(n + 1);
  for (i64 g = 1; g <= n; ++g) {
    if (n % g != 0) continue;
    cop[g].assign(n + 1, 0);
    for (i64 u = 1; u <= n; ++u) cop[g][u] = cop[g][u - 1] + (gcd64(u, g) == 1 ? 1 : 0);
  }
  i128 c = 0;
  for (i64 x = 1; x <= n; ++x)
    for (i64 z = x + 2; z <= n; ++z) {
      const auto& tab = cop[gcd64(z - x, n)];
      for (i64 y = x + 1; y < z; ++y) c += tab[n - y] - tab[z - y];
    }
  return c;
}

i128 quadruple_count(i64 n, i64 d) {
  if (d < 1 || n % d != 0) throw std::invalid_argument("d must divide n");
  const i64 e = n / d;
  return binom(d, 2) * binom(e, 2) + 3 * binom(d, 2) * binom(e, 3) + i128(d) * d * binom(e, 4);
}

i128 quadruple_count_brute(i64 n, i64 d) {
  if (d < 1 || n % d != 0) throw std::invalid_argument("d must divide n");
  i128 c = 0;
  for (i64 x = 1; x <= n; ++x)
    for (i64 y = x + 1; y <= n; ++y)
      for (i64 z = y + 1; z <= n; ++z)
        for (i64 t = z + 1; t <= n; ++t)
          if ((z - x) % d == 0 && (t - y) % d == 0) ++c;
  return c;
}

i128 shear_count_formula(i64 p, i64 q, i64 k, i64 l) {
  if (gcd64(p, q) != 1) throw std::invalid_argument("shear lemma needs gcd(p, q) = 1");
  return times_phi_prime(i128(k) * l, gcd64(k, l));
}

i128 shear_count_brute(i64 p, i64 q, i64 k, i64 l, i64 beta1, i64 beta2) {
  if (gcd64(p, q) != 1) throw std::invalid_argument("shear lemma needs gcd(p, q) = 1");
  i128 c = 0;
  for (i64 a = beta1; a < beta1 + k; ++a)
    for (i64 g = beta2; g < beta2 + l; ++g)
      if (gcd64(k, l, p * g - q * a) == 1) ++c;
  return c;
}

namespace {

template <class Params, class Each>
i128 count_primitive(i64 n, Each each) {
  i128 c = 0;
  each(n, [&](const Params& t) {
    if (is_primitive_params(t)) ++c;
  });
  return c;
}

i128 analytic_A(i64 n) {
  // Only height one can be primitive; each admissible length tuple carries
  // its full shear range.
  i128 c = 0;
  for (i64 j = 1; j < n; ++j)
    for (i64 k = 1; j + k < n; ++k) {
      const i64 g = gcd64(j + k, n);
      for (i64 l = 1; j + k + l < n; ++l) {
        const i64 m = n - j - k - l;
        if (!in_sigma_A(j, k, l, m) || gcd64(g, k + l) != 1) continue;
        c += shear_bound_A(n, j == k && k == l && l == m);
      }
    }
  return c;
}

i128 analytic_B(i64 n) {
  // Shear pairs live in a (s+m) x m box with s = k+l and the count does not
  // see l, so the s-1 splittings of s contribute equally.
  i128 c = 0;
  for (i64 p = 1; p <= n; ++p)
    for (i64 q = 1; p + q <= n; ++q) {
      if (gcd64(p, q) != 1) continue;
      for (i64 m = 1; (p + q) * m < n; ++m) {
        const i64 rest = n - (p + q) * m;
        if (rest % p != 0) continue;
        const i64 s = rest / p;
        if (s < 2) continue;
        c += (s - 1) * times_phi_prime(i128(s + m) * m, gcd64(s, m));
      }
    }
  return c;
}

i128 analytic_C(i64 n) {
  i128 c = 0;
  for (i64 p = 1; p <= n; ++p)
    for (i64 q = 1; p + q <= n; ++q) {
      if (gcd64(p, q) != 1) continue;
      for (i64 k = 1; p * k < n; ++k)
        for (i64 l = 1; p * (k + l) + q * l < n; ++l) {
          const i64 rest = n - p * (k + l) - q * l;
          if (rest % q != 0) continue;
          const i64 m = rest / q;
          if (k < m || (k == m && p < q)) {
            c += times_phi_prime(i128(k + l) * (l + m), gcd64(k + l, l + m));
          } else if (k == m && p == q) {
            // alpha <= beta in an s x s box, s = k+l: s*phi(s)/2 pairs.
            const i64 s = k + l;
            c += exact_div(i128(s) * phi_of(s), 2, "C tie-break count");
          }
        }
    }
  return c;
}

i128 analytic_D(i64 n) {
  // The p = r tie-break set is empty here: gcd(p+q, r+q) = p+q > 1.
  i128 c = 0;
  for (i64 p = 1; p <= n; ++p)
    for (i64 q = 1; p + q <= n; ++q)
      for (i64 r = 1; p + q + r <= n; ++r) {
        if (gcd64(p + q, r + q) != 1) continue;
        for (i64 k = 1; (p + q) * k < n; ++k) {
          const i64 rest = n - (p + q) * k;
          if (rest % (r + q) != 0) continue;
          const i64 l = rest / (r + q);
          if (k < l || (k == l && p < r))
            c += times_phi_prime(i128(k + l) * k * l, gcd64(k, l));
        }
      }
  return c;
}

}  // namespace

i128 count_by_enumeration(Diagram d, i64 n, ShearMode mode) {
  if (n < 4) return 0;
  if (mode == ShearMode::Explicit) {
    if (n > kExplicitCap) throw std::out_of_range("explicit enumeration is capped at n = 24");
    switch (d) {
      case Diagram::A:
        return count_primitive<ParamsA>(n, [](i64 m, auto&& f) { for_each_params_A(m, f); });
      case Diagram::B:
        return count_primitive<ParamsB>(n, [](i64 m, auto&& f) { for_each_params_B(m, f); });
      case Diagram::C:
        return count_primitive<ParamsC>(n, [](i64 m, auto&& f) { for_each_params_C(m, f); });
      case Diagram::D:
        return count_primitive<ParamsD>(n, [](i64 m, auto&& f) { for_each_params_D(m, f); });
    }
  }
  if (n > kAnalyticCap) throw std::out_of_range("analytic enumeration is capped at n = 300");
  switch (d) {
    case Diagram::A: return analytic_A(n);
    case Diagram::B: return analytic_B(n);
    case Diagram::C: return analytic_C(n);
    case Diagram::D: return analytic_D(n);
  }
  throw std::logic_error("unknown diagram");
}

i128 intermediate_direct(Intermediate which, i64 n) {
  // All five sums run over p*k + q*l = n with positive entries.
  i128 s = 0;
  for (i64 p = 1; p < n; ++p)
    for (i64 k = 1; p * k < n; ++k) {
      const i64 rest = n - p * k;
      for (i64 q = 1; q <= rest; ++q) {
        if (rest % q != 0) continue;
        const i64 l = rest / q;
        const i64 g = gcd64(k, l);
        switch (which) {
          case Intermediate::X:
            if (p > q && gcd64(p, q) == 1) s += times_phi_prime(i128(k + l) * k * l, g);
            break;
          case Intermediate::Y:
            if (k > l && gcd64(p, q) == 1) s += times_phi_prime(i128(k) * l, g);
            break;
          case Intermediate::U:
            if (k > l) s += times_phi_prime(i128(k) * l * l, g);
            break;
          case Intermediate::V:
            s += times_phi_prime(i128(k) * l, g);
            break;
          case Intermediate::W:
            if (p > q && gcd64(p, q) == 1) s += times_phi_prime(i128(k + l) * k * l * q, g);
            break;
        }
      }
    }
  return s;
}

}  // namespace sqtile
