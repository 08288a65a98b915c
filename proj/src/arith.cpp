#include "sqtile/arith.hpp"

#include <stdexcept>

#include "sqtile/kernels.hpp"

namespace sqtile {

SpfSieve::SpfSieve(std::uint32_t n_max) : n_max_(n_max), spf_(std::size_t(n_max) + 1, 0) {
  if (n_max < 1) throw std::invalid_argument("sieve size must be positive");
  if (n_max >= 1) spf_[1] = 1;
  for (std::uint32_t i = 2; i <= n_max; ++i) {
    if (spf_[i] != 0) continue;
    for (std::uint64_t j = i; j <= n_max; j += i)
      if (spf_[j] == 0) spf_[j] = i;
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> SpfSieve::factorize(std::uint32_t m) const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  while (m > 1) {
    std::uint32_t p = spf_[m], e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

namespace {

i128 ipow(i128 b, unsigned k) {
  i128 r = 1;
  for (unsigned i = 0; i < k; ++i) r = mul_ck(r, b);
  return r;
}

// Value of a multiplicative function at p^e.
i128 prime_power_value(Fn which, unsigned k, i128 p, unsigned e) {
  switch (which) {
    case Fn::Mobius:
      return e == 1 ? -1 : 0;
    case Fn::Phi:
      return mul_ck(ipow(p, e - 1), p - 1);
    case Fn::JordanK: {
      i128 pk = ipow(p, k);
      return mul_ck(ipow(pk, e - 1), pk - 1);
    }
    case Fn::SigmaK: {
      i128 pk = ipow(p, k), term = 1, s = 1;
      for (unsigned i = 0; i < e; ++i) {
        term = mul_ck(term, pk);
        s = add_ck(s, term);
      }
      return s;
    }
    default:
      throw std::logic_error("not a prime-power driven function");
  }
}

void check_same(const ArithTable& f, const ArithTable& g) {
  if (f.n_max() != g.n_max()) throw std::invalid_argument("arith table length mismatch");
}

}  // namespace

ArithTable tabulate(Fn which, unsigned k, std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be positive");
  return tabulate(which, k, SpfSieve(static_cast<std::uint32_t>(n_max)));
}

ArithTable tabulate(Fn which, unsigned k, const SpfSieve& sieve) {
  if (k > 4) throw std::invalid_argument("order k above 4 is not supported");
  const std::size_t n = sieve.n_max();
  ArithTable t(n);
  switch (which) {
    case Fn::One:
      for (std::size_t m = 1; m <= n; ++m) t[m] = 1;
      return t;
    case Fn::Eps:
      t[1] = 1;
      return t;
    case Fn::IdK:
      for (std::size_t m = 1; m <= n; ++m) t[m] = ipow(i128(m), k);
      return t;
    default:
      break;
  }
  t[1] = 1;
  for (std::uint32_t m = 2; m <= n; ++m) {
    // Peel off the full power of the smallest prime and reuse the cofactor.
    std::uint32_t p = sieve.spf(m), rest = m;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    t[m] = mul_ck(prime_power_value(which, k, p, e), t[rest]);
  }
  return t;
}

i128 jordan(unsigned k, u64 n) {
  if (n == 0) throw std::invalid_argument("jordan(0)");
  i128 r = 1;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    r = mul_ck(r, prime_power_value(Fn::JordanK, k, p, e));
  }
  if (n > 1) r = mul_ck(r, prime_power_value(Fn::JordanK, k, n, 1));
  return r;
}

int mobius(u64 n) {
  int r = 1;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

ArithTable dirichlet_convolve(const ArithTable& f, const ArithTable& g) {
  check_same(f, g);
  const std::size_t n = f.n_max();
  ArithTable out(n);
  for (std::size_t d = 1; d <= n; ++d) {
    if (f[d] == 0) continue;
    for (std::size_t e = 1; d * e <= n; ++e)
      out[d * e] = add_ck(out[d * e], mul_ck(f[d], g[e]));
  }
  return out;
}

ArithTable additive_convolve(const ArithTable& f, const ArithTable& g) {
  check_same(f, g);
  ArithTable out(f.n_max());
  kernels::additive(f.data(), g.data(), out.data(), f.n_max());
  return out;
}

ArithTable pointwise_mul(const ArithTable& f, const ArithTable& g) {
  check_same(f, g);
  ArithTable out(f.n_max());
  for (std::size_t m = 1; m <= f.n_max(); ++m) out[m] = mul_ck(f[m], g[m]);
  return out;
}

}  // namespace sqtile
