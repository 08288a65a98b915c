#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sqtile/int128.hpp"

namespace sqtile {

// Exact values f(1..n_max) of an integer arithmetic function. Slot 0 of the
// backing vector is unused so that t[m] reads like the math.
class ArithTable {
 public:
  ArithTable() = default;
  explicit ArithTable(std::size_t n_max) : v_(n_max + 1, 0) {}

  std::size_t n_max() const { return v_.empty() ? 0 : v_.size() - 1; }
  i128 operator[](std::size_t m) const { return v_[m]; }
  i128& operator[](std::size_t m) { return v_[m]; }
  const i128* data() const { return v_.data(); }
  i128* data() { return v_.data(); }

  bool operator==(const ArithTable& o) const { return v_ == o.v_; }

 private:
  std::vector<i128> v_;
};

class SpfSieve {
 public:
  explicit SpfSieve(std::uint32_t n_max);

  std::uint32_t n_max() const { return n_max_; }
  std::uint32_t spf(std::uint32_t m) const { return spf_[m]; }
  bool is_prime(std::uint32_t m) const { return m >= 2 && spf_[m] == m; }
  // (prime, exponent) pairs in increasing prime order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t m) const;

 private:
  std::uint32_t n_max_;
  std::vector<std::uint32_t> spf_;
};

enum class Fn { One, Eps, IdK, Mobius, Phi, JordanK, SigmaK };

// Table of the named function; k is the order for IdK, JordanK and SigmaK
// and is ignored otherwise. Throws OverflowError if values do not fit.
ArithTable tabulate(Fn which, unsigned k, std::size_t n_max);
ArithTable tabulate(Fn which, unsigned k, const SpfSieve& sieve);

// Single values by trial division, for n beyond any table.
i128 jordan(unsigned k, u64 n);
int mobius(u64 n);

ArithTable dirichlet_convolve(const ArithTable& f, const ArithTable& g);
ArithTable additive_convolve(const ArithTable& f, const ArithTable& g);
ArithTable pointwise_mul(const ArithTable& f, const ArithTable& g);

// Default ceiling on n_max for the quadratic additive convolution.
inline constexpr std::size_t kAdditiveCap = 10000;

}  // namespace sqtile
