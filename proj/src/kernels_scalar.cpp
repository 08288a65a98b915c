#include "sqtile/kernels.hpp"

#include <vector>

namespace sqtile::kernels {

void additive_reference(const i128* f, const i128* g, i128* out, std::size_t n_max) {
  if (n_max >= 1) out[1] = 0;
  for (std::size_t m = 2; m <= n_max; ++m) {
    i128 s = 0;
    for (std::size_t j = 1; j < m; ++j) s = add_ck(s, mul_ck(f[j], g[m - j]));
    out[m] = s;
  }
}

bool narrow_fits(const i128* f, const i128* g, std::size_t n_max) {
  unsigned __int128 fmax = 0, gmax = 0;
  for (std::size_t m = 1; m <= n_max; ++m) {
    if (f[m] < 0 || f[m] > i128(UINT32_MAX)) return false;
    if (g[m] < 0 || g[m] > i128(UINT32_MAX)) return false;
    if ((unsigned __int128)f[m] > fmax) fmax = (unsigned __int128)f[m];
    if ((unsigned __int128)g[m] > gmax) gmax = (unsigned __int128)g[m];
  }
  // Each sum has fewer than n_max terms, each at most fmax*gmax < 2^64.
  return fmax * gmax * (unsigned __int128)n_max <= (unsigned __int128)UINT64_MAX;
}

bool additive_u64_scalar(const i128* f, const i128* g, i128* out, std::size_t n_max) {
  if (!narrow_fits(f, g, n_max)) return false;
  std::vector<u64> f64(n_max + 1), g64(n_max + 1);
  for (std::size_t m = 1; m <= n_max; ++m) {
    f64[m] = (u64)f[m];
    g64[m] = (u64)g[m];
  }
  if (n_max >= 1) out[1] = 0;
  for (std::size_t m = 2; m <= n_max; ++m) {
    u64 s = 0;
    for (std::size_t j = 1; j < m; ++j) s += f64[j] * g64[m - j];
    out[m] = s;
  }
  return true;
}

}  // namespace sqtile::kernels
