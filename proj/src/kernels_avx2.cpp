#include "sqtile/kernels.hpp"

#include <vector>

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace sqtile::kernels {

#if defined(__AVX2__)

// g is stored reversed (gr[n_max - x] = g[x]) so both operands of the inner
// product stream forward. Four u32 lanes widen to u64 and _mm256_mul_epu32
// forms the exact 64-bit products.
bool additive_u64_avx2(const i128* f, const i128* g, i128* out, std::size_t n_max) {
  if (!narrow_fits(f, g, n_max)) return false;
  std::vector<std::uint32_t> f32(n_max + 4, 0), gr(n_max + 4, 0);
  for (std::size_t m = 1; m <= n_max; ++m) {
    f32[m] = (std::uint32_t)f[m];
    gr[n_max - m] = (std::uint32_t)g[m];
  }
  if (n_max >= 1) out[1] = 0;
  for (std::size_t m = 2; m <= n_max; ++m) {
    // j runs over 1..m-1 and g[m-j] = gr[n_max - m + j].
    const std::uint32_t* fp = f32.data() + 1;
    const std::uint32_t* gp = gr.data() + (n_max - m + 1);
    const std::size_t len = m - 1;
    __m256i acc = _mm256_setzero_si256();
    std::size_t j = 0;
    for (; j + 4 <= len; j += 4) {
      __m256i a = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(fp + j)));
      __m256i b = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(gp + j)));
      acc = _mm256_add_epi64(acc, _mm256_mul_epu32(a, b));
    }
    alignas(32) u64 lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    u64 s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; j < len; ++j) s += u64(fp[j]) * u64(gp[j]);
    out[m] = s;
  }
  return true;
}

#else

bool additive_u64_avx2(const i128*, const i128*, i128*, std::size_t) { return false; }

#endif

}  // namespace sqtile::kernels
