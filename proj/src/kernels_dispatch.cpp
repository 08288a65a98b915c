#include "sqtile/kernels.hpp"

namespace sqtile::kernels {

Isa detected_isa() {
#if defined(SQTILE_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
  static const Isa isa = __builtin_cpu_supports("avx2") ? Isa::Avx2 : Isa::Scalar;
  return isa;
#else
  return Isa::Scalar;
#endif
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void additive(const i128* f, const i128* g, i128* out, std::size_t n_max, Isa cap) {
  if (cap == Isa::Avx2 && detected_isa() == Isa::Avx2 && additive_u64_avx2(f, g, out, n_max))
    return;
  if (additive_u64_scalar(f, g, out, n_max)) return;
  additive_reference(f, g, out, n_max);
}

}  // namespace sqtile::kernels
