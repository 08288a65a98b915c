#pragma once

#include <cstddef>

#include "sqtile/int128.hpp"

// Inner loop of the additive convolution out[m] = sum_{j<m} f[j] g[m-j].
// All arrays are 1-indexed with n_max+1 slots. The reference kernel checks
// every operation in 128 bits. The narrow kernels apply only when every
// input lies in [0, 2^32) and the largest possible sum fits in 64 bits;
// they report false without touching `out` otherwise.
namespace sqtile::kernels {

enum class Isa { Scalar, Avx2 };

void additive_reference(const i128* f, const i128* g, i128* out, std::size_t n_max);
bool additive_u64_scalar(const i128* f, const i128* g, i128* out, std::size_t n_max);
bool additive_u64_avx2(const i128* f, const i128* g, i128* out, std::size_t n_max);

bool narrow_fits(const i128* f, const i128* g, std::size_t n_max);

Isa detected_isa();
const char* isa_name(Isa isa);

// Picks the widest kernel the data and the CPU allow. `cap` limits the ISA
// (tests use it to force the scalar path).
void additive(const i128* f, const i128* g, i128* out, std::size_t n_max,
              Isa cap = Isa::Avx2);

}  // namespace sqtile::kernels
