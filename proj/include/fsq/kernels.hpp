#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Min-plus relaxation kernel used by the sweep DP. One pass per allowed
// square sq applies, for i in [sq, end):
//
//   k[i] = min(k[i], sat_add(k[i - sq], 1))
//
// with 8-bit saturating arithmetic (255 is the "no representation yet"
// sentinel). The pass runs in ascending order so a square can be used any
// number of times within a single pass.
//
// A scalar reference kernel always exists; AVX2 (x86-64) and NEON (aarch64)
// variants are selected at runtime and must be byte-for-byte equivalent to
// the scalar kernel. Vector variants only vectorize when sq is at least the
// vector width, since the in-pass dependence distance is exactly sq.

namespace fsq::kernels {

using RelaxFn = void (*)(uint8_t* k, size_t end, size_t sq);

void relax_scalar(uint8_t* k, size_t end, size_t sq);

#if defined(__x86_64__)
void relax_avx2(uint8_t* k, size_t end, size_t sq);
#endif
#if defined(__ARM_NEON)
void relax_neon(uint8_t* k, size_t end, size_t sq);
#endif

// The kernel picked for this machine ("scalar", "avx2" or "neon").
RelaxFn active_relax();
std::string_view active_relax_name();

// Overrides the automatic choice; name is "auto", "scalar", "avx2" or
// "neon". Throws std::invalid_argument for unknown or unavailable names.
void force_relax(std::string_view name);

}  // namespace fsq::kernels
