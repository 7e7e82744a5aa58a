#include <immintrin.h>

#include "fsq/kernels.hpp"

namespace fsq::kernels {

void relax_avx2(uint8_t* k, size_t end, size_t sq) {
  size_t i = sq;
  if (sq >= 32) {
    // Reads trail the writes by exactly sq bytes, so 32-lane vectors are
    // safe once sq >= 32; updates from earlier vectors are visible to later
    // ones, preserving the unlimited-copies semantics of the scalar pass.
    const __m256i one = _mm256_set1_epi8(1);
    for (; i + 32 <= end; i += 32) {
      __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(k + i - sq));
      __m256i cand = _mm256_adds_epu8(prev, one);
      __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(k + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(k + i),
                          _mm256_min_epu8(cur, cand));
    }
  }
  for (; i < end; ++i) {
    uint8_t v = k[i - sq];
    uint8_t cand = v == 255 ? 255 : static_cast<uint8_t>(v + 1);
    if (cand < k[i]) k[i] = cand;
  }
}

}  // namespace fsq::kernels
