#include "fsq/kernels.hpp"

#include <stdexcept>
#include <string>

#if defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace fsq::kernels {

void relax_scalar(uint8_t* k, size_t end, size_t sq) {
  for (size_t i = sq; i < end; ++i) {
    uint8_t v = k[i - sq];
    uint8_t cand = v == 255 ? 255 : static_cast<uint8_t>(v + 1);
    if (cand < k[i]) k[i] = cand;
  }
}

#if defined(__ARM_NEON)
void relax_neon(uint8_t* k, size_t end, size_t sq) {
  size_t i = sq;
  if (sq >= 16) {
    const uint8x16_t one = vdupq_n_u8(1);
    for (; i + 16 <= end; i += 16) {
      uint8x16_t prev = vld1q_u8(k + i - sq);
      uint8x16_t cand = vqaddq_u8(prev, one);
      uint8x16_t cur = vld1q_u8(k + i);
      vst1q_u8(k + i, vminq_u8(cur, cand));
    }
  }
  for (; i < end; ++i) {
    uint8_t v = k[i - sq];
    uint8_t cand = v == 255 ? 255 : static_cast<uint8_t>(v + 1);
    if (cand < k[i]) k[i] = cand;
  }
}
#endif

namespace {

struct Choice {
  RelaxFn fn;
  std::string_view name;
};

Choice pick_auto() {
#if defined(__x86_64__)
  if (__builtin_cpu_supports("avx2")) return {relax_avx2, "avx2"};
#endif
#if defined(__ARM_NEON)
  return {relax_neon, "neon"};
#endif
  return {relax_scalar, "scalar"};
}

Choice& current() {
  static Choice c = pick_auto();
  return c;
}

}  // namespace

RelaxFn active_relax() { return current().fn; }

std::string_view active_relax_name() { return current().name; }

void force_relax(std::string_view name) {
  if (name == "auto") {
    current() = pick_auto();
    return;
  }
  if (name == "scalar") {
    current() = {relax_scalar, "scalar"};
    return;
  }
#if defined(__x86_64__)
  if (name == "avx2") {
    if (!__builtin_cpu_supports("avx2"))
      throw std::invalid_argument("avx2 kernel not supported on this CPU");
    current() = {relax_avx2, "avx2"};
    return;
  }
#endif
#if defined(__ARM_NEON)
  if (name == "neon") {
    current() = {relax_neon, "neon"};
    return;
  }
#endif
  throw std::invalid_argument("unknown or unavailable kernel: " + std::string(name));
}

}  // namespace fsq::kernels
