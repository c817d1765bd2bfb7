// NEON variants of the bitset kernels (aarch64 only). NEON is a baseline
// aarch64 feature, so no runtime CPU check is needed beyond the build guard.

#include "tempex/kernels.hpp"

#if defined(TEMPEX_AARCH64)

#include <arm_neon.h>

#include <bit>

namespace tempex::kernels {
namespace {

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t d = vld1q_u64(dst + i);
    uint64x2_t s = vld1q_u64(src + i);
    vst1q_u64(dst + i, vorrq_u64(d, s));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t d = vld1q_u64(dst + i);
    uint64x2_t s = vld1q_u64(src + i);
    vst1q_u64(dst + i, vandq_u64(d, s));
  }
  for (; i < n; ++i) dst[i] &= src[i];
}

void andnot_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t d = vld1q_u64(dst + i);
    uint64x2_t s = vld1q_u64(src + i);
    // bic computes d & ~s
    vst1q_u64(dst + i, vbicq_u64(d, s));
  }
  for (; i < n; ++i) dst[i] &= ~src[i];
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t n) {
  std::uint64_t c = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint8x16_t bits = vreinterpretq_u8_u64(vld1q_u64(a + i));
    c += vaddvq_u8(vcntq_u8(bits));
  }
  for (; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

std::uint64_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t c = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t x = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    c += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(x)));
  }
  for (; i < n; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t x = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vgetq_lane_u64(x, 0) | vgetq_lane_u64(x, 1)) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool equals(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t x = veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vgetq_lane_u64(x, 0) | vgetq_lane_u64(x, 1)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t x = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vgetq_lane_u64(x, 0) | vgetq_lane_u64(x, 1)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

const Ops& neon_ops() {
  static const Ops ops{"neon",   or_into, and_into,   andnot_into, popcount,
                       popcount_and, intersects, equals,  is_subset};
  return ops;
}

}  // namespace tempex::kernels

#endif  // TEMPEX_AARCH64
