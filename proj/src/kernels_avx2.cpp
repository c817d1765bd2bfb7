// AVX2 variants of the bitset kernels. This translation unit is compiled
// with -mavx2; callers reach it only through the dispatch table, which
// checks CPU support first.

#include "tempex/kernels.hpp"

#if defined(TEMPEX_X86_64)

#include <immintrin.h>

#include <bit>

namespace tempex::kernels {
namespace {

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(d, s));
  }
  for (; i < n; ++i) dst[i] &= src[i];
}

void andnot_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    // andnot computes (~s) & d
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(s, d));
  }
  for (; i < n; ++i) dst[i] &= ~src[i];
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t n) {
  // 4-way unrolled scalar popcnt; load bandwidth dominates here.
  std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c0 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i]));
    c1 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i + 1]));
    c2 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i + 2]));
    c3 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i + 3]));
  }
  std::uint64_t c = c0 + c1 + c2 + c3;
  for (; i < n; ++i) c += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i]));
  return c;
}

std::uint64_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c0 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
    c1 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i + 1] & b[i + 1]));
    c2 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i + 2] & b[i + 2]));
    c3 += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i + 3] & b[i + 3]));
  }
  std::uint64_t c = c0 + c1 + c2 + c3;
  for (; i < n; ++i) c += static_cast<std::uint64_t>(_mm_popcnt_u64(a[i] & b[i]));
  return c;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(x, y)) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

bool equals(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i diff = _mm256_xor_si256(x, y);
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // testc(y, x) checks (~y & x) == 0
    if (!_mm256_testc_si256(y, x)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{"avx2",   or_into, and_into,   andnot_into, popcount,
                       popcount_and, intersects, equals,  is_subset};
  return ops;
}

}  // namespace tempex::kernels

#endif  // TEMPEX_X86_64
