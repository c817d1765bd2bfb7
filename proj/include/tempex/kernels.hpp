#pragma once
// Word-level bitset kernels. A scalar reference implementation is always
// available; AVX2 (x86-64) and NEON (aarch64) variants are registered when
// the build targets that architecture and the CPU supports them. All
// variants are bit-identical and equivalence-tested against the scalar
// reference.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tempex::kernels {

struct Ops {
  const char* name;
  // dst |= src
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
  // dst &= src
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
  // dst &= ~src
  void (*andnot_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t nwords);
  // popcount(a & b) without materializing the intersection
  std::uint64_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
  bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
  bool (*equals)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
  // a subset of b, i.e. (a & ~b) == 0
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
};

const Ops& scalar_ops();

// All variants usable on this machine; scalar_ops() is always first.
const std::vector<const Ops*>& available_ops();

// The variant used by VertexSet: the last usable entry of available_ops(),
// unless TEMPEX_KERNEL=scalar|avx2|neon forces a specific one.
const Ops& active_ops();

}  // namespace tempex::kernels
