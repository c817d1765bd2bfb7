#include "tempex/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace tempex::kernels {

#if defined(TEMPEX_X86_64)
const Ops& avx2_ops();
#endif
#if defined(TEMPEX_AARCH64)
const Ops& neon_ops();
#endif

const std::vector<const Ops*>& available_ops() {
  static const std::vector<const Ops*> table = [] {
    std::vector<const Ops*> t{&scalar_ops()};
#if defined(TEMPEX_X86_64)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt"))
      t.push_back(&avx2_ops());
#endif
#if defined(TEMPEX_AARCH64)
    t.push_back(&neon_ops());
#endif
    return t;
  }();
  return table;
}

const Ops& active_ops() {
  static const Ops* selected = [] {
    const std::vector<const Ops*>& table = available_ops();
    if (const char* want = std::getenv("TEMPEX_KERNEL")) {
      for (const Ops* ops : table)
        if (std::strcmp(ops->name, want) == 0) return ops;
      // unknown or unavailable name: fall back to the scalar reference
      return table.front();
    }
    return table.back();
  }();
  return *selected;
}

}  // namespace tempex::kernels
