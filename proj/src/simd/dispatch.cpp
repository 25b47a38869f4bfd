#include "sgspec/simd/kernels.hpp"

#include <atomic>
#include <string>

#include "sgspec/error.hpp"

namespace sgspec::simd {

namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::rotate, &scalar::dot};
constexpr KernelTable kAvx2{Isa::avx2, &avx2::rotate, &avx2::dot};
constexpr KernelTable kNeon{Isa::neon, &neon::rotate, &neon::dot};

// -1 means "no override".
std::atomic<int> g_override{-1};

Isa best_supported() {
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "neon") return Isa::neon;
  throw InvalidParams("unknown kernel ISA '" + std::string(name) + "'");
}

bool isa_compiled(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return true;
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

bool isa_supported(Isa isa) {
  if (!isa_compiled(isa)) return false;
#if defined(__x86_64__) || defined(__i386__)
  if (isa == Isa::avx2) return __builtin_cpu_supports("avx2");
#endif
  return true;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
    if (isa_supported(isa)) out.push_back(isa);
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  switch (isa) {
    case Isa::avx2:
      return kAvx2;
    case Isa::neon:
      return kNeon;
    case Isa::scalar:
      break;
  }
  return kScalar;
}

const KernelTable& active_kernels() {
  const int forced = g_override.load(std::memory_order_relaxed);
  if (forced >= 0) return kernels_for(static_cast<Isa>(forced));
  static const Isa best = best_supported();
  return kernels_for(best);
}

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw InvalidParams("kernel ISA '" + std::string(isa_name(isa)) + "' is not supported on this CPU");
  }
  g_override.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_active_isa() { g_override.store(-1, std::memory_order_relaxed); }

}  // namespace sgspec::simd
