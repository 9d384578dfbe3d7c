#include "syzygy/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace syz::kernels {

namespace detail {

void axpy_scalar(Residue* dst, const Residue* src, Residue factor, std::size_t n, const Reducer& r) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<Residue>((dst[i] + f * src[i]) % r.p);
}

void scale_scalar(Residue* row, Residue factor, std::size_t n, const Reducer& r) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<Residue>(f * row[i] % r.p);
}

}  // namespace detail

namespace {

constexpr RowOps kScalar{Backend::Scalar, &detail::axpy_scalar, &detail::scale_scalar};
#if defined(__x86_64__) || defined(__i386__)
constexpr RowOps kAvx2{Backend::Avx2, &detail::axpy_avx2, &detail::scale_avx2};
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
constexpr RowOps kNeon{Backend::Neon, &detail::axpy_neon, &detail::scale_neon};
#endif

constexpr std::uint32_t kLaneModulusLimit = 1u << 16;

// -1 means automatic selection.
std::atomic<int> g_forced{-1};

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::optional<Backend> env_backend() {
  const char* env = std::getenv("SYZYGY_KERNEL");
  if (env == nullptr) return std::nullopt;
  std::string v(env);
  if (v == "scalar") return Backend::Scalar;
  if (v == "avx2") return Backend::Avx2;
  if (v == "neon") return Backend::Neon;
  return std::nullopt;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

const RowOps& scalar_ops() { return kScalar; }

bool backend_usable(Backend b, std::uint32_t modulus) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return modulus < kLaneModulusLimit && cpu_has_avx2();
#else
      return false;
#endif
    case Backend::Neon:
#if defined(__ARM_NEON) || defined(__aarch64__)
      return modulus < kLaneModulusLimit;
#else
      return false;
#endif
  }
  return false;
}

const RowOps& ops_for(Backend b, std::uint32_t modulus) {
  if (!backend_usable(b, modulus))
    throw std::invalid_argument("kernel backend " + std::string(backend_name(b)) + " unusable for p=" +
                                std::to_string(modulus));
  switch (b) {
#if defined(__x86_64__) || defined(__i386__)
    case Backend::Avx2: return kAvx2;
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
    case Backend::Neon: return kNeon;
#endif
    default: return kScalar;
  }
}

const RowOps& select(std::uint32_t modulus) {
  if (int forced = g_forced.load(std::memory_order_relaxed); forced >= 0) {
    auto b = static_cast<Backend>(forced);
    return backend_usable(b, modulus) ? ops_for(b, modulus) : kScalar;
  }
  if (auto b = env_backend(); b && backend_usable(*b, modulus)) return ops_for(*b, modulus);
  for (Backend b : {Backend::Avx2, Backend::Neon})
    if (backend_usable(b, modulus)) return ops_for(b, modulus);
  return kScalar;
}

void force_backend(std::optional<Backend> b) {
  g_forced.store(b ? static_cast<int>(*b) : -1, std::memory_order_relaxed);
}

}  // namespace syz::kernels
