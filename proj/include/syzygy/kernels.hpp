#pragma once
// Row-update kernels for elimination over F_p.
//
// Every backend computes exactly the same residues; the vector backends are
// only selected for moduli where their lane arithmetic cannot overflow
// (p < 2^16, so dst + f*src < 2^32).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "syzygy/field.hpp"

namespace syz::kernels {

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);

struct Reducer {
  std::uint32_t p;
  std::uint32_t barrett;  // floor(2^32 / p), used by the vector paths

  explicit Reducer(std::uint32_t modulus)
      : p(modulus), barrett(static_cast<std::uint32_t>((std::uint64_t{1} << 32) / modulus)) {}
};

/// dst[i] <- dst[i] + factor * src[i] (mod p); all inputs already reduced.
using AxpyFn = void (*)(Residue* dst, const Residue* src, Residue factor, std::size_t n, const Reducer& r);
/// row[i] <- factor * row[i] (mod p).
using ScaleFn = void (*)(Residue* row, Residue factor, std::size_t n, const Reducer& r);

struct RowOps {
  Backend backend;
  AxpyFn axpy;
  ScaleFn scale;
};

const RowOps& scalar_ops();

/// True when the backend was compiled in, the CPU supports it and the modulus fits its lanes.
bool backend_usable(Backend b, std::uint32_t modulus);

/// Row ops for a backend; throws std::invalid_argument if it is not usable.
const RowOps& ops_for(Backend b, std::uint32_t modulus);

/// Best usable backend for the modulus, unless overridden by force_backend()
/// or the SYZYGY_KERNEL environment variable ("scalar", "avx2", "neon").
const RowOps& select(std::uint32_t modulus);

/// Process-wide override; std::nullopt restores automatic selection.
void force_backend(std::optional<Backend> b);

namespace detail {
void axpy_scalar(Residue* dst, const Residue* src, Residue factor, std::size_t n, const Reducer& r);
void scale_scalar(Residue* row, Residue factor, std::size_t n, const Reducer& r);
#if defined(__x86_64__) || defined(__i386__)
void axpy_avx2(Residue* dst, const Residue* src, Residue factor, std::size_t n, const Reducer& r);
void scale_avx2(Residue* row, Residue factor, std::size_t n, const Reducer& r);
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
void axpy_neon(Residue* dst, const Residue* src, Residue factor, std::size_t n, const Reducer& r);
void scale_neon(Residue* row, Residue factor, std::size_t n, const Reducer& r);
#endif
}  // namespace detail

}  // namespace syz::kernels
