#include "syzygy/kernels.hpp"

#if defined(__ARM_NEON) || defined(__aarch64__)
#include <arm_neon.h>

namespace syz::kernels::detail {

namespace {

inline uint32x4_t barrett_reduce(uint32x4_t x, uint32x2_t m, uint32x4_t vp) {
  uint64x2_t lo = vmull_u32(vget_low_u32(x), m);
  uint64x2_t hi = vmull_u32(vget_high_u32(x), m);
  uint32x4_t q = vcombine_u32(vshrn_n_u64(lo, 32), vshrn_n_u64(hi, 32));
  uint32x4_t r = vmlsq_u32(x, q, vp);
  return vminq_u32(r, vsubq_u32(r, vp));
}

}  // namespace

void axpy_neon(Residue* dst, const Residue* src, Residue factor, std::size_t n, const Reducer& r) {
  const uint32x2_t m = vdup_n_u32(r.barrett);
  const uint32x4_t vp = vdupq_n_u32(r.p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t x = vmlaq_n_u32(vld1q_u32(dst + i), vld1q_u32(src + i), factor);
    vst1q_u32(dst + i, barrett_reduce(x, m, vp));
  }
  axpy_scalar(dst + i, src + i, factor, n - i, r);
}

void scale_neon(Residue* row, Residue factor, std::size_t n, const Reducer& r) {
  const uint32x2_t m = vdup_n_u32(r.barrett);
  const uint32x4_t vp = vdupq_n_u32(r.p);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t x = vmulq_n_u32(vld1q_u32(row + i), factor);
    vst1q_u32(row + i, barrett_reduce(x, m, vp));
  }
  scale_scalar(row + i, factor, n - i, r);
}

}  // namespace syz::kernels::detail

#endif
