// Compiled with -mavx2; only reached after a runtime CPU check.
#include "syzygy/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace syz::kernels::detail {

namespace {

// x < 2^32 with p < 2^16: q = hi32(x * floor(2^32/p)) undershoots by at most 1.
inline __m256i barrett_reduce(__m256i x, __m256i vm, __m256i vp) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, vm), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), vm);
  __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

}  // namespace

void axpy_avx2(Residue* dst, const Residue* src, Residue factor, std::size_t n, const Reducer& r) {
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(r.barrett));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(r.p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vf));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_reduce(x, vm, vp));
  }
  axpy_scalar(dst + i, src + i, factor, n - i, r);
}

void scale_avx2(Residue* row, Residue factor, std::size_t n, const Reducer& r) {
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(r.barrett));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(r.p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_mullo_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i)), vf);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), barrett_reduce(x, vm, vp));
  }
  scale_scalar(row + i, factor, n - i, r);
}

}  // namespace syz::kernels::detail

#endif
