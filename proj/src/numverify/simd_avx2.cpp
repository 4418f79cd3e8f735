#include <immintrin.h>

#include "prolate/numverify/simd.hpp"

namespace prolate::numverify::simd {

namespace {

// (ar + i ai)(br + i bi) for two packed complex numbers per register
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d br = _mm256_movedup_pd(b);        // br br
  const __m256d bi = _mm256_permute_pd(b, 0xF);   // bi bi
  const __m256d as = _mm256_permute_pd(a, 0x5);   // ai ar
  return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(as, bi));
}

}  // namespace

cplx dot_avx2(const cplx* a, const cplx* b, const cplx* w, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  const double* pw = reinterpret_cast<const double*>(w);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d p = cmul(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i));
    if (w) p = cmul(p, _mm256_loadu_pd(pw + 2 * i));
    acc = _mm256_add_pd(acc, p);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double re0 = lanes[0], im0 = lanes[1], re1 = lanes[2], im1 = lanes[3];
  if (i < n) {
    cplx p = a[i] * b[i];
    if (w) p *= w[i];
    re0 += p.real();
    im0 += p.imag();
  }
  return {re0 + re1, im0 + im1};
}

}  // namespace prolate::numverify::simd
