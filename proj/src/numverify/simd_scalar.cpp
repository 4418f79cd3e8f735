#include <cstdlib>
#include <cstring>

#include "prolate/numverify/simd.hpp"

namespace prolate::numverify::simd {

cplx dot_scalar(const cplx* a, const cplx* b, const cplx* w, std::size_t n) {
  // two interleaved lanes so the summation order resembles the vector path
  double re[2] = {0, 0}, im[2] = {0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    double pr = a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    double pi = a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    if (w) {
      const double t = pr * w[i].real() - pi * w[i].imag();
      pi = pr * w[i].imag() + pi * w[i].real();
      pr = t;
    }
    re[i & 1] += pr;
    im[i & 1] += pi;
  }
  return {re[0] + re[1], im[0] + im[1]};
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() {
  static const Backend b = [] {
    const char* env = std::getenv("PROLATE_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
  }();
  return b;
}

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

cplx dot(const cplx* a, const cplx* b, const cplx* w, std::size_t n) {
  return active_backend() == Backend::Avx2 ? dot_avx2(a, b, w, n) : dot_scalar(a, b, w, n);
}

}  // namespace prolate::numverify::simd
