#pragma once

#include <complex>
#include <cstddef>

namespace prolate::numverify::simd {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

/// sum_i a[i] * b[i] * w[i] (no conjugation); w may be null.
cplx dot_scalar(const cplx* a, const cplx* b, const cplx* w, std::size_t n);
cplx dot_avx2(const cplx* a, const cplx* b, const cplx* w, std::size_t n);

bool avx2_available();
/// Backend chosen at first use: AVX2+FMA when the CPU has it, unless the
/// environment sets PROLATE_SIMD=scalar.
Backend active_backend();
const char* backend_name(Backend b);

cplx dot(const cplx* a, const cplx* b, const cplx* w, std::size_t n);

}  // namespace prolate::numverify::simd
