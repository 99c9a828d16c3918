// Compiled with -mavx2 -mfma. Only reached through the dispatcher after a
// CPUID check, so nothing here may run on older hardware.
#include <immintrin.h>

#include <cstddef>

#include "trilab/kernels.hpp"

namespace trilab::kernels::avx2 {
namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sw = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sw));
}

// (mult * idx) mod n for four lanes; products stay below 2^53 so the double
// arithmetic is exact up to the quotient estimate, which is corrected once.
__m128i reduce_indices(__m128i idx32, __m256d mult, __m256d n, __m256d inv_n) {
  const __m256d prod = _mm256_mul_pd(_mm256_cvtepi32_pd(idx32), mult);
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, inv_n));
  __m256d r = _mm256_fnmadd_pd(q, n, prod);
  const __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, n));
  const __m256d over = _mm256_cmp_pd(r, n, _CMP_GE_OQ);
  r = _mm256_sub_pd(r, _mm256_and_pd(over, n));
  return _mm256_cvttpd_epi32(r);
}

}  // namespace

std::complex<double> twisted_root_sum(const RootTable& roots, std::uint64_t mult,
                                      std::span<const std::uint32_t> idx,
                                      std::span<const double> w_re,
                                      std::span<const double> w_im) {
  const std::size_t len = idx.size();
  const __m256d vm = _mm256_set1_pd(static_cast<double>(mult));
  const __m256d vn = _mm256_set1_pd(static_cast<double>(roots.modulus));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(roots.modulus));
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m128i raw = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx.data() + i));
    const __m128i k = reduce_indices(raw, vm, vn, vinv);
    const __m256d cr = _mm256_i32gather_pd(roots.re.data(), k, 8);
    const __m256d ci = _mm256_i32gather_pd(roots.im.data(), k, 8);
    const __m256d wr = _mm256_loadu_pd(w_re.data() + i);
    const __m256d wi = _mm256_loadu_pd(w_im.data() + i);
    acc_re = _mm256_fmadd_pd(wr, cr, acc_re);
    acc_re = _mm256_fnmadd_pd(wi, ci, acc_re);
    acc_im = _mm256_fmadd_pd(wr, ci, acc_im);
    acc_im = _mm256_fmadd_pd(wi, cr, acc_im);
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  const std::uint64_t n = roots.modulus;
  for (; i < len; ++i) {
    const std::size_t k = static_cast<std::size_t>((mult * idx[i]) % n);
    re += w_re[i] * roots.re[k] - w_im[i] * roots.im[k];
    im += w_re[i] * roots.im[k] + w_im[i] * roots.re[k];
  }
  return {re, im};
}

std::complex<double> twisted_root_sum_unit(const RootTable& roots, std::uint64_t mult,
                                           std::span<const std::uint32_t> idx) {
  const std::size_t len = idx.size();
  const __m256d vm = _mm256_set1_pd(static_cast<double>(mult));
  const __m256d vn = _mm256_set1_pd(static_cast<double>(roots.modulus));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(roots.modulus));
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m128i raw = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx.data() + i));
    const __m128i k = reduce_indices(raw, vm, vn, vinv);
    acc_re = _mm256_add_pd(acc_re, _mm256_i32gather_pd(roots.re.data(), k, 8));
    acc_im = _mm256_add_pd(acc_im, _mm256_i32gather_pd(roots.im.data(), k, 8));
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  const std::uint64_t n = roots.modulus;
  for (; i < len; ++i) {
    const std::size_t k = static_cast<std::size_t>((mult * idx[i]) % n);
    re += roots.re[k];
    im += roots.im[k];
  }
  return {re, im};
}

std::complex<double> complex_dot(std::span<const double> a_re, std::span<const double> a_im,
                                 std::span<const double> b_re, std::span<const double> b_im) {
  const std::size_t len = a_re.size();
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d ar = _mm256_loadu_pd(a_re.data() + i);
    const __m256d ai = _mm256_loadu_pd(a_im.data() + i);
    const __m256d br = _mm256_loadu_pd(b_re.data() + i);
    const __m256d bi = _mm256_loadu_pd(b_im.data() + i);
    acc_re = _mm256_fmadd_pd(ar, br, acc_re);
    acc_re = _mm256_fnmadd_pd(ai, bi, acc_re);
    acc_im = _mm256_fmadd_pd(ar, bi, acc_im);
    acc_im = _mm256_fmadd_pd(ai, br, acc_im);
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; i < len; ++i) {
    re += a_re[i] * b_re[i] - a_im[i] * b_im[i];
    im += a_re[i] * b_im[i] + a_im[i] * b_re[i];
  }
  return {re, im};
}

Count sum_of_squares(std::span<const std::uint64_t> counts) {
  const std::size_t len = counts.size();
  const __m256i sign = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
  __m256i lo = _mm256_setzero_si256();
  __m256i hi = _mm256_setzero_si256();
  __m256i high_bits = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(counts.data() + i));
    high_bits = _mm256_or_si256(high_bits, _mm256_srli_epi64(x, 32));
    const __m256i sq = _mm256_mul_epu32(x, x);
    const __m256i next = _mm256_add_epi64(lo, sq);
    // unsigned carry: next < sq
    const __m256i carry =
        _mm256_cmpgt_epi64(_mm256_xor_si256(sq, sign), _mm256_xor_si256(next, sign));
    hi = _mm256_sub_epi64(hi, carry);
    lo = next;
  }
  alignas(32) std::uint64_t hb[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(hb), high_bits);
  if ((hb[0] | hb[1] | hb[2] | hb[3]) != 0) {
    // A count of 2^32 or more; the 32x32 multiply above would truncate.
    return scalar::sum_of_squares(counts);
  }
  alignas(32) std::uint64_t l[4];
  alignas(32) std::uint64_t h[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(l), lo);
  _mm256_store_si256(reinterpret_cast<__m256i*>(h), hi);
  Count acc = 0;
  for (int lane = 0; lane < 4; ++lane) {
    acc += (static_cast<Count>(h[lane]) << 64) + l[lane];
  }
  for (; i < len; ++i) acc += static_cast<Count>(counts[i]) * counts[i];
  return acc;
}

}  // namespace trilab::kernels::avx2
