#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference version and,
// on x86-64, an AVX2+FMA version chosen at runtime. The two are
// equivalence-tested in tests/kernels_test.cpp.

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

#include "trilab/error.hpp"

namespace trilab::kernels {

enum class Backend { kScalar, kAvx2 };

std::string_view backend_name(Backend backend);
bool backend_available(Backend backend);

// Best backend the CPU supports, unless TRILAB_KERNELS=scalar|avx2 says otherwise.
Backend detect_backend();
Backend active_backend();
// Throws kInvalidArgument when the backend is not available on this CPU.
void set_backend(Backend backend);

/// Split real/imaginary table of the n-th roots of unity, root[k] = exp(2 pi i k / n).
struct RootTable {
  std::span<const double> re;
  std::span<const double> im;
  std::uint32_t modulus = 0;
};

/// sum_i w_i * root[(mult * idx_i) mod n]. Requires idx_i < n, mult < n, n < 2^31.
std::complex<double> twisted_root_sum(const RootTable& roots, std::uint64_t mult,
                                      std::span<const std::uint32_t> idx,
                                      std::span<const double> w_re,
                                      std::span<const double> w_im);

/// Unweighted form of twisted_root_sum.
std::complex<double> twisted_root_sum_unit(const RootTable& roots, std::uint64_t mult,
                                           std::span<const std::uint32_t> idx);

/// sum_i a_i * b_i over split complex arrays of equal length.
std::complex<double> complex_dot(std::span<const double> a_re, std::span<const double> a_im,
                                 std::span<const double> b_re, std::span<const double> b_im);

/// Exact sum of squares of nonnegative counts.
Count sum_of_squares(std::span<const std::uint64_t> counts);

namespace scalar {
std::complex<double> twisted_root_sum(const RootTable& roots, std::uint64_t mult,
                                      std::span<const std::uint32_t> idx,
                                      std::span<const double> w_re,
                                      std::span<const double> w_im);
std::complex<double> twisted_root_sum_unit(const RootTable& roots, std::uint64_t mult,
                                           std::span<const std::uint32_t> idx);
std::complex<double> complex_dot(std::span<const double> a_re, std::span<const double> a_im,
                                 std::span<const double> b_re, std::span<const double> b_im);
Count sum_of_squares(std::span<const std::uint64_t> counts);
}  // namespace scalar

#if (defined(__x86_64__) || defined(_M_X64)) && !defined(TRILAB_NO_AVX2)
#define TRILAB_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::complex<double> twisted_root_sum(const RootTable& roots, std::uint64_t mult,
                                      std::span<const std::uint32_t> idx,
                                      std::span<const double> w_re,
                                      std::span<const double> w_im);
std::complex<double> twisted_root_sum_unit(const RootTable& roots, std::uint64_t mult,
                                           std::span<const std::uint32_t> idx);
std::complex<double> complex_dot(std::span<const double> a_re, std::span<const double> a_im,
                                 std::span<const double> b_re, std::span<const double> b_im);
Count sum_of_squares(std::span<const std::uint64_t> counts);
}  // namespace avx2
#else
#define TRILAB_HAVE_AVX2_KERNELS 0
#endif

}  // namespace trilab::kernels
