#include "trilab/kernels.hpp"

#include <cstddef>

namespace trilab::kernels::scalar {

std::complex<double> twisted_root_sum(const RootTable& roots, std::uint64_t mult,
                                      std::span<const std::uint32_t> idx,
                                      std::span<const double> w_re,
                                      std::span<const double> w_im) {
  const std::uint64_t n = roots.modulus;
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const std::size_t k = static_cast<std::size_t>((mult * idx[i]) % n);
    const double cr = roots.re[k];
    const double ci = roots.im[k];
    acc_re += w_re[i] * cr - w_im[i] * ci;
    acc_im += w_re[i] * ci + w_im[i] * cr;
  }
  return {acc_re, acc_im};
}

std::complex<double> twisted_root_sum_unit(const RootTable& roots, std::uint64_t mult,
                                           std::span<const std::uint32_t> idx) {
  const std::uint64_t n = roots.modulus;
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::uint32_t v : idx) {
    const std::size_t k = static_cast<std::size_t>((mult * v) % n);
    acc_re += roots.re[k];
    acc_im += roots.im[k];
  }
  return {acc_re, acc_im};
}

std::complex<double> complex_dot(std::span<const double> a_re, std::span<const double> a_im,
                                 std::span<const double> b_re, std::span<const double> b_im) {
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t i = 0; i < a_re.size(); ++i) {
    acc_re += a_re[i] * b_re[i] - a_im[i] * b_im[i];
    acc_im += a_re[i] * b_im[i] + a_im[i] * b_re[i];
  }
  return {acc_re, acc_im};
}

Count sum_of_squares(std::span<const std::uint64_t> counts) {
  Count acc = 0;
  for (std::uint64_t c : counts) acc += static_cast<Count>(c) * c;
  return acc;
}

}  // namespace trilab::kernels::scalar
