#include <atomic>
#include <cstdlib>
#include <string>

#include "trilab/kernels.hpp"

namespace trilab::kernels {
namespace {

bool cpu_has_avx2() {
#if TRILAB_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect_backend()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend backend) {
  if (backend == Backend::kScalar) return true;
  static const bool avx2 = cpu_has_avx2();
  return avx2;
}

Backend detect_backend() {
  if (const char* env = std::getenv("TRILAB_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") return Backend::kScalar;
    if (want == "avx2" && backend_available(Backend::kAvx2)) return Backend::kAvx2;
  }
  return backend_available(Backend::kAvx2) ? Backend::kAvx2 : Backend::kScalar;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
  if (!backend_available(backend)) {
    throw Error(ErrorCode::kInvalidArgument,
                "kernel backend " + std::string(backend_name(backend)) + " unavailable");
  }
  current().store(backend, std::memory_order_relaxed);
}

#if TRILAB_HAVE_AVX2_KERNELS
#define TRILAB_DISPATCH(fn, ...)                                       \
  (active_backend() == Backend::kAvx2 ? avx2::fn(__VA_ARGS__)          \
                                      : scalar::fn(__VA_ARGS__))
#else
#define TRILAB_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

std::complex<double> twisted_root_sum(const RootTable& roots, std::uint64_t mult,
                                      std::span<const std::uint32_t> idx,
                                      std::span<const double> w_re,
                                      std::span<const double> w_im) {
  return TRILAB_DISPATCH(twisted_root_sum, roots, mult, idx, w_re, w_im);
}

std::complex<double> twisted_root_sum_unit(const RootTable& roots, std::uint64_t mult,
                                           std::span<const std::uint32_t> idx) {
  return TRILAB_DISPATCH(twisted_root_sum_unit, roots, mult, idx);
}

std::complex<double> complex_dot(std::span<const double> a_re, std::span<const double> a_im,
                                 std::span<const double> b_re, std::span<const double> b_im) {
  return TRILAB_DISPATCH(complex_dot, a_re, a_im, b_re, b_im);
}

Count sum_of_squares(std::span<const std::uint64_t> counts) {
  return TRILAB_DISPATCH(sum_of_squares, counts);
}

}  // namespace trilab::kernels
