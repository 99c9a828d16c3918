#pragma once

// Prime-field substrate: modular arithmetic, discrete logarithms, additive
// characters e_p and multiplicative characters chi_j.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "trilab/kernels.hpp"

namespace trilab {

using Residue = std::uint32_t;

inline constexpr std::uint32_t kMaxPrime = 1u << 20;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

class FpSet;

/// Immutable context for F_p: smallest primitive root, dlog/exp tables,
/// inverses and the root-of-unity tables behind both character families.
class FieldCtx {
 public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t generator() const noexcept { return g_; }
  /// Order of F_p^*.
  std::uint32_t group_order() const noexcept { return p_ - 1; }

  Residue add(Residue a, Residue b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; a must be nonzero.
  Residue inv(Residue a) const noexcept { return inv_[a]; }
  /// Reduces any integer (possibly negative) into [0, p).
  Residue reduce(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }

  /// k with g^k = a, for a in F_p^*.
  std::uint32_t dlog(Residue a) const noexcept { return dlog_[a]; }
  /// g^k for k in [0, p-1).
  Residue exp(std::uint32_t k) const noexcept { return exp_[k]; }

  /// e_p(a) = exp(2 pi i a / p).
  std::complex<double> add_char(Residue a) const noexcept {
    const std::uint32_t k = a % p_;
    return {add_re_[k], add_im_[k]};
  }
  /// chi_j(a) = exp(2 pi i j dlog(a) / (p-1)); throws kZeroArgument for a = 0.
  std::complex<double> mult_char(std::uint32_t j, Residue a) const;

  /// Powers of the generator, exp_table()[k] = g^k.
  std::span<const Residue> exp_table() const noexcept { return exp_; }

  kernels::RootTable additive_roots() const noexcept { return {add_re_, add_im_, p_}; }
  kernels::RootTable multiplicative_roots() const noexcept {
    return {mul_re_, mul_im_, p_ - 1};
  }

 private:
  friend std::shared_ptr<const FieldCtx> make_field(std::uint64_t p);
  FieldCtx() = default;

  std::uint32_t p_ = 0;
  std::uint32_t g_ = 0;
  std::vector<std::uint32_t> dlog_;
  std::vector<Residue> exp_;
  std::vector<Residue> inv_;
  std::vector<double> add_re_, add_im_;
  std::vector<double> mul_re_, mul_im_;
};

using Field = std::shared_ptr<const FieldCtx>;

/// Builds F_p. Throws kNotPrime (composite or p < 3) and kTooLarge (p > 2^20).
Field make_field(std::uint64_t p);

/// e_p(a) straight from the formula; works for any modulus p >= 1.
std::complex<double> add_char(std::uint32_t p, std::uint64_t a);

/// Smallest primitive root mod a prime p, by exhaustive order testing.
std::uint32_t smallest_primitive_root(std::uint32_t p);

/// The subgroup of F_p^* of order T. Throws kNotDivisor when T does not divide p-1.
FpSet subgroup(const Field& field, std::uint32_t order);

}  // namespace trilab
