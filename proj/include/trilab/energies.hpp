#pragma once

// Exact counting of solutions to product/difference equations over F_p.
//
// Every energy here is the second moment of a spectrum, the exact distribution
// of some expression over F_p:
//   N(U,V,W)  u1(v1-w1) = u2(v2-w2)           spectrum of u(v-w)
//   E_x(U)    u1 u2 = u3 u4                   spectrum of u1 u2
//   D_x(U)    (u1-v1)(u2-v2) = (u3-v3)(u4-v4) spectrum of (u1-v1)(u2-v2)
//   T(U)      (u1-v)/(u2-v) = (u3-w)/(u4-w)   spectrum of (u1-v)/(u2-v)
//   K(Y,Z)    nonzero part of the spectrum of (y1-y2)(z1-z2)
// The oracle_* functions enumerate tuples directly and share no code with the
// spectrum path.

#include <cstdint>
#include <span>
#include <vector>

#include "trilab/sets.hpp"

namespace trilab {

/// Exact multiplicity table over F_p; counts[0] is the value 0.
struct Spectrum {
  Field field;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const noexcept;
  Count second_moment() const;
  /// Second moment over lambda != 0.
  Count second_moment_nonzero() const;
  std::uint64_t operator[](Residue lambda) const noexcept { return counts[lambda]; }
};

enum class CountMethod { kOracle, kFast };
enum class EnergyName { kN, kT, kDx, kEx, kK };

std::string_view energy_name(EnergyName name);
std::string_view method_name(CountMethod method);

struct EnergyReport {
  EnergyName name = EnergyName::kN;
  Count value = 0;
  CountMethod method = CountMethod::kFast;
};

/// Guard on the number of tuples an oracle may enumerate.
inline constexpr std::uint64_t kOracleTupleLimit = 100'000'000;

Spectrum set_spectrum(const FpSet& a);
/// #{(a, b) : a - b = delta}.
Spectrum difference_spectrum(const FpSet& a, const FpSet& b);
/// (a * b)(mu) = sum_{x y = mu} a(x) b(y), zero class included.
Spectrum multiplicative_convolution(const Spectrum& a, const Spectrum& b);

/// r(mu) = #{(u, v, w) : u(v - w) = mu}.
Spectrum spectrum_product_diff(const FpSet& u, const FpSet& v, const FpSet& w);

/// N(U,V,W) including zero-solutions; nonzero_only gives N^*.
EnergyReport count_N(const FpSet& u, const FpSet& v, const FpSet& w, bool nonzero_only = false);
EnergyReport oracle_N(const FpSet& u, const FpSet& v, const FpSet& w, bool nonzero_only = false);

/// Denominator handling for T(U): by default only u2 != v and u4 != w are
/// required (a common ratio of 0 is allowed); kAllNonzero also drops ratio 0.
enum class TConvention { kDenominatorsNonzero, kAllNonzero };

EnergyReport count_T(const FpSet& u, TConvention conv = TConvention::kDenominatorsNonzero);
EnergyReport oracle_T(const FpSet& u, TConvention conv = TConvention::kDenominatorsNonzero);

EnergyReport count_Dx(const FpSet& u);
EnergyReport oracle_Dx(const FpSet& u);

EnergyReport count_Ex(const FpSet& u);
EnergyReport oracle_Ex(const FpSet& u);

enum class JMode {
  kQuadruple,  // (y1 - y2)(z1 - z2)
  kTriple,     // (y1 - y2) z
};

Spectrum spectrum_J(const FpSet& y, const FpSet& z, JMode mode);

/// sum_{lambda != 0} J(lambda)^2 for the quadruple spectrum.
EnergyReport K_value(const FpSet& y, const FpSet& z);

struct CharIdentity {
  double direct = 0.0;
  double via_chars = 0.0;
  bool agrees(double rel_tol = 1e-6) const;
};

/// K two ways: directly, and as
/// (1/(p-1)) sum_chi |sum chi(y1 - y2)|^2 |sum chi(z1 - z2)|^2
/// with zero differences skipped.
CharIdentity K_char_identity(const FpSet& y, const FpSet& z);

struct CharWindow {
  Count n = 0;
  double center = 0.0;  // U^2 V^2 W^2 / (p - 1)
  double radius = 0.0;  // p U V W
  bool holds() const;
};

CharWindow N_char_window(const FpSet& u, const FpSet& v, const FpSet& w);

/// max over nonprincipal chi of |sum_{v, w} chi(v - w)|, zero differences skipped.
double double_char_max(const FpSet& v, const FpSet& w);

}  // namespace trilab
