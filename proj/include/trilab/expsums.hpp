#pragma once

// Exponential sums over products of variables drawn from prescribed sets:
//   bilinear      sum a_x b_y e_p(t x y)
//   trilinear     sum a_x b_y c_z e_p(t x y z)
//   quadrilinear  sum a_w b_x c_y d_z e_p(t w x y z)
//   multilinear T sum w_1(x) ... w_n(x) e_p(t x_1 ... x_n), w_i ignoring x_i
// plus sums with polynomial arguments and the Cauchy-Hoelder reduction check.
//
// Naive paths accumulate in lexicographic order over the sorted sets, so the
// result is reproducible for a fixed kernel backend.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "trilab/sets.hpp"

namespace trilab {

enum class SumPath { kNaive, kTransform };

struct SumResult {
  std::complex<double> value;
  std::uint64_t n_terms = 0;
  SumPath path = SumPath::kNaive;
};

SumResult bilinear_sum(const WeightVec& x, const WeightVec& y, Residue twist);
SumResult trilinear_sum(const WeightVec& x, const WeightVec& y, const WeightVec& z, Residue twist);

enum class ConvolutionMethod { kAuto, kDirect, kFft };

/// Same value as trilinear_sum through the weighted representation function
/// f(l) = sum_{xyz = l} a_x b_y c_z, built by two cyclic convolutions on
/// Z/(p-1) in discrete-log coordinates. kAuto uses direct convolution up to
/// p = 4096 and FFT above.
SumResult trilinear_sum_fast(const WeightVec& x, const WeightVec& y, const WeightVec& z,
                             Residue twist, ConvolutionMethod method = ConvolutionMethod::kAuto);

SumResult quadrilinear_sum(const WeightVec& w, const WeightVec& x, const WeightVec& y,
                           const WeightVec& z, Residue twist);

/// n in {3, 4}; weights[i] must omit coordinate i and carry `sets` as axes.
SumResult multilinear_T(std::span<const FpSet> sets, std::span<const WeightTensor> weights,
                        Residue twist);

/// Cyclic convolution (a * b)[k] = sum_i a[i] b[(k - i) mod n].
std::vector<std::complex<double>> cyclic_convolve(std::span<const std::complex<double>> a,
                                                  std::span<const std::complex<double>> b,
                                                  ConvolutionMethod method);

/// Polynomial over at most four variables with integer coefficients.
struct Monomial {
  long long coeff = 0;
  std::array<std::uint32_t, 4> exps{};
};

struct Polynomial {
  std::size_t variables = 0;
  std::vector<Monomial> terms;

  Residue eval(const FieldCtx& f, std::span<const Residue> point) const;

  /// (x_1 + ... + x_n)^degree, expanded.
  static Polynomial power_of_sum(std::size_t variables, std::uint32_t degree);
  /// The product x_1 ... x_n.
  static Polynomial product(std::size_t variables);
};

/// sum over the Cartesian product of e_p(t F(x)). Throws kTooManyVariables past four.
SumResult poly_arg_sum(std::span<const FpSet> sets, const Polynomial& f, Residue twist);

struct ReductionCheck {
  double lhs = 0.0;  // |T|^(2^(n-1))
  double rhs = 0.0;
  bool holds(double rel_tol = 1e-6) const { return lhs <= rhs * (1.0 + rel_tol) + 1e-12; }
};

/// Both sides of the Cauchy-Hoelder reduction
///   |T|^(2^(n-1)) <= X_1^(2^(n-1)-1) (X_2...X_n)^(2^(n-1)-2)
///                    sum_{x_j,y_j} |sum_{x_1} e_p(t x_1 (x_2-y_2)...(x_n-y_n))|
/// for n in {2, 3, 4}, each side by direct summation.
ReductionCheck reduction_check(std::span<const FpSet> sets, std::span<const WeightTensor> weights,
                               Residue twist, std::size_t n);

}  // namespace trilab
