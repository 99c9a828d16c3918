#include "trilab/expsums.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "trilab/kernels.hpp"

namespace trilab {
namespace {

struct SplitWeights {
  std::vector<double> re;
  std::vector<double> im;

  explicit SplitWeights(std::size_t n = 0) : re(n), im(n) {}
  explicit SplitWeights(std::span<const std::complex<double>> w) : re(w.size()), im(w.size()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      re[i] = w[i].real();
      im[i] = w[i].imag();
    }
  }
  void set(std::size_t i, std::complex<double> v) {
    re[i] = v.real();
    im[i] = v.imag();
  }
};

const Field& common_field(std::initializer_list<const FpSet*> sets) {
  const Field& f = (*sets.begin())->field();
  for (const FpSet* s : sets) require_same_field(f, s->field());
  return f;
}

// sum_z c_z e_p(mult * z)
std::complex<double> inner_sum(const FieldCtx& f, std::uint64_t mult, const FpSet& z,
                               const SplitWeights& w) {
  return kernels::twisted_root_sum(f.additive_roots(), mult, z.elems(), w.re, w.im);
}

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::complex<double>> convolve_fft(std::span<const std::complex<double>> a,
                                               std::span<const std::complex<double>> b) {
  const int n = static_cast<int>(a.size());
  auto* fa = fftw_alloc_complex(n);
  auto* fb = fftw_alloc_complex(n);
  fftw_plan forward_a, forward_b, backward;
  {
    std::lock_guard lock(fftw_planner_mutex());
    forward_a = fftw_plan_dft_1d(n, fa, fa, FFTW_FORWARD, FFTW_ESTIMATE);
    forward_b = fftw_plan_dft_1d(n, fb, fb, FFTW_FORWARD, FFTW_ESTIMATE);
    backward = fftw_plan_dft_1d(n, fa, fa, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  for (int i = 0; i < n; ++i) {
    fa[i][0] = a[i].real();
    fa[i][1] = a[i].imag();
    fb[i][0] = b[i].real();
    fb[i][1] = b[i].imag();
  }
  fftw_execute(forward_a);
  fftw_execute(forward_b);
  for (int i = 0; i < n; ++i) {
    const double re = fa[i][0] * fb[i][0] - fa[i][1] * fb[i][1];
    const double im = fa[i][0] * fb[i][1] + fa[i][1] * fb[i][0];
    fa[i][0] = re;
    fa[i][1] = im;
  }
  fftw_execute(backward);
  std::vector<std::complex<double>> out(n);
  for (int i = 0; i < n; ++i) out[i] = {fa[i][0] / n, fa[i][1] / n};
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(forward_a);
    fftw_destroy_plan(forward_b);
    fftw_destroy_plan(backward);
  }
  fftw_free(fa);
  fftw_free(fb);
  return out;
}

std::vector<std::complex<double>> convolve_direct(std::span<const std::complex<double>> a,
                                                  std::span<const std::complex<double>> b) {
  const std::size_t n = a.size();
  SplitWeights sa(a);
  // brev[j] = b[(-j) mod n] over two periods, so b[(k - i) mod n] = brev[i + n - k].
  SplitWeights brev(2 * n);
  for (std::size_t j = 0; j < 2 * n; ++j) brev.set(j, b[(n - j % n) % n]);
  std::vector<std::complex<double>> out(n);
  const std::span<const double> bre(brev.re), bim(brev.im);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = kernels::complex_dot(sa.re, sa.im, bre.subspan(n - k, n), bim.subspan(n - k, n));
  }
  return out;
}

// Weight vector as a function on Z/(p-1): slot dlog(x) holds the weight of x.
std::vector<std::complex<double>> to_log_coordinates(const WeightVec& w) {
  const auto& f = *w.base().field();
  std::vector<std::complex<double>> out(f.group_order(), {0.0, 0.0});
  for (std::size_t i = 0; i < w.size(); ++i) out[f.dlog(w.base()[i])] = w[i];
  return out;
}

void validate_multilinear(std::span<const FpSet> sets, std::span<const WeightTensor> weights) {
  const std::size_t n = sets.size();
  if (weights.size() != n) {
    throw Error(ErrorCode::kBadTensorShape, "need one weight tensor per set");
  }
  for (std::size_t i = 1; i < n; ++i) require_same_field(sets[0].field(), sets[i].field());
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = weights[i];
    if (t.arity() != n) throw Error(ErrorCode::kBadTensorShape, "tensor arity differs from n");
    if (t.omitted() != i || seen[t.omitted()]) {
      throw Error(ErrorCode::kBadTensorShape,
                  "weight " + std::to_string(i) + " must omit coordinate " + std::to_string(i));
    }
    seen[t.omitted()] = true;
    for (std::size_t a = 0; a < n; ++a) {
      if (!(t.axes()[a] == sets[a])) {
        throw Error(ErrorCode::kBadTensorShape, "tensor axes disagree with the sets");
      }
    }
  }
}

// Shared n-fold evaluator, n >= 2. The innermost loop runs over the last
// coordinate; weight n-1 ignores it and factors out.
SumResult multilinear_impl(std::span<const FpSet> sets, std::span<const WeightTensor> weights,
                           Residue twist) {
  const std::size_t n = sets.size();
  const auto& f = *sets[0].field();
  const FpSet& last = sets[n - 1];
  SumResult result;
  result.n_terms = 1;
  for (const auto& s : sets) result.n_terms *= s.size();
  if (result.n_terms == 0) return result;

  std::vector<std::size_t> index(n, 0);
  SplitWeights inner_w(last.size());
  std::complex<double> acc{0.0, 0.0};
  bool done = false;
  while (!done) {
    Residue prefix = f.reduce(twist);
    for (std::size_t a = 0; a + 1 < n; ++a) prefix = f.mul(prefix, sets[a][index[a]]);
    const std::complex<double> outer = weights[n - 1].at(index);
    for (std::size_t k = 0; k < last.size(); ++k) {
      index[n - 1] = k;
      std::complex<double> w{1.0, 0.0};
      for (std::size_t i = 0; i + 1 < n; ++i) w *= weights[i].at(index);
      inner_w.set(k, w);
    }
    index[n - 1] = 0;
    acc += outer * inner_sum(f, prefix, last, inner_w);
    done = true;
    for (std::size_t a = n - 1; a-- > 0;) {
      if (++index[a] < sets[a].size()) {
        done = false;
        break;
      }
      index[a] = 0;
    }
  }
  result.value = acc;
  return result;
}

}  // namespace

SumResult bilinear_sum(const WeightVec& x, const WeightVec& y, Residue twist) {
  const auto& field = common_field({&x.base(), &y.base()});
  const auto& f = *field;
  const SplitWeights wy(y.weights());
  std::complex<double> acc{0.0, 0.0};
  const Residue t = f.reduce(twist);
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += x[i] * inner_sum(f, f.mul(t, x.base()[i]), y.base(), wy);
  }
  return {acc, static_cast<std::uint64_t>(x.size()) * y.size(), SumPath::kNaive};
}

SumResult trilinear_sum(const WeightVec& x, const WeightVec& y, const WeightVec& z,
                        Residue twist) {
  const auto& field = common_field({&x.base(), &y.base(), &z.base()});
  const auto& f = *field;
  const SplitWeights wz(z.weights());
  const Residue t = f.reduce(twist);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Residue tx = f.mul(t, x.base()[i]);
    std::complex<double> row{0.0, 0.0};
    for (std::size_t j = 0; j < y.size(); ++j) {
      row += y[j] * inner_sum(f, f.mul(tx, y.base()[j]), z.base(), wz);
    }
    acc += x[i] * row;
  }
  return {acc, static_cast<std::uint64_t>(x.size()) * y.size() * z.size(), SumPath::kNaive};
}

std::vector<std::complex<double>> cyclic_convolve(std::span<const std::complex<double>> a,
                                                  std::span<const std::complex<double>> b,
                                                  ConvolutionMethod method) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "convolution length mismatch");
  if (a.empty()) return {};
  if (method == ConvolutionMethod::kAuto) {
    method = a.size() < 4096 ? ConvolutionMethod::kDirect : ConvolutionMethod::kFft;
  }
  return method == ConvolutionMethod::kDirect ? convolve_direct(a, b) : convolve_fft(a, b);
}

SumResult trilinear_sum_fast(const WeightVec& x, const WeightVec& y, const WeightVec& z,
                             Residue twist, ConvolutionMethod method) {
  const auto& field = common_field({&x.base(), &y.base(), &z.base()});
  const auto& f = *field;
  const auto ab = cyclic_convolve(to_log_coordinates(x), to_log_coordinates(y), method);
  const auto rep = cyclic_convolve(ab, to_log_coordinates(z), method);
  const SplitWeights w(rep);
  const auto value =
      kernels::twisted_root_sum(f.additive_roots(), f.reduce(twist), f.exp_table(), w.re, w.im);
  return {value, static_cast<std::uint64_t>(x.size()) * y.size() * z.size(), SumPath::kTransform};
}

SumResult quadrilinear_sum(const WeightVec& w, const WeightVec& x, const WeightVec& y,
                           const WeightVec& z, Residue twist) {
  const auto& field = common_field({&w.base(), &x.base(), &y.base(), &z.base()});
  const auto& f = *field;
  const SplitWeights wz(z.weights());
  const Residue t = f.reduce(twist);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t h = 0; h < w.size(); ++h) {
    const Residue tw = f.mul(t, w.base()[h]);
    std::complex<double> plane{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Residue twx = f.mul(tw, x.base()[i]);
      std::complex<double> row{0.0, 0.0};
      for (std::size_t j = 0; j < y.size(); ++j) {
        row += y[j] * inner_sum(f, f.mul(twx, y.base()[j]), z.base(), wz);
      }
      plane += x[i] * row;
    }
    acc += w[h] * plane;
  }
  return {acc, static_cast<std::uint64_t>(w.size()) * x.size() * y.size() * z.size(),
          SumPath::kNaive};
}

SumResult multilinear_T(std::span<const FpSet> sets, std::span<const WeightTensor> weights,
                        Residue twist) {
  if (sets.size() != 3 && sets.size() != 4) {
    throw Error(ErrorCode::kBadTensorShape, "multilinear_T supports n = 3 or 4");
  }
  validate_multilinear(sets, weights);
  return multilinear_impl(sets, weights, twist);
}

Residue Polynomial::eval(const FieldCtx& f, std::span<const Residue> point) const {
  Residue total = 0;
  for (const auto& m : terms) {
    Residue term = f.reduce(m.coeff);
    for (std::size_t v = 0; v < variables && term != 0; ++v) {
      if (m.exps[v] != 0) term = f.mul(term, f.pow(point[v], m.exps[v]));
    }
    total = f.add(total, term);
  }
  return total;
}

Polynomial Polynomial::power_of_sum(std::size_t variables, std::uint32_t degree) {
  if (variables > 4) throw Error(ErrorCode::kTooManyVariables, "at most four variables");
  Polynomial out;
  out.variables = variables;
  // multinomial expansion: coefficient degree! / prod e_i!
  auto factorial = [](std::uint32_t k) {
    long long r = 1;
    for (std::uint32_t i = 2; i <= k; ++i) r *= i;
    return r;
  };
  std::array<std::uint32_t, 4> e{};
  auto recurse = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == variables) {
      e[var] = left;
      long long c = factorial(degree);
      for (std::size_t v = 0; v < variables; ++v) c /= factorial(e[v]);
      out.terms.push_back({c, e});
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  if (variables > 0) recurse(recurse, 0, degree);
  return out;
}

Polynomial Polynomial::product(std::size_t variables) {
  if (variables > 4) throw Error(ErrorCode::kTooManyVariables, "at most four variables");
  Monomial m;
  m.coeff = 1;
  for (std::size_t v = 0; v < variables; ++v) m.exps[v] = 1;
  return {variables, {m}};
}

SumResult poly_arg_sum(std::span<const FpSet> sets, const Polynomial& poly, Residue twist) {
  if (sets.size() > 4 || poly.variables > 4) {
    throw Error(ErrorCode::kTooManyVariables, "polynomial sums take at most four variables");
  }
  if (sets.size() != poly.variables) {
    throw Error(ErrorCode::kInvalidArgument, "one set per polynomial variable");
  }
  SumResult result;
  result.n_terms = 1;
  for (const auto& s : sets) result.n_terms *= s.size();
  if (sets.empty() || result.n_terms == 0) {
    result.value = sets.empty() ? std::complex<double>{1.0, 0.0} : std::complex<double>{};
    return result;
  }
  for (std::size_t i = 1; i < sets.size(); ++i) require_same_field(sets[0].field(), sets[i].field());
  const auto& f = *sets[0].field();
  const Residue t = f.reduce(twist);
  const std::size_t n = sets.size();
  std::vector<std::size_t> index(n, 0);
  std::vector<Residue> point(n);
  std::complex<double> acc{0.0, 0.0};
  for (std::uint64_t step = 0; step < result.n_terms; ++step) {
    for (std::size_t v = 0; v < n; ++v) point[v] = sets[v][index[v]];
    acc += f.add_char(f.mul(t, poly.eval(f, point)));
    for (std::size_t v = n; v-- > 0;) {
      if (++index[v] < sets[v].size()) break;
      index[v] = 0;
    }
  }
  result.value = acc;
  return result;
}

ReductionCheck reduction_check(std::span<const FpSet> sets, std::span<const WeightTensor> weights,
                               Residue twist, std::size_t n) {
  if (n < 2 || n > 4 || sets.size() != n) {
    throw Error(ErrorCode::kBadTensorShape, "reduction check needs n in {2,3,4} sets");
  }
  validate_multilinear(sets, weights);
  const auto& f = *sets[0].field();
  const double power = std::ldexp(1.0, static_cast<int>(n - 1));  // 2^(n-1)

  ReductionCheck out;
  out.lhs = std::pow(std::abs(multilinear_impl(sets, weights, twist).value), power);

  double coeff = std::pow(static_cast<double>(sets[0].size()), power - 1.0);
  for (std::size_t j = 1; j < n; ++j) {
    coeff *= std::pow(static_cast<double>(sets[j].size()), power - 2.0);
  }

  // |sum_{x_1} e_p(t x_1 lambda)|, memoized per lambda.
  const Residue t = f.reduce(twist);
  std::vector<double> inner(f.p(), -1.0);
  auto inner_abs = [&](Residue lambda) {
    double& slot = inner[lambda];
    if (slot < 0.0) {
      slot = std::abs(kernels::twisted_root_sum_unit(f.additive_roots(), f.mul(t, lambda),
                                                     sets[0].elems()));
    }
    return slot;
  };

  // odometer over (x_2, y_2, ..., x_n, y_n)
  const std::size_t pairs = n - 1;
  std::vector<std::size_t> ix(pairs, 0), iy(pairs, 0);
  double total = 0.0;
  bool any = true;
  for (std::size_t j = 1; j < n; ++j) any = any && !sets[j].empty();
  while (any) {
    Residue lambda = 1;
    for (std::size_t j = 0; j < pairs; ++j) {
      const FpSet& s = sets[j + 1];
      lambda = f.mul(lambda, f.sub(s[ix[j]], s[iy[j]]));
    }
    total += inner_abs(lambda);
    bool advanced = false;
    for (std::size_t j = pairs; j-- > 0;) {
      const std::size_t size = sets[j + 1].size();
      if (++iy[j] < size) {
        advanced = true;
        break;
      }
      iy[j] = 0;
      if (++ix[j] < size) {
        advanced = true;
        break;
      }
      ix[j] = 0;
    }
    if (!advanced) break;
  }
  out.rhs = coeff * total;
  return out;
}

}  // namespace trilab
