#include "trilab/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trilab/bounds.hpp"

namespace trilab {
namespace {

void guard_ops(double ops) {
  if (ops > kImageOpLimit) {
    throw Error(ErrorCode::kGuardTripped, "image-set computation exceeds 1e9 operations");
  }
}

double card(const FpSet& s) { return static_cast<double>(s.size()); }
double card(const ResidueSet& s) { return static_cast<double>(s.size()); }

ResidueSet product_chain(const FpSet& a, const FpSet& b, const FpSet& c) {
  const ResidueSet ab = productset(a, b);
  guard_ops(card(a) * card(b) + card(ab) * card(c));
  return productset(ab, as_residue_set(c));
}

FpSet nested_prefix(const Field& field, const std::vector<Residue>& order, std::size_t k) {
  return FpSet(field, std::vector<Residue>(order.begin(), order.begin() + static_cast<long>(k)));
}

}  // namespace

ResidueSet image_abc_plus_d_set(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d) {
  const ResidueSet abc = product_chain(a, b, c);
  guard_ops(card(abc) * card(d));
  return sumset(abc, as_residue_set(d));
}

ResidueSet image_cube_sum_set(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d) {
  const ResidueSet ab = sumset(a, b);
  guard_ops(card(a) * card(b) + card(ab) * card(c));
  const ResidueSet abc = sumset(ab, as_residue_set(c));
  const ResidueSet cubes = powerset_k(abc, 3);
  guard_ops(card(cubes) * card(d));
  return sumset(cubes, as_residue_set(d));
}

ImageResult image_ABC_plus_D(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d) {
  if (!(a.size() >= b.size() && b.size() >= c.size())) {
    throw Error(ErrorCode::kOrderError, "need A >= B >= C");
  }
  const double p = a.p();
  ImageResult out;
  out.size = image_abc_plus_d_set(a, b, c, d).size();
  out.error_term = thm15_error_term(p, card(a), card(b), card(c), card(d));
  out.lower = thm15_lower(p, card(a), card(b), card(c), card(d));
  return out;
}

ImageResult image_cube_sum(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d) {
  const double p = a.p();
  ImageResult out;
  out.size = image_cube_sum_set(a, b, c, d).size();
  out.error_term = thm17_error_term(p, card(a), card(b), card(c), card(d));
  out.lower = thm17_lower(p, card(a), card(b), card(c), card(d));
  out.hypothesis_ok =
      std::cbrt(p * p) >= card(a) && a.size() >= b.size() && b.size() >= c.size();
  return out;
}

CoverResult covers_field(CoverShape shape, const FpSet& a, const FpSet& b, const FpSet& c,
                         const FpSet& d, const FpSet& e) {
  const ResidueSet base = shape == CoverShape::kProduct ? image_abc_plus_d_set(a, b, c, d)
                                                        : image_cube_sum_set(a, b, c, d);
  guard_ops(card(base) * card(e));
  const ResidueSet full = sumset(base, as_residue_set(e));
  const double p = a.p();
  CoverResult out;
  out.image_size = full.size();
  out.covers = full.size() == a.p();
  out.hypothesis_quantity = shape == CoverShape::kProduct
                                ? cor16_quantity(p, card(a), card(b), card(c), card(d), card(e))
                                : cor18_quantity(p, card(a), card(b), card(c), card(d), card(e));
  return out;
}

C0Estimate c0_threshold_search(const Field& field, CoverShape shape, std::uint64_t seed) {
  std::vector<std::vector<Residue>> orders;
  for (std::uint64_t i = 0; i < 5; ++i) orders.push_back(random_permutation(field, seed + i));
  auto covers_at = [&](std::size_t k) {
    return covers_field(shape, nested_prefix(field, orders[0], k), nested_prefix(field, orders[1], k),
                        nested_prefix(field, orders[2], k), nested_prefix(field, orders[3], k),
                        nested_prefix(field, orders[4], k));
  };
  // Sets are nested in k, so coverage is monotone and bisection is exact.
  std::size_t lo = 1;
  std::size_t hi = field->group_order();
  if (covers_at(lo).covers) hi = lo;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (covers_at(mid).covers) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  C0Estimate out;
  out.threshold_size = hi;
  out.scale = static_cast<double>(hi) / field->group_order();
  out.quantity = covers_at(hi).hypothesis_quantity;
  return out;
}

GaraevResult garaev_UV(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d) {
  GaraevResult out;
  out.u = product_chain(a, b, c).size();
  guard_ops(card(a) * card(d));
  out.v = sumset(a, d).size();
  const double p = a.p();
  const double u = static_cast<double>(out.u);
  const double v = static_cast<double>(out.v);
  out.disjunct1 = thm19_disjunct1(p, card(a));
  out.disjunct2 = thm19_disjunct2(p, card(a), card(b), card(c), card(d));
  out.ratio1 = u * v / out.disjunct1;
  out.ratio2 = u * u * u * v * v / out.disjunct2;
  return out;
}

bool is_subgroup(const FpSet& g) {
  if (g.empty() || !g.contains(1)) return false;
  if (g.field()->group_order() % g.size() != 0) return false;
  const auto& f = *g.field();
  for (Residue x : g) {
    for (Residue y : g) {
      if (!g.contains(f.mul(x, y))) return false;
    }
  }
  return true;
}

SubgroupSumset subgroup_sumset_check(const FpSet& g, const FpSet& s) {
  require_same_field(g.field(), s.field());
  if (!is_subgroup(g)) throw Error(ErrorCode::kNotSubgroup, "G is not a multiplicative subgroup");
  guard_ops(card(g) * card(s));
  SubgroupSumset out;
  out.size = sumset(g, s).size();
  out.rhs = eq113_rhs(g.p(), card(s), card(g));
  return out;
}

Spectrum spectrum_abc_plus_d(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d) {
  require_same_field(a.field(), d.field());
  const Spectrum abc =
      multiplicative_convolution(multiplicative_convolution(set_spectrum(a), set_spectrum(b)),
                                 set_spectrum(c));
  const auto& f = *a.field();
  guard_ops(static_cast<double>(f.p()) * card(d));
  Spectrum out{a.field(), std::vector<std::uint64_t>(f.p(), 0)};
  for (Residue mu = 0; mu < f.p(); ++mu) {
    const std::uint64_t m = abc.counts[mu];
    if (m == 0) continue;
    for (Residue x : d) out.counts[f.add(mu, x)] += m;
  }
  return out;
}

Count count_solutions_abcde(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d,
                            const ResidueSet& e) {
  require_same_field(a.field(), e.field());
  const Spectrum j = spectrum_abc_plus_d(a, b, c, d);
  Count total = 0;
  for (Residue x : e.elems()) total += j.counts[x];
  return total;
}

Count count_solutions_abcde_complement(const FpSet& a, const FpSet& b, const FpSet& c,
                                       const FpSet& d) {
  return count_solutions_abcde(a, b, c, d, image_abc_plus_d_set(a, b, c, d).complement());
}

Count second_moment_J_eta(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d) {
  const Spectrum j = spectrum_abc_plus_d(a, b, c, d);
  const std::uint64_t expected =
      static_cast<std::uint64_t>(a.size()) * b.size() * c.size() * d.size();
  if (j.total() != expected) {
    throw std::logic_error("sum_eta J(eta) != ABCD");
  }
  return j.second_moment();
}

}  // namespace trilab
