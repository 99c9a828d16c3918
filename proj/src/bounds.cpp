#include "trilab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trilab/error.hpp"

namespace trilab {
namespace {

BoundTerm term(double p_exp, std::initializer_list<double> exps, double max_exp = 0.0) {
  BoundTerm t;
  t.max_exp = max_exp;
  t.p_exp = p_exp;
  std::size_t i = 0;
  for (double e : exps) t.card_exp[i++] = e;
  return t;
}

double checked(double v, const char* what) {
  if (!(v > 0.0)) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be positive");
  return v;
}

}  // namespace

double BoundSpec::evaluate(double p, std::span<const double> cards) const {
  if (cards.size() != arity) {
    throw Error(ErrorCode::kInvalidArgument, name + " expects " + std::to_string(arity) + " cardinalities");
  }
  const double log_p = std::log(checked(p, "p"));
  std::array<double, kMaxCards> log_c{};
  double log_m = 0.0;
  for (std::size_t i = 0; i < arity; ++i) {
    log_c[i] = std::log(checked(cards[i], "cardinality"));
    log_m = i == 0 ? log_c[i] : std::max(log_m, log_c[i]);
  }
  double total = 0.0;
  for (const auto& t : terms) {
    double e = (t.p_exp + epsilon) * log_p + t.max_exp * log_m;
    for (std::size_t i = 0; i < arity; ++i) e += t.card_exp[i] * log_c[i];
    total += t.coeff * std::exp(e);
  }
  return constant * total;
}

BoundSpec bound_thm11() { return {"thm11", 3, {term(1.0 / 4, {3.0 / 4, 3.0 / 4, 7.0 / 8})}}; }

BoundSpec bound_thm12() {
  return {"thm12", 4, {term(1.0 / 8, {7.0 / 8, 7.0 / 8, 15.0 / 16, 15.0 / 16})}};
}

BoundSpec bound_thm13() { return {"thm13", 3, {term(1.0 / 8, {7.0 / 8, 29.0 / 32, 29.0 / 32})}}; }

BoundSpec bound_thm14() {
  return {"thm14", 4, {term(1.0 / 16, {15.0 / 16, 61.0 / 64, 61.0 / 64, 31.0 / 32})}};
}

BoundSpec bound_trivial() { return {"trivial", 3, {term(1.0 / 2, {1.0 / 2, 1.0 / 2, 1.0})}}; }

BoundSpec bound_bg(double epsilon) {
  BoundSpec s{"bg", 3, {term(5.0 / 18, {13.0 / 16, 13.0 / 16, 13.0 / 16})}};
  s.epsilon = epsilon;
  return s;
}

BoundSpec bound_lemma23() {
  return {"lemma23", 3, {term(0.0, {1.5, 1.5, 1.5}), term(0.0, {1.0, 1.0, 1.0}, 1.0)}};
}

BoundSpec bound_cor24() {
  return {"cor24",
          3,
          {term(-1.0, {2.0, 2.0, 2.0}), term(0.0, {1.5, 1.5, 1.5}), term(0.0, {1.0, 1.0, 1.0}, 1.0)}};
}

BoundSpec bound_lemma28() { return {"lemma28", 1, {term(-1.0, {6.0}), term(0.0, {4.5})}}; }

BoundSpec bound_cor29() { return {"cor29", 1, {term(-1.0, {8.0}), term(0.0, {6.5})}}; }

double thm11_rhs(double p, double x, double y, double z, double c) {
  if (!(x >= y && y >= z && z >= 1.0)) {
    throw Error(ErrorCode::kOrderError, "need X >= Y >= Z >= 1");
  }
  auto spec = bound_thm11();
  spec.constant = c;
  const double cards[] = {x, y, z};
  return spec.evaluate(p, cards);
}

FlaggedValue thm12_rhs(double p, double w, double x, double y, double z, double c) {
  auto spec = bound_thm12();
  spec.constant = c;
  const double cards[] = {w, x, y, z};
  return {spec.evaluate(p, cards), std::cbrt(p * p) >= w && w >= x && x >= y && y >= z};
}

FlaggedValue thm13_rhs(double p, double x, double y, double z, double c) {
  auto spec = bound_thm13();
  spec.constant = c;
  const double cards[] = {x, y, z};
  return {spec.evaluate(p, cards), x >= y && y >= z};
}

FlaggedValue thm14_rhs(double p, double w, double x, double y, double z, double c) {
  auto spec = bound_thm14();
  spec.constant = c;
  const double cards[] = {w, x, y, z};
  return {spec.evaluate(p, cards), std::cbrt(p * p) >= w && w >= x && x >= y && y >= z};
}

double trivial_rhs(double p, double x, double y, double z) {
  const double cards[] = {x, y, z};
  return bound_trivial().evaluate(p, cards);
}

double bg_rhs(double p, double x, double y, double z, double epsilon) {
  const double cards[] = {x, y, z};
  return bound_bg(epsilon).evaluate(p, cards);
}

CountingBounds counting_bounds(double p, double u, double v, double w) {
  const double uvw[] = {u, v, w};
  const double single[] = {u};
  CountingBounds out;
  out.lemma23 = bound_lemma23().evaluate(p, uvw);
  out.cor24 = bound_cor24().evaluate(p, uvw);
  out.lemma28 = bound_lemma28().evaluate(p, single);
  out.cor29 = bound_cor29().evaluate(p, single);
  return out;
}

double thm15_error_term(double p, double a, double b, double c, double d) {
  return std::pow(p, 2.5) * std::pow(a, -0.5) * std::pow(b, -0.5) * std::pow(c, -0.25) / d;
}

double thm15_lower(double p, double a, double b, double c, double d) {
  return std::min(p, std::pow(p, -0.5) * std::sqrt(a * b) * std::pow(c, 0.25) * d);
}

double thm17_error_term(double p, double a, double b, double c, double d) {
  return std::pow(p, 2.25) * std::pow(a, -0.25) * std::pow(b, -3.0 / 16) * std::pow(c, -3.0 / 16) / d;
}

double thm17_lower(double p, double a, double b, double c, double d) {
  return std::min(p, std::pow(p, -0.25) * std::pow(a, 0.25) * std::pow(b, 3.0 / 16) *
                         std::pow(c, 3.0 / 16) * d);
}

double thm19_disjunct1(double p, double a) { return p * a; }

double thm19_disjunct2(double p, double a, double b, double c, double d) {
  return std::pow(a, 4.0) * b * std::sqrt(c) * d * d / p;
}

double eq113_rhs(double p, double s, double t) {
  return std::min(p, s * std::pow(t, 1.25) / std::sqrt(p));
}

double cor16_quantity(double p, double a, double b, double c, double d, double e) {
  return a * b * std::sqrt(c) * d * d * e * e / std::pow(p, 5.0);
}

double cor18_quantity(double p, double a, double b, double c, double d, double e) {
  return a * std::pow(b, 0.75) * std::pow(c, 0.75) * std::pow(d, 4.0) * std::pow(e, 4.0) /
         std::pow(p, 9.0);
}

AuditRecord audit_value(double lhs, const std::string& bound, double rhs, std::uint32_t p,
                        std::span<const double> cards, std::uint64_t seed) {
  if (!(rhs > 0.0) || !std::isfinite(rhs)) {
    throw Error(ErrorCode::kDegenerateBound, bound + " evaluated to " + std::to_string(rhs));
  }
  AuditRecord r;
  r.bound = bound;
  r.p = p;
  r.cards.assign(cards.begin(), cards.end());
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = lhs / rhs;
  r.seed = seed;
  return r;
}

AuditRecord audit(double lhs, const BoundSpec& bound, std::uint32_t p,
                  std::span<const double> cards, std::uint64_t seed) {
  return audit_value(lhs, bound.name, bound.evaluate(p, cards), p, cards, seed);
}

RatioSummary summarize(std::span<const double> ratios) {
  RatioSummary s;
  if (ratios.empty()) return s;
  s.count = ratios.size();
  s.max = -std::numeric_limits<double>::infinity();
  s.min = std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (double r : ratios) {
    s.max = std::max(s.max, r);
    s.min = std::min(s.min, r);
    total += r;
  }
  s.mean = total / static_cast<double>(ratios.size());
  return s;
}

std::map<std::string, RatioSummary> summarize_by_bound(std::span<const AuditRecord> records) {
  std::map<std::string, std::vector<double>> grouped;
  for (const auto& r : records) grouped[r.bound].push_back(r.ratio);
  std::map<std::string, RatioSummary> out;
  for (const auto& [name, ratios] : grouped) out[name] = summarize(ratios);
  return out;
}

}  // namespace trilab
