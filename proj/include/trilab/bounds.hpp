#pragma once

// Closed-form bound evaluators and implied-constant auditing.
//
// A bound is a sum of monomials c * k * p^(a + eps) * M^m * prod card_i^(b_i),
// evaluated in the log domain. Every O/<< bound is evaluated at c = 1; the
// measured ratio lhs/rhs is then an empirical estimate of the implied constant.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace trilab {

inline constexpr std::size_t kMaxCards = 5;

struct BoundTerm {
  double coeff = 1.0;
  double p_exp = 0.0;
  std::array<double, kMaxCards> card_exp{};
  double max_exp = 0.0;  // exponent on M = max of the cardinalities
};

struct BoundSpec {
  std::string name;
  std::size_t arity = 0;  // number of cardinality arguments
  std::vector<BoundTerm> terms;
  double constant = 1.0;
  double epsilon = 0.0;  // added to every p exponent (o(1) terms)

  double evaluate(double p, std::span<const double> cards) const;
};

// Named specs; cardinalities in the order the bound is written.
BoundSpec bound_thm11();   // (X, Y, Z)      p^1/4 X^3/4 Y^3/4 Z^7/8
BoundSpec bound_thm12();   // (W, X, Y, Z)   p^1/8 W^7/8 X^7/8 Y^15/16 Z^15/16
BoundSpec bound_thm13();   // (X, Y, Z)      p^1/8 X^7/8 Y^29/32 Z^29/32
BoundSpec bound_thm14();   // (W, X, Y, Z)   p^1/16 W^15/16 (XY)^61/64 Z^31/32
BoundSpec bound_trivial(); // (X, Y, Z)      p^1/2 X^1/2 Y^1/2 Z
BoundSpec bound_bg(double epsilon = 0.0);  // (X, Y, Z)  (XYZ)^13/16 p^(5/18 + eps)
BoundSpec bound_lemma23();  // (U, V, W)  U^3/2 V^3/2 W^3/2 + M UVW, M = max
BoundSpec bound_cor24();    // (U, V, W)  U^2V^2W^2/p + lemma23
BoundSpec bound_lemma28();  // (U)        U^6/p + U^9/2
BoundSpec bound_cor29();    // (U)        U^8/p + U^13/2

/// Throws kOrderError unless X >= Y >= Z >= 1.
double thm11_rhs(double p, double x, double y, double z, double c = 1.0);

struct FlaggedValue {
  double value = 0.0;
  bool hypothesis_ok = true;
};

FlaggedValue thm12_rhs(double p, double w, double x, double y, double z, double c = 1.0);
FlaggedValue thm13_rhs(double p, double x, double y, double z, double c = 1.0);
FlaggedValue thm14_rhs(double p, double w, double x, double y, double z, double c = 1.0);
double trivial_rhs(double p, double x, double y, double z);
double bg_rhs(double p, double x, double y, double z, double epsilon = 0.0);

struct CountingBounds {
  double lemma23 = 0.0;
  double cor24 = 0.0;
  double lemma28 = 0.0;  // at U
  double cor29 = 0.0;    // at U
};

CountingBounds counting_bounds(double p, double u, double v, double w);

// Image-set bounds from the applications, all at c = 1.
double thm15_error_term(double p, double a, double b, double c, double d);
double thm15_lower(double p, double a, double b, double c, double d);
double thm17_error_term(double p, double a, double b, double c, double d);
double thm17_lower(double p, double a, double b, double c, double d);
/// UV >> pA: returns pA.
double thm19_disjunct1(double p, double a);
/// U^3 V^2 >> A^4 B C^1/2 D^2 / p: returns the right side.
double thm19_disjunct2(double p, double a, double b, double c, double d);
double eq113_rhs(double p, double s, double t);
/// A B C^1/2 D^2 E^2 / p^5
double cor16_quantity(double p, double a, double b, double c, double d, double e);
/// A B^3/4 C^3/4 D^4 E^4 / p^9
double cor18_quantity(double p, double a, double b, double c, double d, double e);

struct AuditRecord {
  std::string bound;
  std::uint32_t p = 0;
  std::vector<double> cards;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  bool hypothesis_ok = true;
};

/// Evaluates `bound` at (p, cards) and records lhs/rhs. Throws kDegenerateBound
/// when the bound value is not positive.
AuditRecord audit(double lhs, const BoundSpec& bound, std::uint32_t p, std::span<const double> cards,
                  std::uint64_t seed = 0);
/// Same, for a bound value computed elsewhere.
AuditRecord audit_value(double lhs, const std::string& bound, double rhs, std::uint32_t p,
                        std::span<const double> cards, std::uint64_t seed = 0);

struct RatioSummary {
  std::size_t count = 0;
  double max = 0.0;
  double mean = 0.0;
  double min = 0.0;
};

RatioSummary summarize(std::span<const double> ratios);
/// Per-bound summaries, keyed by bound name.
std::map<std::string, RatioSummary> summarize_by_bound(std::span<const AuditRecord> records);

}  // namespace trilab
