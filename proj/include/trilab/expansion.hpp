#pragma once

// Image sets of sum-product expressions and the counting quantities behind
// their lower bounds: |ABC + D|, |(A+B+C)^3 + D|, covering of F_p, the
// |ABC| / |A+D| dichotomy, and |G + S| for multiplicative subgroups G.

#include <cstddef>
#include <cstdint>

#include "trilab/energies.hpp"
#include "trilab/sets.hpp"

namespace trilab {

/// Elementary-operation budget for one image-set computation.
inline constexpr double kImageOpLimit = 1e9;

struct ImageResult {
  std::size_t size = 0;
  double error_term = 0.0;  // O(...) term of the asymptotic formula at c = 1
  double lower = 0.0;       // lower bound at c = 1
  bool hypothesis_ok = true;
};

/// ABC + D as a residue set.
ResidueSet image_abc_plus_d_set(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d);
/// (A+B+C)^3 + D as a residue set; 0 is kept in the intermediate sumset.
ResidueSet image_cube_sum_set(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d);

/// Throws kOrderError unless A >= B >= C.
ImageResult image_ABC_plus_D(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d);
/// hypothesis_ok is false unless p^(2/3) >= A >= B >= C.
ImageResult image_cube_sum(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d);

enum class CoverShape {
  kProduct,  // ABC + D + E
  kCube,     // (A+B+C)^3 + D + E
};

struct CoverResult {
  bool covers = false;
  std::size_t image_size = 0;
  /// A B C^1/2 D^2 E^2 / p^5 or A B^3/4 C^3/4 D^4 E^4 / p^9.
  double hypothesis_quantity = 0.0;
};

CoverResult covers_field(CoverShape shape, const FpSet& a, const FpSet& b, const FpSet& c,
                         const FpSet& d, const FpSet& e);

struct C0Estimate {
  std::size_t threshold_size = 0;  // smallest common size that covers F_p
  double scale = 0.0;              // threshold_size / (p - 1)
  double quantity = 0.0;           // hypothesis quantity at the threshold
};

/// Bisects the common size k of five nested random sets (prefixes of seeded
/// random orderings of F_p^*) for the smallest k with coverage.
C0Estimate c0_threshold_search(const Field& field, CoverShape shape, std::uint64_t seed);

struct GaraevResult {
  std::size_t u = 0;  // |ABC|
  std::size_t v = 0;  // |A + D|
  double disjunct1 = 0.0;  // p A, compared with U V
  double disjunct2 = 0.0;  // A^4 B C^1/2 D^2 / p, compared with U^3 V^2
  double ratio1 = 0.0;     // U V / disjunct1
  double ratio2 = 0.0;     // U^3 V^2 / disjunct2
  bool holds1() const { return ratio1 >= 1.0; }
  bool holds2() const { return ratio2 >= 1.0; }
  /// Largest c with UV >= c pA or U^3V^2 >= c A^4 B C^1/2 D^2 / p.
  double dichotomy_constant() const { return ratio1 > ratio2 ? ratio1 : ratio2; }
};

GaraevResult garaev_UV(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d);

bool is_subgroup(const FpSet& g);

struct SubgroupSumset {
  std::size_t size = 0;
  double rhs = 0.0;  // min{p, S T^5/4 p^-1/2}
};

/// Throws kNotSubgroup unless G is a multiplicative subgroup.
SubgroupSumset subgroup_sumset_check(const FpSet& g, const FpSet& s);

/// J(eta) = #{(a, b, c, d) : abc + d = eta}.
Spectrum spectrum_abc_plus_d(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d);

/// #{(a, b, c, d, e) : abc + d - e = 0}, e ranging over a subset of F_p.
Count count_solutions_abcde(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d,
                            const ResidueSet& e);
/// Same with E = F_p \ (ABC + D), which must give 0.
Count count_solutions_abcde_complement(const FpSet& a, const FpSet& b, const FpSet& c,
                                       const FpSet& d);

/// sum_eta J(eta)^2; checks sum_eta J(eta) = ABCD on the way.
Count second_moment_J_eta(const FpSet& a, const FpSet& b, const FpSet& c, const FpSet& d);

}  // namespace trilab
