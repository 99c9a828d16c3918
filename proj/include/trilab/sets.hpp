#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trilab/ffield.hpp"

namespace trilab {

/// Finite subset of F_p^*, stored strictly increasing. Zero is rejected.
class FpSet {
 public:
  FpSet() = default;
  /// Reduces, sorts and deduplicates; throws kInvalidArgument if 0 is present.
  FpSet(Field field, std::vector<Residue> elems);

  const Field& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_ ? field_->p() : 0; }
  std::span<const Residue> elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  Residue operator[](std::size_t i) const noexcept { return elems_[i]; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }
  bool contains(Residue a) const noexcept;

  friend bool operator==(const FpSet& a, const FpSet& b) {
    return a.p() == b.p() && a.elems_ == b.elems_;
  }

 private:
  Field field_;
  std::vector<Residue> elems_;
};

/// Result of set algebra: a subset of F_p that may contain 0.
class ResidueSet {
 public:
  ResidueSet() = default;
  ResidueSet(Field field, std::vector<Residue> elems);

  const Field& field() const noexcept { return field_; }
  std::span<const Residue> elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool contains_zero() const noexcept { return !elems_.empty() && elems_.front() == 0; }
  bool contains(Residue a) const noexcept;

  struct Stripped {
    FpSet set;
    bool had_zero = false;
  };
  /// Drops 0 and reports whether it was there.
  Stripped strip_zero() const;

  /// F_p minus this set.
  ResidueSet complement() const;

  friend bool operator==(const ResidueSet& a, const ResidueSet& b) {
    return a.elems_ == b.elems_;
  }

 private:
  Field field_;
  std::vector<Residue> elems_;
};

ResidueSet as_residue_set(const FpSet& set);

/// Membership bitmap over F_p used for image-set enumeration.
class Bitmap {
 public:
  explicit Bitmap(std::uint32_t p) : bits_((p + 63) / 64, 0), p_(p) {}
  void set(Residue a) noexcept { bits_[a >> 6] |= 1ULL << (a & 63); }
  bool test(Residue a) const noexcept { return (bits_[a >> 6] >> (a & 63)) & 1ULL; }
  void merge(const Bitmap& other) noexcept;
  std::size_t count() const noexcept;
  std::vector<Residue> to_vector() const;

 private:
  std::vector<std::uint64_t> bits_;
  std::uint32_t p_;
};

// Set algebra. Inputs must share a field (kCtxMismatch otherwise).
ResidueSet sumset(const FpSet& a, const FpSet& b);
ResidueSet diffset(const FpSet& a, const FpSet& b);
ResidueSet productset(const FpSet& a, const FpSet& b);
ResidueSet sumset(const ResidueSet& a, const ResidueSet& b);
ResidueSet productset(const ResidueSet& a, const ResidueSet& b);
/// {a^k : a in A}, not the k-fold product set.
ResidueSet powerset_k(const FpSet& a, std::uint32_t k);
ResidueSet powerset_k(const ResidueSet& a, std::uint32_t k);

void require_same_field(const Field& a, const Field& b);

// Experiment corpora. All are pure functions of their arguments.

/// splitmix64 (Steele, Lea, Flood 2014). Pinned so sets reproduce bit-exactly.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform-ish integer in [0, bound) by multiply-high.
  std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }
  /// Double in [0, 1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

FpSet gen_random(const Field& field, std::size_t size, std::uint64_t seed);
FpSet gen_interval(const Field& field, Residue start, std::size_t len);
FpSet gen_geometric(const Field& field, Residue base, std::size_t len);
/// Random ordering of F_p^*; prefixes give nested random sets.
std::vector<Residue> random_permutation(const Field& field, std::uint64_t seed);

/// Parses `random:<size>:<seed>`, `interval:<start>:<len>`, `subgroup:<T>`,
/// `geom:<base>:<len>` and `explicit:{a,b,c}`. Errors are kConfigError.
FpSet parse_set_spec(const Field& field, std::string_view spec);

// Weights.

inline constexpr double kWeightSlack = 1e-12;

enum class WeightScheme { kUnit, kRandomUnimodular, kRandomDisc };
WeightScheme parse_weight_scheme(std::string_view name);
std::string_view weight_scheme_name(WeightScheme scheme);

/// Complex weights on a set, max |w| <= 1.
class WeightVec {
 public:
  WeightVec() = default;
  WeightVec(FpSet base, std::vector<std::complex<double>> weights);

  static WeightVec unit(FpSet base);
  static WeightVec constant(FpSet base, std::complex<double> value);
  static WeightVec random(FpSet base, WeightScheme scheme, std::uint64_t seed);

  const FpSet& base() const noexcept { return base_; }
  std::span<const std::complex<double>> weights() const noexcept { return w_; }
  std::size_t size() const noexcept { return w_.size(); }
  std::complex<double> operator[](std::size_t i) const noexcept { return w_[i]; }
  /// sum |w|^2
  double energy() const noexcept;

 private:
  FpSet base_;
  std::vector<std::complex<double>> w_;
};

/// Weight on coordinate tuples over `axes` that ignores coordinate `omitted`.
/// Stored densely, row-major over the remaining axes in order.
class WeightTensor {
 public:
  static constexpr std::size_t kMaxEntries = 100'000'000;

  WeightTensor() = default;
  WeightTensor(std::vector<FpSet> axes, std::size_t omitted,
               std::vector<std::complex<double>> values);

  /// Samples fn on every tuple of the non-omitted coordinates. fn receives the
  /// full residue tuple with the omitted slot set to 0.
  static WeightTensor from_function(
      std::vector<FpSet> axes, std::size_t omitted,
      const std::function<std::complex<double>(std::span<const Residue>)>& fn);
  static WeightTensor constant(std::vector<FpSet> axes, std::size_t omitted,
                               std::complex<double> value);
  static WeightTensor random(std::vector<FpSet> axes, std::size_t omitted,
                             WeightScheme scheme, std::uint64_t seed);

  std::size_t arity() const noexcept { return axes_.size(); }
  std::size_t omitted() const noexcept { return omitted_; }
  const std::vector<FpSet>& axes() const noexcept { return axes_; }
  std::span<const std::complex<double>> values() const noexcept { return w_; }

  /// Weight at a full tuple of per-axis indices; index `omitted` is ignored.
  std::complex<double> at(std::span<const std::size_t> index) const noexcept {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < axes_.size(); ++a) {
      if (a == omitted_) continue;
      flat = flat * axes_[a].size() + index[a];
    }
    return w_[flat];
  }

 private:
  static std::size_t entry_count(const std::vector<FpSet>& axes, std::size_t omitted);

  std::vector<FpSet> axes_;
  std::size_t omitted_ = 0;
  std::vector<std::complex<double>> w_;
};

std::string describe(const FpSet& set);

}  // namespace trilab
