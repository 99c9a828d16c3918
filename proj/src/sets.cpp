#include "trilab/sets.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>

namespace trilab {
namespace {

std::vector<Residue> normalize(const Field& field, std::vector<Residue> elems) {
  const std::uint32_t p = field->p();
  for (auto& e : elems) e %= p;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

template <class Op>
ResidueSet combine(const Field& field, std::span<const Residue> a, std::span<const Residue> b,
                   Op op) {
  Bitmap bits(field->p());
  for (Residue x : a) {
    for (Residue y : b) bits.set(op(x, y));
  }
  return ResidueSet(field, bits.to_vector());
}

std::uint64_t parse_uint(std::string_view text, std::string_view spec) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw Error(ErrorCode::kConfigError,
                "bad number '" + std::string(text) + "' in set spec '" + std::string(spec) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::complex<double> draw_weight(SplitMix64& rng, WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::kUnit:
      return {1.0, 0.0};
    case WeightScheme::kRandomUnimodular: {
      const double theta = 2.0 * std::numbers::pi * rng.uniform();
      return {std::cos(theta), std::sin(theta)};
    }
    case WeightScheme::kRandomDisc: {
      const double r = std::sqrt(rng.uniform());
      const double theta = 2.0 * std::numbers::pi * rng.uniform();
      return {r * std::cos(theta), r * std::sin(theta)};
    }
  }
  return {1.0, 0.0};
}

void check_weights(std::span<const std::complex<double>> w) {
  for (const auto& v : w) {
    if (!(std::abs(v) <= 1.0 + kWeightSlack)) {
      throw Error(ErrorCode::kInvalidArgument, "weight exceeds 1 in modulus");
    }
  }
}

}  // namespace

FpSet::FpSet(Field field, std::vector<Residue> elems) : field_(std::move(field)) {
  elems_ = normalize(field_, std::move(elems));
  if (!elems_.empty() && elems_.front() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "FpSet may not contain 0");
  }
}

bool FpSet::contains(Residue a) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), a);
}

ResidueSet::ResidueSet(Field field, std::vector<Residue> elems) : field_(std::move(field)) {
  elems_ = normalize(field_, std::move(elems));
}

bool ResidueSet::contains(Residue a) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), a);
}

ResidueSet::Stripped ResidueSet::strip_zero() const {
  Stripped out;
  out.had_zero = contains_zero();
  std::vector<Residue> rest(elems_.begin() + (out.had_zero ? 1 : 0), elems_.end());
  out.set = FpSet(field_, std::move(rest));
  return out;
}

ResidueSet ResidueSet::complement() const {
  std::vector<Residue> out;
  out.reserve(field_->p() - elems_.size());
  std::size_t i = 0;
  for (Residue a = 0; a < field_->p(); ++a) {
    if (i < elems_.size() && elems_[i] == a) {
      ++i;
    } else {
      out.push_back(a);
    }
  }
  return ResidueSet(field_, std::move(out));
}

ResidueSet as_residue_set(const FpSet& set) {
  return ResidueSet(set.field(), std::vector<Residue>(set.begin(), set.end()));
}

void Bitmap::merge(const Bitmap& other) noexcept {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
}

std::size_t Bitmap::count() const noexcept {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Residue> Bitmap::to_vector() const {
  std::vector<Residue> out;
  for (Residue a = 0; a < p_; ++a) {
    if (test(a)) out.push_back(a);
  }
  return out;
}

void require_same_field(const Field& a, const Field& b) {
  if (!a || !b || a->p() != b->p()) {
    throw Error(ErrorCode::kCtxMismatch, "sets live in different fields");
  }
}

ResidueSet sumset(const FpSet& a, const FpSet& b) {
  require_same_field(a.field(), b.field());
  const auto& f = *a.field();
  return combine(a.field(), a.elems(), b.elems(), [&f](Residue x, Residue y) { return f.add(x, y); });
}

ResidueSet diffset(const FpSet& a, const FpSet& b) {
  require_same_field(a.field(), b.field());
  const auto& f = *a.field();
  return combine(a.field(), a.elems(), b.elems(), [&f](Residue x, Residue y) { return f.sub(x, y); });
}

ResidueSet productset(const FpSet& a, const FpSet& b) {
  require_same_field(a.field(), b.field());
  const auto& f = *a.field();
  return combine(a.field(), a.elems(), b.elems(), [&f](Residue x, Residue y) { return f.mul(x, y); });
}

ResidueSet sumset(const ResidueSet& a, const ResidueSet& b) {
  require_same_field(a.field(), b.field());
  const auto& f = *a.field();
  return combine(a.field(), a.elems(), b.elems(), [&f](Residue x, Residue y) { return f.add(x, y); });
}

ResidueSet productset(const ResidueSet& a, const ResidueSet& b) {
  require_same_field(a.field(), b.field());
  const auto& f = *a.field();
  return combine(a.field(), a.elems(), b.elems(), [&f](Residue x, Residue y) { return f.mul(x, y); });
}

ResidueSet powerset_k(const FpSet& a, std::uint32_t k) { return powerset_k(as_residue_set(a), k); }

ResidueSet powerset_k(const ResidueSet& a, std::uint32_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "power must be >= 1");
  std::vector<Residue> out;
  out.reserve(a.size());
  for (Residue x : a.elems()) out.push_back(a.field()->pow(x, k));
  return ResidueSet(a.field(), std::move(out));
}

std::vector<Residue> random_permutation(const Field& field, std::uint64_t seed) {
  const std::uint32_t n = field->group_order();
  std::vector<Residue> pool(n);
  for (std::uint32_t i = 0; i < n; ++i) pool[i] = i + 1;
  SplitMix64 rng(seed);
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    const auto j = i + static_cast<std::uint32_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  return pool;
}

FpSet gen_random(const Field& field, std::size_t size, std::uint64_t seed) {
  const std::uint32_t n = field->group_order();
  if (size > n) {
    throw Error(ErrorCode::kSizeTooLarge,
                "random set of size " + std::to_string(size) + " in F_" + std::to_string(field->p()));
  }
  // Partial Fisher-Yates over 1..p-1; the first `size` draws match random_permutation.
  std::vector<Residue> pool(n);
  for (std::uint32_t i = 0; i < n; ++i) pool[i] = i + 1;
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < size && i + 1 < n; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  return FpSet(field, std::move(pool));
}

FpSet gen_interval(const Field& field, Residue start, std::size_t len) {
  const std::uint32_t p = field->p();
  if (len > p - 1) {
    throw Error(ErrorCode::kSizeTooLarge, "interval longer than p-1");
  }
  std::vector<Residue> out;
  out.reserve(len);
  Residue x = start % p;
  while (out.size() < len) {
    if (x != 0) out.push_back(x);
    x = x + 1 == p ? 0 : x + 1;
  }
  return FpSet(field, std::move(out));
}

FpSet gen_geometric(const Field& field, Residue base, std::size_t len) {
  base %= field->p();
  if (base == 0) throw Error(ErrorCode::kInvalidArgument, "geometric base must be nonzero");
  std::vector<Residue> out;
  out.reserve(len);
  Residue x = base;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(x);
    x = field->mul(x, base);
  }
  FpSet set(field, std::move(out));
  if (set.size() != len) {
    throw Error(ErrorCode::kSizeTooLarge, "geometric progression of " + std::to_string(base) +
                                              " repeats before " + std::to_string(len) + " terms");
  }
  return set;
}

FpSet parse_set_spec(const Field& field, std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kConfigError, "set spec without kind: '" + std::string(spec) + "'");
  }
  const auto kind = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  try {
    if (kind == "explicit") {
      if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}') {
        throw Error(ErrorCode::kConfigError, "explicit set must be {a,b,...}");
      }
      const auto body = trim(rest.substr(1, rest.size() - 2));
      std::vector<Residue> elems;
      if (!body.empty()) {
        for (auto tok : split(body, ',')) {
          const auto v = parse_uint(trim(tok), spec);
          if (v % field->p() == 0) {
            throw Error(ErrorCode::kConfigError, "explicit set contains 0 mod p");
          }
          elems.push_back(static_cast<Residue>(v % field->p()));
        }
      }
      return FpSet(field, std::move(elems));
    }
    const auto args = split(rest, ':');
    auto arg = [&](std::size_t i) { return parse_uint(args[i], spec); };
    if (kind == "random" && args.size() == 2) {
      return gen_random(field, arg(0), arg(1));
    }
    if (kind == "interval" && args.size() == 2) {
      return gen_interval(field, static_cast<Residue>(arg(0) % field->p()), arg(1));
    }
    if (kind == "subgroup" && args.size() == 1) {
      return subgroup(field, static_cast<std::uint32_t>(arg(0)));
    }
    if (kind == "geom" && args.size() == 2) {
      return gen_geometric(field, static_cast<Residue>(arg(0) % field->p()), arg(1));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfigError) throw;
    throw Error(ErrorCode::kConfigError, "set spec '" + std::string(spec) + "': " + e.what());
  }
  throw Error(ErrorCode::kConfigError, "unrecognized set spec '" + std::string(spec) + "'");
}

WeightScheme parse_weight_scheme(std::string_view name) {
  if (name == "unit") return WeightScheme::kUnit;
  if (name == "random-unimodular") return WeightScheme::kRandomUnimodular;
  if (name == "random-disc") return WeightScheme::kRandomDisc;
  throw Error(ErrorCode::kConfigError, "unknown weight scheme '" + std::string(name) + "'");
}

std::string_view weight_scheme_name(WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::kUnit: return "unit";
    case WeightScheme::kRandomUnimodular: return "random-unimodular";
    case WeightScheme::kRandomDisc: return "random-disc";
  }
  return "unit";
}

WeightVec::WeightVec(FpSet base, std::vector<std::complex<double>> weights)
    : base_(std::move(base)), w_(std::move(weights)) {
  if (w_.size() != base_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "weight count differs from set size");
  }
  check_weights(w_);
}

WeightVec WeightVec::unit(FpSet base) { return constant(std::move(base), {1.0, 0.0}); }

WeightVec WeightVec::constant(FpSet base, std::complex<double> value) {
  std::vector<std::complex<double>> w(base.size(), value);
  return WeightVec(std::move(base), std::move(w));
}

WeightVec WeightVec::random(FpSet base, WeightScheme scheme, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::complex<double>> w(base.size());
  for (auto& v : w) v = draw_weight(rng, scheme);
  return WeightVec(std::move(base), std::move(w));
}

double WeightVec::energy() const noexcept {
  double total = 0.0;
  for (const auto& v : w_) total += std::norm(v);
  return total;
}

std::size_t WeightTensor::entry_count(const std::vector<FpSet>& axes, std::size_t omitted) {
  if (omitted >= axes.size()) {
    throw Error(ErrorCode::kBadTensorShape, "omitted coordinate out of range");
  }
  std::size_t total = 1;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    if (a == omitted) continue;
    if (axes[a].size() != 0 && total > kMaxEntries / axes[a].size()) {
      throw Error(ErrorCode::kSizeTooLarge, "weight tensor exceeds 1e8 entries");
    }
    total *= axes[a].size();
  }
  if (total > kMaxEntries) throw Error(ErrorCode::kSizeTooLarge, "weight tensor exceeds 1e8 entries");
  return total;
}

WeightTensor::WeightTensor(std::vector<FpSet> axes, std::size_t omitted,
                           std::vector<std::complex<double>> values)
    : axes_(std::move(axes)), omitted_(omitted), w_(std::move(values)) {
  if (w_.size() != entry_count(axes_, omitted_)) {
    throw Error(ErrorCode::kBadTensorShape, "tensor value count does not match its axes");
  }
  check_weights(w_);
}

WeightTensor WeightTensor::from_function(
    std::vector<FpSet> axes, std::size_t omitted,
    const std::function<std::complex<double>(std::span<const Residue>)>& fn) {
  const std::size_t total = entry_count(axes, omitted);
  std::vector<std::complex<double>> values;
  values.reserve(total);
  const std::size_t n = axes.size();
  std::vector<std::size_t> index(n, 0);
  std::vector<Residue> tuple(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (std::size_t a = 0; a < n; ++a) tuple[a] = a == omitted ? 0 : axes[a][index[a]];
    values.push_back(fn(tuple));
    // odometer over non-omitted axes, last axis fastest
    for (std::size_t a = n; a-- > 0;) {
      if (a == omitted) continue;
      if (++index[a] < axes[a].size()) break;
      index[a] = 0;
    }
  }
  return WeightTensor(std::move(axes), omitted, std::move(values));
}

WeightTensor WeightTensor::constant(std::vector<FpSet> axes, std::size_t omitted,
                                    std::complex<double> value) {
  const std::size_t total = entry_count(axes, omitted);
  return WeightTensor(std::move(axes), omitted, std::vector<std::complex<double>>(total, value));
}

WeightTensor WeightTensor::random(std::vector<FpSet> axes, std::size_t omitted,
                                  WeightScheme scheme, std::uint64_t seed) {
  const std::size_t total = entry_count(axes, omitted);
  SplitMix64 rng(seed);
  std::vector<std::complex<double>> values(total);
  for (auto& v : values) v = draw_weight(rng, scheme);
  return WeightTensor(std::move(axes), omitted, std::move(values));
}

std::string describe(const FpSet& set) {
  std::string out = "explicit:{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i]);
  }
  out += '}';
  return out;
}

}  // namespace trilab
