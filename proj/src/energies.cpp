#include "trilab/energies.hpp"

#include <cmath>

#include "trilab/kernels.hpp"

namespace trilab {
namespace {

Spectrum empty_spectrum(const Field& field) { return {field, std::vector<std::uint64_t>(field->p(), 0)}; }

void guard_oracle(double tuples) {
  if (tuples > static_cast<double>(kOracleTupleLimit)) {
    throw Error(ErrorCode::kTooLarge, "oracle would enumerate more than 1e8 tuples");
  }
}

// Support of a spectrum as (nonzero value, count) pairs with dlog indices,
// ready for the character kernel.
struct LogSupport {
  std::vector<std::uint32_t> log_index;
  std::vector<double> weight;
  std::vector<double> zeros;
};

LogSupport nonzero_support(const Spectrum& s) {
  LogSupport out;
  const auto& f = *s.field;
  for (Residue a = 1; a < f.p(); ++a) {
    if (s.counts[a] == 0) continue;
    out.log_index.push_back(f.dlog(a));
    out.weight.push_back(static_cast<double>(s.counts[a]));
  }
  out.zeros.assign(out.weight.size(), 0.0);
  return out;
}

std::complex<double> char_transform(const FieldCtx& f, std::uint32_t j, const LogSupport& s) {
  return kernels::twisted_root_sum(f.multiplicative_roots(), j, s.log_index, s.weight, s.zeros);
}

}  // namespace

std::string_view energy_name(EnergyName name) {
  switch (name) {
    case EnergyName::kN: return "N";
    case EnergyName::kT: return "T";
    case EnergyName::kDx: return "Dx";
    case EnergyName::kEx: return "Ex";
    case EnergyName::kK: return "K";
  }
  return "?";
}

std::string_view method_name(CountMethod method) {
  return method == CountMethod::kOracle ? "oracle" : "fast";
}

std::uint64_t Spectrum::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

Count Spectrum::second_moment() const { return kernels::sum_of_squares(counts); }

Count Spectrum::second_moment_nonzero() const {
  return kernels::sum_of_squares(std::span<const std::uint64_t>(counts).subspan(1));
}

Spectrum set_spectrum(const FpSet& a) {
  Spectrum s = empty_spectrum(a.field());
  for (Residue x : a) s.counts[x] = 1;
  return s;
}

Spectrum difference_spectrum(const FpSet& a, const FpSet& b) {
  require_same_field(a.field(), b.field());
  Spectrum s = empty_spectrum(a.field());
  const auto& f = *a.field();
  for (Residue x : a) {
    for (Residue y : b) ++s.counts[f.sub(x, y)];
  }
  return s;
}

Spectrum multiplicative_convolution(const Spectrum& a, const Spectrum& b) {
  require_same_field(a.field, b.field);
  const auto& f = *a.field;
  Spectrum out = empty_spectrum(a.field);
  std::vector<Residue> supp_b;
  for (Residue y = 1; y < f.p(); ++y) {
    if (b.counts[y] != 0) supp_b.push_back(y);
  }
  for (Residue x = 1; x < f.p(); ++x) {
    const std::uint64_t ca = a.counts[x];
    if (ca == 0) continue;
    for (Residue y : supp_b) out.counts[f.mul(x, y)] += ca * b.counts[y];
  }
  const std::uint64_t ta = a.total();
  const std::uint64_t tb = b.total();
  out.counts[0] = a.counts[0] * tb + ta * b.counts[0] - a.counts[0] * b.counts[0];
  return out;
}

Spectrum spectrum_product_diff(const FpSet& u, const FpSet& v, const FpSet& w) {
  require_same_field(u.field(), v.field());
  return multiplicative_convolution(set_spectrum(u), difference_spectrum(v, w));
}

EnergyReport count_N(const FpSet& u, const FpSet& v, const FpSet& w, bool nonzero_only) {
  const Spectrum r = spectrum_product_diff(u, v, w);
  return {EnergyName::kN, nonzero_only ? r.second_moment_nonzero() : r.second_moment(),
          CountMethod::kFast};
}

EnergyReport oracle_N(const FpSet& u, const FpSet& v, const FpSet& w, bool nonzero_only) {
  require_same_field(u.field(), v.field());
  require_same_field(u.field(), w.field());
  const double uvw = static_cast<double>(u.size()) * v.size() * w.size();
  guard_oracle(uvw * uvw);
  const auto& f = *u.field();
  Count n = 0;
  for (Residue u1 : u)
    for (Residue v1 : v)
      for (Residue w1 : w) {
        const Residue lhs = f.mul(u1, f.sub(v1, w1));
        if (nonzero_only && lhs == 0) continue;
        for (Residue u2 : u)
          for (Residue v2 : v)
            for (Residue w2 : w) {
              if (f.mul(u2, f.sub(v2, w2)) == lhs) ++n;
            }
      }
  return {EnergyName::kN, n, CountMethod::kOracle};
}

EnergyReport count_T(const FpSet& u, TConvention conv) {
  const auto& f = *u.field();
  Spectrum rho = empty_spectrum(u.field());
  // rho(lambda) = sum_v #{(u1, u2) : u2 != v, (u1 - v)/(u2 - v) = lambda}
  for (Residue v : u) {
    for (Residue u2 : u) {
      if (u2 == v) continue;
      const Residue inv_den = f.inv(f.sub(u2, v));
      for (Residue u1 : u) ++rho.counts[f.mul(f.sub(u1, v), inv_den)];
    }
  }
  const Count value =
      conv == TConvention::kAllNonzero ? rho.second_moment_nonzero() : rho.second_moment();
  return {EnergyName::kT, value, CountMethod::kFast};
}

EnergyReport oracle_T(const FpSet& u, TConvention conv) {
  const double n = static_cast<double>(u.size());
  guard_oracle(std::pow(n, 6));
  const auto& f = *u.field();
  Count t = 0;
  for (Residue u1 : u)
    for (Residue u2 : u)
      for (Residue v : u) {
        if (u2 == v) continue;
        if (conv == TConvention::kAllNonzero && u1 == v) continue;
        for (Residue u3 : u)
          for (Residue u4 : u)
            for (Residue w : u) {
              if (u4 == w) continue;
              // (u1 - v)(u4 - w) = (u3 - w)(u2 - v)
              if (f.mul(f.sub(u1, v), f.sub(u4, w)) == f.mul(f.sub(u3, w), f.sub(u2, v))) ++t;
            }
      }
  return {EnergyName::kT, t, CountMethod::kOracle};
}

EnergyReport count_Dx(const FpSet& u) {
  const Spectrum d = difference_spectrum(u, u);
  return {EnergyName::kDx, multiplicative_convolution(d, d).second_moment(), CountMethod::kFast};
}

EnergyReport oracle_Dx(const FpSet& u) {
  guard_oracle(std::pow(static_cast<double>(u.size()), 8));
  const auto& f = *u.field();
  const auto e = u.elems();
  Count n = 0;
  for (Residue u1 : e)
    for (Residue v1 : e)
      for (Residue u2 : e)
        for (Residue v2 : e) {
          const Residue lhs = f.mul(f.sub(u1, v1), f.sub(u2, v2));
          for (Residue u3 : e)
            for (Residue v3 : e)
              for (Residue u4 : e)
                for (Residue v4 : e) {
                  if (f.mul(f.sub(u3, v3), f.sub(u4, v4)) == lhs) ++n;
                }
        }
  return {EnergyName::kDx, n, CountMethod::kOracle};
}

EnergyReport count_Ex(const FpSet& u) {
  const Spectrum s = set_spectrum(u);
  return {EnergyName::kEx, multiplicative_convolution(s, s).second_moment(), CountMethod::kFast};
}

EnergyReport oracle_Ex(const FpSet& u) {
  guard_oracle(std::pow(static_cast<double>(u.size()), 4));
  const auto& f = *u.field();
  Count n = 0;
  for (Residue a : u)
    for (Residue b : u)
      for (Residue c : u)
        for (Residue d : u) {
          if (f.mul(a, b) == f.mul(c, d)) ++n;
        }
  return {EnergyName::kEx, n, CountMethod::kOracle};
}

Spectrum spectrum_J(const FpSet& y, const FpSet& z, JMode mode) {
  require_same_field(y.field(), z.field());
  const Spectrum dy = difference_spectrum(y, y);
  return mode == JMode::kQuadruple
             ? multiplicative_convolution(dy, difference_spectrum(z, z))
             : multiplicative_convolution(dy, set_spectrum(z));
}

EnergyReport K_value(const FpSet& y, const FpSet& z) {
  return {EnergyName::kK, spectrum_J(y, z, JMode::kQuadruple).second_moment_nonzero(),
          CountMethod::kFast};
}

bool CharIdentity::agrees(double rel_tol) const {
  return std::abs(direct - via_chars) <= rel_tol * std::max(direct, 1.0);
}

CharIdentity K_char_identity(const FpSet& y, const FpSet& z) {
  require_same_field(y.field(), z.field());
  const auto& f = *y.field();
  CharIdentity out;
  out.direct = static_cast<double>(K_value(y, z).value);
  const LogSupport sy = nonzero_support(difference_spectrum(y, y));
  const LogSupport sz = nonzero_support(difference_spectrum(z, z));
  double total = 0.0;
  for (std::uint32_t j = 0; j < f.group_order(); ++j) {
    total += std::norm(char_transform(f, j, sy)) * std::norm(char_transform(f, j, sz));
  }
  out.via_chars = total / f.group_order();
  return out;
}

bool CharWindow::holds() const {
  return std::abs(static_cast<double>(n) - center) <= radius;
}

CharWindow N_char_window(const FpSet& u, const FpSet& v, const FpSet& w) {
  const double uvw = static_cast<double>(u.size()) * v.size() * w.size();
  CharWindow out;
  out.n = count_N(u, v, w).value;
  out.center = uvw * uvw / (u.field()->p() - 1);
  out.radius = static_cast<double>(u.field()->p()) * uvw;
  return out;
}

double double_char_max(const FpSet& v, const FpSet& w) {
  require_same_field(v.field(), w.field());
  const auto& f = *v.field();
  const LogSupport s = nonzero_support(difference_spectrum(v, w));
  double best = 0.0;
  for (std::uint32_t j = 1; j < f.group_order(); ++j) {
    best = std::max(best, std::abs(char_transform(f, j, s)));
  }
  return best;
}

}  // namespace trilab
