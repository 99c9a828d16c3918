#include "trilab/ffield.hpp"

#include <cmath>
#include <numbers>

#include "trilab/sets.hpp"

namespace trilab {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<u64>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void fill_roots(std::uint32_t n, std::vector<double>& re, std::vector<double>& im) {
  re.resize(n);
  im.resize(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    re[k] = std::cos(angle);
    im[k] = std::sin(angle);
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic below 3.3e24, so for every 64-bit n.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool generates = true;
    for (std::uint32_t q : factors) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  return 0;  // unreachable for prime p
}

Field make_field(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not an odd prime");
  }
  if (p > kMaxPrime) {
    throw Error(ErrorCode::kTooLarge, std::to_string(p) + " exceeds the 2^20 table cap");
  }
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  const auto q = static_cast<std::uint32_t>(p);
  ctx->p_ = q;
  ctx->g_ = smallest_primitive_root(q);
  ctx->exp_.resize(q - 1);
  ctx->dlog_.assign(q, 0);
  Residue x = 1;
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    ctx->exp_[k] = x;
    ctx->dlog_[x] = k;
    x = static_cast<Residue>((static_cast<u64>(x) * ctx->g_) % q);
  }
  ctx->inv_.assign(q, 0);
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    const std::uint32_t neg_k = k == 0 ? 0 : q - 1 - k;
    ctx->inv_[ctx->exp_[k]] = ctx->exp_[neg_k];
  }
  fill_roots(q, ctx->add_re_, ctx->add_im_);
  fill_roots(q - 1, ctx->mul_re_, ctx->mul_im_);
  return ctx;
}

std::complex<double> add_char(std::uint32_t p, std::uint64_t a) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(a % p) / p;
  return {std::cos(angle), std::sin(angle)};
}

Residue FieldCtx::pow(Residue a, std::uint64_t e) const noexcept {
  return static_cast<Residue>(powmod(a, e, p_));
}

std::complex<double> FieldCtx::mult_char(std::uint32_t j, Residue a) const {
  a %= p_;
  if (a == 0) throw Error(ErrorCode::kZeroArgument, "multiplicative character at 0");
  const auto n = static_cast<u64>(p_ - 1);
  const auto k = static_cast<std::size_t>((static_cast<u64>(j % (p_ - 1)) * dlog_[a]) % n);
  return {mul_re_[k], mul_im_[k]};
}

FpSet subgroup(const Field& field, std::uint32_t order) {
  const std::uint32_t n = field->group_order();
  if (order == 0 || n % order != 0) {
    throw Error(ErrorCode::kNotDivisor,
                std::to_string(order) + " does not divide " + std::to_string(n));
  }
  const std::uint32_t step = n / order;
  std::vector<Residue> elems;
  elems.reserve(order);
  for (std::uint32_t k = 0; k < order; ++k) elems.push_back(field->exp(k * step));
  return FpSet(field, std::move(elems));
}

}  // namespace trilab
