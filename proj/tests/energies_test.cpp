#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trilab/energies.hpp"

using namespace trilab;

namespace {

oracle::Vec v(const FpSet& s) { return {s.begin(), s.end()}; }

FpSet full(const Field& f) {
  std::vector<Residue> all;
  for (Residue a = 1; a < f->p(); ++a) all.push_back(a);
  return FpSet(f, all);
}

/// Every nonempty subset of {1..6} of size <= 4 in F_7.
std::vector<FpSet> f7_family() {
  const Field f = make_field(7);
  std::vector<FpSet> out;
  for (unsigned mask = 1; mask < 64; ++mask) {
    if (__builtin_popcount(mask) > 4) continue;
    std::vector<Residue> e;
    for (Residue a = 1; a <= 6; ++a) if (mask & (1u << (a - 1))) e.push_back(a);
    out.emplace_back(f, e);
  }
  return out;
}

TEST(Spectrum, ProductDiffExample) {
  const Field f = make_field(5);
  const auto r = spectrum_product_diff(FpSet(f, {1}), FpSet(f, {1, 2}), FpSet(f, {3}));
  EXPECT_EQ(r.counts, (std::vector<std::uint64_t>{0, 0, 0, 1, 1}));
  const auto z = spectrum_product_diff(FpSet(f, {1, 2, 4}), FpSet(f, {3}), FpSet(f, {3}));
  EXPECT_EQ(z.counts[0], 3u);
  EXPECT_EQ(z.total(), 3u);
}

TEST(CountN, Examples) {
  const Field f = make_field(5);
  const FpSet u(f, {1}), vv(f, {1, 2}), w(f, {3});
  EXPECT_EQ(count_N(u, vv, w).value, 2u);
  EXPECT_EQ(oracle_N(u, vv, w).value, 2u);
  EXPECT_EQ(oracle::N(v(u), v(vv), v(w), 5), 2u);
  const FpSet big(f, {1, 2, 3});
  EXPECT_EQ(count_N(big, FpSet(f, {4}), FpSet(f, {4})).value, 9u);
  EXPECT_EQ(count_N(FpSet(f, {2}), FpSet(f, {1}), FpSet(f, {4})).value, 1u);
  EXPECT_EQ(count_N(u, vv, w).method, CountMethod::kFast);
  EXPECT_EQ(oracle_N(u, vv, w).method, CountMethod::kOracle);
}

TEST(CountT, Examples) {
  const Field f = make_field(5);
  EXPECT_EQ(count_T(FpSet(f, {3})).value, 0u);
  EXPECT_EQ(count_T(FpSet(f, {1, 2})).value, 8u);
  EXPECT_EQ(oracle_T(FpSet(f, {1, 2})).value, 8u);
  EXPECT_EQ(oracle::T({1, 2}, 5), 8u);
}

TEST(CountDx, Examples) {
  const Field f = make_field(5);
  EXPECT_EQ(count_Dx(FpSet(f, {2})).value, 1u);
  EXPECT_EQ(count_Dx(FpSet(f, {1, 2})).value, 152u);
  EXPECT_EQ(oracle_Dx(FpSet(f, {1, 2})).value, 152u);
  EXPECT_EQ(oracle::Dx({1, 2}, 5), 152u);
}

TEST(CountEx, Examples) {
  const Field f = make_field(5);
  EXPECT_EQ(count_Ex(FpSet(f, {2})).value, 1u);
  EXPECT_EQ(count_Ex(FpSet(f, {1, 2})).value, 6u);
  EXPECT_EQ(oracle::Ex({1, 2}, 5), 6u);
  for (std::uint32_t p : {7u, 31u}) {
    const Field g = make_field(p);
    const Count q = p - 1;
    EXPECT_TRUE(count_Ex(full(g)).value == q * q * q);
  }
}

TEST(Energies, FastEqualsOracleOnF7Family) {
  const auto fam = f7_family();
  for (const auto& u : fam) {
    EXPECT_EQ(count_T(u).value, oracle_T(u).value);
    EXPECT_EQ(count_T(u).value, oracle::T(v(u), 7));
    EXPECT_EQ(count_Dx(u).value, oracle_Dx(u).value);
    EXPECT_EQ(count_Dx(u).value, oracle::Dx(v(u), 7));
    EXPECT_EQ(count_Ex(u).value, oracle_Ex(u).value);
    EXPECT_EQ(count_T(u, TConvention::kAllNonzero).value, oracle_T(u, TConvention::kAllNonzero).value);
  }
  for (std::size_t i = 0; i < fam.size(); i += 5) {
    for (std::size_t j = 0; j < fam.size(); j += 7) {
      for (std::size_t k = 0; k < fam.size(); k += 11) {
        EXPECT_EQ(count_N(fam[i], fam[j], fam[k]).value, oracle::N(v(fam[i]), v(fam[j]), v(fam[k]), 7));
        EXPECT_EQ(count_N(fam[i], fam[j], fam[k], true).value,
                  oracle_N(fam[i], fam[j], fam[k], true).value);
      }
    }
  }
}

TEST(Energies, FastEqualsOracleAtP31) {
  const Field f = make_field(31);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const FpSet u = gen_random(f, 1 + seed % 8, seed), w1 = gen_random(f, 1 + (seed + 3) % 8, seed + 50),
                w2 = gen_random(f, 1 + (seed + 5) % 8, seed + 90);
    EXPECT_EQ(count_N(u, w1, w2).value, oracle::N(v(u), v(w1), v(w2), 31));
    EXPECT_EQ(count_T(u).value, oracle::T(v(u), 31));
    EXPECT_EQ(count_Dx(u).value, oracle::Dx(v(u), 31));
    EXPECT_EQ(count_Ex(u).value, oracle::Ex(v(u), 31));
  }
}

TEST(Energies, OracleGuard) {
  const Field f = make_field(101);
  try {
    oracle_Dx(gen_random(f, 11, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(SpectrumJ, Examples) {
  const Field f = make_field(5);
  const FpSet y(f, {1, 2});
  const auto j = spectrum_J(y, y, JMode::kQuadruple);
  EXPECT_EQ(j.counts, (std::vector<std::uint64_t>{12, 2, 0, 0, 2}));
  EXPECT_EQ(j.counts, oracle::J4({1, 2}, {1, 2}, 5));
  const auto t = spectrum_J(FpSet(f, {3}), FpSet(f, {1, 2, 4}), JMode::kTriple);
  EXPECT_EQ(t.counts[0], 3u);
  EXPECT_EQ(t.total(), 3u);
  const Field g = make_field(31);
  const FpSet a = gen_random(g, 6, 1), b = gen_random(g, 5, 2);
  EXPECT_EQ(spectrum_J(a, b, JMode::kQuadruple).total(), 36u * 25u);
  EXPECT_EQ(spectrum_J(a, b, JMode::kTriple).counts, oracle::J3(v(a), v(b), 31));
}

TEST(K, ExamplesAndIdentity) {
  const Field f = make_field(5);
  const FpSet y(f, {1, 2});
  EXPECT_EQ(K_value(y, y).value, 8u);
  const auto id = K_char_identity(y, y);
  EXPECT_NEAR(id.direct, 8.0, 1e-9);
  EXPECT_NEAR(id.via_chars, 8.0, 1e-9);
  EXPECT_EQ(K_value(FpSet(f, {3}), y).value, 0u);
  const auto id0 = K_char_identity(FpSet(f, {3}), y);
  EXPECT_NEAR(id0.via_chars, 0.0, 1e-9);
  for (std::uint32_t p : {31u, 101u}) {
    const Field g = make_field(p);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const FpSet a = gen_random(g, 1 + seed % 10, seed), b = gen_random(g, 2 + seed % 9, seed + 20);
      const auto r = K_char_identity(a, b);
      EXPECT_TRUE(r.agrees()) << r.direct << " " << r.via_chars;
      const Count k = K_value(a, b).value;
      EXPECT_EQ(k, oracle::K(v(a), v(b), p));
      EXPECT_TRUE(k * k <= count_Dx(a).value * count_Dx(b).value);
      const Count cap = static_cast<Count>(a.size() * a.size() * b.size() * b.size());
      EXPECT_TRUE(k <= cap * cap);
    }
  }
}

TEST(Identities, SumJ2EqualsN) {
  for (std::uint32_t p : {7u, 31u}) {
    const Field g = make_field(p);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const FpSet y = gen_random(g, 1 + seed % 6, seed), z = gen_random(g, 1 + (seed + 2) % 6, seed + 5);
      EXPECT_TRUE(spectrum_J(y, z, JMode::kTriple).second_moment() == count_N(z, y, y).value);
      // I-spectrum: y (w1 - w2) with arguments (W, Y).
      EXPECT_TRUE(spectrum_J(z, y, JMode::kTriple).second_moment() == count_N(y, z, z).value);
    }
  }
}

TEST(Identities, DxViaTDecomposition) {
  for (const auto& u : f7_family()) {
    const Count n = u.size();
    const Count six = 2 * n * n * n - n * n;
    EXPECT_TRUE(count_Dx(u).value <= n * n * count_T(u).value + six * six);
  }
}

TEST(Window, Examples) {
  const Field f = make_field(5);
  const auto w = N_char_window(FpSet(f, {1}), FpSet(f, {1, 2}), FpSet(f, {3}));
  EXPECT_TRUE(w.n == 2);
  EXPECT_NEAR(w.center, 1.0, 1e-12);
  EXPECT_NEAR(w.radius, 10.0, 1e-12);
  EXPECT_TRUE(w.holds());
  EXPECT_TRUE(N_char_window(FpSet(f, {1, 2, 3}), FpSet(f, {4}), FpSet(f, {4})).holds());
  for (std::uint32_t p : {7u, 31u}) {
    const Field g = make_field(p);
    EXPECT_TRUE(N_char_window(full(g), full(g), full(g)).holds());
  }
}

TEST(DoubleChar, Examples) {
  const Field f5 = make_field(5);
  EXPECT_NEAR(double_char_max(FpSet(f5, {1}), FpSet(f5, {1})), 0.0, 1e-12);
  EXPECT_NEAR(double_char_max(FpSet(f5, {1}), FpSet(f5, {2})), 1.0, 1e-12);
  const Field g = make_field(31);
  const FpSet a = gen_random(g, 6, 11), b = gen_random(g, 6, 12);
  double direct = 0;
  for (std::uint32_t j = 1; j < 30; ++j) {
    std::complex<double> s = 0;
    for (Residue x : a) for (Residue y : b) if (x != y) s += g->mult_char(j, g->sub(x, y));
    direct = std::max(direct, std::abs(s));
  }
  EXPECT_NEAR(double_char_max(a, b), direct, 1e-9);
  EXPECT_LE(direct, std::sqrt(31.0 * 36.0) + 1e-6);
}

TEST(Spectrum, SecondMomentsMatchReports) {
  const Field f = make_field(31);
  const FpSet u = gen_random(f, 7, 3);
  Count dx = 0;
  {
    const auto d = difference_spectrum(u, u);
    const auto s = multiplicative_convolution(d, d);
    EXPECT_EQ(s.counts[0], 2u * 343u - 49u);
    EXPECT_EQ(s.total(), 7u * 7u * 7u * 7u);
    dx = s.second_moment();
  }
  EXPECT_TRUE(dx == count_Dx(u).value);
  const auto m = multiplicative_convolution(set_spectrum(u), set_spectrum(u));
  EXPECT_TRUE(m.second_moment() == count_Ex(u).value);
}

}  // namespace
