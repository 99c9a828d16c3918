#include <gtest/gtest.h>

#include <cmath>

#include "trilab/bounds.hpp"
#include "trilab/error.hpp"

using namespace trilab;

namespace {

TEST(TrilinearBound, Examples) {
  EXPECT_NEAR(thm11_rhs(16, 16, 16, 16), std::pow(2.0, 10.5), 1e-9);
  EXPECT_NEAR(thm11_rhs(16, 16, 16, 16), 1448.155, 1e-3);
  EXPECT_NEAR(thm11_rhs(1, 1, 1, 1), 1.0, 1e-15);
  EXPECT_NEAR(thm11_rhs(5, 2, 2, 1), 4.2295, 1e-4);
  try {
    thm11_rhs(5, 1, 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrderError);
  }
}

TEST(HypothesisBounds, Examples) {
  EXPECT_NEAR(thm13_rhs(1, 1, 1, 1).value, 1.0, 1e-15);
  EXPECT_NEAR(thm14_rhs(1, 1, 1, 1, 1).value, 1.0, 1e-15);
  const double two16 = 65536.0;
  const auto t12 = thm12_rhs(std::pow(2.0, 24), two16, two16, two16, two16);
  EXPECT_NEAR(std::log2(t12.value), 61.0, 1e-9);
  EXPECT_TRUE(thm12_rhs(1000, 100, 50, 20, 10).hypothesis_ok);
  EXPECT_FALSE(thm12_rhs(1000, 101, 50, 20, 10).hypothesis_ok);
  EXPECT_FALSE(thm14_rhs(1000, 10, 50, 20, 10).hypothesis_ok);
  EXPECT_FALSE(thm13_rhs(1000, 10, 50, 20).hypothesis_ok);
  EXPECT_TRUE(thm13_rhs(1000, 50, 20, 20).hypothesis_ok);
}

TEST(Trivial, Examples) {
  EXPECT_NEAR(trivial_rhs(4, 1, 1, 3), 6.0, 1e-12);
  EXPECT_NEAR(bg_rhs(1, 1, 1, 1), 1.0, 1e-15);
  const double two16 = 65536.0;
  EXPECT_NEAR(std::log2(bg_rhs(std::pow(2.0, 18), two16, two16, two16)), 44.0, 1e-9);
  EXPECT_GT(bg_rhs(100, 5, 5, 5, 0.1), bg_rhs(100, 5, 5, 5));
}

TEST(Counting, Examples) {
  const auto b = counting_bounds(4, 2, 2, 2);
  EXPECT_NEAR(b.cor24, 64.0 / 4 + std::pow(2.0, 4.5) + 16.0, 1e-9);
  EXPECT_NEAR(b.lemma23, std::pow(2.0, 4.5) + 16.0, 1e-9);
  EXPECT_NEAR(counting_bounds(1e12, 7, 7, 7).lemma28 / std::pow(7.0, 4.5), 1.0, 1e-6);
  EXPECT_NEAR(counting_bounds(31, 1, 1, 1).lemma28, 1.0 / 31 + 1.0, 1e-12);
  EXPECT_NEAR(counting_bounds(31, 3, 1, 1).cor29, std::pow(3.0, 8) / 31 + std::pow(3.0, 6.5), 1e-9);
}

TEST(Audit, Examples) {
  const auto spec = bound_trivial();
  const double cards[] = {2, 3, 4};
  EXPECT_EQ(audit(0.0, spec, 31, cards).ratio, 0.0);
  const double rhs = trivial_rhs(31, 2, 3, 4);
  EXPECT_NEAR(audit(rhs, spec, 31, cards).ratio, 1.0, 1e-12);
  EXPECT_EQ(audit(rhs, spec, 31, cards, 77).seed, 77u);
  try {
    audit_value(1.0, "x", 0.0, 31, cards);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateBound);
  }
  const double r[] = {0.2, 0.5, 0.3};
  const auto s = summarize(r);
  EXPECT_EQ(s.count, 3u);
  EXPECT_DOUBLE_EQ(s.max, 0.5);
  EXPECT_DOUBLE_EQ(s.min, 0.2);
  EXPECT_NEAR(s.mean, 1.0 / 3, 1e-15);
}

TEST(Properties, DominationGrid) {
  for (int p = 2; p <= 1000; ++p) {
    for (int x = 1; x <= 64; ++x) {
      for (int y = 1; y <= x; ++y) {
        for (int z = 1; z <= y; z += (y > 8 ? 3 : 1)) {
          ASSERT_LE(thm11_rhs(p, x, y, z), bg_rhs(p, x, y, z) * (1 + 1e-12)) << p << " " << x << " " << y << " " << z;
        }
      }
    }
  }
}

TEST(Properties, HomogeneityAndMonotonicity) {
  for (double p : {7.0, 101.0, 1e5}) {
    for (double k : {0.5, 2.0, 13.0}) {
      EXPECT_NEAR(thm11_rhs(p, 9, 5, 2, 3 * k), k * thm11_rhs(p, 9, 5, 2, 3), 1e-9 * thm11_rhs(p, 9, 5, 2, 3 * k));
      EXPECT_NEAR(thm12_rhs(p, 9, 7, 5, 2, k).value, k * thm12_rhs(p, 9, 7, 5, 2).value, 1e-9 * k * thm12_rhs(p, 9, 7, 5, 2).value);
      EXPECT_NEAR(thm13_rhs(p, 9, 5, 2, k).value, k * thm13_rhs(p, 9, 5, 2).value, 1e-9 * k * thm13_rhs(p, 9, 5, 2).value);
      EXPECT_NEAR(thm14_rhs(p, 9, 7, 5, 2, k).value, k * thm14_rhs(p, 9, 7, 5, 2).value, 1e-9 * k * thm14_rhs(p, 9, 7, 5, 2).value);
      auto spec = bound_cor24();
      const double c[] = {3, 4, 5};
      const double base = spec.evaluate(p, c);
      spec.constant = k;
      EXPECT_NEAR(spec.evaluate(p, c), k * base, 1e-9 * k * base);
    }
  }
  for (const auto& spec : {bound_thm11(), bound_thm12(), bound_thm13(), bound_thm14(), bound_trivial(),
                           bound_bg(), bound_lemma23(), bound_cor24(), bound_lemma28(), bound_cor29()}) {
    std::vector<double> c(spec.arity, 3.0);
    for (std::size_t i = 0; i < spec.arity; ++i) {
      for (double x = 1; x < 60; x += 1) {
        c[i] = x;
        const double lo = spec.evaluate(101, c);
        c[i] = x + 1;
        EXPECT_LE(lo, spec.evaluate(101, c)) << spec.name;
      }
      c[i] = 3.0;
    }
  }
}

TEST(Applications, ClosedForms) {
  EXPECT_NEAR(thm15_error_term(101, 4, 4, 4, 4), std::pow(101, 2.5) / (2 * 2 * std::sqrt(2.0) * 4), 1e-6);
  EXPECT_NEAR(thm15_lower(101, 4, 4, 4, 4), std::min(101.0, 4 * std::sqrt(2.0) * 4 / std::sqrt(101.0)), 1e-12);
  EXPECT_NEAR(thm17_error_term(31, 16, 16, 16, 2), std::pow(31, 2.25) / (2 * std::pow(16, 0.375) * 2), 1e-9);
  EXPECT_NEAR(thm19_disjunct1(31, 5), 155.0, 1e-12);
  EXPECT_NEAR(thm19_disjunct2(31, 2, 3, 4, 5), 16.0 * 3 * 2 * 25 / 31, 1e-12);
  EXPECT_NEAR(eq113_rhs(31, 4, 16), std::min(31.0, 4 * 32 / std::sqrt(31.0)), 1e-12);
  EXPECT_NEAR(cor16_quantity(11, 10, 10, 9, 10, 10), 10 * 10 * 3 * 100.0 * 100 / std::pow(11, 5), 1e-12);
  EXPECT_NEAR(cor18_quantity(3, 1, 16, 16, 1, 1), 64.0 / std::pow(3, 9), 1e-15);
}

}  // namespace
