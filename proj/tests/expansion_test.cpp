#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trilab/expansion.hpp"

using namespace trilab;

namespace {

oracle::Vec v(const FpSet& s) { return {s.begin(), s.end()}; }

FpSet full(const Field& f) {
  std::vector<Residue> all;
  for (Residue a = 1; a < f->p(); ++a) all.push_back(a);
  return FpSet(f, all);
}

TEST(ImageABCD, Examples) {
  const Field f7 = make_field(7);
  const FpSet all = full(f7), one(f7, {1});
  EXPECT_EQ(image_ABC_plus_D(all, all, all, all).size, 7u);
  EXPECT_EQ(image_ABC_plus_D(one, one, one, one).size, 1u);
  EXPECT_TRUE(image_abc_plus_d_set(one, one, one, one).contains(2));
  const Field f31 = make_field(31);
  const FpSet g = subgroup(f31, 5);
  EXPECT_EQ(image_ABC_plus_D(g, g, g, g).size, 15u);
  try {
    image_ABC_plus_D(one, all, all, all);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrderError);
  }
}

TEST(ImageABCD, MatchesOracle) {
  const Field f = make_field(101);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const FpSet a = gen_random(f, 9, seed), b = gen_random(f, 6, seed + 1), c = gen_random(f, 4, seed + 2),
                d = gen_random(f, 1 + seed % 7, seed + 3);
    EXPECT_EQ(image_ABC_plus_D(a, b, c, d).size, oracle::image_abc_d(v(a), v(b), v(c), v(d), 101));
  }
}

TEST(CubeSum, Examples) {
  const Field f7 = make_field(7);
  const FpSet all = full(f7), one(f7, {1});
  const auto s = image_cube_sum(one, one, one, one);
  EXPECT_EQ(s.size, 1u);
  EXPECT_TRUE(image_cube_sum_set(one, one, one, one).contains(0));
  EXPECT_EQ(image_cube_sum(all, all, all, all).size, 7u);
  const Field f31 = make_field(31);
  const FpSet g = subgroup(f31, 5);
  EXPECT_EQ(image_cube_sum(g, g, g, g).size, 26u);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const FpSet a = gen_random(f31, 3, seed);
    EXPECT_GE(image_cube_sum(a, a, a, full(f31)).size, 30u);
  }
  EXPECT_TRUE(image_cube_sum(g, g, g, g).hypothesis_ok);
  EXPECT_FALSE(image_cube_sum(all, all, all, all).hypothesis_ok);
}

TEST(Covers, Examples) {
  const Field f11 = make_field(11);
  const FpSet all = full(f11), one(f11, {1});
  EXPECT_TRUE(covers_field(CoverShape::kProduct, all, all, all, all, all).covers);
  EXPECT_TRUE(covers_field(CoverShape::kCube, all, all, all, all, all).covers);
  for (std::uint32_t p : {3u, 7u, 11u}) {
    const FpSet s(make_field(p), {1});
    EXPECT_FALSE(covers_field(CoverShape::kProduct, s, s, s, s, s).covers);
    EXPECT_FALSE(covers_field(CoverShape::kCube, s, s, s, s, s).covers);
  }
  const Field f31 = make_field(31);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::vector<FpSet> s;
    for (int i = 0; i < 5; ++i) s.push_back(gen_random(f31, 16, seed * 5 + i));
    EXPECT_TRUE(covers_field(CoverShape::kProduct, s[0], s[1], s[2], s[3], s[4]).covers);
    EXPECT_TRUE(covers_field(CoverShape::kCube, s[0], s[1], s[2], s[3], s[4]).covers);
  }
  const auto q = covers_field(CoverShape::kProduct, all, all, all, all, all);
  EXPECT_NEAR(q.hypothesis_quantity, 10.0 * 10 * std::sqrt(10.0) * 1e4 / std::pow(11.0, 5), 1e-12);
}

TEST(C0Search, MonotoneThreshold) {
  const Field f = make_field(31);
  for (auto shape : {CoverShape::kProduct, CoverShape::kCube}) {
    const auto est = c0_threshold_search(f, shape, 3);
    EXPECT_GE(est.threshold_size, 1u);
    EXPECT_LE(est.threshold_size, 30u);
    EXPECT_GT(est.quantity, 0.0);
    EXPECT_EQ(est.threshold_size, c0_threshold_search(f, shape, 3).threshold_size);
  }
}

TEST(Garaev, Examples) {
  const Field f7 = make_field(7);
  const FpSet one(f7, {1}), all = full(f7);
  auto r = garaev_UV(one, one, one, one);
  EXPECT_EQ(r.u, 1u);
  EXPECT_EQ(r.v, 1u);
  r = garaev_UV(all, all, all, all);
  EXPECT_EQ(r.u, 6u);
  EXPECT_EQ(r.v, 7u);
  const Field f31 = make_field(31);
  const FpSet g = subgroup(f31, 5);
  r = garaev_UV(g, g, g, g);
  EXPECT_EQ(r.u, 5u);
  EXPECT_EQ(r.v, 15u);
  EXPECT_NEAR(r.disjunct1, 155.0, 1e-12);
  EXPECT_NEAR(r.ratio1, 75.0 / 155.0, 1e-12);
  EXPECT_GE(r.dichotomy_constant(), r.ratio1);
}

TEST(SubgroupSumset, Examples) {
  const Field f7 = make_field(7);
  EXPECT_EQ(subgroup_sumset_check(subgroup(f7, 3), FpSet(f7, {1})).size, 3u);
  EXPECT_GE(subgroup_sumset_check(subgroup(f7, 2), full(f7)).size, 6u);
  const Field f31 = make_field(31);
  const auto r = subgroup_sumset_check(subgroup(f31, 6), gen_interval(f31, 1, 5));
  EXPECT_EQ(r.size, 17u);
  EXPECT_NEAR(r.rhs, std::min(31.0, 5 * std::pow(6.0, 1.25) / std::sqrt(31.0)), 1e-12);
  try {
    subgroup_sumset_check(FpSet(f7, {1, 3}), FpSet(f7, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSubgroup);
  }
  EXPECT_FALSE(is_subgroup(FpSet(f7, {2, 4})));
  EXPECT_TRUE(is_subgroup(FpSet(f7, {1, 6})));
}

TEST(Abcde, Examples) {
  const Field f7 = make_field(7);
  const FpSet one(f7, {1});
  EXPECT_TRUE(count_solutions_abcde(one, one, one, one, as_residue_set(FpSet(f7, {2}))) == 1);
  EXPECT_TRUE(count_solutions_abcde_complement(one, one, one, one) == 0);
  const Field f = make_field(31);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FpSet a = gen_random(f, 5, seed), b = gen_random(f, 4, seed + 1), c = gen_random(f, 3, seed + 2),
                d = gen_random(f, 5, seed + 3), e = gen_random(f, 6, seed + 4);
    EXPECT_TRUE(count_solutions_abcde(a, b, c, d, as_residue_set(e)) ==
                oracle::abcde(v(a), v(b), v(c), v(d), v(e), 31));
    EXPECT_TRUE(count_solutions_abcde_complement(a, b, c, d) == 0);
  }
}

TEST(SecondMomentJ, Examples) {
  const Field f7 = make_field(7);
  const FpSet one(f7, {1}), all = full(f7);
  EXPECT_TRUE(second_moment_J_eta(one, one, one, one) == 1);
  EXPECT_EQ(spectrum_abc_plus_d(one, one, one, one).total(), 1u);
  EXPECT_EQ(spectrum_abc_plus_d(all, all, all, all).total(), 1296u);
  const Field f31 = make_field(31);
  const FpSet g = subgroup(f31, 5);
  EXPECT_TRUE(second_moment_J_eta(g, g, g, g) == 28125);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FpSet a = gen_random(f31, 5, seed), b = gen_random(f31, 5, seed + 1),
                c = gen_random(f31, 5, seed + 2), d = gen_random(f31, 5, seed + 3);
    const Count m2 = second_moment_J_eta(a, b, c, d);
    EXPECT_TRUE(m2 == oracle::coincidences(v(a), v(b), v(c), v(d), 31));
    const Count abcd = 625;
    EXPECT_TRUE(abcd * abcd <= static_cast<Count>(image_abc_plus_d_set(a, b, c, d).size()) * m2);
  }
}

TEST(Monotonicity, EnlargingNeverShrinks) {
  const Field f = make_field(101);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto perm = random_permutation(f, seed);
    auto prefix = [&](std::size_t k) { return FpSet(f, std::vector<Residue>(perm.begin(), perm.begin() + k)); };
    const FpSet b = gen_random(f, 4, seed + 1), c = gen_random(f, 3, seed + 2), d = gen_random(f, 5, seed + 3);
    std::size_t last = 0, last_cube = 0;
    for (std::size_t k = 1; k <= 12; ++k) {
      const auto s = image_abc_plus_d_set(prefix(k), b, c, d).size();
      const auto q = image_cube_sum_set(prefix(k), b, c, d).size();
      EXPECT_GE(s, last);
      EXPECT_GE(q, last_cube);
      last = s;
      last_cube = q;
    }
  }
}

TEST(Guard, LargeImageTrips) {
  const Field f = make_field(1048573);
  const FpSet a = gen_random(f, 2000, 1), b = gen_random(f, 2000, 2), c = gen_random(f, 2000, 3);
  try {
    image_abc_plus_d_set(a, b, c, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardTripped);
  }
}

}  // namespace
