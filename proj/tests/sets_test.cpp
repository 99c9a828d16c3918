#include <gtest/gtest.h>

#include "trilab/sets.hpp"

using namespace trilab;

namespace {

std::vector<Residue> v(const ResidueSet& s) { return {s.elems().begin(), s.elems().end()}; }
std::vector<Residue> v(const FpSet& s) { return {s.begin(), s.end()}; }

FpSet full(const Field& f) {
  std::vector<Residue> all;
  for (Residue a = 1; a < f->p(); ++a) all.push_back(a);
  return FpSet(f, all);
}

TEST(FpSet, NormalizesAndRejectsZero) {
  const Field f = make_field(7);
  EXPECT_EQ(v(FpSet(f, {3, 1, 3, 8})), (std::vector<Residue>{1, 3}));
  EXPECT_THROW(FpSet(f, {0, 1}), Error);
  EXPECT_THROW(FpSet(f, {7}), Error);
}

TEST(SetAlgebra, Examples) {
  const Field f = make_field(7);
  EXPECT_EQ(v(sumset(FpSet(f, {1, 2}), FpSet(f, {3}))), (std::vector<Residue>{4, 5}));
  EXPECT_EQ(v(sumset(FpSet(f, {1}), FpSet(f, {6}))), (std::vector<Residue>{0}));
  EXPECT_EQ(sumset(full(f), full(f)).size(), 7u);
  EXPECT_EQ(v(productset(FpSet(f, {2, 3}), FpSet(f, {3}))), (std::vector<Residue>{2, 6}));
  EXPECT_EQ(v(diffset(FpSet(f, {1}), FpSet(f, {1}))), (std::vector<Residue>{0}));
  const FpSet b(f, {2, 5, 6});
  EXPECT_EQ(v(productset(FpSet(f, {1}), b)), v(b));
  EXPECT_EQ(v(powerset_k(FpSet(f, {1, 2, 3}), 3)), (std::vector<Residue>{1, 6}));
  EXPECT_EQ(v(powerset_k(b, 1)), v(b));
  EXPECT_EQ(v(powerset_k(FpSet(f, {6}), 2)), (std::vector<Residue>{1}));
}

TEST(SetAlgebra, CtxMismatch) {
  try {
    sumset(FpSet(make_field(7), {1}), FpSet(make_field(11), {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCtxMismatch);
  }
}

TEST(SetAlgebra, SizeBoundsAndProductAvoidsZero) {
  const Field f = make_field(101);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const FpSet a = gen_random(f, 1 + seed % 17, seed);
    const FpSet b = gen_random(f, 1 + (seed * 7) % 23, seed + 100);
    const auto s = sumset(a, b);
    EXPECT_LE(s.size(), std::min<std::size_t>(101, a.size() * b.size()));
    EXPECT_GE(s.size(), std::max(a.size(), b.size()));
    EXPECT_FALSE(productset(a, b).contains_zero());
  }
}

TEST(ResidueSet, StripAndComplement) {
  const Field f = make_field(7);
  const auto s = sumset(FpSet(f, {1, 2}), FpSet(f, {5, 6}));
  EXPECT_TRUE(s.contains_zero());
  const auto stripped = s.strip_zero();
  EXPECT_TRUE(stripped.had_zero);
  EXPECT_EQ(v(stripped.set), (std::vector<Residue>{1, 6}));
  EXPECT_EQ(v(s.complement()), (std::vector<Residue>{2, 3, 4, 5}));
}

TEST(Generators, Examples) {
  EXPECT_EQ(v(gen_interval(make_field(11), 1, 4)), (std::vector<Residue>{1, 2, 3, 4}));
  EXPECT_EQ(v(gen_interval(make_field(7), 5, 3)), (std::vector<Residue>{1, 5, 6}));
  EXPECT_EQ(v(gen_geometric(make_field(7), 3, 3)), (std::vector<Residue>{2, 3, 6}));
  const Field f = make_field(101);
  EXPECT_EQ(gen_random(f, 10, 42), gen_random(f, 10, 42));
  EXPECT_EQ(gen_random(f, 10, 42).size(), 10u);
  EXPECT_NE(gen_random(f, 10, 42), gen_random(f, 10, 43));
  EXPECT_EQ(gen_random(f, 100, 1).size(), 100u);
  EXPECT_THROW(gen_random(f, 101, 1), Error);
  EXPECT_THROW(gen_interval(f, 1, 101), Error);
  EXPECT_THROW(gen_geometric(make_field(7), 2, 4), Error);  // 2 has order 3
}

TEST(Generators, PermutationPrefixesNest) {
  const Field f = make_field(31);
  const auto perm = random_permutation(f, 9);
  std::vector<Residue> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (Residue a = 1; a < 31; ++a) EXPECT_EQ(sorted[a - 1], a);
  EXPECT_EQ(random_permutation(f, 9), perm);
}

TEST(SplitMix, PinnedStream) {
  // Reference values of splitmix64 seeded with 0.
  SplitMix64 s(0);
  EXPECT_EQ(s.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(s.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(s.next(), 0x06C45D188009454FULL);
}

TEST(SetSpec, ParsesAllForms) {
  const Field f = make_field(31);
  EXPECT_EQ(parse_set_spec(f, "random:5:7"), gen_random(f, 5, 7));
  EXPECT_EQ(v(parse_set_spec(f, "interval:3:4")), (std::vector<Residue>{3, 4, 5, 6}));
  EXPECT_EQ(v(parse_set_spec(f, "subgroup:5")), (std::vector<Residue>{1, 2, 4, 8, 16}));
  EXPECT_EQ(parse_set_spec(f, "geom:3:4"), gen_geometric(f, 3, 4));
  EXPECT_EQ(v(parse_set_spec(f, "explicit:{9, 2,40}")), (std::vector<Residue>{2, 9}));
  for (const char* bad : {"", "random:5", "random:x:1", "nope:1", "explicit:{1,", "subgroup:7",
                          "explicit:{0}", "interval:1:2:3"}) {
    try {
      parse_set_spec(f, bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kConfigError) << bad;
    }
  }
  EXPECT_EQ(describe(FpSet(f, {3, 1})), "explicit:{1,3}");
}

TEST(Weights, NormBound) {
  const Field f = make_field(31);
  const FpSet s(f, {1, 2, 3});
  EXPECT_THROW(WeightVec(s, {1.0, 1.0, std::complex<double>(1.0, 0.1)}), Error);
  EXPECT_NO_THROW(WeightVec(s, {1.0, -1.0, std::complex<double>(0.6, 0.8)}));
  EXPECT_THROW(WeightVec(s, {1.0}), Error);
  for (auto scheme : {WeightScheme::kUnit, WeightScheme::kRandomUnimodular, WeightScheme::kRandomDisc}) {
    const auto w = WeightVec::random(s, scheme, 5);
    for (auto x : w.weights()) EXPECT_LE(std::abs(x), 1.0 + kWeightSlack);
    EXPECT_EQ(parse_weight_scheme(weight_scheme_name(scheme)), scheme);
  }
  EXPECT_NEAR(WeightVec::unit(s).energy(), 3.0, 1e-15);
}

TEST(Weights, TensorIgnoresOmittedCoordinate) {
  const Field f = make_field(31);
  std::vector<FpSet> axes = {FpSet(f, {1, 2}), FpSet(f, {3, 4, 5}), FpSet(f, {6, 7})};
  const auto t = WeightTensor::random(axes, 1, WeightScheme::kRandomDisc, 3);
  EXPECT_EQ(t.values().size(), 4u);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t c = 0; c < 2; ++c) {
      const std::size_t i0[] = {a, 0, c}, i2[] = {a, 2, c};
      EXPECT_EQ(t.at(i0), t.at(i2));
    }
  }
  EXPECT_THROW(WeightTensor(axes, 1, std::vector<std::complex<double>>(4, 2.0)), Error);
  const auto g = WeightTensor::from_function(axes, 0, [](std::span<const Residue> x) {
    return std::complex<double>(x[0] == 0 ? 0.5 : 0.0, 0.0);
  });
  for (auto w : g.values()) EXPECT_EQ(w, std::complex<double>(0.5, 0.0));
}

}  // namespace
