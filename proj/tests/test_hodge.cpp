#include <gtest/gtest.h>

#include "hsurf/hodge.hpp"
#include "hsurf/parse.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hsurf;
using testing_support::fixture;

namespace {

const PrimeField kP(kDefaultPrimeA);

JacobianContext<PrimeField> mod_p(const RationalPolynomial& f) { return JacobianContext<PrimeField>(f.convert(kP)); }

std::vector<std::vector<mpq_class>> coords(const hsurf::app::Fixture& fx) {
  std::vector<std::vector<mpq_class>> out;
  for (const auto& p : fx.points) out.push_back(p.coords);
  return out;
}

}  // namespace

TEST(HodgeGradedDims, SmoothQuarticSurface) {
  auto ctx = mod_p(fermat_polynomial(3, 4));
  const auto h = hodge_graded_dims(ctx, 0);
  EXPECT_EQ(h.gr_top, 1u);
  ASSERT_TRUE(h.gr_next.has_value());
  // I(f) = S for smooth f, so gr_next = dim S_4 - dim J_4
  EXPECT_EQ(*h.gr_next, 35u - 16u);
  EXPECT_EQ(h.f_next(), 20u);
}

TEST(HodgeGradedDims, SmoothFiveFold) {
  auto ctx = mod_p(fermat_polynomial(5, 6));
  const auto h = hodge_graded_dims(ctx);
  EXPECT_EQ(h.gr_top, 1u);
  ASSERT_TRUE(h.gr_next.has_value());
  EXPECT_EQ(*h.gr_next, oracle::reference_series(5, 6, 6));
}

TEST(HodgeGradedDims, OneNodeQuarticAgainstOracles) {
  const auto& fx = fixture("one_node:3:4");
  auto ctx = mod_p(fx.f);
  const auto h = hodge_graded_dims(ctx, 1);
  const std::size_t sat = oracle::vanishing_forms_dim(coords(fx), 3, 4);
  const std::size_t jac = 35 - oracle::milnor_dim_q(fx.f, 4);
  ASSERT_TRUE(h.gr_next.has_value());
  EXPECT_EQ(*h.gr_next, sat - jac);
  EXPECT_EQ(*h.gr_next, saturation_graded(ctx, 4).dim() - ctx.jacobian_dim(4));
  EXPECT_EQ(h.node_count, 1u);
}

TEST(HodgeGradedDims, FourFoldHasNoNextPiece) {
  auto ctx = mod_p(fixture("one_node:4:5").f);
  const auto h = hodge_graded_dims(ctx, 1);
  EXPECT_EQ(h.gr_top, 1u);
  EXPECT_FALSE(h.gr_next.has_value());
  EXPECT_FALSE(h.gr_next_note.empty());
}

TEST(HodgeGradedDims, Rejections) {
  auto curve = mod_p(fermat_polynomial(2, 4));
  try {
    hodge_graded_dims(curve);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDimension);
  }
  auto cubic = mod_p(fermat_polynomial(3, 3));
  try {
    hodge_graded_dims(cubic);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeTooSmall);
  }
}

TEST(IdealOfPoints, Examples) {
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(ideal_of_points_dim({}, 3, k), binomial(k + 3, 3));
  const std::vector<std::vector<mpq_class>> one{{1, 2, 3, 4}};
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(ideal_of_points_dim(one, 3, k), binomial(k + 3, 3) - 1);
  EXPECT_EQ(ideal_of_points_dim(one, 3, 0), 0u);
}

TEST(IdealOfPoints, GeneralPointsAgainstOracle) {
  std::vector<std::vector<mpq_class>> pts;
  for (int i = 0; i < 7; ++i) pts.push_back({mpq_class(1), mpq_class(i, 3), mpq_class(i * i - 2), mpq_class(1, i + 1)});
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(ideal_of_points_dim(pts, 3, k), oracle::vanishing_forms_dim(pts, 3, k)) << "k=" << k;
  EXPECT_EQ(ideal_of_points_dim(pts, 3, 6), binomial(9, 3) - 7);
}

TEST(IdealOfPoints, ZeroVectorRejected) {
  try {
    ideal_of_points_dim({{0, 0, 0, 0}}, 3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegeneratePoint);
  }
}

TEST(Constancy, TwoOneNodeQuartics) {
  std::vector<HodgeGradedDims> dims;
  for (std::uint64_t seed : {3u, 4u}) {
    auto ctx = mod_p(fixture("one_node:3:4", seed).f);
    dims.push_back(hodge_graded_dims(ctx, 1));
  }
  ASSERT_NE(fixture("one_node:3:4", 3).f, fixture("one_node:3:4", 4).f);
  const auto c = corollary_constancy_check(dims);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.quantity("gr_next@1_nodes"), static_cast<std::int64_t>(*dims[0].gr_next));
}

TEST(Constancy, NodeCountsKeptApart) {
  std::vector<HodgeGradedDims> dims;
  auto one = mod_p(fixture("one_node:3:5").f);
  auto two = mod_p(fixture("multi_node:3:5:2").f);
  dims.push_back(hodge_graded_dims(one, 1));
  dims.push_back(hodge_graded_dims(two, 2));
  const auto c = corollary_constancy_check(dims);
  EXPECT_TRUE(c.pass);
  EXPECT_TRUE(c.quantity("gr_next@1_nodes").has_value());
  EXPECT_TRUE(c.quantity("gr_next@2_nodes").has_value());
}

TEST(Constancy, SingleFixtureAndMixedParameters) {
  auto a = mod_p(fixture("one_node:3:4").f);
  const auto ha = hodge_graded_dims(a, 1);
  EXPECT_TRUE(corollary_constancy_check({ha}).pass);
  auto b = mod_p(fixture("one_node:3:5").f);
  const auto hb = hodge_graded_dims(b, 1);
  try {
    corollary_constancy_check({ha, hb});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedParameters);
  }
}

TEST(Constancy, DetectsDisagreement) {
  HodgeGradedDims a{3, 4, 1, 1, 18, ""};
  HodgeGradedDims b{3, 4, 1, 1, 17, ""};
  EXPECT_FALSE(corollary_constancy_check({a, b}).pass);
}
