#include <gtest/gtest.h>

#include "hsurf/milnor.hpp"
#include "hsurf/parse.hpp"
#include "hsurf/session.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hsurf;
using testing_support::fixture;

namespace {

const PrimeField kP(kDefaultPrimeA);

JacobianContext<PrimeField> mod_p(const RationalPolynomial& f) { return JacobianContext<PrimeField>(f.convert(kP)); }

}  // namespace

TEST(SmoothReference, MatchesSeriesOracle) {
  const std::uint64_t quartic[] = {1, 4, 10, 16, 19, 16, 10, 4, 1};
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(smooth_reference_dim(3, 4, k), quartic[k]);
  for (int n = 1; n <= 6; ++n) {
    for (int d = 2; d <= 7; ++d) {
      EXPECT_EQ(smooth_reference_dim(n, d, 0), 1u);
      const int top = (n + 1) * (d - 2);
      for (int k = 0; k <= top + 3; ++k) EXPECT_EQ(smooth_reference_dim(n, d, k), oracle::reference_series(n, d, k));
      EXPECT_EQ(smooth_reference_dim(n, d, top + 1), 0u);
    }
  }
}

TEST(JacobianBasis, FermatExamples) {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 3; d <= 5; ++d) {
      auto ctx = mod_p(fermat_polynomial(n, d));
      EXPECT_EQ(ctx.jacobian_basis(d - 1).dim(), static_cast<std::size_t>(n + 1));
      EXPECT_EQ(ctx.jacobian_basis(0).dim(), 0u);
    }
  }
  auto ctx = mod_p(fermat_polynomial(3, 4));
  EXPECT_EQ(ctx.jacobian_dim(4), 16u);
  EXPECT_EQ(ctx.milnor_dim(4), 19u);
}

TEST(JacobianBasis, TowerMatchesMacaulay) {
  for (const char* spec : {"one_node:3:4", "multi_node:3:5:2", "one_node:4:5"}) {
    const auto& fx = fixture(spec);
    auto ctx = mod_p(fx.f);
    const auto fp = fx.f.convert(kP);
    for (int k = 0; k <= 2 * fx.f.degree() + 1; ++k) {
      EXPECT_EQ(ctx.jacobian_basis(k), macaulay_jacobian_basis(fp, k)) << spec << " k=" << k;
    }
  }
}

TEST(MilnorDim, FermatAgainstCountingOracle) {
  for (auto [n, d] : {std::pair{3, 4}, {3, 5}, {4, 5}, {2, 6}}) {
    auto ctx = mod_p(fermat_polynomial(n, d));
    for (int k = 0; k <= (n + 1) * (d - 2) + 2; ++k) {
      EXPECT_EQ(ctx.milnor_dim(k), oracle::fermat_standard_count(n, d, k)) << n << "," << d << " k=" << k;
    }
  }
}

TEST(MilnorDim, EdgeCases) {
  // d = n+1: degree d-n-1 = 0 is the constants
  auto ctx = mod_p(fermat_polynomial(3, 4));
  EXPECT_EQ(ctx.milnor_dim(0), 1u);
  EXPECT_EQ(ctx.milnor_dim(9), 0u);
  auto ctx5 = mod_p(fermat_polynomial(4, 5));
  EXPECT_EQ(ctx5.milnor_dim(5 * 3 + 1), 0u);
}

TEST(MilnorDim, NodalFixturesAgainstMacaulayOracle) {
  const auto& one = fixture("one_node:3:4");
  JacobianContext<RationalField> exact(one.f);
  for (int k = 0; k <= 11; ++k) EXPECT_EQ(exact.milnor_dim(k), oracle::milnor_dim_q(one.f, k)) << "k=" << k;

  const auto& two = fixture("multi_node:3:5:2");
  auto ctx = mod_p(two.f);
  for (int k = 0; k <= 13; ++k) EXPECT_EQ(ctx.milnor_dim(k), oracle::milnor_dim_p(two.f, k, kDefaultPrimeA)) << "k=" << k;
}

TEST(CoincidenceThreshold, SmoothAndNodal) {
  auto fermat = mod_p(fermat_polynomial(3, 4));
  EXPECT_FALSE(coincidence_threshold(fermat).has_value());

  for (const char* spec : {"one_node:3:4", "multi_node:3:4:2", "one_node:3:5", "one_node:4:5"}) {
    const auto& fx = fixture(spec);
    auto ctx = mod_p(fx.f);
    const auto ct = coincidence_threshold(ctx);
    ASSERT_TRUE(ct.has_value()) << spec;
    const int n = fx.f.n(), d = fx.f.degree();
    EXPECT_GT(*ct, 2 * d - n - 1) << spec;
  }
}

TEST(CoincidenceThreshold, PinnedByOracleScan) {
  const auto& fx = fixture("one_node:3:4");
  int first_diff = -1;
  for (int k = 0; k <= 12 && first_diff < 0; ++k) {
    if (oracle::milnor_dim_q(fx.f, k) != oracle::reference_series(3, 4, k)) first_diff = k;
  }
  ASSERT_GE(first_diff, 0);
  auto ctx = mod_p(fx.f);
  EXPECT_EQ(coincidence_threshold(ctx), first_diff - 1);
}

TEST(Tjurina, Counts) {
  auto fermat = mod_p(fermat_polynomial(3, 4));
  EXPECT_EQ(tjurina_count(fermat), 0u);
  auto one = mod_p(fixture("one_node:3:4").f);
  EXPECT_EQ(tjurina_count(one), 1u);
  auto two = mod_p(fixture("multi_node:3:4:2").f);
  EXPECT_EQ(tjurina_count(two), 2u);
  const int s = milnor_stable_degree(two);
  EXPECT_EQ(oracle::milnor_dim_p(fixture("multi_node:3:4:2").f, s, kDefaultPrimeA), 2u);
}

TEST(Tjurina, NonIsolatedDoesNotStabilize) {
  // singular along the line x0 = x1 = 0
  auto ctx = mod_p(parse_polynomial("x0^4 + x1^4", 3));
  try {
    tjurina_count(ctx);
    FAIL() << "expected NoStabilization";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoStabilization);
  }
}

TEST(HilbertProfile, ConsecutiveAndStabilized) {
  auto ctx = mod_p(fixture("one_node:3:4").f);
  const auto h = hilbert_profile(ctx, 14);
  ASSERT_EQ(h.dims.size(), 15u);
  for (std::size_t i = 0; i < h.dims.size(); ++i) EXPECT_EQ(h.dims[i].first, static_cast<int>(i));
  ASSERT_TRUE(h.stabilized_value.has_value());
  EXPECT_EQ(*h.stabilized_value, 1u);
  for (std::size_t i = h.dims.size() - 3; i < h.dims.size(); ++i) EXPECT_EQ(h.dims[i].second, *h.stabilized_value);
  EXPECT_FALSE(hilbert_profile(ctx, 5).stabilized_value.has_value());
}

TEST(Saturation, SmoothIsEverything) {
  auto ctx = mod_p(fermat_polynomial(3, 4));
  for (int k : {2, 4, 6}) EXPECT_EQ(saturation_graded(ctx, k).dim(), ctx.monomial_count(k));
}

TEST(Saturation, NodesAgainstEvaluationOracle) {
  for (const char* spec : {"one_node:3:4", "multi_node:3:4:2", "multi_node:3:5:2"}) {
    const auto& fx = fixture(spec);
    auto ctx = mod_p(fx.f);
    std::vector<std::vector<mpq_class>> pts;
    for (const auto& p : fx.points) pts.push_back(p.coords);
    const int d = fx.f.degree();
    for (int k : {2 * d - 4, 2 * d - 2}) {
      const auto sat = saturation_graded(ctx, k);
      EXPECT_EQ(sat.dim(), oracle::vanishing_forms_dim(pts, 3, k)) << spec << " k=" << k;
      EXPECT_TRUE(sat.contains(ctx.jacobian_basis(k))) << spec;
      EXPECT_EQ(saturation_excess(ctx, k), sat.dim() - ctx.jacobian_dim(k));
    }
  }
}

TEST(Session, ExactAndTwoPrimesAgree) {
  const auto& fx = fixture("multi_node:3:4:2");
  Session two(fx.f, FieldConfig::two_primes());
  Session exact(fx.f, FieldConfig::exact());
  auto profile = [](auto& ctx) { return hilbert_profile(ctx, 12); };
  EXPECT_EQ(two.run("hilbert", profile), exact.run("hilbert", profile));
}
