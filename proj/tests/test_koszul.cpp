#include <gtest/gtest.h>

#include "hsurf/koszul.hpp"
#include "hsurf/parse.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hsurf;
using testing_support::fixture;

namespace {

const PrimeField kP(kDefaultPrimeA);

JacobianContext<PrimeField> mod_p(const RationalPolynomial& f) { return JacobianContext<PrimeField>(f.convert(kP)); }

// dim of degree-r syzygies: (n+1) dim S_r minus the Macaulay rank in degree r+d-1.
std::size_t syzygy_oracle(const RationalPolynomial& f, int r) {
  const std::size_t sr = oracle::monomials(f.n(), r).size();
  const auto rows = oracle::macaulay_rows(oracle::partials(f), f.n(), f.degree() - 1, r + f.degree() - 1);
  return static_cast<std::size_t>(f.n() + 1) * sr - oracle::rank_q(rows);
}

// Rank of the products h * (f_i e_j - f_j e_i), built from scratch.
std::size_t trivial_oracle(const RationalPolynomial& f, int r) {
  const int n = f.n();
  const int a = r - f.degree() + 1;
  if (a < 0) return 0;
  const auto cols = oracle::monomials(n, r);
  std::map<oracle::Exps, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
  const auto parts = oracle::partials(f);
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& h : oracle::monomials(n, a)) {
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        std::vector<mpq_class> row(cols.size() * static_cast<std::size_t>(n + 1));
        auto place = [&](const oracle::SparsePoly& g, int slot, int sign) {
          for (const auto& [e, c] : g) {
            auto s = e;
            for (std::size_t t = 0; t < s.size(); ++t) s[t] += h[t];
            row[static_cast<std::size_t>(slot) * cols.size() + index.at(s)] += sign * c;
          }
        };
        place(parts[static_cast<std::size_t>(i)], j, 1);
        place(parts[static_cast<std::size_t>(j)], i, -1);
        rows.push_back(std::move(row));
      }
    }
  }
  return oracle::rank_q(std::move(rows));
}

}  // namespace

TEST(Syzygy, BelowKoszulRangeFermatHasNone) {
  for (int r = 0; r < 3; ++r) EXPECT_EQ(syzygy_space(fermat_polynomial(3, 4).convert(kP), r).dim(), 0u);
}

TEST(Syzygy, DegreeZeroNodalHasNone) {
  for (const char* spec : {"one_node:3:4", "multi_node:3:5:2"}) {
    auto ctx = mod_p(fixture(spec).f);
    EXPECT_EQ(syzygy_dim(ctx, 0), 0u);
  }
}

TEST(Syzygy, KoszulSyzygiesAreMembers) {
  for (const auto* f : {&fixture("one_node:3:4").f, &fixture("multi_node:3:4:2").f}) {
    const auto fp = f->convert(kP);
    const int r = fp.degree() - 1;
    const auto syz = syzygy_space(fp, r);
    for (const auto& g : trivial_syzygy_generators(fp, r)) {
      EXPECT_TRUE(syz.contains(to_dense(kP, g, syz.ambient_dim())));
    }
  }
}

TEST(Syzygy, DimensionMatchesOracle) {
  const auto& f = fixture("one_node:3:4").f;
  auto ctx = mod_p(f);
  for (int r = 0; r <= 6; ++r) {
    const auto expected = syzygy_oracle(f, r);
    EXPECT_EQ(syzygy_dim(ctx, r), expected) << "r=" << r;
    EXPECT_EQ(syzygy_space(f.convert(kP), r).dim(), expected) << "r=" << r;
  }
}

TEST(TrivialSyzygy, Examples) {
  const auto f = fermat_polynomial(3, 4).convert(kP);
  for (int r = 0; r < 3; ++r) EXPECT_EQ(trivial_syzygy_space(f, r).dim(), 0u);
  EXPECT_EQ(trivial_syzygy_space(f, 3).dim(), 6u);
  EXPECT_EQ(trivial_syzygy_dim(f, 3), 6u);
}

TEST(TrivialSyzygy, MatchesOracleAndSitsInsideSyzygies) {
  for (const char* spec : {"one_node:3:4", "multi_node:3:4:2"}) {
    const auto& f = fixture(spec).f;
    const auto fp = f.convert(kP);
    for (int r = 0; r <= 6; ++r) {
      const auto triv = trivial_syzygy_space(fp, r);
      EXPECT_EQ(triv.dim(), trivial_oracle(f, r)) << spec << " r=" << r;
      EXPECT_EQ(trivial_syzygy_dim(fp, r), triv.dim());
      EXPECT_TRUE(syzygy_space(fp, r).contains(triv)) << spec << " r=" << r;
    }
  }
}

TEST(KoszulHn, FermatVanishesEverywhere) {
  auto ctx = mod_p(fermat_polynomial(3, 4));
  for (int m = 0; m <= 3 + 4 * 2; ++m) EXPECT_EQ(koszul_hn_dim(ctx, m), 0u) << "m=" << m;
}

TEST(KoszulHn, NodalVanishingRangeAndFirstNonzero) {
  for (const char* spec : {"one_node:3:4", "multi_node:3:4:2", "one_node:3:5", "multi_node:3:5:2"}) {
    const auto& f = fixture(spec).f;
    auto ctx = mod_p(f);
    const int n = f.n(), d = f.degree();
    for (int m = 0; 2 * m <= n * d - 1; ++m) EXPECT_EQ(koszul_hn_dim(ctx, m), 0u) << spec << " m=" << m;
    const auto md = mdr(ctx);
    ASSERT_TRUE(md.value.has_value()) << spec;
    EXPECT_GE(koszul_hn_dim(ctx, *md.value + n), 1u);
    EXPECT_EQ(*coincidence_threshold(ctx), *md.value + d - 2) << spec;
  }
}

TEST(KoszulHn, DirectAndEulerRoutesAgree) {
  KoszulOptions euler_only;
  euler_only.direct_budget = 0;
  for (const char* spec : {"one_node:3:4", "multi_node:3:5:2"}) {
    const auto& f = fixture(spec).f;
    auto ctx = mod_p(f);
    // below r = d-1 there is nothing to rank, so the direct route always applies
    for (int m = 3 + f.degree() - 1; m <= 3 + 10; ++m) {
      const auto direct = koszul_hn(ctx, m);
      const auto euler = koszul_hn(ctx, m, euler_only);
      EXPECT_EQ(direct.route, KoszulRoute::Direct);
      EXPECT_EQ(euler.route, KoszulRoute::Euler);
      EXPECT_EQ(direct.dim, euler.dim) << spec << " m=" << m;
    }
  }
}

TEST(KoszulHn, EulerRouteRefusesNonIsolated) {
  auto ctx = mod_p(parse_polynomial("x0^4 + x1^4", 3));
  KoszulOptions euler_only;
  euler_only.direct_budget = 0;
  EXPECT_THROW(koszul_hn(ctx, 8, euler_only), Error);
}

TEST(Mdr, SmoothAndSmallQuartic) {
  auto fermat = mod_p(fermat_polynomial(3, 4));
  EXPECT_FALSE(mdr(fermat).value.has_value());
  auto one = mod_p(fixture("one_node:3:4").f);
  const auto md = mdr(one);
  ASSERT_TRUE(md.value.has_value());
  EXPECT_GE(*md.value, 3);
  EXPECT_EQ(md.routes.size(), static_cast<std::size_t>(*md.value + 1));
}

TEST(Mdr, ScanExhaustedWhenQmaxTooSmall) {
  auto one = mod_p(fixture("one_node:3:4").f);
  try {
    mdr(one, 2);
    FAIL() << "expected ScanExhausted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ScanExhausted);
  }
}
