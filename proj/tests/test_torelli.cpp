#include <gtest/gtest.h>

#include "hsurf/parse.hpp"
#include "hsurf/torelli.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hsurf;
using testing_support::fixture;

namespace {

const PrimeField kP(kDefaultPrimeA);

JacobianContext<PrimeField> mod_p(const RationalPolynomial& f) { return JacobianContext<PrimeField>(f.convert(kP)); }

// Rank of P -> (P x^b mod J)_b over |P| = d, |b| = d-n-1, without any
// quotient basis: rank of [blockdiag(J) ; products] minus the J part.
std::size_t phi_rank_oracle(const RationalPolynomial& f) {
  const int n = f.n(), d = f.degree();
  const int low = d - n - 1, high = 2 * d - n - 1;
  const auto jrows = oracle::macaulay_rows(oracle::partials(f), n, d - 1, high);
  const std::size_t jrank = oracle::rank_q(jrows);
  const auto highs = oracle::monomials(n, high);
  std::map<oracle::Exps, std::size_t> index;
  for (std::size_t i = 0; i < highs.size(); ++i) index[highs[i]] = i;
  const auto lows = oracle::monomials(n, low);
  const std::size_t width = highs.size() * lows.size();
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t b = 0; b < lows.size(); ++b) {
    for (const auto& r : jrows) {
      std::vector<mpq_class> row(width);
      for (std::size_t j = 0; j < r.size(); ++j) row[b * highs.size() + j] = r[j];
      rows.push_back(std::move(row));
    }
  }
  for (const auto& p : oracle::monomials(n, d)) {
    std::vector<mpq_class> row(width);
    for (std::size_t b = 0; b < lows.size(); ++b) {
      auto e = p;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += lows[b][i];
      row[b * highs.size() + index.at(e)] = 1;
    }
    rows.push_back(std::move(row));
  }
  return oracle::rank_q(std::move(rows)) - lows.size() * jrank;
}

}  // namespace

TEST(QuotientBasis, Examples) {
  auto ctx = mod_p(fermat_polynomial(3, 4));
  const auto q0 = quotient_basis(ctx, 0);
  ASSERT_EQ(q0.dim(), 1u);
  EXPECT_EQ(q0.standard_monomials()[0], Monomial(4));

  const auto q3 = quotient_basis(ctx, 3);
  EXPECT_EQ(q3.dim(), 20u - 4u);
  for (const auto& m : q3.standard_monomials()) {
    for (int i = 0; i < 4; ++i) EXPECT_LT(m[i], 3);
  }
}

TEST(QuotientBasis, ReductionProperties) {
  const auto& f = fixture("multi_node:3:5:2").f;
  auto ctx = mod_p(f);
  const auto fp = f.convert(kP);
  const auto df0 = fp.partial(0);
  for (int k : {4, 6, 8}) {
    const auto q = quotient_basis(ctx, k);
    EXPECT_EQ(q.dim(), ctx.milnor_dim(k));
    for (const auto& a : monomial_basis(3, k - 4)) {
      for (auto x : q.reduce(df0.times_monomial(a))) EXPECT_EQ(x, 0u);
    }
    for (std::size_t i = 0; i < q.dim(); ++i) {
      const auto v = q.reduce(q.standard_monomials()[i]);
      for (std::size_t j = 0; j < v.size(); ++j) EXPECT_EQ(v[j], i == j ? 1u : 0u);
    }
  }
}

TEST(PhiMatrix, DegreeNPlusOneColumnsAreReductions) {
  const auto& f = fixture("one_node:3:4").f;
  auto ctx = mod_p(f);
  const auto phi = phi_matrix(ctx);
  EXPECT_EQ(phi.low_dim, 1u);
  EXPECT_EQ(phi.source_dim, ctx.milnor_dim(4));
  const auto& src = ctx.standard_monomials(4);
  for (std::size_t c = 0; c < src.size(); ++c) {
    const auto col = to_dense(kP, phi.matrix.columns()[c], phi.matrix.target_dim());
    EXPECT_EQ(col, quotient_basis(ctx, 4).reduce(src[c]));
  }
  EXPECT_EQ(phi.rank, phi.source_dim);
}

TEST(PhiMatrix, RankMatchesOracle) {
  for (const auto* f : {&fixture("one_node:3:4").f, &fixture("multi_node:3:5:2").f, &fixture("one_node:3:5").f}) {
    auto ctx = mod_p(*f);
    EXPECT_EQ(phi_matrix(ctx).rank, phi_rank_oracle(*f)) << f->to_string();
  }
}

TEST(PhiMatrix, SmoothFermatQuintic) {
  const auto f = fermat_polynomial(3, 5);
  auto ctx = mod_p(f);
  const auto phi = phi_matrix(ctx);
  EXPECT_EQ(phi.rank, ctx.milnor_dim(5));
  EXPECT_EQ(phi.rank, phi_rank_oracle(f));
}

TEST(PhiMatrix, RejectsLowDegree) {
  auto ctx = mod_p(fermat_polynomial(3, 3));
  try {
    phi_matrix(ctx);
    FAIL() << "expected DegreeTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeTooSmall);
  }
}

TEST(PhiInjective, NodalFixtures) {
  for (const char* spec : {"one_node:3:4", "multi_node:3:4:2", "one_node:3:5", "multi_node:3:5:2", "one_node:4:5"}) {
    auto ctx = mod_p(fixture(spec).f);
    const auto c = phi_injective(ctx);
    EXPECT_TRUE(c.pass) << spec;
    EXPECT_EQ(c.quantity("rank"), static_cast<std::int64_t>(ctx.milnor_dim(ctx.d()))) << spec;
    EXPECT_TRUE(c.notes.empty());
  }
}

TEST(PhiInjective, LowDimensionIsFlagged) {
  auto ctx = mod_p(fermat_polynomial(2, 4));
  const auto c = phi_injective(ctx);
  EXPECT_FALSE(c.notes.empty());
}

TEST(VariableKernel, NodalBelowBoundIsZero) {
  for (const char* spec : {"one_node:3:4", "multi_node:3:5:2", "one_node:4:5"}) {
    const auto& f = fixture(spec).f;
    auto ctx = mod_p(f);
    for (int t = 0; t < 2 * f.degree() - f.n() - 1; ++t) EXPECT_EQ(variable_multiplication_kernel(ctx, t).dim(), 0u) << spec << " t=" << t;
  }
}

TEST(VariableKernel, FermatSocle) {
  for (auto [n, d] : {std::pair{3, 4}, {3, 5}, {4, 5}}) {
    auto ctx = mod_p(fermat_polynomial(n, d));
    const int top = (n + 1) * (d - 2);
    const auto k = variable_multiplication_kernel(ctx, top);
    ASSERT_EQ(k.dim(), 1u);
    // the socle class is the product of x_i^{d-2}
    const auto& std_top = ctx.standard_monomials(top);
    ASSERT_EQ(std_top.size(), 1u);
    for (int i = 0; i <= n; ++i) EXPECT_EQ(std_top[0][i], d - 2);
    EXPECT_EQ(variable_multiplication_kernel(ctx, top + 1).dim(), 0u);
    EXPECT_EQ(variable_multiplication_kernel(ctx, top - 1).dim(), 0u);
  }
}

TEST(EffectiveDeformation, Examples) {
  const auto& f = fixture("one_node:3:4").f;
  auto ctx = mod_p(f);
  EXPECT_TRUE(effective_deformation_check(ctx, standard_complement(ctx)).pass);
  EXPECT_TRUE(effective_deformation_check(ctx, DeformationSubspace<PrimeField>{}).pass);
  const auto fp = f.convert(kP);
  DeformationSubspace<PrimeField> bad{{fp.partial(0) * variable(kP, 3, 0)}};
  EXPECT_FALSE(effective_deformation_check(ctx, bad).pass);
}

TEST(PeriodDifferential, FullComplementAndSign) {
  for (const char* spec : {"one_node:3:4", "multi_node:3:5:2"}) {
    auto ctx = mod_p(fixture(spec).f);
    const auto v = standard_complement(ctx);
    const auto pd = period_differential(ctx, v);
    EXPECT_TRUE(pd.certificate.pass) << spec;
    EXPECT_EQ(pd.rank, ctx.milnor_dim(ctx.d()));
    const auto phi = phi_matrix(ctx);
    ASSERT_EQ(pd.matrix.source_dim(), phi.matrix.source_dim());
    ASSERT_EQ(pd.matrix.target_dim(), phi.matrix.target_dim());
    for (std::size_t c = 0; c < phi.matrix.source_dim(); ++c) {
      for (std::size_t r = 0; r < phi.matrix.target_dim(); ++r) {
        EXPECT_EQ(pd.matrix.entry(r, c), kP.neg(phi.matrix.entry(r, c)));
      }
    }
  }
}

TEST(PeriodDifferential, OneDirection) {
  auto ctx = mod_p(fixture("one_node:3:4").f);
  const auto full = standard_complement(ctx);
  DeformationSubspace<PrimeField> one{{full.basis.back()}};
  const auto pd = period_differential(ctx, one);
  EXPECT_TRUE(pd.certificate.pass);
  EXPECT_EQ(pd.rank, 1u);
}

TEST(PeriodDifferential, Rejections) {
  auto ctx4 = mod_p(fixture("one_node:4:5").f);
  try {
    period_differential(ctx4, standard_complement(ctx4));
    FAIL() << "expected UnsupportedDimension";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDimension);
  }
  const auto& f = fixture("one_node:3:4").f;
  auto ctx = mod_p(f);
  const auto fp = f.convert(kP);
  DeformationSubspace<PrimeField> bad{{fp.partial(1) * variable(kP, 3, 2)}};
  try {
    period_differential(ctx, bad);
    FAIL() << "expected NotEffective";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEffective);
  }
}
