#include <gtest/gtest.h>

#include "hsurf/nodal.hpp"
#include "hsurf/parse.hpp"
#include "support/fixtures.hpp"

using namespace hsurf;
using testing_support::fixture;

namespace {

ProjectivePoint pt(const char* text) { return ProjectivePoint::parse(text, 3); }

// x3^2 (y^2 + 2 x1^2 + 3 x2^2) + higher order, y = x0 - x3: a node at [1:0:0:1]
const char* kShiftedNode =
    "x0^4 + x0^3*x1 - 4*x0^3*x3 - 3*x0^2*x1*x3 + 7*x0^2*x3^2 + 3*x0*x1*x3^2 - 6*x0*x3^3 + x1^4 + 2*x1^2*x3^2 + "
    "x1*x2^3 - x1*x3^3 + x2^4 + 3*x2^2*x3^2 + 2*x3^4";

// local model z1^3 + z2^2 + z3^2 at [0:0:0:1]
const char* kCusp = "x0^3*x3 + x1^4 + x1^2*x3^2 + x2^4 + x2^2*x3^2";

}  // namespace

TEST(ProjectivePoint, ParseAndCompare) {
  const auto p = pt("[2 : 1/2 : 0 : -3]");
  EXPECT_EQ(p.coords[1], mpq_class(1, 2));
  EXPECT_EQ(p.chart, 3);  // largest |numerator|
  EXPECT_TRUE(p.same_point(pt("[4:1:0:-6]")));
  EXPECT_FALSE(p.same_point(pt("[4:1:0:6]")));
  EXPECT_EQ(p.to_string(), "[2:1/2:0:-3]");
  EXPECT_THROW(pt("[0:0:0:0]"), Error);
  EXPECT_THROW(ProjectivePoint::make({1, 0, 0, 0}, 2), Error);
  EXPECT_THROW(pt("[1:2:3]"), Error);
}

TEST(IsSingularAt, Fermat) {
  const auto f = fermat_polynomial(3, 4);
  for (const char* s : {"[1:0:0:0]", "[1:1:1:1]", "[1:-1:2:0]", "[0:0:1/3:1]"}) EXPECT_FALSE(is_singular_at(f, pt(s))) << s;
}

TEST(IsSingularAt, ConstructedNode) {
  const auto& fx = fixture("one_node:3:4");
  EXPECT_TRUE(is_singular_at(fx.f, pt("[0:0:0:1]")));
  EXPECT_TRUE(is_singular_at(fx.f, pt("[0:0:0:-5]")));
  EXPECT_FALSE(is_singular_at(fx.f, pt("[1:2:3:4]")));
  EXPECT_FALSE(is_singular_at(fx.f, pt("[1:0:0:0]")));
}

TEST(HessianRank, NodeModel) {
  const auto f = parse_polynomial("x3^2*x0^2 + x3^2*x1^2 + x3^2*x2^2 + x0^4 + x1^3*x2 + x2^4", 3);
  EXPECT_EQ(hessian_rank_at(f, pt("[0:0:0:1]")), 3);
}

TEST(HessianRank, CuspModel) {
  const auto f = parse_polynomial(kCusp, 3);
  EXPECT_EQ(hessian_rank_at(f, pt("[0:0:0:1]")), 2);
}

TEST(HessianRank, ChartIndependence) {
  const auto f = parse_polynomial(kShiftedNode, 3);
  const auto p = pt("[1:0:0:1]");
  ASSERT_TRUE(is_singular_at(f, p));
  EXPECT_EQ(hessian_rank_at(f, p, 0), 3);
  EXPECT_EQ(hessian_rank_at(f, p, 3), 3);
  const auto q = pt("[2:0:0:2]");
  EXPECT_EQ(hessian_rank_at(f, q, 0), 3);
}

TEST(HessianRank, RequiresSingularPoint) {
  try {
    hessian_rank_at(fermat_polynomial(3, 4), pt("[1:0:0:0]"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSingular);
  }
  EXPECT_THROW(hessian_rank_at(parse_polynomial(kShiftedNode, 3), pt("[1:0:0:1]"), 1), Error);
}

TEST(CertifyNodal, Verdicts) {
  Session fermat(fermat_polynomial(3, 4), FieldConfig{});
  EXPECT_EQ(certify_nodal(fermat, {}).verdict, NodalCertificate::Verdict::Smooth);

  const auto& fx = fixture("one_node:3:4");
  Session s(fx.f, FieldConfig{});
  const auto ok = certify_nodal(s, fx.points);
  EXPECT_TRUE(ok.nodal());
  EXPECT_EQ(ok.nodes, 1u);
  EXPECT_EQ(ok.verdict_string(), "Nodal(1)");

  const auto none = certify_nodal(s, {});
  EXPECT_EQ(none.verdict, NodalCertificate::Verdict::Failed);
  EXPECT_EQ(none.reason, "tjurina=1 but 0 points listed");

  const auto wrong = certify_nodal(s, {pt("[1:0:0:0]")});
  EXPECT_EQ(wrong.verdict, NodalCertificate::Verdict::Failed);

  const auto twice = certify_nodal(s, {pt("[0:0:0:1]"), pt("[0:0:0:2]")});
  EXPECT_EQ(twice.verdict, NodalCertificate::Verdict::Failed);
  EXPECT_NE(twice.reason.find("coincide"), std::string::npos);
}

TEST(CertifyNodal, TwoNodesAndShiftedNode) {
  const auto& fx = fixture("multi_node:3:4:2");
  Session s(fx.f, FieldConfig{});
  EXPECT_EQ(certify_nodal(s, fx.points).verdict_string(), "Nodal(2)");
  EXPECT_EQ(certify_nodal(s, {fx.points[0]}).verdict, NodalCertificate::Verdict::Failed);

  Session shifted(parse_polynomial(kShiftedNode, 3), FieldConfig{});
  EXPECT_TRUE(certify_nodal(shifted, {pt("[1:0:0:1]")}).nodal());
}

TEST(CertifyNodal, CuspIsNotANode) {
  Session s(parse_polynomial(kCusp, 3), FieldConfig{});
  const auto c = certify_nodal(s, {pt("[0:0:0:1]")});
  EXPECT_EQ(c.verdict, NodalCertificate::Verdict::Failed);
  ASSERT_EQ(c.per_point.size(), 1u);
  EXPECT_EQ(c.per_point[0].hessian_rank, 2);
}

TEST(CertifyNodal, ExactModeAgrees) {
  const auto& fx = fixture("one_node:3:4");
  Session s(fx.f, FieldConfig::exact());
  EXPECT_EQ(certify_nodal(s, fx.points).verdict_string(), "Nodal(1)");
}
