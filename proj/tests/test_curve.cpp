#include "oracles.hpp"
#include "support.hpp"

using namespace folium;
using testing_support::F;
using testing_support::pt;
using testing_support::Q;

namespace {
const Field q = Field::rationals();
const Field f5 = Field::prime(5);
}  // namespace

TEST(ProjectivePoint, CanonicalForm) {
  EXPECT_EQ(ProjectivePoint(Q(2), Q(4), Q(2)).to_string(), "(1 : 2 : 1)");
  EXPECT_EQ(ProjectivePoint(Q(-3), Q(3), Q(0)).to_string(), "(1 : -1 : 0)");
  EXPECT_EQ(ProjectivePoint(Q(0), Q(5), Q(0)).to_string(), "(0 : 1 : 0)");
  EXPECT_EQ(ProjectivePoint(F(5, 2), F(5, 3), F(5, 4)), ProjectivePoint(F(5, 3), F(5, 2), F(5, 1)));
  EXPECT_FOLIUM_ERROR(ProjectivePoint(Q(0), Q(0), Q(0)), ErrorCode::InvalidPoint);
  EXPECT_FOLIUM_ERROR(ProjectivePoint(Q(1), F(5, 1), Q(1)), ErrorCode::MixedFields);
}

// Property: canonicalization is idempotent and invariant under scaling.
TEST(ProjectivePointProperty, ScaleInvariantAndIdempotent) {
  for (const Field& f : {q, Field::prime(13)}) {
    auto rng = make_rng(3, "test/canonical/" + f.to_string());
    for (int i = 0; i < 500; ++i) {
      auto x = random_element(f, rng), y = random_element(f, rng), z = random_element(f, rng);
      if (i % 5 == 0) z = Element::zero(f);
      if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
      const auto s = random_nonzero(f, rng);
      const ProjectivePoint p(x, y, z);
      EXPECT_EQ(ProjectivePoint(x * s, y * s, z * s), p);
      EXPECT_EQ(ProjectivePoint(p.x(), p.y(), p.z()), p);
      const auto& pivot = !p.z().is_zero() ? p.z() : (!p.x().is_zero() ? p.x() : p.y());
      EXPECT_TRUE(pivot.is_one());
    }
  }
}

TEST(Folium, ConstructionAndMembership) {
  EXPECT_FOLIUM_ERROR(Folium(q, 0), ErrorCode::ZeroParameter);
  EXPECT_FOLIUM_ERROR(Folium(Field::prime(5), 10), ErrorCode::ZeroParameter);
  const Folium c5(f5, 1);
  EXPECT_TRUE(c5.contains(ProjectivePoint(F(5, 4), F(5, 3), F(5, 1))));
  EXPECT_TRUE(c5.contains(c5.origin()));
  EXPECT_TRUE(c5.contains(c5.infinity()));
  EXPECT_FALSE(c5.contains(ProjectivePoint(F(5, 1), F(5, 1), F(5, 1))));
  const Folium cq(q, 1);
  EXPECT_TRUE(cq.contains(pt(q, "(2/3, 4/3)")));
  EXPECT_FALSE(cq.contains(pt(q, "(1, 1)")));
  EXPECT_FOLIUM_ERROR(cq.require_on_curve(pt(q, "(1, 1)")), ErrorCode::NotOnCurve);
  EXPECT_FOLIUM_ERROR(cq.contains(ProjectivePoint(F(5, 1), F(5, 1), F(5, 1))), ErrorCode::MixedFields);
}

TEST(Folium, SpecialPoints) {
  const Folium c5(f5, 1);
  EXPECT_EQ(vertex(c5), ProjectivePoint(F(5, 4), F(5, 4), F(5, 1)));
  const Folium cq(q, 1);
  EXPECT_EQ(vertex(cq), pt(q, "(3/2, 3/2)"));
  EXPECT_EQ(vertex(Folium(q, 2)), pt(q, "(3, 3)"));
  const auto g = gradient(cq, vertex(cq));
  EXPECT_EQ(g[0], Q(9, 4));
  EXPECT_EQ(g[1], Q(9, 4));
  EXPECT_EQ(g[2], Q(-27, 4));
  EXPECT_TRUE(is_singular_point(cq, cq.origin()));
  EXPECT_FALSE(is_singular_point(cq, cq.infinity()));
  EXPECT_FALSE(is_singular_point(cq, vertex(cq)));

  const Folium c7(Field::prime(7), 1);
  const auto sp7 = special_points(c7);
  ASSERT_EQ(sp7.infinity_list.size(), 3u);
  EXPECT_EQ(sp7.infinity_list[1], ProjectivePoint(F(7, 1), F(7, 3), F(7, 0)));
  EXPECT_EQ(sp7.infinity_list[2], ProjectivePoint(F(7, 1), F(7, 5), F(7, 0)));
  for (const auto& p : sp7.infinity_list) EXPECT_TRUE(c7.contains(p));

  const Folium c2(Field::prime(2), 1);
  EXPECT_FOLIUM_ERROR(vertex(c2), ErrorCode::CharacteristicTwo);
  const auto sp2 = special_points(c2);
  EXPECT_TRUE(sp2.vertex_is_infinity);
  EXPECT_FALSE(sp2.vertex.has_value());
}

TEST(Enumeration, KnownSets) {
  const Folium c5(f5, 1);
  const std::set<ProjectivePoint> expected = {
      c5.origin(), c5.infinity(), ProjectivePoint(F(5, 4), F(5, 4), F(5, 1)),
      ProjectivePoint(F(5, 4), F(5, 3), F(5, 1)), ProjectivePoint(F(5, 3), F(5, 4), F(5, 1))};
  EXPECT_EQ(enumerate_points(c5), expected);
  EXPECT_EQ(enumerate_points(Folium(Field::prime(2), 1)).size(), 2u);
  EXPECT_EQ(enumerate_points(Folium(Field::prime(7), 2)).size(), 7u);
  EXPECT_FOLIUM_ERROR(enumerate_points(Folium(q, 1)), ErrorCode::UnorderedField);
  EXPECT_FOLIUM_ERROR(enumerate_points(Folium(Field::prime(10007), 1)), ErrorCode::FieldTooLargeForScan);
}

// Property: enumeration matches an independent scan of all of F_p^3 \ {0}.
TEST(EnumerationProperty, MatchesBruteForceOracle) {
  for (std::uint64_t p : {2, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
    for (long long a = 1; a < 5; ++a) {
      if (a % static_cast<long long>(p) == 0) continue;
      const Folium c(Field::prime(p), a);
      std::set<oracle::Triple> lib;
      for (const auto& point : enumerate_points(c)) {
        lib.insert({static_cast<std::int64_t>(point.x().residue()), static_cast<std::int64_t>(point.y().residue()),
                    static_cast<std::int64_t>(point.z().residue())});
      }
      EXPECT_EQ(lib, oracle::curve_points(static_cast<std::int64_t>(p), a)) << "p=" << p << " a=" << a;
      EXPECT_EQ(lib.size(), p);
    }
  }
}

TEST(ProjectiveLine, CanonicalFormAndEquation) {
  const ProjectiveLine l(Q(2), Q(2), Q(0));
  EXPECT_EQ(l.to_string(), "[1 : 1 : 0]");
  EXPECT_TRUE(l.passes_through_origin());
  const ProjectiveLine m(Q(1), Q(-5), Q(6));
  EXPECT_EQ(m.equation(), "1/6*x - 5/6*y + z = 0");
  EXPECT_FALSE(m.passes_through_origin());
  EXPECT_TRUE(m.incident(pt(q, "(1, 1)")) == false);
  EXPECT_FOLIUM_ERROR(ProjectiveLine(Q(0), Q(0), Q(0)), ErrorCode::InvalidPoint);
}
