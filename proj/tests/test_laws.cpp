#include "support.hpp"

using namespace folium;
using testing_support::F;
using testing_support::pt;
using testing_support::Q;

namespace {
const Field q = Field::rationals();

ProjectivePoint P(const Folium& c, long n, long d = 1) { return pbar(c, Element(c.field(), mpq_class(n, d))); }
}  // namespace

TEST(Laws, Names) {
  for (auto law : kAllLaws) EXPECT_EQ(parse_law(law_name(law)), law);
  EXPECT_FOLIUM_ERROR(parse_law("times"), ErrorCode::UnknownLaw);
  EXPECT_TRUE(excludes_origin(LawKind::StarMul));
  EXPECT_FALSE(excludes_origin(LawKind::FieldMul));
  EXPECT_TRUE(needs_unique_cube_root(LawKind::WestMul));
}

TEST(Laws, MultiplicativeValues) {
  const Folium c(q, 1);
  EXPECT_EQ(proj_mul(c, P(c, 2), P(c, 3)), P(c, 6));
  EXPECT_EQ(proj_mul2(c, P(c, 2), P(c, 3)), P(c, 6));
  EXPECT_EQ(star_mul(c, P(c, 2), P(c, 3)), P(c, -6));
  EXPECT_EQ(proj_inv(c, P(c, 2)), P(c, 1, 2));
  EXPECT_EQ(perp(c, P(c, 2)), P(c, -1, 2));
  EXPECT_EQ(perp(c, pt(q, "(2/3, 4/3)")), pt(q, "(-12/7, 6/7)"));
  EXPECT_EQ(mul_neutral(c), vertex(c));
  EXPECT_EQ(neutral(c, LawKind::StarMul), c.infinity());
  EXPECT_EQ(proj_mul(c, c.infinity(), c.infinity()), vertex(c));
  EXPECT_EQ(perp(c, c.infinity()), vertex(c));
  EXPECT_EQ(perp(c, vertex(c)), c.infinity());
}

TEST(Laws, AdditiveAndFieldValues) {
  const Folium c(q, 2);
  EXPECT_EQ(add_south(c, P(c, 2), P(c, 3)), P(c, 5));
  EXPECT_EQ(add_west(c, sigma(P(c, 2)), sigma(P(c, 3))), sigma(P(c, 5)));
  EXPECT_EQ(neg(c, P(c, 2)), P(c, -2));
  EXPECT_EQ(add_south(c, P(c, 2), c.origin()), P(c, 2));
  EXPECT_EQ(field_mul(c, c.origin(), P(c, 7)), c.origin());
  EXPECT_EQ(field_div(c, P(c, 6), P(c, 3)), P(c, 2));
  EXPECT_EQ(field_sub(c, P(c, 6), P(c, 3)), P(c, 3));
  EXPECT_EQ(field_inv(c, P(c, 4)), P(c, 1, 4));
}

TEST(Laws, AffineLawsOverRationals) {
  const Folium c(q, 1);
  // tau = t + 1: p(1) has tau 2, p(2) has tau 3, product 6 -> t = 5.
  EXPECT_EQ(south_mul(c, P(c, 1), P(c, 2)), P(c, 5));
  EXPECT_EQ(south_parameter(c, c.origin()), Q(1));
  EXPECT_EQ(neutral(c, LawKind::SouthMul), c.origin());
  EXPECT_EQ(south_mul(c, P(c, 3), south_inv(c, P(c, 3))), c.origin());
  EXPECT_EQ(west_mul(c, sigma(P(c, 1)), sigma(P(c, 2))), sigma(P(c, 5)));
  EXPECT_EQ(west_mul(c, P(c, 4), west_inv(c, P(c, 4))), c.origin());
}

TEST(Laws, Errors) {
  const Folium c(q, 1);
  EXPECT_FOLIUM_ERROR(proj_mul(c, c.origin(), P(c, 2)), ErrorCode::OriginNotInGroup);
  EXPECT_FOLIUM_ERROR(star_mul(c, P(c, 2), c.origin()), ErrorCode::OriginNotInGroup);
  EXPECT_FOLIUM_ERROR(proj_inv(c, c.origin()), ErrorCode::OriginNotInGroup);
  EXPECT_FOLIUM_ERROR(perp(c, c.origin()), ErrorCode::OriginNotInGroup);
  EXPECT_FOLIUM_ERROR(field_inv(c, c.origin()), ErrorCode::DivisionByZeroPoint);
  EXPECT_FOLIUM_ERROR(field_div(c, P(c, 2), c.origin()), ErrorCode::DivisionByZeroPoint);
  EXPECT_FOLIUM_ERROR(proj_mul(c, pt(q, "(1, 1)"), P(c, 2)), ErrorCode::NotOnCurve);
  EXPECT_FOLIUM_ERROR(south_mul(c, c.infinity(), P(c, 2)), ErrorCode::PointAtInfinity);
  EXPECT_FOLIUM_ERROR(south_inv(c, c.infinity()), ErrorCode::PointAtInfinity);
  const Folium c7(Field::prime(7), 1);
  EXPECT_FOLIUM_ERROR(south_mul(c7, c7.origin(), c7.origin()), ErrorCode::FieldLacksUniqueCubeRoot);
  EXPECT_FOLIUM_ERROR(west_inv(c7, c7.origin()), ErrorCode::FieldLacksUniqueCubeRoot);
  EXPECT_FALSE(in_domain(c7, LawKind::SouthMul, c7.origin()));
}

// Property: every law obeys the abelian group axioms on random rational points.
TEST(LawsProperty, GroupAxiomsOverRationals) {
  for (long long a : {1, -3}) {
    const Folium c(q, a);
    for (auto law : kAllLaws) {
      auto rng = make_rng(5, "test/laws/" + std::string(law_name(law)));
      auto draw = [&] {
        for (;;) {
          const auto p = pbar(c, random_element(q, rng));
          if (in_domain(c, law, p) && (law != LawKind::FieldMul || p != c.origin())) return p;
        }
      };
      const auto e = neutral(c, law);
      for (int i = 0; i < 200; ++i) {
        const auto x = draw(), y = draw(), z = draw();
        const std::string at = std::string(law_name(law)) + " " + x.to_string() + " " + y.to_string();
        const auto xy = compose(c, law, x, y);
        ASSERT_TRUE(in_domain(c, law, xy)) << at;
        EXPECT_EQ(xy, compose(c, law, y, x)) << at;
        EXPECT_EQ(compose(c, law, xy, z), compose(c, law, x, compose(c, law, y, z))) << at;
        EXPECT_EQ(compose(c, law, x, e), x) << at;
        EXPECT_EQ(compose(c, law, x, inverse(c, law, x)), e) << at;
      }
    }
  }
}

// Property: pbar transports the field operations (homomorphism checks).
TEST(LawsProperty, ParametersTransport) {
  const Folium c(Field::prime(101), 3);
  auto rng = make_rng(9, "test/laws/transport");
  for (int i = 0; i < 500; ++i) {
    const auto s = random_nonzero(c.field(), rng);
    const auto t = random_nonzero(c.field(), rng);
    EXPECT_EQ(proj_mul(c, pbar(c, s), pbar(c, t)), pbar(c, s * t));
    EXPECT_EQ(star_mul(c, pbar(c, s), pbar(c, t)), pbar(c, -(s * t)));
    EXPECT_EQ(add_south(c, pbar(c, s), pbar(c, t)), pbar(c, s + t));
    EXPECT_EQ(add_west(c, pbarbar(c, s), pbarbar(c, t)), pbarbar(c, s + t));
    EXPECT_EQ(perp(c, pbar(c, s)), pbar(c, -s.inverse()));
  }
}
