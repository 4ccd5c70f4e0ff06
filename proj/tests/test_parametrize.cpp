#include "oracles.hpp"
#include "support.hpp"

using namespace folium;
using testing_support::F;
using testing_support::pt;
using testing_support::Q;

namespace {
const Field q = Field::rationals();
}

TEST(Parametrize, KnownValues) {
  const Folium c(q, 1);
  EXPECT_EQ(pbar(c, Q(2)), pt(q, "(2/3, 4/3)"));
  EXPECT_EQ(pbar(c, Q(0)), c.origin());
  EXPECT_EQ(pbar(c, Q(-1)), c.infinity());
  EXPECT_EQ(pbar(c, Q(1)), vertex(c));
  EXPECT_EQ(pbarbar(c, Q(2)), pt(q, "(4/3, 2/3)"));
  EXPECT_EQ(p_affine(c, Q(2)), pbar(c, Q(2)));
  EXPECT_EQ(p_affine_prime(c, Q(2)), pbarbar(c, Q(2)));
  EXPECT_EQ(pbar_inv(c, pt(q, "(2/3, 4/3)")), Q(2));
  EXPECT_EQ(pbar_inv(c, c.origin()), Q(0));
  EXPECT_EQ(pbar_inv(c, c.infinity()), Q(-1));
  EXPECT_EQ(pbarbar_inv(c, pt(q, "(4/3, 2/3)")), Q(2));
  EXPECT_EQ(sigma(pt(q, "(1 : 2 : 3)")), pt(q, "(2 : 1 : 3)"));
  EXPECT_EQ(alpha(Q(3)), Q(2));
  EXPECT_EQ(alpha_inv(Q(2)), Q(3));
  EXPECT_EQ(evaluate_map(c, parse_param_kind("pbarbar"), Q(2)), pbarbar(c, Q(2)));
}

TEST(Parametrize, Errors) {
  const Folium c(q, 1);
  EXPECT_FOLIUM_ERROR(p_affine(c, Q(-1)), ErrorCode::ParameterAtInfinity);
  EXPECT_FOLIUM_ERROR(p_affine_prime(c, Q(-1)), ErrorCode::ParameterAtInfinity);
  EXPECT_FOLIUM_ERROR(pbar_inv(c, pt(q, "(1, 1)")), ErrorCode::NotOnCurve);
  EXPECT_FOLIUM_ERROR(parse_param_kind("p"), ErrorCode::ParseError);
  const Folium c7(Field::prime(7), 1);
  // 3^3 = -1 in F_7: an extra infinite point, so the affine map is undefined there.
  EXPECT_FOLIUM_ERROR(p_affine(c7, F(7, 3)), ErrorCode::ParameterAtInfinity);
  EXPECT_EQ(pbar(c7, F(7, 3)), ProjectivePoint(F(7, 1), F(7, 3), F(7, 0)));
}

// Property: pbar agrees with direct rational evaluation and is inverted by y/x.
TEST(ParametrizeProperty, RationalRoundTrip) {
  for (long long a : {1, 2, -3}) {
    const Folium c(q, a);
    auto rng = make_rng(11, "test/param/" + std::to_string(a));
    for (int i = 0; i < 1000; ++i) {
      const auto t = random_element(q, rng);
      const auto p = pbar(c, t);
      EXPECT_TRUE(c.contains(p));
      EXPECT_EQ(pbar_inv(c, p), t);
      EXPECT_EQ(pbarbar_inv(c, pbarbar(c, t)), t);
      EXPECT_EQ(pbarbar(c, t), sigma(p));
      const auto ref = oracle::affine_param_point(c.a().rational(), t.rational());
      if (ref) {
        ASSERT_TRUE(p.is_affine());
        EXPECT_EQ(p.x().rational(), ref->first);
        EXPECT_EQ(p.y().rational(), ref->second);
        EXPECT_TRUE(oracle::on_affine_curve(c.a().rational(), ref->first, ref->second));
      } else {
        EXPECT_FALSE(p.is_affine());
      }
      EXPECT_EQ(alpha(alpha_inv(t)), t);
    }
  }
}

// Property: over F_p, pbar maps F_p onto the curve minus nothing but the second
// preimage of O (t = infinity), so it is injective on F_p.
TEST(ParametrizeProperty, BijectionOverSmallFields) {
  for (std::uint64_t p : {2, 5, 7, 11, 13, 17}) {
    const Folium c(Field::prime(p), 1);
    std::set<ProjectivePoint> image;
    for (std::uint64_t t = 0; t < p; ++t) {
      const auto point = pbar(c, c.constant(static_cast<long long>(t)));
      EXPECT_TRUE(c.contains(point));
      EXPECT_EQ(pbar_inv(c, point).residue(), t);
      image.insert(point);
    }
    EXPECT_EQ(image.size(), p);
    EXPECT_EQ(image, enumerate_points(c));
  }
}
