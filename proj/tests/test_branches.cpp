#include "support.hpp"

using namespace folium;
using testing_support::pt;
using testing_support::Q;

namespace {
const Field q = Field::rationals();
}

TEST(Branches, Labels) {
  const Folium c(q, 1);
  EXPECT_EQ(classify_branch(c, c.origin()), BranchLabel::Node);
  EXPECT_EQ(classify_branch(c, vertex(c)), BranchLabel::Vertex);
  EXPECT_EQ(classify_branch(c, pbar(c, Q(1, 2))), BranchLabel::SouthInterior);
  EXPECT_EQ(classify_branch(c, pbar(c, Q(-1, 2))), BranchLabel::SouthInterior);
  EXPECT_EQ(classify_branch(c, pbar(c, Q(2))), BranchLabel::WestInterior);
  EXPECT_EQ(classify_branch(c, pbar(c, Q(-2))), BranchLabel::WestInterior);
  EXPECT_EQ(branch_name(BranchLabel::SouthInterior), "SouthInterior");
  EXPECT_EQ(branch_name(BranchLabel::Node), "Node");
}

TEST(Branches, Errors) {
  const Folium c(q, 1);
  EXPECT_FOLIUM_ERROR(classify_branch(c, c.infinity()), ErrorCode::PointAtInfinity);
  EXPECT_FOLIUM_ERROR(classify_branch(c, pt(q, "(1, 1)")), ErrorCode::NotOnCurve);
  const Folium c5(Field::prime(5), 1);
  EXPECT_FOLIUM_ERROR(classify_branch(c5, c5.origin()), ErrorCode::UnorderedField);
}

// Property: sigma swaps the two interiors and fixes the node and the vertex;
// the label depends only on whether |t| < 1.
TEST(BranchesProperty, SigmaSymmetry) {
  for (long long a : {1, 3, -2}) {
    const Folium c(q, a);
    auto rng = make_rng(21, "test/branches/" + std::to_string(a));
    for (int i = 0; i < 1000; ++i) {
      const auto t = random_element(q, rng);
      const auto p = pbar(c, t);
      if (!p.is_affine()) continue;
      const auto label = classify_branch(c, p);
      const auto swapped = classify_branch(c, sigma(p));
      const auto& r = t.rational();
      if (r == 0) {
        EXPECT_EQ(label, BranchLabel::Node);
      } else if (r == 1) {
        EXPECT_EQ(label, BranchLabel::Vertex);
      } else {
        EXPECT_EQ(label, abs(r) < 1 ? BranchLabel::SouthInterior : BranchLabel::WestInterior) << t.to_string();
      }
      BranchLabel expected = label;
      if (label == BranchLabel::SouthInterior) expected = BranchLabel::WestInterior;
      if (label == BranchLabel::WestInterior) expected = BranchLabel::SouthInterior;
      EXPECT_EQ(swapped, expected) << t.to_string();
    }
  }
}
