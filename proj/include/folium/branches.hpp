#pragma once

#include <string_view>

#include "folium/curve.hpp"
#include "folium/error.hpp"
#include "folium/parametrize.hpp"

namespace folium {

/// Position of an affine rational point on the real picture of the curve:
/// South branch is the loop p(-1, 1), West branch the two wings
/// p(1, inf) u {O} u p(-inf, -1). They meet only at the node.
enum class BranchLabel { SouthInterior, WestInterior, Vertex, Node };

constexpr std::string_view branch_name(BranchLabel label) {
  switch (label) {
    case BranchLabel::SouthInterior: return "SouthInterior";
    case BranchLabel::WestInterior: return "WestInterior";
    case BranchLabel::Vertex: return "Vertex";
    case BranchLabel::Node: return "Node";
  }
  return "?";
}

inline BranchLabel classify_branch(const Folium& curve, const ProjectivePoint& p) {
  if (!curve.field().is_rational()) {
    throw Error(ErrorCode::UnorderedField, "branches need an ordered field");
  }
  curve.require_on_curve(p);
  if (!p.is_affine()) throw Error(ErrorCode::PointAtInfinity, p.to_string() + " is at infinity");
  const auto t = pbar_inv(curve, p);
  if (t.is_zero()) return BranchLabel::Node;
  if (t.is_one()) return BranchLabel::Vertex;
  const auto& q = t.rational();
  if (q > -1 && q < 1) return BranchLabel::SouthInterior;
  return BranchLabel::WestInterior;
}

}  // namespace folium
