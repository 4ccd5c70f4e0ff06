#pragma once

#include <array>
#include <string>
#include <string_view>

#include "folium/curve.hpp"
#include "folium/error.hpp"
#include "folium/parametrize.hpp"

namespace folium {

// Composition laws transported onto the curve from the additive and
// multiplicative groups of the base field. Each law is written directly on
// the parameter of its defining parametrization.
//
//   ProjMul   pbar(t)    . pbar(u)    = pbar(t u)        curve \ {O}, neutral V
//   ProjMul2  pbarbar(t) o pbarbar(u) = pbarbar(t u)     curve \ {O}, neutral V
//   StarMul   pbar(t)    * pbar(u)    = pbar(-t u)       curve \ {O}, neutral I
//   AddSouth  pbar(t)    + pbar(u)    = pbar(t + u)      whole curve, neutral O
//   AddWest   pbarbar(t) + pbarbar(u) = pbarbar(t + u)   whole curve, neutral O
//   SouthMul  affine law through p(tau - 1)              affine curve, neutral O
//   WestMul   affine law through sigma p(tau - 1)        affine curve, neutral O
//   FieldMul  ProjMul extended by O . A = A . O = O      whole curve, neutral V

enum class LawKind { ProjMul, ProjMul2, StarMul, AddSouth, AddWest, SouthMul, WestMul, FieldMul };

inline constexpr std::array<LawKind, 8> kAllLaws = {LawKind::ProjMul,  LawKind::ProjMul2, LawKind::StarMul,
                                                    LawKind::AddSouth, LawKind::AddWest,  LawKind::SouthMul,
                                                    LawKind::WestMul,  LawKind::FieldMul};

constexpr std::string_view law_name(LawKind law) {
  switch (law) {
    case LawKind::ProjMul: return "projmul";
    case LawKind::ProjMul2: return "projmul2";
    case LawKind::StarMul: return "star";
    case LawKind::AddSouth: return "addsouth";
    case LawKind::AddWest: return "addwest";
    case LawKind::SouthMul: return "southmul";
    case LawKind::WestMul: return "westmul";
    case LawKind::FieldMul: return "fieldmul";
  }
  return "?";
}

inline LawKind parse_law(std::string_view name) {
  for (auto law : kAllLaws) {
    if (law_name(law) == name) return law;
  }
  throw Error(ErrorCode::UnknownLaw, "unknown law '" + std::string(name) + "'");
}

/// Whether the law is only defined away from the node O.
constexpr bool excludes_origin(LawKind law) {
  return law == LawKind::ProjMul || law == LawKind::ProjMul2 || law == LawKind::StarMul;
}

/// Affine laws exist only when l^3 + 1 = 0 has the single root -1.
constexpr bool needs_unique_cube_root(LawKind law) { return law == LawKind::SouthMul || law == LawKind::WestMul; }

namespace detail {

inline void require_group_point(const Folium& curve, const ProjectivePoint& p) {
  curve.require_on_curve(p);
  if (p == curve.origin()) throw Error(ErrorCode::OriginNotInGroup, "O is not in the multiplicative group");
}

inline void require_affine_law_point(const Folium& curve, const ProjectivePoint& p) {
  if (!curve.cube_root_unique()) {
    throw Error(ErrorCode::FieldLacksUniqueCubeRoot,
                curve.field().to_string() + " has extra cube roots of -1; the affine curve is not a p-alpha image");
  }
  curve.require_on_curve(p);
  if (!p.is_affine()) throw Error(ErrorCode::PointAtInfinity, p.to_string() + " is not an affine point");
}

}  // namespace detail

/// Neutral of the multiplicative laws: pbar(1), which is V = (3a : 3a : 2)
/// whenever the characteristic is not 2 (and I otherwise).
inline ProjectivePoint mul_neutral(const Folium& curve) { return pbar(curve, curve.one()); }

inline ProjectivePoint proj_mul(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  detail::require_group_point(curve, p);
  detail::require_group_point(curve, q);
  return pbar(curve, pbar_inv(curve, p) * pbar_inv(curve, q));
}

inline ProjectivePoint proj_mul2(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  detail::require_group_point(curve, p);
  detail::require_group_point(curve, q);
  return pbarbar(curve, pbarbar_inv(curve, p) * pbarbar_inv(curve, q));
}

/// Inverse for ., o and * alike: the reflection (x : y : z) -> (y : x : z).
inline ProjectivePoint proj_inv(const Folium& curve, const ProjectivePoint& p) {
  detail::require_group_point(curve, p);
  return sigma(p);
}

inline ProjectivePoint star_mul(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  detail::require_group_point(curve, p);
  detail::require_group_point(curve, q);
  return pbar(curve, -(pbar_inv(curve, p) * pbar_inv(curve, q)));
}

/// pbar(t) -> pbar(-1/t); an involution of curve \ {O}.
inline ProjectivePoint perp(const Folium& curve, const ProjectivePoint& p) {
  detail::require_group_point(curve, p);
  return pbar(curve, -pbar_inv(curve, p).inverse());
}

inline ProjectivePoint add_south(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  return pbar(curve, pbar_inv(curve, p) + pbar_inv(curve, q));
}

/// Opposite for both additive laws: pbar(t) -> pbar(-t).
inline ProjectivePoint neg(const Folium& curve, const ProjectivePoint& p) { return pbar(curve, -pbar_inv(curve, p)); }

inline ProjectivePoint add_west(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  return pbarbar(curve, pbarbar_inv(curve, p) + pbarbar_inv(curve, q));
}

inline ProjectivePoint west_neg(const Folium& curve, const ProjectivePoint& p) {
  return pbarbar(curve, -pbarbar_inv(curve, p));
}

/// Multiplicative parameter tau = t + 1 of an affine point under p-alpha.
inline Element south_parameter(const Folium& curve, const ProjectivePoint& p) {
  detail::require_affine_law_point(curve, p);
  return alpha_inv(pbar_inv(curve, p));
}

inline Element west_parameter(const Folium& curve, const ProjectivePoint& p) {
  detail::require_affine_law_point(curve, p);
  return alpha_inv(pbarbar_inv(curve, p));
}

inline ProjectivePoint south_mul(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  return p_affine(curve, alpha(south_parameter(curve, p) * south_parameter(curve, q)));
}

inline ProjectivePoint south_inv(const Folium& curve, const ProjectivePoint& p) {
  return p_affine(curve, alpha(south_parameter(curve, p).inverse()));
}

inline ProjectivePoint west_mul(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  return p_affine_prime(curve, alpha(west_parameter(curve, p) * west_parameter(curve, q)));
}

inline ProjectivePoint west_inv(const Folium& curve, const ProjectivePoint& p) {
  return p_affine_prime(curve, alpha(west_parameter(curve, p).inverse()));
}

// Field structure (curve, +, .) with O absorbing under multiplication.

inline ProjectivePoint field_add(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  return add_south(curve, p, q);
}

inline ProjectivePoint field_mul(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  curve.require_on_curve(p);
  curve.require_on_curve(q);
  if (p == curve.origin() || q == curve.origin()) return curve.origin();
  return proj_mul(curve, p, q);
}

inline ProjectivePoint field_neg(const Folium& curve, const ProjectivePoint& p) { return neg(curve, p); }

inline ProjectivePoint field_inv(const Folium& curve, const ProjectivePoint& p) {
  curve.require_on_curve(p);
  if (p == curve.origin()) throw Error(ErrorCode::DivisionByZeroPoint, "O has no multiplicative inverse");
  return sigma(p);
}

inline ProjectivePoint field_div(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  return field_mul(curve, p, field_inv(curve, q));
}

inline ProjectivePoint field_sub(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  return field_add(curve, p, field_neg(curve, q));
}

// Uniform dispatch over LawKind.

inline ProjectivePoint neutral(const Folium& curve, LawKind law) {
  switch (law) {
    case LawKind::ProjMul:
    case LawKind::ProjMul2:
    case LawKind::FieldMul: return mul_neutral(curve);
    case LawKind::StarMul: return curve.infinity();
    case LawKind::AddSouth:
    case LawKind::AddWest:
    case LawKind::SouthMul:
    case LawKind::WestMul: return curve.origin();
  }
  throw Error(ErrorCode::UnknownLaw, "unknown law");
}

/// Membership in the carrier set of the law (FieldMul: the whole curve).
inline bool in_domain(const Folium& curve, LawKind law, const ProjectivePoint& p) {
  if (!curve.contains(p)) return false;
  if (excludes_origin(law)) return p != curve.origin();
  if (needs_unique_cube_root(law)) return curve.cube_root_unique() && p.is_affine();
  return true;
}

inline ProjectivePoint compose(const Folium& curve, LawKind law, const ProjectivePoint& p, const ProjectivePoint& q) {
  switch (law) {
    case LawKind::ProjMul: return proj_mul(curve, p, q);
    case LawKind::ProjMul2: return proj_mul2(curve, p, q);
    case LawKind::StarMul: return star_mul(curve, p, q);
    case LawKind::AddSouth: return add_south(curve, p, q);
    case LawKind::AddWest: return add_west(curve, p, q);
    case LawKind::SouthMul: return south_mul(curve, p, q);
    case LawKind::WestMul: return west_mul(curve, p, q);
    case LawKind::FieldMul: return field_mul(curve, p, q);
  }
  throw Error(ErrorCode::UnknownLaw, "unknown law");
}

/// Inverse under the law. For FieldMul this is the multiplicative inverse and
/// O raises DivisionByZeroPoint.
inline ProjectivePoint inverse(const Folium& curve, LawKind law, const ProjectivePoint& p) {
  switch (law) {
    case LawKind::ProjMul:
    case LawKind::ProjMul2:
    case LawKind::StarMul: return proj_inv(curve, p);
    case LawKind::AddSouth: return neg(curve, p);
    case LawKind::AddWest: return west_neg(curve, p);
    case LawKind::SouthMul: return south_inv(curve, p);
    case LawKind::WestMul: return west_inv(curve, p);
    case LawKind::FieldMul: return field_inv(curve, p);
  }
  throw Error(ErrorCode::UnknownLaw, "unknown law");
}

}  // namespace folium
