#pragma once

#include <string_view>

#include "folium/curve.hpp"
#include "folium/error.hpp"
#include "folium/field.hpp"

namespace folium {

enum class ParamKind { PBar, PBarBar, PAffine, PAffinePrime };

inline ParamKind parse_param_kind(std::string_view name) {
  if (name == "pbar") return ParamKind::PBar;
  if (name == "pbarbar") return ParamKind::PBarBar;
  if (name == "paffine") return ParamKind::PAffine;
  if (name == "paffineprime") return ParamKind::PAffinePrime;
  throw Error(ErrorCode::ParseError, "unknown map '" + std::string(name) + "'");
}

/// Coordinate swap (x : y : z) -> (y : x : z).
inline ProjectivePoint sigma(const ProjectivePoint& p) { return ProjectivePoint(p.y(), p.x(), p.z()); }

/// t -> (3at : 3at^2 : 1 + t^3). Total on the field; pbar(0) = O, pbar(-1) = I.
inline ProjectivePoint pbar(const Folium& curve, const Element& t) {
  const auto three_a_t = curve.constant(3) * curve.a() * t;
  return ProjectivePoint(three_a_t, three_a_t * t, curve.one() + t * t * t);
}

/// y / x, with the node sent to 0.
inline Element pbar_inv(const Folium& curve, const ProjectivePoint& p) {
  curve.require_on_curve(p);
  // On the curve x = 0 forces y = 0, so x != 0 away from O.
  if (p.x().is_zero()) return curve.zero();
  return p.y() / p.x();
}

/// t -> (3at^2 : 3at : 1 + t^3), the swapped parametrization.
inline ProjectivePoint pbarbar(const Folium& curve, const Element& t) { return sigma(pbar(curve, t)); }

/// x / y, with the node sent to 0.
inline Element pbarbar_inv(const Folium& curve, const ProjectivePoint& p) {
  curve.require_on_curve(p);
  if (p.y().is_zero()) return curve.zero();
  return p.x() / p.y();
}

/// Affine parametrization (3at / (1+t^3), 3at^2 / (1+t^3)); undefined where t^3 = -1.
inline ProjectivePoint p_affine(const Folium& curve, const Element& t) {
  const auto denom = curve.one() + t * t * t;
  if (denom.is_zero()) {
    throw Error(ErrorCode::ParameterAtInfinity, "t = " + t.to_string() + " has t^3 = -1");
  }
  const auto x = curve.constant(3) * curve.a() * t / denom;
  return ProjectivePoint::affine(x, x * t);
}

inline ProjectivePoint p_affine_prime(const Folium& curve, const Element& t) { return sigma(p_affine(curve, t)); }

inline ProjectivePoint evaluate_map(const Folium& curve, ParamKind kind, const Element& t) {
  switch (kind) {
    case ParamKind::PBar: return pbar(curve, t);
    case ParamKind::PBarBar: return pbarbar(curve, t);
    case ParamKind::PAffine: return p_affine(curve, t);
    case ParamKind::PAffinePrime: return p_affine_prime(curve, t);
  }
  throw Error(ErrorCode::ParseError, "unknown map");
}

/// The shift tau -> tau - 1 taking the multiplicative neutral 1 to the node parameter 0.
inline Element alpha(const Element& tau) { return tau - Element::one(tau.field()); }

inline Element alpha_inv(const Element& t) { return t + Element::one(t.field()); }

}  // namespace folium
