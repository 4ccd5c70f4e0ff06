#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "folium/error.hpp"
#include "folium/field.hpp"

namespace folium {

namespace detail {

/// Scale a homogeneous triple so that the last nonzero coordinate in the
/// order (2, 0, 1) becomes one. Throws InvalidPoint on the zero triple.
inline std::array<Element, 3> canonical_triple(const Element& c0, const Element& c1, const Element& c2) {
  const Field& f = c0.field();
  if (c1.field() != f || c2.field() != f) {
    throw Error(ErrorCode::MixedFields, "homogeneous coordinates over different fields");
  }
  const Element* pivot = nullptr;
  if (!c2.is_zero()) {
    pivot = &c2;
  } else if (!c0.is_zero()) {
    pivot = &c0;
  } else if (!c1.is_zero()) {
    pivot = &c1;
  } else {
    throw Error(ErrorCode::InvalidPoint, "all homogeneous coordinates are zero");
  }
  if (pivot->is_one()) return {c0, c1, c2};
  const Element s = pivot->inverse();
  return {c0 * s, c1 * s, c2 * s};
}

}  // namespace detail

/// A point of P^2 in canonical form: z = 1 when z != 0, else x = 1, else y = 1.
class ProjectivePoint {
 public:
  ProjectivePoint(const Element& x, const Element& y, const Element& z)
      : c_(detail::canonical_triple(x, y, z)) {}

  static ProjectivePoint affine(const Element& x, const Element& y) {
    return ProjectivePoint(x, y, Element::one(x.field()));
  }

  const Element& x() const { return c_[0]; }
  const Element& y() const { return c_[1]; }
  const Element& z() const { return c_[2]; }
  const Field& field() const { return c_[0].field(); }

  bool is_affine() const { return !c_[2].is_zero(); }

  friend bool operator==(const ProjectivePoint& p, const ProjectivePoint& q) { return p.c_ == q.c_; }

  friend bool operator<(const ProjectivePoint& p, const ProjectivePoint& q) {
    for (std::size_t i : {2u, 0u, 1u}) {
      if (p.c_[i] < q.c_[i]) return true;
      if (q.c_[i] < p.c_[i]) return false;
    }
    return false;
  }

  /// `(x : y : z)`, the literal syntax parse_point accepts.
  std::string to_string() const {
    return "(" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() + ")";
  }

 private:
  std::array<Element, 3> c_;
};

/// The line m x + n y + p z = 0, coefficients canonicalized like points.
class ProjectiveLine {
 public:
  ProjectiveLine(const Element& m, const Element& n, const Element& p) : c_(detail::canonical_triple(m, n, p)) {}

  const Element& m() const { return c_[0]; }
  const Element& n() const { return c_[1]; }
  const Element& p() const { return c_[2]; }

  bool incident(const ProjectivePoint& pt) const {
    return (c_[0] * pt.x() + c_[1] * pt.y() + c_[2] * pt.z()).is_zero();
  }

  bool passes_through_origin() const { return c_[2].is_zero(); }

  friend bool operator==(const ProjectiveLine&, const ProjectiveLine&) = default;

  std::string to_string() const {
    return "[" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() + "]";
  }

  /// Human-readable `m*x + n*y + p*z = 0`.
  std::string equation() const {
    std::string out;
    const char* names[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < 3; ++i) {
      if (c_[i].is_zero()) continue;
      std::string coef = c_[i].to_string();
      bool negative = !coef.empty() && coef[0] == '-';
      if (negative) coef.erase(0, 1);
      if (out.empty()) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      if (coef != "1") out += coef + "*";
      out += names[i];
    }
    return out + " = 0";
  }

 private:
  std::array<Element, 3> c_;
};

/// The projective Folium x^3 + y^3 - 3a xyz = 0 over a field of characteristic != 3.
class Folium {
 public:
  explicit Folium(const Element& a) : a_(a) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroParameter, "curve parameter a must be nonzero");
    if (a.field().is_rational() || a.field().modulus() < kEpsilonScanLimit) {
      epsilon_ = solve_epsilon(a.field());
      scanned_ = true;
    }
  }

  Folium(const Field& field, long long a) : Folium(Element(field, a)) {}

  const Field& field() const { return a_.field(); }
  const Element& a() const { return a_; }

  Element zero() const { return Element::zero(field()); }
  Element one() const { return Element::one(field()); }
  Element constant(long long v) const { return Element(field(), v); }

  /// Epsilon roots, computed once at construction when the field is small enough.
  const std::optional<std::pair<Element, Element>>& epsilon_roots() const {
    if (!scanned_) {
      throw Error(ErrorCode::FieldTooLargeForScan,
                  "epsilon scan needs p < 2^16, got " + std::to_string(field().modulus()));
    }
    return epsilon_;
  }

  bool cube_root_unique() const { return !epsilon_roots().has_value(); }

  ProjectivePoint origin() const { return ProjectivePoint(zero(), zero(), one()); }
  ProjectivePoint infinity() const { return ProjectivePoint(one(), -one(), zero()); }

  Element evaluate(const ProjectivePoint& p) const {
    const auto& x = p.x();
    const auto& y = p.y();
    const auto& z = p.z();
    return x * x * x + y * y * y - constant(3) * a_ * x * y * z;
  }

  bool contains(const ProjectivePoint& p) const {
    check_field(p);
    return evaluate(p).is_zero();
  }

  void require_on_curve(const ProjectivePoint& p) const {
    if (!contains(p)) throw Error(ErrorCode::NotOnCurve, p.to_string() + " is not on the curve");
  }

  void check_field(const ProjectivePoint& p) const {
    if (p.field() != field()) {
      throw Error(ErrorCode::MixedFields, "point over " + p.field().to_string() + ", curve over " +
                                              field().to_string());
    }
  }

  friend bool operator==(const Folium&, const Folium&) = default;

 private:
  Element a_;
  std::optional<std::pair<Element, Element>> epsilon_;
  bool scanned_ = false;
};

inline bool contains(const Folium& curve, const ProjectivePoint& p) { return curve.contains(p); }

/// Partial derivatives of x^3 + y^3 - 3a xyz at a point.
inline std::array<Element, 3> gradient(const Folium& curve, const ProjectivePoint& p) {
  const auto three = curve.constant(3);
  const auto& a = curve.a();
  return {three * p.x() * p.x() - three * a * p.y() * p.z(),
          three * p.y() * p.y() - three * a * p.x() * p.z(),
          -three * a * p.x() * p.y()};
}

inline bool is_singular_point(const Folium& curve, const ProjectivePoint& p) {
  curve.require_on_curve(p);
  auto g = gradient(curve, p);
  return g[0].is_zero() && g[1].is_zero() && g[2].is_zero();
}

struct SpecialPoints {
  ProjectivePoint origin;
  ProjectivePoint infinity;
  /// (3a : 3a : 2); absent in characteristic 2 where it coincides with I.
  std::optional<ProjectivePoint> vertex;
  bool vertex_is_infinity = false;
  std::vector<ProjectivePoint> infinity_list;
};

/// The vertex (3a : 3a : 2). In characteristic 2 the triple degenerates to I
/// and there is no affine vertex, so this throws CharacteristicTwo.
inline ProjectivePoint vertex(const Folium& curve) {
  if (curve.field().characteristic() == 2) {
    throw Error(ErrorCode::CharacteristicTwo, "the vertex coincides with I in characteristic 2");
  }
  const auto three_a = curve.constant(3) * curve.a();
  return ProjectivePoint(three_a, three_a, curve.constant(2));
}

inline SpecialPoints special_points(const Folium& curve) {
  SpecialPoints sp{curve.origin(), curve.infinity(), std::nullopt, false, {curve.infinity()}};
  if (curve.field().characteristic() == 2) {
    sp.vertex_is_infinity = true;
  } else {
    sp.vertex = vertex(curve);
  }
  if (const auto& eps = curve.epsilon_roots()) {
    sp.infinity_list.emplace_back(curve.one(), eps->first, curve.zero());
    sp.infinity_list.emplace_back(curve.one(), eps->second, curve.zero());
  }
  return sp;
}

inline constexpr std::uint64_t kEnumerationLimit = 10000;

/// Brute-force scan of the p^2 + p + 1 canonical points of P^2(F_p).
/// Deliberately independent of any parametrization.
inline std::set<ProjectivePoint> enumerate_points(const Folium& curve) {
  const Field& f = curve.field();
  if (!f.is_prime_field()) throw Error(ErrorCode::UnorderedField, "enumeration needs a prime field");
  if (f.modulus() > kEnumerationLimit) {
    throw Error(ErrorCode::FieldTooLargeForScan, "enumeration needs p <= 10^4, got " + std::to_string(f.modulus()));
  }
  const auto p = static_cast<long long>(f.modulus());
  std::set<ProjectivePoint> out;
  auto consider = [&](const ProjectivePoint& pt) {
    if (curve.contains(pt)) out.insert(pt);
  };
  for (long long x = 0; x < p; ++x) {
    for (long long y = 0; y < p; ++y) consider(ProjectivePoint(Element(f, x), Element(f, y), curve.one()));
  }
  for (long long y = 0; y < p; ++y) consider(ProjectivePoint(curve.one(), Element(f, y), curve.zero()));
  consider(ProjectivePoint(curve.zero(), curve.one(), curve.zero()));
  return out;
}

}  // namespace folium
