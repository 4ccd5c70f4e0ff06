#pragma once

#include <array>
#include <span>
#include <vector>

#include "folium/curve.hpp"
#include "folium/error.hpp"
#include "folium/laws.hpp"
#include "folium/parametrize.hpp"

namespace folium {

/// Line through two distinct points: the cross product of their triples.
inline ProjectiveLine line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p == q) throw Error(ErrorCode::CoincidentPoints, p.to_string() + " given twice");
  return ProjectiveLine(p.y() * q.z() - p.z() * q.y(), p.z() * q.x() - p.x() * q.z(), p.x() * q.y() - p.y() * q.x());
}

/// Tangent at a smooth point, with coefficients the gradient of the cubic.
inline ProjectiveLine tangent_at(const Folium& curve, const ProjectivePoint& p) {
  if (is_singular_point(curve, p)) throw Error(ErrorCode::SingularPoint, "no unique tangent at the node");
  auto g = gradient(curve, p);
  return ProjectiveLine(g[0], g[1], g[2]);
}

/// Chord through p and q, or the tangent at p when they coincide.
inline ProjectiveLine chord_or_tangent(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  return p == q ? tangent_at(curve, p) : line_through(p, q);
}

/// Third point of the chord (tangent when p1 = p2) through two non-node
/// points, from the slope product t1 t2 t3 = -1.
inline ProjectivePoint third_intersection(const Folium& curve, const ProjectivePoint& p1, const ProjectivePoint& p2) {
  curve.require_on_curve(p1);
  curve.require_on_curve(p2);
  if (p1 == curve.origin() || p2 == curve.origin()) {
    throw Error(ErrorCode::OriginNotAllowed, "chords through the node are not used by the construction");
  }
  const auto t3 = -(pbar_inv(curve, p1) * pbar_inv(curve, p2)).inverse();
  auto p3 = pbar(curve, t3);
  if (p3 == curve.origin()) {
    throw Error(ErrorCode::InvariantViolation, "third intersection landed on the node");
  }
  return p3;
}

/// x1 x2 x3 + y1 y2 y3 = 0. Homogeneous of degree one in each point, so the
/// choice of representative does not matter.
inline bool collinear3(const Folium& curve, const ProjectivePoint& p1, const ProjectivePoint& p2,
                       const ProjectivePoint& p3) {
  curve.require_on_curve(p1);
  curve.require_on_curve(p2);
  curve.require_on_curve(p3);
  return (p1.x() * p2.x() * p3.x() + p1.y() * p2.y() * p3.y()).is_zero();
}

/// P1 . P2 as the perp of the third chord point.
inline ProjectivePoint geometric_mul(const Folium& curve, const ProjectivePoint& p1, const ProjectivePoint& p2) {
  return perp(curve, third_intersection(curve, p1, p2));
}

/// P1 . P2 as the third point on the line through the neutral and the third chord point.
inline ProjectivePoint geometric_mul_via_vertex(const Folium& curve, const ProjectivePoint& p1,
                                                const ProjectivePoint& p2) {
  return third_intersection(curve, mul_neutral(curve), third_intersection(curve, p1, p2));
}

/// Coefficients, lowest degree first, of t^3 - 3an t^2 - 3am t + 1 for the
/// line m x + n y = z. Its roots are the slopes y/x of the curve points on the line.
inline std::array<Element, 4> slope_cubic(const Folium& curve, const ProjectiveLine& line) {
  if (line.passes_through_origin()) {
    throw Error(ErrorCode::LineThroughOrigin, line.equation() + " passes through O");
  }
  // Rescale m x + n y + p z = 0 to m' x + n' y = z.
  const auto scale = -line.p().inverse();
  const auto m = line.m() * scale;
  const auto n = line.n() * scale;
  const auto three_a = curve.constant(3) * curve.a();
  return {curve.one(), -three_a * m, -three_a * n, curve.one()};
}

inline Element eval_cubic(const std::array<Element, 4>& c, const Element& t) {
  return c[0] + t * (c[1] + t * (c[2] + t * c[3]));
}

/// Multiplicity of t as a root of the cubic (0 to 3), by repeated synthetic division.
inline int root_multiplicity(const std::array<Element, 4>& c, const Element& t) {
  std::vector<Element> poly(c.begin(), c.end());
  int mult = 0;
  while (poly.size() > 1) {
    // Horner: divide by (X - t); remainder is the value at t.
    std::vector<Element> quotient(poly.size() - 1, Element::zero(t.field()));
    Element acc = poly.back();
    for (std::size_t i = poly.size() - 1; i-- > 0;) {
      quotient[i] = acc;
      acc = poly[i] + acc * t;
    }
    if (!acc.is_zero()) break;
    ++mult;
    poly = std::move(quotient);
  }
  return mult;
}

/// Every listed point that lies on both the curve and the line (other than O)
/// has its slope among the roots of the line's slope cubic.
inline bool slope_cubic_check(const Folium& curve, const ProjectiveLine& line,
                              std::span<const ProjectivePoint> points) {
  const auto cubic = slope_cubic(curve, line);
  for (const auto& pt : points) {
    if (!curve.contains(pt) || !line.incident(pt) || pt == curve.origin()) continue;
    if (!eval_cubic(cubic, pbar_inv(curve, pt)).is_zero()) return false;
  }
  return true;
}

/// x_P x_Q + y_P y_Q = 0 for affine rational points: the chords OP and OQ are
/// perpendicular.
inline bool perpendicular_chord_check(const Folium& curve, const ProjectivePoint& p, const ProjectivePoint& q) {
  if (!curve.field().is_rational()) {
    throw Error(ErrorCode::UnorderedField, "perpendicularity is only meaningful over q");
  }
  for (const auto* pt : {&p, &q}) {
    curve.require_on_curve(*pt);
    if (*pt == curve.origin()) throw Error(ErrorCode::OriginNotAllowed, "O has no chord from O");
    if (*pt == vertex(curve)) throw Error(ErrorCode::VertexNotAllowed, "V is excluded");
    if (!pt->is_affine()) throw Error(ErrorCode::PointAtInfinity, pt->to_string() + " is not affine");
  }
  return (p.x() * q.x() + p.y() * q.y()).is_zero();
}

/// Geometric collinearity of three non-node points counted with multiplicity,
/// decided without parameters: distinct points by the determinant, a doubled
/// point by incidence with its tangent, a tripled point by triple contact of
/// its tangent.
inline bool chord_tangent_collinear(const Folium& curve, const ProjectivePoint& p1, const ProjectivePoint& p2,
                                    const ProjectivePoint& p3) {
  for (const auto* p : {&p1, &p2, &p3}) {
    curve.require_on_curve(*p);
    if (*p == curve.origin()) throw Error(ErrorCode::OriginNotAllowed, "node given to chord_tangent_collinear");
  }
  if (p1 != p2 && p2 != p3 && p1 != p3) return line_through(p1, p2).incident(p3);
  if (p1 == p2 && p2 == p3) {
    const auto tangent = tangent_at(curve, p1);
    return root_multiplicity(slope_cubic(curve, tangent), pbar_inv(curve, p1)) == 3;
  }
  const auto& doubled = (p1 == p2 || p1 == p3) ? p1 : p2;
  const auto& single = (p1 == p2) ? p3 : (p1 == p3 ? p2 : p1);
  return tangent_at(curve, doubled).incident(single);
}

/// All p^2 + p + 1 lines of P^2(F_p) in canonical form.
inline std::vector<ProjectiveLine> plane_lines(const Field& field) {
  if (!field.is_prime_field()) throw Error(ErrorCode::UnorderedField, "lines can only be enumerated over F_p");
  if (field.modulus() > kEnumerationLimit) {
    throw Error(ErrorCode::FieldTooLargeForScan, "line enumeration needs p <= 10^4");
  }
  const auto p = static_cast<long long>(field.modulus());
  const auto zero = Element::zero(field);
  const auto one = Element::one(field);
  std::vector<ProjectiveLine> lines;
  for (long long m = 0; m < p; ++m) {
    for (long long n = 0; n < p; ++n) lines.emplace_back(Element(field, m), Element(field, n), one);
  }
  for (long long n = 0; n < p; ++n) lines.emplace_back(one, Element(field, n), zero);
  lines.emplace_back(zero, one, zero);
  return lines;
}

/// Intersection of a line not through O with the curve, as a multiset of
/// points, when all three intersections are rational. Multiplicities come
/// from tangency alone: a point of contact is doubled, and tripled when it is
/// the only point found. Returns an empty vector when the line meets the
/// curve in fewer than three rational points (counted this way).
inline std::vector<ProjectivePoint> intersection_multiset(const Folium& curve, const ProjectiveLine& line,
                                                         const std::vector<ProjectivePoint>& on_line) {
  std::vector<ProjectivePoint> out;
  if (on_line.size() == 3) return on_line;
  if (on_line.size() == 2) {
    const bool t0 = tangent_at(curve, on_line[0]) == line;
    const bool t1 = tangent_at(curve, on_line[1]) == line;
    if (t0 == t1) return out;
    const auto& doubled = t0 ? on_line[0] : on_line[1];
    return {doubled, doubled, t0 ? on_line[1] : on_line[0]};
  }
  if (on_line.size() == 1 && tangent_at(curve, on_line[0]) == line) {
    return {on_line[0], on_line[0], on_line[0]};
  }
  return out;
}

}  // namespace folium
