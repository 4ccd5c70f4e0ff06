#pragma once

// Test-only reference computations. Nothing here goes through the library's
// parametrizations or canonical forms; they use plain integers mod p and
// mpq_class directly.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using Triple = std::array<std::int64_t, 3>;

inline std::int64_t mod(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

inline std::int64_t inv_mod(std::int64_t v, std::int64_t p) {
  // Brute force; p is tiny in tests.
  for (std::int64_t k = 1; k < p; ++k) {
    if (mod(v * k, p) == 1) return k;
  }
  return 0;
}

/// Scale so the first nonzero entry in the order z, x, y is one.
inline Triple normalize(Triple t, std::int64_t p) {
  std::int64_t pivot = t[2] != 0 ? t[2] : (t[0] != 0 ? t[0] : t[1]);
  std::int64_t s = inv_mod(pivot, p);
  return {mod(t[0] * s, p), mod(t[1] * s, p), mod(t[2] * s, p)};
}

/// All points of x^3 + y^3 - 3a xyz = 0 by scanning every nonzero triple of F_p^3.
inline std::set<Triple> curve_points(std::int64_t p, std::int64_t a) {
  std::set<Triple> out;
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      for (std::int64_t z = 0; z < p; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (mod(x * x % p * x + y * y % p * y - 3 * a % p * x % p * y % p * z, p) == 0) {
          out.insert(normalize({x, y, z}, p));
        }
      }
    }
  }
  return out;
}

/// Roots of e^2 - e + 1 by direct substitution.
inline std::vector<std::int64_t> epsilon_roots(std::int64_t p) {
  std::vector<std::int64_t> r;
  for (std::int64_t e = 0; e < p; ++e) {
    if (mod(e * e - e + 1, p) == 0) r.push_back(e);
  }
  return r;
}

/// (3at, 3at^2, 1 + t^3) over Q, returned affinely when 1 + t^3 != 0.
inline std::optional<std::pair<mpq_class, mpq_class>> affine_param_point(const mpq_class& a, const mpq_class& t) {
  mpq_class z = 1 + t * t * t;
  if (z == 0) return std::nullopt;
  mpq_class x = 3 * a * t / z;
  mpq_class y = 3 * a * t * t / z;
  x.canonicalize();
  y.canonicalize();
  return std::make_pair(x, y);
}

inline bool on_affine_curve(const mpq_class& a, const mpq_class& x, const mpq_class& y) {
  return x * x * x + y * y * y - 3 * a * x * y == 0;
}

/// Third intersection of the affine chord (or tangent when the points
/// coincide) with x^3 + y^3 - 3axy = 0, by substituting y = m x + b into the
/// cubic and using the sum of the x-roots. Returns nullopt for vertical
/// lines and for lines whose third point is at infinity.
inline std::optional<std::pair<mpq_class, mpq_class>> third_point_vieta(const mpq_class& a, const mpq_class& x1,
                                                                        const mpq_class& y1, const mpq_class& x2,
                                                                        const mpq_class& y2) {
  mpq_class m;
  if (x1 == x2 && y1 == y2) {
    mpq_class den = 3 * y1 * y1 - 3 * a * x1;
    if (den == 0) return std::nullopt;
    m = -(3 * x1 * x1 - 3 * a * y1) / den;
  } else {
    if (x1 == x2) return std::nullopt;
    m = (y2 - y1) / (x2 - x1);
  }
  mpq_class b = y1 - m * x1;
  mpq_class lead = 1 + m * m * m;
  if (lead == 0) return std::nullopt;
  mpq_class quad = 3 * m * m * b - 3 * a * m;
  mpq_class x3 = -quad / lead - x1 - x2;
  mpq_class y3 = m * x3 + b;
  x3.canonicalize();
  y3.canonicalize();
  return std::make_pair(x3, y3);
}

}  // namespace oracle
