#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "folium/error.hpp"

namespace folium {

/// Base field descriptor: the rationals or a prime field F_p with p != 3.
class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }

  static Field prime(std::uint64_t p) {
    if (p == 3) {
      throw Error(ErrorCode::InvalidField, "characteristic 3 is not supported");
    }
    if (p >= (std::uint64_t{1} << 32)) {
      throw Error(ErrorCode::InvalidField, "modulus must be below 2^32");
    }
    if (!is_prime(p)) {
      throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
    }
    return Field(Kind::Prime, p);
  }

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  bool is_prime_field() const { return kind_ == Kind::Prime; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t modulus() const { return p_; }

  /// CLI spelling: `q` or `fp:<p>`.
  std::string to_string() const {
    return is_rational() ? std::string("q") : "fp:" + std::to_string(p_);
  }

  friend bool operator==(const Field&, const Field&) = default;

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

inline Field parse_field(std::string_view spec) {
  if (spec == "q" || spec == "Q") return Field::rationals();
  if (spec.substr(0, 3) == "fp:") {
    auto digits = spec.substr(3);
    if (digits.empty() || digits.size() > 19) {
      throw Error(ErrorCode::ParseError, "bad prime in field spec '" + std::string(spec) + "'");
    }
    std::uint64_t p = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') {
        throw Error(ErrorCode::ParseError, "bad prime in field spec '" + std::string(spec) + "'");
      }
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return Field::prime(p);
  }
  throw Error(ErrorCode::ParseError, "field spec must be 'q' or 'fp:<p>', got '" + std::string(spec) + "'");
}

/// An exact element of a Field. Rationals are kept reduced with positive
/// denominator (mpq canonical form); residues live in [0, p).
class Element {
 public:
  Element(Field field, long long value) : field_(field) {
    if (field_.is_rational()) {
      value_ = mpq_class(static_cast<long>(value));
    } else {
      auto p = static_cast<long long>(field_.modulus());
      long long r = value % p;
      if (r < 0) r += p;
      value_ = static_cast<std::uint64_t>(r);
    }
  }

  Element(Field field, const mpq_class& value) : field_(field) {
    if (field_.is_rational()) {
      mpq_class v = value;
      v.canonicalize();
      value_ = std::move(v);
    } else {
      value_ = reduce(value.get_num());
      if (value.get_den() != 1) {
        std::uint64_t den = reduce(value.get_den());
        if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes mod p");
        value_ = mul_mod(std::get<std::uint64_t>(value_), inv_mod(den));
      }
    }
  }

  static Element zero(Field field) { return Element(field, 0); }
  static Element one(Field field) { return Element(field, 1); }

  const Field& field() const { return field_; }

  bool is_zero() const {
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
  }

  bool is_one() const { return *this == one(field_); }

  /// Rational value; only valid over the rationals.
  const mpq_class& rational() const {
    if (!field_.is_rational()) throw Error(ErrorCode::UnorderedField, "element is not rational");
    return std::get<mpq_class>(value_);
  }

  std::uint64_t residue() const {
    if (field_.is_rational()) throw Error(ErrorCode::MixedFields, "element is not a residue");
    return std::get<std::uint64_t>(value_);
  }

  /// Sign in the ordered field; throws UnorderedField for F_p.
  int sign() const {
    const auto& q = rational();
    int s = sgn(q);
    return (s > 0) - (s < 0);
  }

  Element operator-() const {
    if (field_.is_rational()) return Element(field_, mpq_class(-std::get<mpq_class>(value_)), Raw{});
    auto r = std::get<std::uint64_t>(value_);
    return Element(field_, r == 0 ? 0 : field_.modulus() - r, Raw{});
  }

  friend Element operator+(const Element& u, const Element& v) {
    check_same(u, v);
    if (u.field_.is_rational()) {
      return Element(u.field_, mpq_class(std::get<mpq_class>(u.value_) + std::get<mpq_class>(v.value_)), Raw{});
    }
    auto s = std::get<std::uint64_t>(u.value_) + std::get<std::uint64_t>(v.value_);
    if (s >= u.field_.modulus()) s -= u.field_.modulus();
    return Element(u.field_, s, Raw{});
  }

  friend Element operator-(const Element& u, const Element& v) { return u + (-v); }

  friend Element operator*(const Element& u, const Element& v) {
    check_same(u, v);
    if (u.field_.is_rational()) {
      return Element(u.field_, mpq_class(std::get<mpq_class>(u.value_) * std::get<mpq_class>(v.value_)), Raw{});
    }
    return Element(u.field_, u.mul_mod(std::get<std::uint64_t>(u.value_), std::get<std::uint64_t>(v.value_)), Raw{});
  }

  Element inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (field_.is_rational()) return Element(field_, mpq_class(1 / std::get<mpq_class>(value_)), Raw{});
    return Element(field_, inv_mod(std::get<std::uint64_t>(value_)), Raw{});
  }

  friend Element operator/(const Element& u, const Element& v) {
    check_same(u, v);
    return u * v.inverse();
  }

  Element& operator+=(const Element& v) { return *this = *this + v; }
  Element& operator-=(const Element& v) { return *this = *this - v; }
  Element& operator*=(const Element& v) { return *this = *this * v; }
  Element& operator/=(const Element& v) { return *this = *this / v; }

  Element pow(unsigned k) const {
    Element acc = one(field_);
    for (unsigned i = 0; i < k; ++i) acc *= *this;
    return acc;
  }

  friend bool operator==(const Element& u, const Element& v) {
    if (u.field_ != v.field_) return false;
    return u.value_ == v.value_;
  }

  /// Total order used for containers; numeric order over Q, residue order over F_p.
  friend bool operator<(const Element& u, const Element& v) {
    check_same(u, v);
    if (u.field_.is_rational()) return std::get<mpq_class>(u.value_) < std::get<mpq_class>(v.value_);
    return std::get<std::uint64_t>(u.value_) < std::get<std::uint64_t>(v.value_);
  }

  /// Literal form accepted back by parse_element: `n`, `n/d` or a residue.
  std::string to_string() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
  }

  double to_double() const { return rational().get_d(); }

 private:
  struct Raw {};
  Element(Field field, mpq_class value, Raw) : field_(field), value_(std::move(value)) {}
  Element(Field field, std::uint64_t value, Raw) : field_(field), value_(value) {}

  static void check_same(const Element& u, const Element& v) {
    if (u.field_ != v.field_) {
      throw Error(ErrorCode::MixedFields, u.field_.to_string() + " vs " + v.field_.to_string());
    }
  }

  std::uint64_t reduce(const mpz_class& n) const {
    const mpz_class p(static_cast<unsigned long>(field_.modulus()));
    mpz_class r = n % p;
    if (r < 0) r += p;
    return r.get_ui();
  }

  std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y) const { return (x * y) % field_.modulus(); }

  std::uint64_t inv_mod(std::uint64_t x) const {
    // Fermat: x^(p-2)
    std::uint64_t p = field_.modulus();
    std::uint64_t result = 1 % p, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul_mod(result, base);
      base = mul_mod(base, base);
      e >>= 1;
    }
    return result;
  }

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

inline Element parse_element(const Field& field, std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  auto to_mpz = [](std::string_view s) {
    std::string str(s);
    if (!str.empty() && str[0] == '+') str.erase(0, 1);
    return mpz_class(str, 10);
  };

  auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(trimmed)) throw Error(ErrorCode::ParseError, "bad element literal '" + std::string(text) + "'");
    return Element(field, mpq_class(to_mpz(trimmed)));
  }
  if (!field.is_rational()) {
    throw Error(ErrorCode::ParseError, "fractions are only accepted over q: '" + std::string(text) + "'");
  }
  auto num = trimmed.substr(0, slash);
  auto den = trimmed.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) {
    throw Error(ErrorCode::ParseError, "bad element literal '" + std::string(text) + "'");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  return Element(field, mpq_class(to_mpz(num), d));
}

/// Upper bound (exclusive) on p for the brute-force epsilon scan.
inline constexpr std::uint64_t kEpsilonScanLimit = std::uint64_t{1} << 16;

/// Roots of e^2 - e + 1 = 0 in the field, ascending by residue. Over Q the
/// discriminant -3 is never a square, so there are none.
inline std::optional<std::pair<Element, Element>> solve_epsilon(const Field& field) {
  if (field.is_rational()) return std::nullopt;
  const std::uint64_t p = field.modulus();
  if (p >= kEpsilonScanLimit) {
    throw Error(ErrorCode::FieldTooLargeForScan, "epsilon scan needs p < 2^16, got " + std::to_string(p));
  }
  std::optional<std::uint64_t> first;
  for (std::uint64_t e = 0; e < p; ++e) {
    if ((e * e + p - e + 1) % p == 0) {
      if (!first) {
        first = e;
      } else {
        return std::make_pair(Element(field, static_cast<long long>(*first)),
                              Element(field, static_cast<long long>(e)));
      }
    }
  }
  // A double root would need discriminant -3 = 0, i.e. p = 3, which is excluded.
  return std::nullopt;
}

/// True iff l^3 + 1 = 0 has l = -1 as its only root in the field.
inline bool cube_root_unique(const Field& field) { return !solve_epsilon(field).has_value(); }

}  // namespace folium
