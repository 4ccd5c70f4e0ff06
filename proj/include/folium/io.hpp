#pragma once

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

#include "folium/curve.hpp"
#include "folium/error.hpp"
#include "folium/field.hpp"

namespace folium {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace detail

/// Parses `(x : y : z)` or the affine shorthand `(x, y)`.
inline ProjectivePoint parse_point(const Field& field, std::string_view text) {
  auto body = detail::trim(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw Error(ErrorCode::ParseError, "point literal must be parenthesized: '" + std::string(text) + "'");
  }
  body = body.substr(1, body.size() - 2);
  const bool projective = body.find(':') != std::string_view::npos;
  auto parts = detail::split(body, projective ? ':' : ',');
  if (projective && parts.size() == 3) {
    return ProjectivePoint(parse_element(field, parts[0]), parse_element(field, parts[1]),
                           parse_element(field, parts[2]));
  }
  if (!projective && parts.size() == 2) {
    return ProjectivePoint::affine(parse_element(field, parts[0]), parse_element(field, parts[1]));
  }
  throw Error(ErrorCode::ParseError, "expected (x : y : z) or (x, y), got '" + std::string(text) + "'");
}

inline nlohmann::json to_json(const ProjectivePoint& p) {
  return {{"x", p.x().to_string()}, {"y", p.y().to_string()}, {"z", p.z().to_string()}};
}

inline nlohmann::json to_json(const ProjectiveLine& l) {
  return {{"m", l.m().to_string()}, {"n", l.n().to_string()}, {"p", l.p().to_string()}, {"equation", l.equation()}};
}

inline ProjectivePoint point_from_json(const Field& field, const nlohmann::json& j) {
  try {
    return ProjectivePoint(parse_element(field, j.at("x").get<std::string>()),
                           parse_element(field, j.at("y").get<std::string>()),
                           parse_element(field, j.at("z").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad point JSON: ") + e.what());
  }
}

}  // namespace folium
