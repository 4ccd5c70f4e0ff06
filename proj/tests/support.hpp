#pragma once

#include <folium/folium.hpp>
#include <gtest/gtest.h>

#include <string>

// Asserts that `stmt` throws folium::Error carrying `expected_code`.
#define EXPECT_FOLIUM_ERROR(stmt, expected_code)                                        \
  do {                                                                                  \
    try {                                                                               \
      stmt;                                                                             \
      ADD_FAILURE() << "expected " << folium::error_name(expected_code) << " from " #stmt; \
    } catch (const folium::Error& e) {                                                  \
      EXPECT_EQ(e.code(), expected_code) << e.what();                                   \
    }                                                                                   \
  } while (0)

namespace testing_support {

inline folium::Element Q(long long n, long long d = 1) {
  return folium::Element(folium::Field::rationals(), mpq_class(static_cast<long>(n), static_cast<long>(d)));
}

inline folium::Element F(std::uint64_t p, long long v) { return folium::Element(folium::Field::prime(p), v); }

inline folium::ProjectivePoint pt(const folium::Field& f, const std::string& text) {
  return folium::parse_point(f, text);
}

}  // namespace testing_support
