#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "folium/curve.hpp"
#include "folium/field.hpp"
#include "folium/parametrize.hpp"

namespace folium {

using Rng = std::mt19937_64;

/// Independent stream per (seed, label) so results do not depend on the
/// order in which properties run.
inline Rng make_rng(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

inline constexpr long long kRationalHeight = 1000;

/// Largest p for which a PointPool holds the enumerated point set.
inline constexpr std::uint64_t kPoolEnumerationLimit = 257;

/// Uniform residue over F_p; over Q a fraction n/d with |n| <= 1000, 1 <= d <= 1000,
/// with small integers drawn a quarter of the time.
inline Element random_element(const Field& field, Rng& rng) {
  if (field.is_prime_field()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
    return Element(field, static_cast<long long>(dist(rng)));
  }
  std::uniform_int_distribution<int> coin(0, 3);
  if (coin(rng) == 0) {
    std::uniform_int_distribution<long long> small(-5, 5);
    return Element(field, small(rng));
  }
  std::uniform_int_distribution<long long> num(-kRationalHeight, kRationalHeight);
  std::uniform_int_distribution<long long> den(1, kRationalHeight);
  return Element(field, mpq_class(static_cast<long>(num(rng)), static_cast<long>(den(rng))));
}

inline Element random_nonzero(const Field& field, Rng& rng) {
  for (;;) {
    auto e = random_element(field, rng);
    if (!e.is_zero()) return e;
  }
}

/// A carrier set for property checks: an explicit list when the field is
/// small enough to enumerate, otherwise a sampler.
class PointPool {
 public:
  using Filter = std::function<bool(const ProjectivePoint&)>;

  /// Over F_p with p <= kPoolEnumerationLimit the pool is the enumerated point
  /// set; over Q points are pbar of random parameters. Both are filtered.
  static PointPool of(const Folium& curve, Filter keep) {
    PointPool pool(curve, keep);
    if (curve.field().is_prime_field() && curve.field().modulus() <= kPoolEnumerationLimit) {
      for (const auto& p : enumerate_points(curve)) {
        if (keep(p)) pool.all_.push_back(p);
      }
      pool.enumerable_ = true;
    }
    return pool;
  }

  bool enumerable() const { return enumerable_; }
  const std::vector<ProjectivePoint>& points() const { return all_; }
  std::size_t size() const { return all_.size(); }
  bool empty() const { return enumerable_ && all_.empty(); }

  ProjectivePoint draw(Rng& rng) const {
    if (enumerable_) {
      std::uniform_int_distribution<std::size_t> dist(0, all_.size() - 1);
      return all_[dist(rng)];
    }
    for (;;) {
      auto p = pbar(curve_, random_element(curve_.field(), rng));
      if (keep_(p)) return p;
    }
  }

 private:
  PointPool(const Folium& curve, Filter keep) : curve_(curve), keep_(std::move(keep)) {}

  Folium curve_;
  Filter keep_;
  std::vector<ProjectivePoint> all_;
  bool enumerable_ = false;
};

}  // namespace folium
