#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "folium/branches.hpp"
#include "folium/curve.hpp"
#include "folium/error.hpp"
#include "folium/field.hpp"
#include "folium/geometry.hpp"
#include "folium/laws.hpp"
#include "folium/parametrize.hpp"
#include "folium/sampling.hpp"

namespace folium {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
};

struct PropertyResult {
  std::string name;
  std::uint64_t instances = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
  std::optional<std::string> skipped;
};

struct Report {
  std::string suite;
  std::string field;
  std::string a;
  std::vector<PropertyResult> properties;

  bool passed() const {
    for (const auto& p : properties) {
      if (!p.passed) return false;
    }
    return true;
  }
};

inline nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json props = nlohmann::ordered_json::array();
  for (const auto& p : report.properties) {
    nlohmann::ordered_json j;
    j["name"] = p.name;
    j["instances"] = p.instances;
    j["passed"] = p.passed;
    if (p.counterexample) j["counterexample"] = *p.counterexample;
    if (p.skipped) j["skipped"] = *p.skipped;
    props.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["suite"] = report.suite;
  out["field"] = report.field;
  out["a"] = report.a;
  out["properties"] = std::move(props);
  return out;
}

inline std::string to_text(const Report& report) {
  std::string out = "suite " + report.suite + " over " + report.field + ", a = " + report.a + "\n";
  for (const auto& p : report.properties) {
    std::string status = p.skipped ? "SKIP" : (p.passed ? "PASS" : "FAIL");
    out += "  [" + status + "] " + p.name + " (" + std::to_string(p.instances) + " instances)";
    if (p.skipped) out += ": " + *p.skipped;
    if (p.counterexample) out += "\n         counterexample: " + *p.counterexample;
    out += "\n";
  }
  out += report.passed() ? "all properties hold\n" : "FAILURES\n";
  return out;
}

namespace detail {

/// Accumulates instances of one property; keeps the first counterexample.
class PropertyCheck {
 public:
  explicit PropertyCheck(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.instances;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }

  void fail(std::string why) {
    ++result_.instances;
    if (result_.passed) {
      result_.passed = false;
      result_.counterexample = std::move(why);
    }
  }

  PropertyResult done() { return std::move(result_); }

 private:
  PropertyResult result_;
};

inline std::string describe(const std::vector<ProjectivePoint>& pts) {
  std::string out;
  for (const auto& p : pts) out += (out.empty() ? "" : ", ") + p.to_string();
  return out;
}

inline std::string describe(const std::vector<Element>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x.to_string();
  return out;
}

/// Maximum number of tuples visited exhaustively; above it tuples are sampled.
inline constexpr std::uint64_t kExhaustiveBudget = 50000;

inline bool fits_budget(std::uint64_t n, std::size_t arity) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    total *= n;
    if (total > kExhaustiveBudget) return false;
  }
  return true;
}

template <class T, class Draw, class Fn>
void for_each_tuple(const std::vector<T>* all, Draw&& draw, std::size_t arity, const VerifyOptions& opt, Rng& rng,
                    Fn&& fn) {
  std::vector<T> tuple;
  if (all && !all->empty() && fits_budget(all->size(), arity)) {
    std::vector<std::size_t> idx(arity, 0);
    for (;;) {
      tuple.clear();
      for (auto i : idx) tuple.push_back((*all)[i]);
      fn(tuple);
      std::size_t k = 0;
      while (k < arity && ++idx[k] == all->size()) idx[k++] = 0;
      if (k == arity) return;
    }
  }
  if (all && all->empty()) return;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    tuple.clear();
    for (std::size_t i = 0; i < arity; ++i) tuple.push_back(draw(rng));
    fn(tuple);
  }
}

template <class Fn>
void for_each_point_tuple(const PointPool& pool, std::size_t arity, const VerifyOptions& opt, Rng& rng, Fn&& fn) {
  for_each_tuple<ProjectivePoint>(pool.enumerable() ? &pool.points() : nullptr,
                                  [&](Rng& r) { return pool.draw(r); }, arity, opt, rng, fn);
}

/// Elements of the base field: all residues for F_p, random rationals over Q.
class ElementPool {
 public:
  ElementPool(const Field& field, bool nonzero) : field_(field), nonzero_(nonzero) {
    if (field.is_prime_field() && field.modulus() <= kEnumerationLimit) {
      for (std::uint64_t v = nonzero ? 1 : 0; v < field.modulus(); ++v) {
        all_.emplace_back(field, static_cast<long long>(v));
      }
      enumerable_ = true;
    }
  }

  template <class Fn>
  void for_each(std::size_t arity, const VerifyOptions& opt, Rng& rng, Fn&& fn) const {
    for_each_tuple<Element>(enumerable_ ? &all_ : nullptr,
                            [&](Rng& r) { return nonzero_ ? random_nonzero(field_, r) : random_element(field_, r); },
                            arity, opt, rng, fn);
  }

 private:
  Field field_;
  bool nonzero_;
  bool enumerable_ = false;
  std::vector<Element> all_;
};

/// Runs body, turning a library error into a failed instance.
template <class Body>
void guarded(PropertyCheck& check, const std::string& context, Body&& body) {
  try {
    body();
  } catch (const Error& e) {
    check.fail(context + " raised " + e.what());
  }
}

inline ProjectivePoint fold(const Folium& c, LawKind law, const std::vector<ProjectivePoint>& pts) {
  ProjectivePoint acc = pts.front();
  for (std::size_t i = 1; i < pts.size(); ++i) acc = compose(c, law, acc, pts[i]);
  return acc;
}

using Suite = std::function<void(const Folium&, const VerifyOptions&, std::vector<PropertyResult>&)>;

inline PropertyResult skipped(std::string name, std::string why) {
  PropertyResult r;
  r.name = std::move(name);
  r.skipped = std::move(why);
  return r;
}

// ---------------------------------------------------------------------------

inline void suite_count(const Folium& c, const VerifyOptions&, std::vector<PropertyResult>& out) {
  if (!c.field().is_prime_field() || c.field().modulus() > kEnumerationLimit) {
    out.push_back(skipped("point count equals p", "point count needs a prime field with p <= 10^4"));
    out.push_back(skipped("O is the unique singular point", "needs an enumerable prime field"));
    return;
  }
  const auto points = enumerate_points(c);
  PropertyCheck count("point count equals p");
  count.expect(points.size() == c.field().modulus(), [&] {
    return "enumerated " + std::to_string(points.size()) + " points, expected " + std::to_string(c.field().modulus());
  });
  out.push_back(count.done());

  PropertyCheck singular("O is the unique singular point");
  for (const auto& p : points) {
    singular.expect(is_singular_point(c, p) == (p == c.origin()), [&] { return p.to_string(); });
  }
  out.push_back(singular.done());
}

template <class Body>
void property(std::vector<PropertyResult>& out, const VerifyOptions& opt, const std::string& name, Body&& body) {
  PropertyCheck check(name);
  auto rng = make_rng(opt.seed, name);
  body(check, rng);
  out.push_back(check.done());
}

/// One instance: evaluates pred on the tuple, recording errors as failures.
template <class Tuple, class Pred>
void instance(PropertyCheck& check, const Tuple& tuple, Pred&& pred) {
  guarded(check, describe(tuple), [&] { check.expect(pred(), [&] { return describe(tuple); }); });
}

inline void suite_field_axioms(const Folium& c, const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  const Field& f = c.field();
  const ElementPool any(f, false);
  const ElementPool nonzero(f, true);
  const auto zero = Element::zero(f);
  const auto one = Element::one(f);

  property(out, opt, "base field: associativity", [&](PropertyCheck& chk, Rng& rng) {
    any.for_each(3, opt, rng, [&](const std::vector<Element>& v) {
      instance(chk, v, [&] {
        return (v[0] + v[1]) + v[2] == v[0] + (v[1] + v[2]) && (v[0] * v[1]) * v[2] == v[0] * (v[1] * v[2]);
      });
    });
  });
  property(out, opt, "base field: distributivity", [&](PropertyCheck& chk, Rng& rng) {
    any.for_each(3, opt, rng, [&](const std::vector<Element>& v) {
      instance(chk, v, [&] { return v[0] * (v[1] + v[2]) == v[0] * v[1] + v[0] * v[2]; });
    });
  });
  property(out, opt, "base field: commutativity", [&](PropertyCheck& chk, Rng& rng) {
    any.for_each(2, opt, rng, [&](const std::vector<Element>& v) {
      instance(chk, v, [&] { return v[0] + v[1] == v[1] + v[0] && v[0] * v[1] == v[1] * v[0]; });
    });
  });
  property(out, opt, "base field: identities and inverses", [&](PropertyCheck& chk, Rng& rng) {
    any.for_each(1, opt, rng, [&](const std::vector<Element>& v) {
      instance(chk, v, [&] {
        bool ok = v[0] + zero == v[0] && v[0] * one == v[0] && v[0] + (-v[0]) == zero && v[0] - v[0] == zero;
        if (!v[0].is_zero()) ok = ok && v[0] * v[0].inverse() == one && v[0] / v[0] == one;
        return ok;
      });
    });
  });
  if (f.is_prime_field() && f.modulus() >= kEpsilonScanLimit) {
    out.push_back(skipped("epsilon roots are primitive sixth roots of unity", "FieldTooLargeForScan"));
    return;
  }
  property(out, opt, "epsilon roots are primitive sixth roots of unity", [&](PropertyCheck& chk, Rng&) {
    const auto eps = solve_epsilon(f);
    if (!eps) {
      chk.expect(f.is_rational() || f.modulus() == 2 || f.modulus() % 3 == 2,
                 [&] { return "no epsilon roots but p = 1 mod 3"; });
      return;
    }
    const std::vector<Element> roots{eps->first, eps->second};
    instance(chk, roots, [&] {
      return eps->first.pow(3) == -one && eps->second.pow(3) == -one && eps->first * eps->second == one &&
             f.modulus() % 3 == 1;
    });
  });
}

inline void suite_roundtrip(const Folium& c, const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  const Field& f = c.field();
  const ElementPool any(f, false);
  const ElementPool nonzero(f, true);
  const auto curve_points = PointPool::of(c, [](const ProjectivePoint&) { return true; });

  property(out, opt, "pbar_inv(pbar(t)) = t", [&](PropertyCheck& chk, Rng& rng) {
    any.for_each(1, opt, rng, [&](const std::vector<Element>& v) {
      instance(chk, v, [&] { return pbar_inv(c, pbar(c, v[0])) == v[0] && c.contains(pbar(c, v[0])); });
    });
  });
  property(out, opt, "pbar(pbar_inv(P)) = P", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(curve_points, 1, opt, rng, [&](const std::vector<ProjectivePoint>& v) {
      instance(chk, v, [&] { return pbar(c, pbar_inv(c, v[0])) == v[0]; });
    });
  });
  property(out, opt, "pbarbar_inv(pbarbar(t)) = t", [&](PropertyCheck& chk, Rng& rng) {
    any.for_each(1, opt, rng, [&](const std::vector<Element>& v) {
      instance(chk, v, [&] { return pbarbar_inv(c, pbarbar(c, v[0])) == v[0]; });
    });
  });
  if (curve_points.enumerable()) {
    property(out, opt, "pbar is onto the enumerated points", [&](PropertyCheck& chk, Rng&) {
      std::set<ProjectivePoint> image;
      for (std::uint64_t v = 0; v < f.modulus(); ++v) image.insert(pbar(c, Element(f, static_cast<long long>(v))));
      for (const auto& p : curve_points.points()) {
        chk.expect(image.count(p) == 1, [&] { return p.to_string() + " is not in the image of pbar"; });
      }
      chk.expect(image.size() == curve_points.size(), [&] { return "image and point set differ in size"; });
    });
  }
  property(out, opt, "sigma is an involution fixing the curve", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(curve_points, 1, opt, rng, [&](const std::vector<ProjectivePoint>& v) {
      instance(chk, v, [&] { return sigma(sigma(v[0])) == v[0] && c.contains(sigma(v[0])); });
    });
  });
  property(out, opt, "sigma(pbar(t)) = pbar(1/t)", [&](PropertyCheck& chk, Rng& rng) {
    nonzero.for_each(1, opt, rng, [&](const std::vector<Element>& v) {
      instance(chk, v, [&] {
        return sigma(pbar(c, v[0])) == pbar(c, v[0].inverse()) && pbarbar(c, v[0]) == sigma(pbar(c, v[0]));
      });
    });
  });
  property(out, opt, "p_affine(t) = pbar(t) off t^3 = -1", [&](PropertyCheck& chk, Rng& rng) {
    any.for_each(1, opt, rng, [&](const std::vector<Element>& v) {
      const auto& t = v[0];
      if ((t * t * t + Element::one(f)).is_zero()) return;
      instance(chk, v, [&] {
        return p_affine(c, t) == pbar(c, t) && p_affine_prime(c, t) == sigma(pbar(c, t)) && p_affine(c, t).is_affine();
      });
    });
  });
  property(out, opt, "alpha and alpha_inv are mutually inverse", [&](PropertyCheck& chk, Rng& rng) {
    any.for_each(1, opt, rng, [&](const std::vector<Element>& v) {
      instance(chk, v, [&] { return alpha(alpha_inv(v[0])) == v[0] && alpha_inv(alpha(v[0])) == v[0]; });
    });
  });
}

/// The parametrization under which a law is the image of a field group.
inline std::optional<ProjectivePoint> transport(const Folium& c, LawKind law, const Element& t) {
  switch (law) {
    case LawKind::ProjMul:
    case LawKind::AddSouth:
    case LawKind::FieldMul: return pbar(c, t);
    case LawKind::ProjMul2:
    case LawKind::AddWest: return pbarbar(c, t);
    case LawKind::StarMul: return pbar(c, -t.inverse());
    case LawKind::SouthMul: return p_affine(c, alpha(t));
    case LawKind::WestMul: return p_affine_prime(c, alpha(t));
  }
  return std::nullopt;
}

inline bool multiplicative(LawKind law) { return law != LawKind::AddSouth && law != LawKind::AddWest; }

inline void suite_law(const Folium& c, LawKind law, const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  const std::string prefix = std::string(law_name(law)) + ": ";
  static constexpr const char* kNames[] = {"closure", "associativity", "commutativity", "neutral element",
                                           "inverses", "homomorphism from the field"};
  if (needs_unique_cube_root(law)) {
    bool gated = false;
    std::string why;
    try {
      gated = !c.cube_root_unique();
      why = "FieldLacksUniqueCubeRoot: l^3 + 1 = 0 has three roots in " + c.field().to_string();
    } catch (const Error& e) {
      gated = true;
      why = e.what();
    }
    if (gated) {
      for (const char* n : kNames) out.push_back(skipped(prefix + n, why));
      return;
    }
  }
  const auto pool = PointPool::of(c, [&](const ProjectivePoint& p) { return in_domain(c, law, p); });
  const auto e = neutral(c, law);

  property(out, opt, prefix + kNames[0], [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(pool, 2, opt, rng, [&](const std::vector<ProjectivePoint>& v) {
      instance(chk, v, [&] { return in_domain(c, law, compose(c, law, v[0], v[1])); });
    });
  });
  property(out, opt, prefix + kNames[1], [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(pool, 3, opt, rng, [&](const std::vector<ProjectivePoint>& v) {
      instance(chk, v, [&] {
        return compose(c, law, compose(c, law, v[0], v[1]), v[2]) == compose(c, law, v[0], compose(c, law, v[1], v[2]));
      });
    });
  });
  property(out, opt, prefix + kNames[2], [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(pool, 2, opt, rng, [&](const std::vector<ProjectivePoint>& v) {
      instance(chk, v, [&] { return compose(c, law, v[0], v[1]) == compose(c, law, v[1], v[0]); });
    });
  });
  property(out, opt, prefix + kNames[3], [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(pool, 1, opt, rng, [&](const std::vector<ProjectivePoint>& v) {
      instance(chk, v, [&] { return compose(c, law, v[0], e) == v[0] && compose(c, law, e, v[0]) == v[0]; });
    });
  });
  property(out, opt, prefix + kNames[4], [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(pool, 1, opt, rng, [&](const std::vector<ProjectivePoint>& v) {
      if (law == LawKind::FieldMul && v[0] == c.origin()) {
        instance(chk, v, [&] { return compose(c, law, v[0], e) == c.origin(); });
        return;
      }
      instance(chk, v, [&] {
        const auto inv = inverse(c, law, v[0]);
        return in_domain(c, law, inv) && compose(c, law, v[0], inv) == e;
      });
    });
  });
  property(out, opt, prefix + kNames[5], [&](PropertyCheck& chk, Rng& rng) {
    const bool mul = multiplicative(law);
    const ElementPool params(c.field(), mul && law != LawKind::FieldMul);
    params.for_each(2, opt, rng, [&](const std::vector<Element>& v) {
      instance(chk, v, [&] {
        const auto combined = mul ? v[0] * v[1] : v[0] + v[1];
        return compose(c, law, *transport(c, law, v[0]), *transport(c, law, v[1])) == *transport(c, law, combined);
      });
    });
  });
}

inline void suite_coincidence(const Folium& c, const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  const auto group = PointPool::of(c, [&](const ProjectivePoint& p) { return p != c.origin(); });
  const auto whole = PointPool::of(c, [](const ProjectivePoint&) { return true; });
  const auto v = mul_neutral(c);
  const auto i = c.infinity();

  property(out, opt, "projmul = projmul2", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 2, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] { return proj_mul(c, t[0], t[1]) == proj_mul2(c, t[0], t[1]); });
    });
  });
  property(out, opt, "inverses under ., o and * all equal sigma(P)", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 1, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] {
        const auto s = sigma(t[0]);
        return proj_mul(c, t[0], s) == v && proj_mul2(c, t[0], s) == v && star_mul(c, t[0], s) == i;
      });
    });
  });
  property(out, opt, "opposites under + and (+) coincide", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(whole, 1, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] {
        const auto n = neg(c, t[0]);
        return n == west_neg(c, t[0]) && add_south(c, t[0], n) == c.origin() && add_west(c, t[0], n) == c.origin();
      });
    });
  });
  bool affine_ok = false;
  try {
    affine_ok = c.cube_root_unique();
  } catch (const Error&) {
  }
  if (!affine_ok) {
    out.push_back(skipped("sigma: (DF, southmul) -> (DF, westmul) is an isomorphism", "FieldLacksUniqueCubeRoot"));
    return;
  }
  const auto affine = PointPool::of(c, [&](const ProjectivePoint& p) { return p.is_affine(); });
  property(out, opt, "sigma: (DF, southmul) -> (DF, westmul) is an isomorphism", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(affine, 2, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] { return sigma(south_mul(c, t[0], t[1])) == west_mul(c, sigma(t[0]), sigma(t[1])); });
    });
  });
}

inline void suite_identities(const Folium& c, const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  const auto group = PointPool::of(c, [&](const ProjectivePoint& p) { return p != c.origin(); });
  const auto v = mul_neutral(c);
  const auto i = c.infinity();

  property(out, opt, "I.I = V and I.I.I = I", [&](PropertyCheck& chk, Rng&) {
    const std::vector<ProjectivePoint> t{i};
    instance(chk, t, [&] { return proj_mul(c, i, i) == v && proj_mul(c, proj_mul(c, i, i), i) == i; });
  });
  property(out, opt, "I neutral for *; V neutral for .", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 1, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] { return star_mul(c, t[0], i) == t[0] && proj_mul(c, t[0], v) == t[0]; });
    });
  });
  property(out, opt, "P*Q*R = P.Q.R", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 3, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] { return fold(c, LawKind::StarMul, t) == fold(c, LawKind::ProjMul, t); });
    });
  });
  property(out, opt, "P*Q = P.Q.I and P.Q = P*Q*V", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 2, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] {
        return star_mul(c, t[0], t[1]) == proj_mul(c, proj_mul(c, t[0], t[1]), i) &&
               proj_mul(c, t[0], t[1]) == star_mul(c, star_mul(c, t[0], t[1]), v);
      });
    });
  });
  for (std::size_t k = 2; k <= 7; ++k) {
    const std::string name = "parity chain with " + std::to_string(k) + " factors";
    property(out, opt, name, [&](PropertyCheck& chk, Rng& rng) {
      for_each_point_tuple(group, k, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
        instance(chk, t, [&] {
          const auto star = fold(c, LawKind::StarMul, t);
          const auto dot = fold(c, LawKind::ProjMul, t);
          if (k % 2 == 1) return star == dot;
          return star == proj_mul(c, dot, i) && dot == star_mul(c, star, v);
        });
      });
    });
  }
  property(out, opt, "P^perp = P^-1 . I = P^-1 * V", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 1, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] {
        const auto inv = proj_inv(c, t[0]);
        const auto p = perp(c, t[0]);
        return p == proj_mul(c, inv, i) && p == star_mul(c, inv, v);
      });
    });
  });
  property(out, opt, "perp is an involution; I^perp = V, V^perp = I", [&](PropertyCheck& chk, Rng& rng) {
    const std::vector<ProjectivePoint> fixed{i, v};
    instance(chk, fixed, [&] { return perp(c, i) == v && perp(c, v) == i; });
    for_each_point_tuple(group, 1, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] { return perp(c, perp(c, t[0])) == t[0] && perp(c, t[0]) != c.origin(); });
    });
  });
  property(out, opt, "perp transports . to *", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 2, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] {
        return star_mul(c, t[0], t[1]) == perp(c, proj_mul(c, perp(c, t[0]), perp(c, t[1])));
      });
    });
  });
  // P*P*P = pbar(t^3), so the cube is I exactly on the flexes t^3 = -1,
  // which are the points at infinity.
  property(out, opt, "P*P*P = I exactly when t^3 = -1 (P at infinity)", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 1, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] {
        const auto cube = fold(c, LawKind::StarMul, {t[0], t[0], t[0]});
        const bool flex = (pbar_inv(c, t[0]).pow(3) + c.one()).is_zero();
        return (cube == i) == flex && flex == !t[0].is_affine();
      });
    });
    const std::vector<ProjectivePoint> at_i{i};
    instance(chk, at_i, [&] { return fold(c, LawKind::StarMul, {i, i, i}) == i; });
  });
}

inline void suite_geometric(const Folium& c, const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  const auto group = PointPool::of(c, [&](const ProjectivePoint& p) { return p != c.origin(); });

  property(out, opt, "geometric_mul = geometric_mul_via_vertex = projmul", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 2, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] {
        const auto expected = proj_mul(c, t[0], t[1]);
        return geometric_mul(c, t[0], t[1]) == expected && geometric_mul_via_vertex(c, t[0], t[1]) == expected;
      });
    });
  });
  property(out, opt, "third intersection lies on the chord or tangent", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 2, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] {
        const auto p3 = third_intersection(c, t[0], t[1]);
        return chord_or_tangent(c, t[0], t[1]).incident(p3) && p3 != c.origin() && c.contains(p3);
      });
    });
  });
  property(out, opt, "* is the reflected third intersection", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 2, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] { return star_mul(c, t[0], t[1]) == sigma(third_intersection(c, t[0], t[1])); });
    });
  });
}

inline void suite_collinearity(const Folium& c, const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  const auto group = PointPool::of(c, [&](const ProjectivePoint& p) { return p != c.origin(); });
  const auto i = c.infinity();
  const auto minus_one = -c.one();

  auto all_agree = [&](const std::vector<ProjectivePoint>& t, bool expected) {
    const bool coordinate = collinear3(c, t[0], t[1], t[2]);
    const bool slopes = pbar_inv(c, t[0]) * pbar_inv(c, t[1]) * pbar_inv(c, t[2]) == minus_one;
    const bool star = fold(c, LawKind::StarMul, t) == i;
    const bool dot = fold(c, LawKind::ProjMul, t) == i;
    const bool geometric = chord_tangent_collinear(c, t[0], t[1], t[2]);
    return coordinate == expected && slopes == expected && star == expected && dot == expected &&
           geometric == expected;
  };

  property(out, opt, "collinear <=> t1 t2 t3 = -1 <=> P*Q*R = I <=> P.Q.R = I", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 3, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] { return all_agree(t, chord_tangent_collinear(c, t[0], t[1], t[2])); });
    });
  });
  property(out, opt, "constructed chord triples satisfy every criterion", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 2, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      std::vector<ProjectivePoint> triple{t[0], t[1], t[0]};
      guarded(chk, describe(t), [&] {
        triple[2] = third_intersection(c, t[0], t[1]);
        chk.expect(all_agree(triple, true), [&] { return describe(triple); });
      });
    });
  });
  property(out, opt, "slope products of -1 are geometrically collinear", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(group, 2, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      std::vector<ProjectivePoint> triple{t[0], t[1], t[0]};
      guarded(chk, describe(t), [&] {
        triple[2] = pbar(c, -(pbar_inv(c, t[0]) * pbar_inv(c, t[1])).inverse());
        chk.expect(chord_tangent_collinear(c, triple[0], triple[1], triple[2]), [&] { return describe(triple); });
      });
    });
  });

  if (!c.field().is_prime_field() || c.field().modulus() > 101) {
    out.push_back(skipped("every line of P^2 avoiding O cuts the curve in a collinear triple",
                          "line enumeration needs a prime field with p <= 101"));
    return;
  }
  property(out, opt, "every line of P^2 avoiding O cuts the curve in a collinear triple",
           [&](PropertyCheck& chk, Rng&) {
             const auto points = enumerate_points(c);
             for (const auto& line : plane_lines(c.field())) {
               if (line.passes_through_origin()) continue;
               std::vector<ProjectivePoint> on_line;
               for (const auto& p : points) {
                 if (line.incident(p)) on_line.push_back(p);
               }
               guarded(chk, line.to_string(), [&] {
                 if (!slope_cubic_check(c, line, on_line)) {
                   chk.fail("slope cubic misses a point of " + line.equation());
                   return;
                 }
                 const auto triple = intersection_multiset(c, line, on_line);
                 if (triple.empty()) {
                   // Two rational points force a rational third; one point may have a conjugate pair.
                   if (on_line.size() == 2 || on_line.size() > 3) {
                     chk.fail(line.equation() + " has an impossible intersection pattern");
                   }
                   return;
                 }
                 chk.expect(all_agree(triple, true), [&] { return line.equation() + ": " + describe(triple); });
               });
             }
           });
}

inline void suite_field_structure(const Folium& c, const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  const Field& f = c.field();
  const ElementPool params(f, false);
  const auto whole = PointPool::of(c, [](const ProjectivePoint&) { return true; });

  property(out, opt, "pbar carries the field tables of K to (curve, +, .)", [&](PropertyCheck& chk, Rng& rng) {
    params.for_each(2, opt, rng, [&](const std::vector<Element>& v) {
      instance(chk, v, [&] {
        const auto p = pbar(c, v[0]);
        const auto q = pbar(c, v[1]);
        return field_add(c, p, q) == pbar(c, v[0] + v[1]) && field_mul(c, p, q) == pbar(c, v[0] * v[1]) &&
               field_sub(c, p, q) == pbar(c, v[0] - v[1]) &&
               (v[1].is_zero() || field_div(c, p, q) == pbar(c, v[0] / v[1]));
      });
    });
  });
  property(out, opt, "pbarbar carries the field tables of K to (curve, (+), .)", [&](PropertyCheck& chk, Rng& rng) {
    params.for_each(2, opt, rng, [&](const std::vector<Element>& v) {
      instance(chk, v, [&] {
        const auto p = pbarbar(c, v[0]);
        const auto q = pbarbar(c, v[1]);
        return add_west(c, p, q) == pbarbar(c, v[0] + v[1]) && field_mul(c, p, q) == pbarbar(c, v[0] * v[1]);
      });
    });
  });
  property(out, opt, "distributivity P.(Q+R) = P.Q + P.R", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(whole, 3, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] {
        return field_mul(c, t[0], field_add(c, t[1], t[2])) ==
                   field_add(c, field_mul(c, t[0], t[1]), field_mul(c, t[0], t[2])) &&
               field_mul(c, t[0], add_west(c, t[1], t[2])) ==
                   add_west(c, field_mul(c, t[0], t[1]), field_mul(c, t[0], t[2]));
      });
    });
  });
  property(out, opt, "O absorbs and O has no inverse", [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(whole, 1, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] {
        return field_mul(c, c.origin(), t[0]) == c.origin() && field_mul(c, t[0], c.origin()) == c.origin();
      });
    });
    bool raised = false;
    try {
      field_inv(c, c.origin());
    } catch (const Error& e) {
      raised = e.code() == ErrorCode::DivisionByZeroPoint;
    }
    chk.expect(raised, [] { return "field_inv(O) did not raise DivisionByZeroPoint"; });
  });
  property(out, opt, "sigma: (curve, +, .) -> (curve, (+), .) is a field isomorphism",
           [&](PropertyCheck& chk, Rng& rng) {
             for_each_point_tuple(whole, 2, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
               instance(chk, t, [&] {
                 return sigma(field_add(c, t[0], t[1])) == add_west(c, sigma(t[0]), sigma(t[1])) &&
                        sigma(field_mul(c, t[0], t[1])) == field_mul(c, sigma(t[0]), sigma(t[1]));
               });
             });
           });
}

inline void suite_perpendicular(const Folium& c, const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  const std::string forward = "third point Q of line VP has OP perpendicular to OQ";
  const std::string converse = "OP perpendicular to OQ puts P, Q, V on a line";
  if (!c.field().is_rational()) {
    out.push_back(skipped(forward, "UnorderedField: perpendicularity needs q"));
    out.push_back(skipped(converse, "UnorderedField: perpendicularity needs q"));
    return;
  }
  const auto v = vertex(c);
  const auto candidates = PointPool::of(
      c, [&](const ProjectivePoint& p) { return p.is_affine() && p != c.origin() && p != v; });

  property(out, opt, forward, [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(candidates, 1, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] {
        const auto q = third_intersection(c, v, t[0]);
        return line_through(v, t[0]).incident(q) && perpendicular_chord_check(c, t[0], q);
      });
    });
  });
  property(out, opt, converse, [&](PropertyCheck& chk, Rng& rng) {
    for_each_point_tuple(candidates, 2, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      // Random pairs are almost never perpendicular; pair each P with the
      // unique curve point on the perpendicular through O as well.
      const auto partner = pbar(c, -pbar_inv(c, t[0]).inverse());
      for (const auto& q : {t[1], partner}) {
        if (q == v || !q.is_affine() || q == t[0]) continue;
        std::vector<ProjectivePoint> pair{t[0], q};
        instance(chk, pair, [&] { return perpendicular_chord_check(c, t[0], q) == collinear3(c, v, t[0], q); });
      }
    });
  });
}

inline void suite_branches(const Folium& c, const VerifyOptions& opt, std::vector<PropertyResult>& out) {
  const std::string name = "sigma swaps South and West, fixes Node and Vertex";
  if (!c.field().is_rational()) {
    out.push_back(skipped(name, "UnorderedField: branches need q"));
    return;
  }
  const auto affine = PointPool::of(c, [](const ProjectivePoint& p) { return p.is_affine(); });
  property(out, opt, name, [&](PropertyCheck& chk, Rng& rng) {
    auto swapped = [](BranchLabel l) {
      if (l == BranchLabel::SouthInterior) return BranchLabel::WestInterior;
      if (l == BranchLabel::WestInterior) return BranchLabel::SouthInterior;
      return l;
    };
    std::vector<ProjectivePoint> fixed{c.origin(), vertex(c)};
    instance(chk, fixed, [&] {
      return classify_branch(c, c.origin()) == BranchLabel::Node &&
             classify_branch(c, vertex(c)) == BranchLabel::Vertex;
    });
    for_each_point_tuple(affine, 1, opt, rng, [&](const std::vector<ProjectivePoint>& t) {
      instance(chk, t, [&] { return classify_branch(c, sigma(t[0])) == swapped(classify_branch(c, t[0])); });
    });
  });
}

struct NamedSuite {
  std::string_view name;
  Suite run;
};

inline const std::vector<NamedSuite>& registry() {
  static const std::vector<NamedSuite> suites = [] {
    std::vector<NamedSuite> s{
        {"count", suite_count},
        {"field-axioms", suite_field_axioms},
        {"roundtrip", suite_roundtrip},
    };
    for (auto law : kAllLaws) {
      s.push_back({law_name(law), [law](const Folium& c, const VerifyOptions& o, std::vector<PropertyResult>& out) {
                     suite_law(c, law, o, out);
                   }});
    }
    s.push_back({"coincidence", suite_coincidence});
    s.push_back({"identities", suite_identities});
    s.push_back({"geometric", suite_geometric});
    s.push_back({"collinearity", suite_collinearity});
    s.push_back({"field", suite_field_structure});
    s.push_back({"perpendicular", suite_perpendicular});
    s.push_back({"branches", suite_branches});
    return s;
  }();
  return suites;
}

}  // namespace detail

/// Suite names accepted by run_suite, plus the aggregates "laws" and "all".
inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : detail::registry()) names.emplace_back(s.name);
  names.emplace_back("laws");
  names.emplace_back("all");
  return names;
}

/// Runs a named property suite: exhaustive over small prime fields,
/// seeded sampling otherwise.
inline Report run_suite(const Folium& curve, std::string_view suite, const VerifyOptions& opt = {}) {
  Report report{std::string(suite), curve.field().to_string(), curve.a().to_string(), {}};
  bool matched = false;
  for (const auto& s : detail::registry()) {
    const bool is_law = std::find_if(kAllLaws.begin(), kAllLaws.end(),
                                     [&](LawKind l) { return law_name(l) == s.name; }) != kAllLaws.end();
    if (suite == "all" || suite == s.name || (suite == "laws" && is_law)) {
      s.run(curve, opt, report.properties);
      matched = true;
    }
  }
  if (!matched) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + std::string(suite) + "'");
  return report;
}

}  // namespace folium
