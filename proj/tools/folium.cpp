// Command-line front end for the Folium library.
//
//   folium [--field F] [--a A] [--format text|json] [--seed S] <subcommand> ...
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "folium/folium.hpp"

namespace {

using folium::Element;
using folium::Error;
using folium::ErrorCode;
using folium::Folium;
using folium::ProjectivePoint;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct Globals {
  std::string field = "q";
  std::string a = "1";
  std::string format = "text";
  std::uint64_t seed = 0;
};

bool is_usage_error(ErrorCode code) {
  return code == ErrorCode::ParseError || code == ErrorCode::UnknownSuite || code == ErrorCode::UnknownLaw ||
         code == ErrorCode::InvalidField;
}

class Runner {
 public:
  explicit Runner(const Globals& g) : g_(g) {}

  Folium curve() const {
    const auto field = folium::parse_field(g_.field);
    return Folium(folium::parse_element(field, g_.a));
  }

  /// Parses a point literal and checks it lies on the curve.
  ProjectivePoint point(const Folium& c, const std::string& text) const {
    auto p = folium::parse_point(c.field(), text);
    c.require_on_curve(p);
    return p;
  }

  bool json() const { return g_.format == "json"; }

  void emit_point(const ProjectivePoint& p) const {
    if (json()) {
      std::cout << folium::to_json(p).dump() << "\n";
    } else {
      std::cout << p.to_string() << "\n";
    }
  }

  void emit(const ordered_json& j, const std::string& text) const {
    if (json()) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }

 private:
  const Globals& g_;
};

ordered_json point_json(const ProjectivePoint& p) {
  ordered_json j;
  j["x"] = p.x().to_string();
  j["y"] = p.y().to_string();
  j["z"] = p.z().to_string();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact group laws and chord-tangent geometry on the folium x^3 + y^3 = 3axyz"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--field", g.field, "Base field: q or fp:<p>")->capture_default_str();
  app.add_option("--a", g.a, "Curve parameter a (nonzero)")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized suites")->capture_default_str();

  std::function<int()> action;
  Runner run(g);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a parametrization at t");
  std::string map_name, t_text;
  eval->add_option("--map", map_name, "pbar | pbarbar | paffine | paffineprime")->required();
  eval->add_option("--t", t_text, "Parameter value")->required();
  eval->callback([&] {
    action = [&] {
      const auto c = run.curve();
      run.emit_point(folium::evaluate_map(c, folium::parse_param_kind(map_name), folium::parse_element(c.field(), t_text)));
      return kExitOk;
    };
  });

  // op
  auto* op = app.add_subcommand("op", "Compose two points under a law");
  std::string law_text;
  std::vector<std::string> op_points;
  op->add_option("--law", law_text, "projmul | projmul2 | star | addsouth | addwest | southmul | westmul | fieldmul")
      ->required();
  op->add_option("points", op_points, "Two point literals")->expected(2)->required();
  op->callback([&] {
    action = [&] {
      const auto c = run.curve();
      run.emit_point(folium::compose(c, folium::parse_law(law_text), run.point(c, op_points[0]), run.point(c, op_points[1])));
      return kExitOk;
    };
  });

  // inv
  auto* inv = app.add_subcommand("inv", "Inverse of a point under a law");
  std::string inv_law, inv_point;
  inv->add_option("--law", inv_law, "Law name")->required();
  inv->add_option("point", inv_point, "Point literal")->required();
  inv->callback([&] {
    action = [&] {
      const auto c = run.curve();
      run.emit_point(folium::inverse(c, folium::parse_law(inv_law), run.point(c, inv_point)));
      return kExitOk;
    };
  });

  // perp
  auto* perp = app.add_subcommand("perp", "The point with parameter -1/t");
  std::string perp_point;
  perp->add_option("point", perp_point, "Point literal")->required();
  perp->callback([&] {
    action = [&] {
      const auto c = run.curve();
      run.emit_point(folium::perp(c, run.point(c, perp_point)));
      return kExitOk;
    };
  });

  // chord
  auto* chord = app.add_subcommand("chord", "Chord (or tangent) construction through two points");
  std::vector<std::string> chord_points;
  chord->add_option("points", chord_points, "Two point literals")->expected(2)->required();
  chord->callback([&] {
    action = [&] {
      const auto c = run.curve();
      const auto p1 = run.point(c, chord_points[0]);
      const auto p2 = run.point(c, chord_points[1]);
      if (p1 == c.origin() || p2 == c.origin()) {
        throw Error(ErrorCode::OriginNotAllowed, "chords are taken through points other than O");
      }
      const auto line = folium::chord_or_tangent(c, p1, p2);
      const auto third = folium::third_intersection(c, p1, p2);
      const auto product = folium::geometric_mul(c, p1, p2);
      const auto star = folium::star_mul(c, p1, p2);
      ordered_json j;
      j["line"] = folium::to_json(line);
      j["kind"] = p1 == p2 ? "tangent" : "chord";
      j["third"] = point_json(third);
      j["product"] = point_json(product);
      j["star"] = point_json(star);
      run.emit(j, std::string(p1 == p2 ? "tangent: " : "chord:   ") + line.equation() + "\nthird:   " +
                      third.to_string() + "\nproduct: " + product.to_string() + "\nstar:    " + star.to_string() + "\n");
      return kExitOk;
    };
  });

  // collinear
  auto* collinear = app.add_subcommand("collinear", "Collinearity test for three curve points");
  std::vector<std::string> col_points;
  collinear->add_option("points", col_points, "Three point literals")->expected(3)->required();
  collinear->callback([&] {
    action = [&] {
      const auto c = run.curve();
      std::vector<ProjectivePoint> pts;
      for (const auto& s : col_points) pts.push_back(run.point(c, s));
      const auto identity = pts[0].x() * pts[1].x() * pts[2].x() + pts[0].y() * pts[1].y() * pts[2].y();
      const bool result = folium::collinear3(c, pts[0], pts[1], pts[2]);
      ordered_json j;
      j["collinear"] = result;
      j["x1x2x3+y1y2y3"] = identity.to_string();
      std::string text = std::string(result ? "true" : "false") + "\nx1x2x3+y1y2y3 = " + identity.to_string() + "\n";
      const bool has_origin = pts[0] == c.origin() || pts[1] == c.origin() || pts[2] == c.origin();
      if (!has_origin) {
        const auto slopes = folium::pbar_inv(c, pts[0]) * folium::pbar_inv(c, pts[1]) * folium::pbar_inv(c, pts[2]);
        const auto dot = folium::proj_mul(c, folium::proj_mul(c, pts[0], pts[1]), pts[2]);
        const auto star = folium::star_mul(c, folium::star_mul(c, pts[0], pts[1]), pts[2]);
        j["t1t2t3"] = slopes.to_string();
        j["dot_product"] = point_json(dot);
        j["star_product"] = point_json(star);
        text += "t1*t2*t3 = " + slopes.to_string() + "\nP1.P2.P3 = " + dot.to_string() + "\nP1*P2*P3 = " +
                star.to_string() + "\n";
      }
      run.emit(j, text);
      return kExitOk;
    };
  });

  // branch
  auto* branch = app.add_subcommand("branch", "Branch label of an affine rational point");
  std::string branch_point;
  branch->add_option("point", branch_point, "Point literal")->required();
  branch->callback([&] {
    action = [&] {
      const auto c = run.curve();
      const auto label = folium::classify_branch(c, run.point(c, branch_point));
      ordered_json j;
      j["branch"] = std::string(folium::branch_name(label));
      run.emit(j, std::string(folium::branch_name(label)) + "\n");
      return kExitOk;
    };
  });

  // count
  auto* count = app.add_subcommand("count", "Brute-force point count over F_p");
  count->callback([&] {
    action = [&] {
      const auto c = run.curve();
      if (!c.field().is_prime_field()) throw Error(ErrorCode::UnorderedField, "count needs --field fp:<p>");
      const auto n = folium::enumerate_points(c).size();
      const auto p = c.field().modulus();
      ordered_json j;
      j["enumerated"] = n;
      j["predicted"] = p;
      j["match"] = n == p;
      run.emit(j, std::to_string(n) + " " + std::to_string(p) + (n == p ? "" : "  MISMATCH") + "\n");
      return n == p ? kExitOk : kExitVerifyFailed;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Run property suites");
  std::string suite = "all";
  std::size_t samples = 1000;
  verify->add_option("--suite", suite, "Suite name or 'all'")->capture_default_str();
  verify->add_option("--samples", samples, "Random instances per property when sampling")->capture_default_str();
  verify->callback([&] {
    action = [&] {
      const auto c = run.curve();
      const auto report = folium::run_suite(c, suite, {g.seed, samples});
      if (run.json()) {
        std::cout << folium::to_json(report).dump(2) << "\n";
      } else {
        std::cout << folium::to_text(report);
      }
      return report.passed() ? kExitOk : kExitVerifyFailed;
    };
  });

  // plot
  auto* plot = app.add_subcommand("plot", "SVG plot of the real curve");
  std::string t_min = "-0.9", t_max = "4", out_path;
  std::size_t plot_samples = 400;
  std::vector<std::string> plot_points, plot_chords;
  bool bisector = false, asymptote = false;
  plot->add_option("--t-min", t_min, "Lower parameter bound")->capture_default_str();
  plot->add_option("--t-max", t_max, "Upper parameter bound")->capture_default_str();
  plot->add_option("--samples", plot_samples, "Number of samples")->capture_default_str();
  plot->add_option("--point", plot_points, "Mark the point with this parameter (repeatable)");
  plot->add_option("--chord", plot_chords, "Draw the chord t1,t2 and its third point (t1 = t2 gives a tangent)");
  plot->add_flag("--bisector", bisector, "Draw the line x = y");
  plot->add_flag("--asymptote", asymptote, "Draw the asymptote x + y + a = 0");
  plot->add_option("--out", out_path, "Output file (stdout when omitted)");
  plot->callback([&] {
    action = [&] {
      if (g.field != "q") throw Error(ErrorCode::UnorderedField, "plots are drawn over q");
      folium::PlotOptions opt;
      opt.a = folium::parse_rational_decimal(g.a);
      opt.t_min = folium::parse_rational_decimal(t_min);
      opt.t_max = folium::parse_rational_decimal(t_max);
      opt.samples = plot_samples;
      opt.bisector = bisector;
      opt.asymptote = asymptote;
      for (const auto& s : plot_points) opt.points.push_back(folium::parse_rational_decimal(s));
      for (const auto& s : plot_chords) {
        const auto comma = s.find(',');
        if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "--chord expects t1,t2");
        opt.chords.emplace_back(folium::parse_rational_decimal(s.substr(0, comma)),
                                folium::parse_rational_decimal(s.substr(comma + 1)));
      }
      if (opt.a == 0) throw Error(ErrorCode::ZeroParameter, "curve parameter a must be nonzero");
      const auto svg = folium::render_svg(opt);
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << svg;
        if (!out) throw Error(ErrorCode::FileWriteError, "cannot write " + out_path);
      }
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
