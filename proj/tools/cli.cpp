#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lamcf/cf.hpp"
#include "lamcf/error.hpp"
#include "lamcf/gl2.hpp"
#include "lamcf/hecke.hpp"
#include "lamcf/invariants.hpp"
#include "lamcf/json_io.hpp"
#include "lamcf/legendre.hpp"
#include "lamcf/render.hpp"

namespace lamcf::cli {
namespace {

using lamcf::json::json;

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Accepts inline JSON, "-" for stdin, or a path to a JSON file.
json load_json(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (!arg.empty() && arg.front() == '{') {
    text = arg;
  } else {
    text = read_text(arg);
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

// "[p0; p1, ...]" notation, or anything load_json accepts.
RegularCF parse_cf_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '[') return RegularCF::parse(arg);
  return lamcf::json::to_cf(load_json(arg));
}

// "a,b,c,d", or anything load_json accepts.
IntMat2 parse_matrix_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() != '{' && arg.find(',') != std::string::npos &&
      !std::filesystem::exists(arg)) {
    std::vector<Int> v;
    std::string_view rest = arg;
    while (true) {
      auto comma = rest.find(',');
      std::string piece(rest.substr(0, comma));
      piece.erase(0, piece.find_first_not_of(' '));
      piece.erase(piece.find_last_not_of(' ') + 1);
      v.push_back(parse_int(piece));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (v.size() != 4) throw Error(ErrorCode::ParseError, "matrix needs four entries a,b,c,d");
    return IntMat2(v[0], v[1], v[2], v[3]);
  }
  return lamcf::json::to_matrix(load_json(arg));
}

std::vector<std::int64_t> parse_parts(const std::vector<std::string>& args) {
  std::vector<std::int64_t> out;
  for (const std::string& arg : args) {
    std::string_view rest = arg;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view piece = rest.substr(0, comma);
      if (!piece.empty()) out.push_back(parse_half_integer(piece));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return out;
}

std::uint64_t default_search_bound() {
  if (const char* env = std::getenv("LAMCF_SEARCH_BOUND")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("bad LAMCF_SEARCH_BOUND '") + env + "'");
    }
  }
  return 1'000'000;
}

json delta_json(const SingularityData& delta) {
  json parts = json::array();
  for (std::int64_t k2 : delta.doubled_parts()) parts.push_back(half_integer_to_string(k2));
  json areas = json::array();
  for (const PolygonArea& a : polygon_areas(delta)) {
    areas.push_back(json{{"sides", a.sides}, {"area_pi", a.pi_multiple}});
  }
  return json{{"delta", lamcf::json::from_delta(delta)},
              {"parts", parts},
              {"genus", delta.genus()},
              {"areas", areas}};
}

int decision_exit(TailDecision d) {
  switch (d) {
    case TailDecision::Equivalent: return kExitOk;
    case TailDecision::NotEquivalent: return kExitFalse;
    case TailDecision::Unknown: return kExitError;
  }
  return kExitError;
}

int decision_exit(InvariantDecision d) {
  switch (d) {
    case InvariantDecision::Equal: return kExitOk;
    case InvariantDecision::NotEqual: return kExitFalse;
    case InvariantDecision::Unknown: return kExitError;
  }
  return kExitError;
}

void emit_error(std::ostream& out, std::ostream& err, std::string_view code,
                const std::string& detail) {
  out << json{{"error", code}, {"detail", detail}}.dump() << "\n";
  err << "error: " << code << ": " << detail << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions, modular surfaces and lamination invariants"};
  app.require_subcommand(1);
  bool json_flag = true;
  app.add_flag("--json", json_flag, "JSON output (always on)");

  std::function<int()> action;

  // cf ------------------------------------------------------------------
  auto* cf = app.add_subcommand("cf", "Regular continued fractions");
  cf->require_subcommand(1);

  std::string x_arg;
  std::string surd_arg;
  std::size_t max_terms = kDefaultSurdTerms;
  auto* cf_expand = cf->add_subcommand("expand", "Expand p/q, or a surd given with --surd");
  cf_expand->add_option("x", x_arg, "Rational p/q");
  cf_expand->add_option("--surd", surd_arg, "p,q,D,r meaning (p + q*sqrt(D))/r");
  cf_expand->add_option("--max-terms", max_terms, "Work bound for periodic expansion");
  cf_expand->callback([&] {
    action = [&] {
      RegularCF result = RegularCF::finite({0});
      if (!surd_arg.empty()) {
        std::vector<Int> v;
        std::stringstream ss(surd_arg);
        for (std::string piece; std::getline(ss, piece, ',');) v.push_back(parse_int(piece));
        if (v.size() != 4) throw Error(ErrorCode::ParseError, "--surd needs p,q,D,r");
        QuadNumber n = QuadSurd::make(v[0], v[1], v[2], v[3]);
        if (auto* r = std::get_if<Rational>(&n)) {
          result = expand_rational(*r);
        } else {
          result = expand_surd(std::get<QuadSurd>(n), max_terms);
        }
      } else if (!x_arg.empty()) {
        result = expand_rational(Rational::parse(x_arg));
      } else {
        throw CLI::ValidationError("cf expand", "give a rational or --surd");
      }
      out << lamcf::json::from_cf(result).dump() << "\n";
      err << result.to_string() << "\n";
      return kExitOk;
    };
  });

  std::string cf_arg;
  std::string cf_arg2;
  std::optional<std::size_t> depth;
  auto* cf_eval = cf->add_subcommand("eval", "Convergent at a depth (default: all terms)");
  cf_eval->add_option("cf", cf_arg, "Fraction")->required();
  cf_eval->add_option("--depth", depth, "Convergent index");
  cf_eval->callback([&] {
    action = [&] {
      RegularCF f = parse_cf_arg(cf_arg);
      Rational v = eval_cf(f, depth.value_or(kAllTerms));
      out << json{{"value", v.to_string()},
                  {"num", lamcf::json::from_int(v.num())},
                  {"den", lamcf::json::from_int(v.den())}}
                 .dump()
          << "\n";
      err << v.to_string() << "\n";
      return kExitOk;
    };
  });

  auto* cf_canon = cf->add_subcommand("canon", "Canonical form");
  cf_canon->add_option("cf", cf_arg, "Fraction")->required();
  cf_canon->callback([&] {
    action = [&] {
      RegularCF c = canonicalize(parse_cf_arg(cf_arg));
      out << lamcf::json::from_cf(c).dump() << "\n";
      err << c.to_string() << "\n";
      return kExitOk;
    };
  });

  auto* cf_equiv = cf->add_subcommand("equiv", "Common-tail test (exit 0/1/2)");
  cf_equiv->add_option("a", cf_arg, "First fraction")->required();
  cf_equiv->add_option("b", cf_arg2, "Second fraction")->required();
  cf_equiv->callback([&] {
    action = [&] {
      TailDecision d = tail_equivalent(parse_cf_arg(cf_arg), parse_cf_arg(cf_arg2));
      out << json{{"decision", to_string(d)}}.dump() << "\n";
      err << to_string(d) << "\n";
      return decision_exit(d);
    };
  });

  std::string matrix_arg;
  auto* cf_apply = cf->add_subcommand("apply", "Fraction of (a x + b)/(c x + d)");
  cf_apply->add_option("matrix", matrix_arg, "a,b,c,d")->required();
  cf_apply->add_option("cf", cf_arg, "Fraction")->required();
  cf_apply->callback([&] {
    action = [&] {
      RegularCF image = apply_gl2(parse_matrix_arg(matrix_arg), parse_cf_arg(cf_arg));
      out << lamcf::json::from_cf(image).dump() << "\n";
      err << image.to_string() << "\n";
      return kExitOk;
    };
  });

  // gl2 -----------------------------------------------------------------
  auto* gl2 = app.add_subcommand("gl2", "Unimodular 2x2 matrices");
  gl2->require_subcommand(1);

  auto* gl2_classify = gl2->add_subcommand("classify", "Hyperbolic, parabolic or elliptic");
  gl2_classify->add_option("matrix", matrix_arg, "a,b,c,d")->required();
  gl2_classify->callback([&] {
    action = [&] {
      IntMat2 m = parse_matrix_arg(matrix_arg);
      IsometryClass c = classify(m);
      out << json{{"class", to_string(c)}, {"trace", lamcf::json::from_int(m.trace())}}.dump()
          << "\n";
      err << to_string(c) << "\n";
      return kExitOk;
    };
  });

  auto* gl2_fix = gl2->add_subcommand("fix", "Boundary fixed points");
  gl2_fix->add_option("matrix", matrix_arg, "a,b,c,d")->required();
  gl2_fix->callback([&] {
    action = [&] {
      json points = json::array();
      for (const BoundaryPoint& p : fixed_points(parse_matrix_arg(matrix_arg))) {
        points.push_back(lamcf::json::from_boundary_point(p));
        err << lamcf::to_string(p) << "\n";
      }
      out << json{{"fixed_points", points}}.dump() << "\n";
      return kExitOk;
    };
  });

  auto* gl2_axis = gl2->add_subcommand("axis", "Axis endpoints and closed-geodesic length");
  gl2_axis->add_option("matrix", matrix_arg, "a,b,c,d")->required();
  gl2_axis->callback([&] {
    action = [&] {
      Axis axis = axis_of(parse_matrix_arg(matrix_arg));
      out << lamcf::json::from_axis(axis).dump() << "\n";
      err << lamcf::to_string(axis.lo) << " .. " << lamcf::to_string(axis.hi)
          << ", length " << axis.length << "\n";
      return kExitOk;
    };
  });

  std::string level_arg = "1";
  auto* gl2_member = gl2->add_subcommand("member", "Membership in Gamma0(N) (exit 0/1)");
  gl2_member->add_option("matrix", matrix_arg, "a,b,c,d")->required();
  gl2_member->add_option("--level,-N", level_arg, "N")->required();
  gl2_member->callback([&] {
    action = [&] {
      Int level = parse_int(level_arg);
      bool member = in_hecke(parse_matrix_arg(matrix_arg), level);
      out << json{{"member", member}, {"level", lamcf::json::from_int(level)}}.dump() << "\n";
      err << (member ? "member" : "not a member") << "\n";
      return member ? kExitOk : kExitFalse;
    };
  });

  auto* gl2_decompose = gl2->add_subcommand("decompose", "Word (1 p0; 0 1)(0 1; 1 q1)...");
  gl2_decompose->add_option("matrix", matrix_arg, "a,b,c,d")->required();
  gl2_decompose->callback([&] {
    action = [&] {
      CfDecomposition word = decompose_to_cf_generators(parse_matrix_arg(matrix_arg));
      json terms = json::array();
      for (const Int& q : word.terms) terms.push_back(lamcf::json::from_int(q));
      out << json{{"p0", lamcf::json::from_int(word.p0)}, {"terms", terms}}.dump() << "\n";
      return kExitOk;
    };
  });

  // genus ---------------------------------------------------------------
  std::int64_t level = 1;
  auto* genus = app.add_subcommand("genus", "Index, cusps, elliptic points and genus of X0(N)");
  genus->add_option("N", level, "Level")->required();
  genus->callback([&] {
    action = [&] {
      SurfaceInvariants s = surface_invariants(level);
      out << lamcf::json::from_surface(s).dump() << "\n";
      err << "X0(" << level << ") has genus " << s.genus << "\n";
      return kExitOk;
    };
  });

  // legendre ------------------------------------------------------------
  auto* legendre = app.add_subcommand("legendre", "Legendre product construction");
  legendre->require_subcommand(1);
  std::string p0_arg = "0";
  std::size_t steps = 1;
  std::string pred_arg = "hyperbolic";
  std::optional<std::uint64_t> bound;
  auto* legendre_run = legendre->add_subcommand("run", "One JSON line per step");
  legendre_run->add_option("--p0", p0_arg, "First term p0 >= 0");
  legendre_run->add_option("--steps", steps, "Number of terms to select");
  legendre_run->add_option("--pred", pred_arg, "hyperbolic | never | prime | mod:M:R");
  legendre_run->add_option("--level", level, "N for the Gamma0(N) membership flag");
  legendre_run->add_option("--bound", bound, "Search bound per term");
  legendre_run->callback([&] {
    action = [&] {
      StreamConfig config;
      config.p0 = parse_int(p0_arg);
      config.pred = parse_predicate(pred_arg);
      config.steps = steps;
      config.search_bound = bound.value_or(default_search_bound());
      config.level = level;
      (void)TermSequence({config.p0});
      LegendreRun run = legendre_stream(config);
      for (const LegendreStep& step : run.steps) {
        out << lamcf::json::from_step(step).dump() << "\n";
      }
      err << run.terms.as_prefix().to_string() << "\n";
      if (run.error) {
        emit_error(out, err, to_string(run.error->code()), run.error->detail());
        return kExitError;
      }
      return kExitOk;
    };
  });

  // delta ---------------------------------------------------------------
  auto* delta = app.add_subcommand("delta", "Singularity data");
  delta->require_subcommand(1);
  std::vector<std::string> parts_args;
  std::int64_t genus_value = 2;
  auto* delta_check = delta->add_subcommand("check", "Validate parts like 1/2 3/2 2");
  delta_check->add_option("parts", parts_args, "Half-integer parts");
  delta_check->add_option("--genus,-g", genus_value, "Genus")->required();
  delta_check->callback([&] {
    action = [&] {
      SingularityData d = validate_delta(parse_parts(parts_args), genus_value);
      out << delta_json(d).dump() << "\n";
      err << d.to_string() << " is valid for genus " << genus_value << "\n";
      return kExitOk;
    };
  });

  auto* delta_enumerate = delta->add_subcommand("enumerate", "All data of a genus, one per line");
  delta_enumerate->add_option("--genus,-g,genus", genus_value, "Genus")->required();
  delta_enumerate->callback([&] {
    action = [&] {
      std::size_t count = 0;
      for_each_delta(genus_value, [&](const SingularityData& d) {
        out << delta_json(d).dump() << "\n";
        ++count;
      });
      err << count << " singularity data for genus " << genus_value << "\n";
      return kExitOk;
    };
  });

  // invariant -----------------------------------------------------------
  auto* invariant = app.add_subcommand("invariant", "Complete invariants (Theta, Delta)");
  invariant->require_subcommand(1);
  std::string file_a;
  std::string file_b;
  auto* inv_compare = invariant->add_subcommand("compare", "Equal/NotEqual/Unknown (exit 0/1/2)");
  inv_compare->add_option("a", file_a, "Invariant JSON")->required();
  inv_compare->add_option("b", file_b, "Invariant JSON")->required();
  inv_compare->callback([&] {
    action = [&] {
      LaminationInvariant a = lamcf::json::to_invariant(load_json(file_a));
      LaminationInvariant b = lamcf::json::to_invariant(load_json(file_b));
      InvariantDecision d = invariant_equal(a, b);
      out << json{{"decision", to_string(d)}}.dump() << "\n";
      err << to_string(d) << "\n";
      return decision_exit(d);
    };
  });

  std::string theta_arg;
  auto* inv_pack = invariant->add_subcommand(
      "pack", "Build an invariant from --theta, or from a Legendre run when --theta is absent");
  inv_pack->add_option("--theta", theta_arg, "Slope fraction");
  inv_pack->add_option("--delta", parts_args, "Half-integer parts");
  inv_pack->add_option("--level", level, "N")->required();
  inv_pack->add_option("--p0", p0_arg, "Legendre run: first term");
  inv_pack->add_option("--steps", steps, "Legendre run: steps");
  inv_pack->add_option("--pred", pred_arg, "Legendre run: trace predicate");
  inv_pack->add_option("--bound", bound, "Legendre run: search bound");
  inv_pack->callback([&] {
    action = [&] {
      const std::vector<std::int64_t> parts = parse_parts(parts_args);
      LaminationInvariant inv = [&] {
        if (!theta_arg.empty()) {
          return make_invariant(parse_cf_arg(theta_arg), delta_for_level(parts, level), level);
        }
        StreamConfig config;
        config.p0 = parse_int(p0_arg);
        config.pred = parse_predicate(pred_arg);
        config.steps = steps;
        config.search_bound = bound.value_or(default_search_bound());
        config.level = level;
        LegendreRun run = legendre_stream(config);
        if (run.error) throw *run.error;
        return invariant_of_stream(run, parts, level);
      }();
      out << lamcf::json::from_invariant(inv).dump() << "\n";
      err << inv.theta.to_string() << " " << inv.delta.to_string() << "\n";
      return kExitOk;
    };
  });

  // render --------------------------------------------------------------
  auto* render = app.add_subcommand("render", "SVG drawings");
  render->require_subcommand(1);
  RenderSpec spec;
  std::vector<std::string> matrix_args;
  std::string output_path;
  auto* render_axes_cmd = render->add_subcommand("axes", "Axes as half-circles in H");
  render_axes_cmd->add_option("matrices", matrix_args, "a,b,c,d ...")->required();
  render_axes_cmd->add_option("--xmin", spec.x_min, "Left edge");
  render_axes_cmd->add_option("--xmax", spec.x_max, "Right edge");
  render_axes_cmd->add_option("--height", spec.height, "Top edge");
  render_axes_cmd->add_option("--stroke", spec.stroke_width, "Stroke width");
  render_axes_cmd->add_option("--translate-depth", spec.translate_depth,
                              "Also draw translates by |j| <= depth");
  render_axes_cmd->add_option("--width", spec.pixel_width, "Width in pixels");
  render_axes_cmd->add_option("-o,--output", output_path, "SVG file");
  render_axes_cmd->callback([&] {
    action = [&] {
      for (const std::string& m : matrix_args) spec.matrices.push_back(parse_matrix_arg(m));
      std::string svg = render_axes(spec);
      if (output_path.empty()) {
        out << svg;
        return kExitOk;
      }
      std::ofstream file(output_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + output_path + "'");
      file << svg;
      out << json{{"written", output_path}, {"geodesics", axis_circles(spec).size()}}.dump()
          << "\n";
      return kExitOk;
    };
  });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("lamcf");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    err << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!action) {
    err << app.help();
    return kExitUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    emit_error(out, err, to_string(e.code()), e.detail());
    return kExitError;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    emit_error(out, err, to_string(ErrorCode::ParseError), e.what());
    return kExitError;
  }
}

}  // namespace lamcf::cli
