#include "sphconv/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <sstream>

#include "sphconv/constructors.hpp"
#include "sphconv/io.hpp"
#include "sphconv/metrics.hpp"
#include "sphconv/svg.hpp"
#include "sphconv/wulff.hpp"

namespace sphconv {

namespace {

using io::json;

enum Exit { kOk = 0, kFail = 1, kUsage = 2 };

std::vector<double> split_numbers(const std::string& text, char sep) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used == 0 || used != item.size()) throw Error(ErrorKind::ParseError, "not a number: \"" + item + "\"");
    out.push_back(x);
  }
  return out;
}

UnitVec parse_unit(const std::string& text) {
  const auto v = split_numbers(text, ',');
  if (v.size() != 3) throw Error(ErrorKind::ParseError, "expected x,y,z but got \"" + text + "\"");
  return UnitVec(Vec3d(v[0], v[1], v[2]));
}

std::vector<UnitVec> parse_units(const std::string& text) {
  std::vector<UnitVec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_unit(item));
  return out;
}

std::vector<Vec2d> parse_plane_points(const std::string& text) {
  std::vector<Vec2d> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto v = split_numbers(item, ',');
    if (v.size() != 2) throw Error(ErrorKind::ParseError, "expected x,y but got \"" + item + "\"");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

struct Globals {
  std::size_t samples = kDefaultSamples;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0;
};

class Emitter {
 public:
  explicit Emitter(std::ostream& out) : out_(out) {}
  /// Writes to `path`, or to stdout when the path is empty.
  void json_doc(const std::string& path, const json& doc) const {
    if (path.empty()) {
      out_ << doc.dump(2) << "\n";
    } else {
      io::write_json(path, doc);
    }
  }
  void text(const std::string& path, const std::string& body) const {
    if (path.empty()) {
      out_ << body;
    } else {
      io::write_text(path, body);
    }
  }
  std::ostream& stream() const { return out_; }

 private:
  std::ostream& out_;
};

std::string doc_kind(const json& doc) {
  if (doc.is_object() && doc.contains("kind") && doc["kind"].is_string()) return doc["kind"].get<std::string>();
  return "";
}

WulffShape wulff_from_any(const json& doc, std::size_t samples) {
  const std::string kind = doc_kind(doc);
  if (kind == "gamma") return wulff_shape(io::gamma_from_json(doc), samples);
  if (kind == "wulff") return io::wulff_from_json(doc);
  throw Error(ErrorKind::ParseError, "expected a gamma or wulff document, got kind \"" + kind + "\"");
}

ProjectionFrame frame_for(const std::string& pole, const SphericalBody* body) {
  if (!pole.empty()) return ProjectionFrame::at(parse_unit(pole));
  if (body) return ProjectionFrame::at(body->enclosing_center());
  return ProjectionFrame::at(UnitVec(0, 0, 1));
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex bodies on the sphere: width, thickness, diameter and Wulff-shape duality", "sphconv"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--samples", g.samples, "Boundary / supporting-center samples")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tol, "Verdict tolerance in radians")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for random constructions");

  const Emitter emit(out);
  int code = kOk;
  std::function<void()> action;

  // construct ---------------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "Build a body document")->require_subcommand(1);
  std::string out_path;

  std::string center = "0,0,1";
  double rho = 0;
  auto* c_cap = construct->add_subcommand("cap", "Spherical cap");
  c_cap->add_option("--center", center, "Cap center x,y,z");
  c_cap->add_option("--rho", rho, "Angular radius")->required();
  c_cap->add_option("--out,-o", out_path, "Output path (stdout if omitted)");
  c_cap->callback([&] {
    action = [&] {
      emit.json_doc(out_path, io::body_to_json(cap(parse_unit(center), rho), {{"construction", "cap"}, {"rho", rho}}));
    };
  });

  int n = 5;
  double target = 1.0;
  auto* c_odd = construct->add_subcommand("oddgon", "Regular odd-gon of given thickness");
  c_odd->add_option("--n", n, "Number of vertices (odd)");
  c_odd->add_option("--thickness", target, "Target thickness");
  c_odd->add_option("--out,-o", out_path, "Output path");
  c_odd->callback([&] {
    action = [&] {
      emit.json_doc(out_path, io::body_to_json(regular_odd_gon(n, target),
                                               {{"construction", "regular_odd_gon"}, {"n", n}, {"thickness", target}}));
    };
  });

  std::string v1, v2, v3;
  auto* c_tri = construct->add_subcommand("cd-triangle", "Constant-diameter body around a triangle");
  c_tri->add_option("--v1", v1)->required();
  c_tri->add_option("--v2", v2)->required();
  c_tri->add_option("--v3", v3)->required();
  c_tri->add_option("--out,-o", out_path, "Output path");
  c_tri->callback([&] {
    action = [&] {
      const auto spec = triangle_spec(parse_unit(v1), parse_unit(v2), parse_unit(v3));
      emit.json_doc(out_path,
                    io::body_to_json(constant_diameter_triangle(spec.v1, spec.v2, spec.v3),
                                     {{"construction", "constant_diameter_triangle"},
                                      {"sigma", {spec.sigma1, spec.sigma2, spec.sigma3}}}));
    };
  });

  std::string vertices;
  auto* c_odd_cd = construct->add_subcommand("cd-oddgon", "Constant-diameter body around an odd-gon");
  c_odd_cd->add_option("--vertices", vertices, "x,y,z;x,y,z;...")->required();
  c_odd_cd->add_option("--out,-o", out_path, "Output path");
  c_odd_cd->callback([&] {
    action = [&] {
      const auto spec = odd_gon_spec(parse_units(vertices));
      emit.json_doc(out_path, io::body_to_json(constant_diameter_body(spec), {{"construction", "constant_diameter_odd_gon"},
                                                                              {"sigma", spec.sigma},
                                                                              {"residual", spec.residual}}));
    };
  });

  int rn = 8;
  double max_diam = 1.2;
  auto* c_rand = construct->add_subcommand("random", "Random convex polygon (uses --seed)");
  c_rand->add_option("--n", rn, "Number of random points");
  c_rand->add_option("--max-diam", max_diam, "Diameter bound");
  c_rand->add_option("--out,-o", out_path, "Output path");
  c_rand->callback([&] {
    action = [&] {
      emit.json_doc(out_path, io::body_to_json(random_convex_polygon(g.seed, rn, max_diam),
                                               {{"construction", "random_convex_polygon"}, {"seed", g.seed}}));
    };
  });

  // analyze / check ---------------------------------------------------------
  std::string in_path;
  auto* analyze = app.add_subcommand("analyze", "Thickness, diameter, width profile and verdicts");
  analyze->add_option("body", in_path, "Body document")->required();
  analyze->add_option("--out,-o", out_path, "Report path");
  analyze->callback([&] {
    action = [&] {
      const auto body = io::load_body(in_path);
      emit.json_doc(out_path, io::report_to_json(classify(body, g.tol, g.samples), g.tol, g.samples));
    };
  });

  auto* check = app.add_subcommand("check", "Exit 0 when the verdict passes, 1 when it fails")->require_subcommand(1);
  auto add_check = [&](const std::string& name, std::function<Verdict(const SphericalBody&)> run) {
    auto* sub = check->add_subcommand(name);
    sub->add_option("body", in_path, "Body document")->required();
    sub->callback([&, run] {
      action = [&, run] {
        const Verdict v = run(io::load_body(in_path));
        emit.json_doc("", io::verdict_to_json(v));
        code = v.pass ? kOk : kFail;
      };
    });
  };
  add_check("constant-width", [&](const SphericalBody& b) { return is_constant_width(b, g.tol, g.samples); });
  add_check("constant-diameter", [&](const SphericalBody& b) { return is_constant_diameter(b, g.tol, g.samples); });
  add_check("reduced", [&](const SphericalBody& b) { return reduced_check(b, g.tol, g.samples).verdict; });

  // wulff -------------------------------------------------------------------
  auto* wulff = app.add_subcommand("wulff", "Planar Wulff shapes and the induced spherical bodies")->require_subcommand(1);
  std::string gamma_path, polygon, gamma_out, pole;
  double constant = 0;
  auto* w_build = wulff->add_subcommand("build", "Wulff shape from a gamma document, a constant, or a polygon");
  auto* src = w_build->add_option_group("source")->require_option(1);
  src->add_option("--gamma", gamma_path, "Gamma document");
  src->add_option("--constant", constant, "Constant surface energy")->check(CLI::PositiveNumber);
  src->add_option("--polygon", polygon, "Convex polygon x,y;x,y;... around the origin");
  w_build->add_option("--save-gamma", gamma_out, "Also write the gamma document used");
  w_build->add_option("--out,-o", out_path, "Output path");
  w_build->callback([&] {
    action = [&] {
      WulffShape shape = !polygon.empty() ? wulff_from_polygon(parse_plane_points(polygon))
                         : !gamma_path.empty()
                             ? wulff_shape(io::gamma_from_json(io::read_json(gamma_path)), g.samples)
                             : wulff_shape(GammaFn::sampled([&](double) { return constant; }, g.samples), g.samples);
      if (!gamma_out.empty()) io::write_json(gamma_out, io::gamma_to_json(shape.gamma));
      emit.json_doc(out_path, io::wulff_to_json(shape));
    };
  });

  auto* w_dual = wulff->add_subcommand("dual", "Dual Wulff shape");
  w_dual->add_option("doc", in_path, "Gamma or Wulff document")->required();
  w_dual->add_option("--out,-o", out_path, "Output path");
  w_dual->callback([&] {
    action = [&] { emit.json_doc(out_path, io::wulff_to_json(dual_wulff(wulff_from_any(io::read_json(in_path), g.samples), g.samples))); };
  });

  auto* w_self = wulff->add_subcommand("self-dual", "Exit 0 when the shape equals its dual within --tol");
  w_self->add_option("doc", in_path, "Gamma or Wulff document")->required();
  w_self->callback([&] {
    action = [&] {
      const auto [ok, gap] = is_self_dual(wulff_from_any(io::read_json(in_path), g.samples), g.tol, g.samples);
      emit.json_doc("", {{"self_dual", ok}, {"hausdorff_gap", gap}, {"tolerance", g.tol}});
      code = ok ? kOk : kFail;
    };
  });

  auto* w_induce = wulff->add_subcommand("induce", "Spherical body induced by a Wulff shape");
  w_induce->add_option("doc", in_path, "Gamma or Wulff document")->required();
  w_induce->add_option("--pole", pole, "Projection pole x,y,z (default 0,0,1)");
  w_induce->add_option("--out,-o", out_path, "Output path");
  w_induce->callback([&] {
    action = [&] {
      const auto frame = frame_for(pole, nullptr);
      emit.json_doc(out_path, io::body_to_json(induce_spherical(wulff_from_any(io::read_json(in_path), g.samples), frame)));
    };
  });

  auto* w_project = wulff->add_subcommand("project", "Central projection of a body to the plane at the pole");
  w_project->add_option("body", in_path, "Body document")->required();
  w_project->add_option("--pole", pole, "Projection pole x,y,z (default: the body's enclosing center)");
  w_project->add_option("--out,-o", out_path, "Output path");
  w_project->callback([&] {
    action = [&] {
      const auto body = io::load_body(in_path);
      emit.json_doc(out_path, io::wulff_to_json(project_to_plane(body, frame_for(pole, &body), g.samples)));
    };
  });

  // roundtrip / render ------------------------------------------------------
  auto* roundtrip = app.add_subcommand("roundtrip", "Body to plane to dual; exit 0 when self-dual");
  roundtrip->add_option("body", in_path, "Body document")->required();
  roundtrip->add_option("--pole", pole, "Projection pole x,y,z (default: the body's enclosing center)");
  roundtrip->add_option("--out,-o", out_path, "Report path");
  roundtrip->callback([&] {
    action = [&] {
      const auto body = io::load_body(in_path);
      const auto frame = frame_for(pole, &body);
      const auto report = self_dual_equivalence_report(project_to_plane(body, frame, g.samples), frame, g.tol, g.samples);
      emit.json_doc(out_path, io::duality_to_json(report));
      code = report.self_dual ? kOk : kFail;
    };
  });

  std::string view;
  bool with_diameter = false;
  int size = 480;
  auto* render = app.add_subcommand("render", "SVG of a body or Wulff document");
  render->add_option("doc", in_path, "Body, gamma or Wulff document")->required();
  render->add_option("--view", view, "Viewing direction x,y,z (default: the body's enclosing center)");
  render->add_flag("--diameter", with_diameter, "Overlay the diameter pair");
  render->add_option("--size", size, "Image size in pixels")->check(CLI::Range(64, 8192));
  render->add_option("--out,-o", out_path, "SVG path");
  render->callback([&] {
    action = [&] {
      const json doc = io::read_json(in_path);
      const std::string kind = doc_kind(doc);
      if (kind == "gamma" || kind == "wulff") {
        emit.text(out_path, render_svg(wulff_from_any(doc, g.samples), size));
        return;
      }
      const auto body = io::body_from_json(doc).body;
      SvgOptions opt;
      opt.size = size;
      if (!view.empty()) opt.view = parse_unit(view);
      if (with_diameter) {
        const auto d = diameter(body, g.samples);
        opt.chords.emplace_back(d.p, d.q);
        opt.markers = {d.p, d.q};
      }
      emit.text(out_path, render_svg(body, opt));
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return cli_main(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace sphconv
