#include "aniso/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "aniso/catalogue.hpp"
#include "aniso/curves.hpp"
#include "aniso/enumeration.hpp"
#include "aniso/errors.hpp"
#include "aniso/flow.hpp"
#include "aniso/frontier.hpp"
#include "aniso/io.hpp"
#include "aniso/surfaces.hpp"

namespace aniso {

namespace {

struct RunConfig {
  std::string integrand;
  int res = 0;  // 0: the subcommand's default
  std::optional<double> tol;
  std::string out = "out";
  bool report = false, svg = false, obj = false;
  std::string curve = "wulff";
  int cols = 256;
  long long cap = 1000000;
  long long pairs = 10000;
  double c = 1.0, t = 0.0, dt = 1e-3;
  bool dissipation = false;
};

bool is_hexic_curve_kind(IntegrandKind k) {
  return k == IntegrandKind::hexic2d || k == IntegrandKind::hexic2d_rotated;
}

// A spec file path, or a builtin kind name with `default_n` for isotropic.
Integrand resolve_integrand(const std::string& arg, int default_n) {
  namespace fs = std::filesystem;
  if (fs::exists(arg)) return make_integrand(load_integrand_spec(arg));
  const IntegrandKind kind = integrand_kind_from_string(arg);
  if (kind == IntegrandKind::custom_polynomial)
    throw ValidationError("custom-polynomial integrands need a spec file");
  IntegrandSpec s;
  s.kind = kind;
  s.n = (kind == IntegrandKind::hexic3d || kind == IntegrandKind::hexic3d_rotated) ? 2
        : (kind == IntegrandKind::isotropic)                                         ? default_n
                                                                                     : 1;
  return make_integrand(s);
}

// Boundary arcs of the Wulff shape of an n = 1 integrand.
ArcSpec general_wulff_arcs(const Integrand& gamma) {
  const SingularSet sing = singular_set(gamma);
  const auto samples = sample_frontier(gamma, 4096);
  const SelfIntersections si = self_intersections(gamma, samples);
  ArcSpec spec = wulff_arcs(gamma, sing, si.crossings);
  spec.name = "wulff";
  return spec;
}

// Catalogue name or ArcSpec file, against an n = 1 integrand.
ArcSpec resolve_arcs(const Integrand& gamma, const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_arc_spec(arg);
  if (arg == "wulff" && !is_hexic_curve_kind(gamma.kind())) return general_wulff_arcs(gamma);
  return catalogue_curve(gamma, arg);
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.out) / name).string();
}

void finish(const RunConfig& cfg, const Json& report, std::ostream& out) {
  const std::string text = dump_json(report);
  write_text_file(out_path(cfg, "report.json"), text);
  if (cfg.report) out << text;
}

std::vector<int> curve_signs(const ClosedCurve& c) {
  std::vector<int> s(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) s[i] = c.pieces[c.piece[i]].detA_sign;
  return s;
}

int cmd_frontier(const RunConfig& cfg, std::ostream& out) {
  const Integrand gamma = resolve_integrand(cfg.integrand.empty() ? "hexic2d" : cfg.integrand, 1);
  const int res = cfg.res > 0 ? cfg.res : (gamma.n() == 1 ? 4096 : 128);
  const double tol_sing = cfg.tol.value_or(kTolSing);
  const auto samples = sample_frontier(gamma, res, tol_sing);
  write_text_file(out_path(cfg, "frontier.csv"), frontier_csv(samples));
  Json report{{"integrand", to_string(gamma.kind())}, {"n", gamma.n()}, {"resolution", res}};
  if (gamma.n() == 2) {
    finish(cfg, report, out);
    return 0;
  }
  const SingularSet sing = singular_set(gamma, tol_sing);
  const SelfIntersections si = self_intersections(gamma, samples);
  write_text_file(out_path(cfg, "singular_set.json"), dump_json(to_json(sing)));
  write_text_file(out_path(cfg, "self_intersections.json"), dump_json(to_json(si)));
  report["singular_set"] = to_json(sing);
  report["self_intersections"] = to_json(si);
  if (is_hexic_curve_kind(gamma.kind())) {
    const HexicLandmarks lm = hexic_landmarks(gamma);
    report["theta1_over_pi"] = lm.theta[0] / kPi;
    report["rho1_over_pi"] = lm.rho1 / kPi;
    report["rho2_over_pi"] = lm.rho2 / kPi;
    report["alpha"] = lm.alpha;
  }
  if (cfg.svg) {
    SvgCanvas svg;
    std::vector<Vec2> pts;
    std::vector<int> signs;
    for (const auto& s : samples) {
      pts.emplace_back(s.xi(0), s.xi(1));
      signs.push_back(s.detA_sign);
    }
    svg.polyline(pts, signs, true);
    for (const auto& r : sing.roots) svg.marker(r.image, "red");
    for (const auto& c : si.crossings) svg.marker(c.point, "blue");
    write_text_file(out_path(cfg, "frontier.svg"), svg.str());
  }
  finish(cfg, report, out);
  return 0;
}

int cmd_wulff(const RunConfig& cfg, std::ostream& out) {
  const Integrand gamma = resolve_integrand(cfg.integrand.empty() ? "hexic2d" : cfg.integrand, 1);
  const int res = cfg.res > 0 ? cfg.res : 4096;
  const WulffShape w = wulff_halfspace(gamma, res);
  write_text_file(out_path(cfg, "wulff.json"), dump_json(to_json(w)));
  Json report{{"integrand", to_string(gamma.kind())},
              {"n", gamma.n()},
              {"resolution", res},
              {"polygon_vertices", w.vertices.size()},
              {"corners", to_json(w)["corners"]}};
  if (gamma.n() == 1) {
    const double target = cfg.tol.value_or(1e-6);
    const WulffComparison cmp = compare_wulff_constructions(gamma, res);
    report["hausdorff"] = cmp.hausdorff;
    report["hausdorff_target"] = target;
    report["within_target"] = cmp.hausdorff <= target;
    const ArcSpec arcs = resolve_arcs(gamma, "wulff");
    report["arcs"] = to_json(arcs);
    if (cfg.svg) {
      SvgCanvas svg;
      svg.polygon(w.vertices, "gray");
      svg.polyline(sample_arcs(gamma, arcs, 1024), {}, true);
      for (int k : w.corners) svg.marker(w.vertices[k], "red");
      write_text_file(out_path(cfg, "wulff.svg"), svg.str());
    }
  } else if (cfg.svg) {
    SvgCanvas svg;
    svg.polygon(w.vertices, "black");
    write_text_file(out_path(cfg, "wulff.svg"), svg.str());
  }
  finish(cfg, report, out);
  return 0;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const Integrand gamma = resolve_integrand(cfg.integrand.empty() ? "hexic2d" : cfg.integrand, 1);
  if (gamma.n() != 1) throw DimensionMismatch(1, gamma.n());
  const int res = cfg.res > 0 ? cfg.res : 1024;
  const ArcSpec arcs = resolve_arcs(gamma, cfg.curve);
  const ClosedCurve curve = stitch(gamma, arcs, res);
  const CamcVerdict v = classify(curve, cfg.tol.value_or(kTolCamc));
  write_text_file(out_path(cfg, "curve.csv"), curve_csv(curve));
  write_text_file(out_path(cfg, "verdict.json"), dump_json(to_json(v)));
  Json report{{"integrand", to_string(gamma.kind())},
              {"curve", arcs.name.empty() ? cfg.curve : arcs.name},
              {"resolution", res},
              {"arcs", to_json(curve.spec)},
              {"verdict", v.camc ? "CAMC" : "NotCAMC"},
              {"camc", to_json(v)},
              {"embedded", curve.embedded},
              {"energy", energy_of_curve(curve, gamma)}};
  if (cfg.svg) {
    SvgCanvas svg;
    svg.polyline(curve.points, curve_signs(curve), true);
    write_text_file(out_path(cfg, "curve.svg"), svg.str());
  }
  finish(cfg, report, out);
  return 0;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const Integrand gamma = resolve_integrand(cfg.integrand.empty() ? "hexic2d" : cfg.integrand, 1);
  if (gamma.n() != 1) throw DimensionMismatch(1, gamma.n());
  EnumerationOptions opt;
  if (cfg.res > 0) opt.resolution = cfg.res;
  opt.cap = cfg.cap;
  if (cfg.tol) opt.tol_camc = *cfg.tol;
  const EnumerationResult r = enumerate_closed_camc(gamma, opt);
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    const auto& rep = r.curves[c.representative];
    classes.push_back({{"id", c.id},
                       {"members", c.members},
                       {"lambda", c.lambda},
                       {"area", c.area},
                       {"perimeter", c.perimeter},
                       {"embedded", c.embedded},
                       {"arcs", to_json(rep.curve.spec)}});
    if (cfg.svg) {
      SvgCanvas svg;
      svg.polyline(rep.curve.points, curve_signs(rep.curve), true);
      char name[32];
      std::snprintf(name, sizeof name, "class_%02d.svg", c.id);
      write_text_file(out_path(cfg, name), svg.str());
    }
  }
  Json report{{"integrand", to_string(gamma.kind())},
              {"nodes", r.graph.nodes.size()},
              {"edges", r.graph.edges.size()},
              {"simple_cycles", r.simple_cycles},
              {"partial_paths", r.partial_paths},
              {"camc_cycles", r.curves.size()},
              {"class_count", r.classes.size()},
              {"classes", classes}};
  if (is_hexic_curve_kind(gamma.kind())) {
    Json matches = Json::object();
    for (const auto& spec : builtin_catalogue(gamma)) {
      const ClosedCurve cc = stitch(gamma, spec, opt.resolution);
      const int id = find_class(r, shape_samples(gamma, cc, opt.dense_per_arc), opt.match_tol);
      matches[spec.name] = id >= 0 ? Json(id) : Json(nullptr);
    }
    report["catalogue_matches"] = matches;
  }
  write_text_file(out_path(cfg, "classes.json"), dump_json(classes));
  finish(cfg, report, out);
  return 0;
}

Json mesh_report(const SurfaceMesh& m, const CamcVerdict& v, const Integrand& g3) {
  return {{"rows", m.rows},
          {"cols", m.cols},
          {"mode", m.cyclic_rows ? "torus" : "half"},
          {"watertight", is_watertight(m)},
          {"verdict", v.camc ? "CAMC" : "NotCAMC"},
          {"camc", to_json(v)},
          {"max_junction_residual", m.max_junction_residual},
          {"energy", energy_of_surface(m, g3)}};
}

int cmd_surface(const RunConfig& cfg, std::ostream& out) {
  const Integrand g3 = resolve_integrand(cfg.integrand.empty() ? "hexic3d" : cfg.integrand, 2);
  if (g3.n() != 2) throw DimensionMismatch(2, g3.n());
  const Integrand profile = g3.meridian_profile();
  const int res = cfg.res > 0 ? cfg.res : 256;
  const ArcSpec arcs = resolve_arcs(profile, cfg.curve);
  const SurfaceMesh m = mesh_frontier_surface(g3, arcs, res, cfg.cols);
  const CamcVerdict v = classify_surface(m, cfg.tol.value_or(kTolCamcSurface));
  Json report = mesh_report(m, v, g3);
  report["integrand"] = to_string(g3.kind());
  report["curve"] = arcs.name.empty() ? cfg.curve : arcs.name;
  if (cfg.obj) write_text_file(out_path(cfg, "surface.obj"), to_obj(m));
  finish(cfg, report, out);
  return 0;
}

int cmd_flow(const RunConfig& cfg, std::ostream& out) {
  std::string base_name = cfg.curve;
  std::string integrand_arg = cfg.integrand.empty() ? "hexic2d" : cfg.integrand;
  if (base_name == "circle-isotropic") {
    integrand_arg = "isotropic";
    base_name = "wulff";
  }
  const Integrand gamma = resolve_integrand(integrand_arg, 1);
  const int res = cfg.res > 0 ? cfg.res : (gamma.n() == 1 ? 4096 : 256);
  Shape base;
  if (gamma.n() == 1) {
    base = stitch(gamma, resolve_arcs(gamma, base_name), res);
  } else {
    base = mesh_frontier_surface(gamma, resolve_arcs(gamma.meridian_profile(), base_name), res, cfg.cols);
  }
  const FlowFamily fam = make_flow_family(gamma, cfg.c, std::move(base));
  const FlowState st = family_at(fam, cfg.t);
  const double r1 = flow_residual(fam, cfg.t, cfg.dt);
  const double r2 = flow_residual(fam, cfg.t, cfg.dt / 10.0);
  const double e_base = energy_at(fam, cfg.c - 0.5);  // scale 1
  const double e_t = energy_at(fam, cfg.t);
  Json report{{"integrand", to_string(gamma.kind())},
              {"base", cfg.curve},
              {"c", cfg.c},
              {"t", cfg.t},
              {"dt", cfg.dt},
              {"residual", r1},
              {"residual_tenth_dt", r2},
              {"richardson_ratio", r2 > 0.0 ? r1 / r2 : 0.0},
              {"scale", st.scale},
              {"lambda_expected", st.lambda_expected},
              {"lambda_measured_minmax", Json::array({st.lambda_min, st.lambda_max})},
              {"energy", e_t},
              {"energy_scale_law_error", std::abs(e_t - std::pow(st.scale, fam.n()) * e_base)}};
  if (cfg.dissipation) {
    const DissipationReport d = dissipation_check(fam, cfg.t, cfg.dt);
    const double tol = cfg.tol.value_or(1e-4);
    const double gap = std::abs(d.lhs - d.rhs) / std::max(std::abs(d.rhs), 1e-300);
    report["lhs"] = d.lhs;
    report["rhs"] = d.rhs;
    report["analytic_lhs"] = d.analytic_lhs;
    report["relative_gap"] = gap;
    report["within_tolerance"] = gap <= tol;
  }
  finish(cfg, report, out);
  return 0;
}

int cmd_convexity(const RunConfig& cfg, std::ostream& out) {
  const Integrand gamma = resolve_integrand(cfg.integrand.empty() ? "hexic2d" : cfg.integrand, 1);
  const int res = cfg.res > 0 ? cfg.res : (gamma.n() == 1 ? 4096 : 128);
  const ConvexityReport r = convexity_report(gamma, res, cfg.pairs);
  Json witness = Json::array();
  for (int k = 0; k < r.witness.components().size(); ++k) witness.push_back(r.witness[k]);
  Json report{{"integrand", to_string(gamma.kind())},
              {"n", gamma.n()},
              {"resolution", res},
              {"is_convex", r.is_convex},
              {"min_eigenvalue", r.min_eigenvalue},
              {"witness", witness},
              {"midpoint_convex", r.midpoint_convex},
              {"midpoint_pairs", r.midpoint_pairs},
              {"midpoint_violations", r.midpoint_violations},
              {"worst_midpoint_excess", r.worst_midpoint_excess}};
  finish(cfg, report, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anisotropic energies, Wulff shapes and constant anisotropic mean curvature"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--integrand", cfg.integrand, "Integrand spec file or builtin kind name");
    sub->add_option("--res", cfg.res, "Resolution")->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.tol, "Tolerance override");
    sub->add_option("--out", cfg.out, "Output directory");
    sub->add_flag("--report", cfg.report, "Print the JSON report to stdout");
  };
  auto* frontier = app.add_subcommand("frontier", "Cahn-Hoffman image, singular set and crossings");
  common(frontier);
  frontier->add_flag("--svg", cfg.svg);
  auto* wulff = app.add_subcommand("wulff", "Wulff shape by half-spaces and by frontier arcs");
  common(wulff);
  wulff->add_flag("--svg", cfg.svg);
  auto* cls = app.add_subcommand("classify", "CAMC verdict for a closed frontier curve");
  common(cls);
  cls->add_option("--curve,--arcs", cfg.curve, "Catalogue name or ArcSpec file");
  cls->add_flag("--svg", cfg.svg);
  auto* en = app.add_subcommand("enumerate", "All closed CAMC frontier curves up to congruence");
  common(en);
  en->add_option("--cap", cfg.cap, "Partial path cap")->check(CLI::PositiveNumber);
  en->add_flag("--svg", cfg.svg);
  auto* surf = app.add_subcommand("surface", "Rotational surface from a profile frontier curve");
  common(surf);
  surf->add_option("--arcs,--curve", cfg.curve, "Profile catalogue name or ArcSpec file");
  surf->add_option("--cols", cfg.cols, "Columns around the axis")->check(CLI::Range(128, 1 << 20));
  surf->add_flag("--obj", cfg.obj);
  auto* flow = app.add_subcommand("flow", "Self-similar shrinking family of a CAMC base");
  common(flow);
  flow->add_option("--base", cfg.curve, "Base curve: catalogue name, ArcSpec file or circle-isotropic");
  flow->add_option("--c", cfg.c, "Extinction time");
  flow->add_option("--t", cfg.t, "Time");
  flow->add_option("--dt", cfg.dt, "Time step")->check(CLI::PositiveNumber);
  flow->add_option("--cols", cfg.cols, "Columns around the axis for surface bases")->check(CLI::Range(128, 1 << 20));
  flow->add_flag("--dissipation", cfg.dissipation, "Check the energy dissipation identity");
  auto* conv = app.add_subcommand("convexity", "Convexity of the homogeneous extension");
  common(conv);
  conv->add_option("--pairs", cfg.pairs, "Random midpoint pairs")->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    std::filesystem::create_directories(cfg.out);
    if (frontier->parsed()) return cmd_frontier(cfg, out);
    if (wulff->parsed()) return cmd_wulff(cfg, out);
    if (cls->parsed()) return cmd_classify(cfg, out);
    if (en->parsed()) return cmd_enumerate(cfg, out);
    if (surf->parsed()) return cmd_surface(cfg, out);
    if (flow->parsed()) return cmd_flow(cfg, out);
    if (conv->parsed()) return cmd_convexity(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace aniso
