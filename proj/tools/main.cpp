#include "toric/classifier.hpp"
#include "toric/render.hpp"
#include "toric/resolutions.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace toric;

namespace {

// exit codes
constexpr int kOk = 0, kUsage = 1, kInvalid = 2;

struct Failure : std::runtime_error {
  int code;
  Failure(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure(kUsage, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Failure(kInvalid, "malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure(kUsage, "cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

Pt parse_point(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 2) throw Failure(kUsage, "point must be x,y");
  return {parse_rat(parts[0]), parse_rat(parts[1])};
}

struct ConfigFlags {
  std::string file;
  std::optional<Int> direction_height, flag_height, ghost_height;
  std::optional<std::string> epsilon;
  bool no_symmetric = false, no_flags = false, no_qw = false;

  void attach(CLI::App* app) {
    app->add_option("--config", file, "SearchConfig JSON; flags below override it");
    app->add_option("--direction-height", direction_height);
    app->add_option("--flag-height", flag_height);
    app->add_option("--ghost-height", ghost_height);
    app->add_option("--epsilon", epsilon, "retreat margin p/q");
    app->add_flag("--no-symmetric", no_symmetric);
    app->add_flag("--no-flags", no_flags);
    app->add_flag("--no-qw", no_qw);
  }
  SearchConfig build() const {
    Json j = file.empty() ? Json::object() : read_json(file);
    if (direction_height) j["direction_height"] = *direction_height;
    if (flag_height) j["flag_height"] = *flag_height;
    if (ghost_height) j["ghost_height"] = *ghost_height;
    if (epsilon) j["epsilon"] = *epsilon;
    if (no_symmetric) j["use_symmetric"] = false;
    if (no_flags) j["use_flags"] = false;
    if (no_qw) j["use_qw"] = false;
    return config_from_json(j);
  }
};

Polygon load_polygon(const std::string& path) { return polygon_from_json(read_json(path)); }

BBox default_bbox(const Polygon& p) {
  if (!p.bounded || p.vertices.empty()) throw Failure(kUsage, "unbounded polygon needs --bbox");
  BBox b{p.vertices[0].p.x, p.vertices[0].p.y, p.vertices[0].p.x, p.vertices[0].p.y};
  for (const auto& v : p.vertices) {
    b.x0 = std::min(b.x0, v.p.x);
    b.y0 = std::min(b.y0, v.p.y);
    b.x1 = std::max(b.x1, v.p.x);
    b.y1 = std::max(b.y1, v.p.y);
  }
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Displaceability of toric moment-map fibers with exact certificates"};
  app.require_subcommand(1);

  auto* scen = app.add_subcommand("scenario", "list or emit built-in polygons");
  scen->require_subcommand(1);
  scen->add_subcommand("list", "show scenario names and parameters");
  auto* emit = scen->add_subcommand("emit", "write a scenario polygon as JSON");
  std::string scen_name, scen_out;
  std::vector<std::string> scen_params;
  emit->add_option("name", scen_name)->required();
  emit->add_option("params", scen_params);
  emit->add_option("--out,-o", scen_out);

  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung continued fraction of n/m");
  Int hj_n = 0, hj_m = 0;
  hj->add_option("n", hj_n)->required();
  hj->add_option("m", hj_m)->required();

  auto* cls = app.add_subcommand("classify", "classify one point");
  std::string cls_poly, cls_point, cls_out;
  ConfigFlags cls_cfg;
  cls->add_option("--polygon", cls_poly)->required();
  cls->add_option("--point", cls_point, "x,y with rational coordinates")->required();
  cls->add_option("--cert-out", cls_out, "also write the certificate alone");
  cls_cfg.attach(cls);

  auto* grid = app.add_subcommand("grid", "classify a grid of points");
  std::string grid_poly, grid_bbox, grid_res, grid_out;
  ConfigFlags grid_cfg;
  grid->add_option("--polygon", grid_poly)->required();
  grid->add_option("--bbox", grid_bbox, "x0,y0,x1,y1 (default: polygon bounding box)");
  grid->add_option("--res", grid_res, "step p/q")->required();
  grid->add_option("--out,-o", grid_out)->required();
  grid_cfg.attach(grid);

  auto* render = app.add_subcommand("render", "draw a grid as SVG");
  std::string render_grid, render_out;
  RenderStyle style;
  bool no_legend = false;
  render->add_option("--grid", render_grid)->required();
  render->add_option("--out,-o", render_out)->required();
  render->add_option("--scale", style.scale, "pixels per unit");
  render->add_flag("--no-legend", no_legend);

  auto* ver = app.add_subcommand("verify-certificate", "re-verify a certificate against a polygon");
  std::string ver_cert, ver_poly;
  ver->add_option("--cert", ver_cert)->required();
  ver->add_option("--polygon", ver_poly)->required();

  auto* aud = app.add_subcommand("audit", "re-verify every cell of a grid");
  std::string aud_grid;
  bool no_cross = false;
  aud->add_option("--grid", aud_grid)->required();
  aud->add_flag("--no-cross-check", no_cross, "skip the unit-point search on displaceable cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (scen->parsed()) {
      if (emit->parsed()) {
        write_text(scen_out, to_json(make_scenario(scen_name, scen_params)).dump(2) + "\n");
      } else {
        for (const auto& s : scenario_list()) std::cout << s.name << " " << s.params << "\n";
      }
    } else if (hj->parsed()) {
      auto cf = hj_expand(hj_n, hj_m);
      std::cout << "E = [";
      for (size_t i = 0; i < cf.terms.size(); ++i) std::cout << (i ? "," : "") << cf.terms[i];
      std::cout << "]; conormals = ";
      auto chain = conormal_chain(cf);
      for (size_t i = 0; i < chain.size(); ++i) std::cout << (i ? "," : "") << to_string(chain[i]);
      std::cout << "\n";
    } else if (cls->parsed()) {
      Polygon p = load_polygon(cls_poly);
      Verdict v = classify_point(p, parse_point(cls_point), cls_cfg.build());
      Json j{{"point", to_json(v.point)}, {"class", class_name(v.cls)}, {"certificate", v.certificate}};
      std::cout << j.dump(2) << "\n";
      if (!cls_out.empty() && !v.certificate.is_null()) write_text(cls_out, v.certificate.dump(2) + "\n");
    } else if (grid->parsed()) {
      Polygon p = load_polygon(grid_poly);
      BBox box;
      if (grid_bbox.empty()) {
        box = default_bbox(p);
      } else {
        auto parts = split(grid_bbox, ',');
        if (parts.size() != 4) throw Failure(kUsage, "bbox must be x0,y0,x1,y1");
        box = {parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2]), parse_rat(parts[3])};
      }
      auto g = classify_grid(p, box, parse_rat(grid_res), grid_cfg.build());
      write_text(grid_out, to_json(g).dump() + "\n");
      std::map<std::string, size_t> counts;
      for (const auto& c : g.cells) ++counts[class_name(c.cls)];
      for (const auto& [k, n] : counts) std::cout << k << " " << n << "\n";
    } else if (render->parsed()) {
      style.legend = !no_legend;
      write_text(render_out, emit_svg(grid_from_json(read_json(render_grid)), style));
    } else if (ver->parsed()) {
      CheckResult r = verify_certificate(load_polygon(ver_poly), read_json(ver_cert));
      if (!r.ok) throw Failure(kInvalid, "certificate rejected: " + r.reason);
      std::cout << "ok: " << r.reason << "\n";
    } else if (aud->parsed()) {
      AuditReport rep = consistency_audit(grid_from_json(read_json(aud_grid)), !no_cross);
      for (const auto& [k, a] : rep.areas) std::cout << "area " << k << " " << to_string(a) << "\n";
      std::cout << "checked " << rep.checked << " cells\n";
      if (!rep.ok) {
        for (const auto& f : rep.failures) std::cerr << "audit failure: " << f << "\n";
        throw Failure(kInvalid, "audit failed on " + std::to_string(rep.failures.size()) + " cells");
      }
      std::cout << "audit passed\n";
    }
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
