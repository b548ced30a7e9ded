#ifndef MAXMIN_TOOLS_CLI_APP_HPP
#define MAXMIN_TOOLS_CLI_APP_HPP

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "maxmin/json_io.hpp"
#include "maxmin/maxmin.hpp"
#include "maxmin/svg.hpp"

namespace maxmin::cli {

/// Exit codes: separated or valid, error, clean negative answer.
enum ExitCode : int { kOk = 0, kError = 1, kNegative = 2 };

namespace detail {

inline io::Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return io::Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

inline std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

/// Every scalar the instance (and optional separator) mentions must lie on the grid.
inline void require_on_grid(const Grid& grid, const io::Instance& inst, const std::vector<Point>& extra) {
  std::vector<Point> pts = extra;
  if (inst.box) {
    pts.push_back(inst.box->lower());
    pts.push_back(inst.box->upper());
  }
  for (const auto& [name, set] : inst.sets) pts.insert(pts.end(), set.generators().begin(), set.generators().end());
  for (const auto& p : pts) {
    if (!grid.on_grid(p)) {
      throw Error("grid with denominator " + std::to_string(grid.denominator()) + " does not contain " + p.str());
    }
  }
}

template <class Region>
bool all_in(const oracle::PointSet& pts, const Region& region) {
  return std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return region.contains(p); });
}

template <class Region>
bool none_in(const oracle::PointSet& pts, const Region& region) {
  return std::none_of(pts.begin(), pts.end(), [&](const Point& p) { return region.contains(p); });
}

inline int verify_box_certificate(const io::Json& doc, int grid_d, io::Json& report) {
  const auto inst = io::instance_from_json(doc.at("instance"));
  const auto cert = io::certificate_from_json(doc);
  const Box& b = inst.require_box();
  const auto& c = inst.require({"C", "C1"});
  const std::size_t n = inst.dimension;
  const Grid grid(grid_d, n);
  std::vector<Point> extra;
  if (const auto* s = cert.semispace()) extra.push_back(s->x0());
  if (const auto* h = cert.hemispace()) extra.push_back(h->x0());
  require_on_grid(grid, inst, extra);

  std::map<std::string, bool> checks;
  checks["closed_form"] = certificate_is_valid(cert, b, c);
  const auto hull = oracle::grid_hull(c.generators(), grid);
  const auto box_pts = oracle::grid_points_in_box(b, grid);
  if (const auto* s = cert.semispace()) {
    checks["oracle_call_bound"] = cert.oracle_calls <= n + 1;
    checks["grid_hull_inside"] = all_in(hull, *s);
    checks["grid_box_outside"] = none_in(box_pts, *s);
  } else if (const auto* h = cert.hemispace()) {
    checks["grid_hull_inside"] = all_in(hull, *h);
    checks["grid_box_outside"] = none_in(box_pts, *h);
  } else {
    checks["grid_box_avoids_hull"] = std::none_of(hull.begin(), hull.end(), [&](const Point& p) { return b.contains(p); });
    checks["no_grid_semispace"] = assert_nonseparable(b, c, grid);
  }
  bool valid = true;
  io::Json js = io::Json::object();
  for (const auto& [name, ok] : checks) {
    js[name] = ok;
    valid = valid && ok;
  }
  report = io::Json{{"kind", "box-separation"}, {"outcome", io::outcome_name(cert)}, {"valid", valid}, {"checks", js}};
  return valid ? kOk : kError;
}

inline int verify_planar_certificate(const io::Json& doc, int grid_d, io::Json& report) {
  const auto inst = io::instance_from_json(doc.at("instance"));
  const auto& c1 = inst.require({"C1", "C"});
  const auto& c2 = inst.require({"C2"});
  const int boxed = doc.at("boxed_set").get<int>();
  if (boxed != 1 && boxed != 2) throw ParseError("boxed_set must be 1 or 2");
  PlanarBoxCertificate cert{boxed, io::box_from_json(doc.at("box"))};
  std::optional<SemispaceDescriptor> semi;
  if (doc.contains("semispace")) {
    auto d = io::descriptor_from_json(doc.at("semispace"));
    if (!std::holds_alternative<SemispaceDescriptor>(d)) throw ParseError("planar separator must be a semispace");
    semi = std::get<SemispaceDescriptor>(std::move(d));
  }
  const Grid grid(grid_d, 2);
  std::vector<Point> extra{cert.box.lower(), cert.box.upper()};
  if (semi) extra.push_back(semi->x0());
  require_on_grid(grid, inst, extra);

  const auto& inside = boxed == 1 ? c1 : c2;
  const auto& outside = boxed == 1 ? c2 : c1;
  const auto in_hull = oracle::grid_hull(inside.generators(), grid);
  const auto out_hull = oracle::grid_hull(outside.generators(), grid);
  std::map<std::string, bool> checks;
  checks["closed_form_box"] = planar_box_is_valid(cert, c1, c2);
  checks["grid_boxed_inside"] = all_in(in_hull, cert.box);
  checks["grid_other_outside"] = none_in(out_hull, cert.box);
  if (semi) {
    const auto box_pts = oracle::grid_points_in_box(cert.box, grid);
    checks["closed_form_semispace"] = semi->avoids(cert.box) && set_in_semispace(outside, *semi).contained();
    checks["grid_other_in_semispace"] = all_in(out_hull, *semi);
    checks["grid_box_outside_semispace"] = none_in(box_pts, *semi);
  }
  bool valid = true;
  io::Json js = io::Json::object();
  for (const auto& [name, ok] : checks) {
    js[name] = ok;
    valid = valid && ok;
  }
  report = io::Json{{"kind", "planar"}, {"valid", valid}, {"checks", js}};
  return valid ? kOk : kError;
}

inline std::string plot_scene(const io::Instance& inst, const std::optional<io::Json>& cert, int grid_d) {
  if (inst.dimension != 2) throw DimensionError("plot supports dimension 2 only");
  svg::Scene scene;
  static const char* palette[] = {"#1f4e9c", "#b8321a", "#2c7a2c", "#7a2c7a"};
  if (cert && cert->value("kind", "") == "box-separation") {
    auto sep = cert->at("separator");
    if (!sep.is_null()) {
      auto d = io::descriptor_from_json(sep);
      if (auto* s = std::get_if<SemispaceDescriptor>(&d)) scene.semispace(*s, "#2c7a2c");
      if (auto* h = std::get_if<HemispaceDescriptor>(&d)) scene.hemispace(*h, "#2c7a2c");
    }
  }
  if (cert && cert->value("kind", "") == "planar") {
    if (cert->contains("semispace")) {
      auto d = io::descriptor_from_json(cert->at("semispace"));
      scene.semispace(std::get<SemispaceDescriptor>(d), "#2c7a2c");
    }
    scene.box(io::box_from_json(cert->at("box")), "#9aa9c9", "box");
  }
  if (inst.box) scene.box(*inst.box, "#999999", "B");
  const Grid grid(grid_d, 2);
  std::size_t k = 0;
  for (const auto& [name, set] : inst.sets) {
    const char* color = palette[k++ % 4];
    if (grid.on_grid(bounding_box(set).lower()) && std::all_of(set.generators().begin(), set.generators().end(),
                                                                [&](const Point& p) { return grid.on_grid(p); })) {
      scene.grid_hull(set, grid, color);
    }
    scene.generators(set, color);
  }
  return scene.str();
}

}  // namespace detail

/// Runs one command line (without the program name) and returns its exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact max-min convex separation: boxes, semispaces, certificates."};
  app.name("maxmin");
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string cert_path;
  std::string point_text;
  bool no_fallback = false;
  bool with_semispace = false;
  int grid_d = 0;

  auto* sep_box = app.add_subcommand("separate-box", "Separate a box from a generated convex set");
  sep_box->add_option("-i,--input", input, "instance JSON")->required();
  sep_box->add_option("-o,--output", output, "certificate JSON (default: stdout)");
  sep_box->add_flag("--no-fallback", no_fallback, "do not try the S0^M hemispace");

  auto* sep_2d = app.add_subcommand("separate-2d", "Separate two planar convex sets by a box");
  sep_2d->add_option("-i,--input", input, "instance JSON with sets C1, C2")->required();
  sep_2d->add_option("-o,--output", output, "certificate JSON (default: stdout)");
  sep_2d->add_flag("--with-semispace", with_semispace, "also separate the box from the other set by a semispace");

  auto* family = app.add_subcommand("family", "Print the semispace family at a point");
  family->add_option("-p,--point", point_text, "point, e.g. \"0.6,0.3\"")->required();

  auto* check = app.add_subcommand("check-cond", "Check the box separability condition");
  check->add_option("-i,--input", input, "instance JSON")->required();

  auto* verify = app.add_subcommand("verify", "Re-check a certificate with grid oracles");
  verify->add_option("-i,--input", input, "certificate JSON")->required();
  verify->add_option("--grid", grid_d, "grid denominator containing all instance coordinates");

  auto* plot = app.add_subcommand("plot", "Draw a planar instance as SVG");
  plot->add_option("-i,--input", input, "instance JSON")->required();
  plot->add_option("-c,--cert", cert_path, "certificate JSON to overlay");
  plot->add_option("-o,--output", output, "SVG file (default: stdout)");
  plot->add_option("--grid", grid_d, "grid denominator for drawn hull points");

  std::vector<std::string> argv_store{"maxmin"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*sep_box) {
      auto inst = io::instance_from_json(detail::read_json(input));
      inst.fallback = inst.fallback && !no_fallback;
      const auto cert = separate_box(inst.require_box(), inst.require({"C", "C1"}), SeparationOptions{inst.fallback});
      detail::emit(detail::dump(io::to_json(cert, inst)), output, out);
      return cert.separated() ? kOk : kNegative;
    }
    if (*sep_2d) {
      const auto inst = io::instance_from_json(detail::read_json(input));
      const auto& c1 = inst.require({"C1", "C"});
      const auto& c2 = inst.require({"C2"});
      if (with_semispace) {
        const auto r = separate_box_semispace(c1, c2);
        detail::emit(detail::dump(io::to_json(r.box, r.semispace, inst)), output, out);
      } else {
        detail::emit(detail::dump(io::to_json(separate_two_sets(c1, c2), std::nullopt, inst)), output, out);
      }
      return kOk;
    }
    if (*family) {
      io::Json arr = io::Json::array();
      for (const auto& s : semispace_family(Point::parse(point_text))) arr.push_back(io::to_json(s));
      out << detail::dump(arr);
      return kOk;
    }
    if (*check) {
      const auto inst = io::instance_from_json(detail::read_json(input));
      const auto r = check_sep_cond(inst.require_box(), inst.require({"C", "C1"}));
      io::Json j{{"condition", r.holds() ? "holds" : "violated"}};
      if (!r.holds()) j["witness"] = io::to_json(*r.violation);
      out << detail::dump(j);
      return r.holds() ? kOk : kNegative;
    }
    if (*verify) {
      const auto doc = detail::read_json(input);
      if (grid_d == 0) {
        const auto& opts = doc.at("instance").value("options", io::Json::object());
        if (!opts.contains("grid")) throw Error("verify needs --grid (or options.grid in the instance)");
        grid_d = opts.at("grid").get<int>();
      }
      io::Json report;
      const auto kind = doc.value("kind", "");
      int code = kError;
      if (kind == "box-separation") {
        code = detail::verify_box_certificate(doc, grid_d, report);
      } else if (kind == "planar") {
        code = detail::verify_planar_certificate(doc, grid_d, report);
      } else {
        throw ParseError("unknown certificate kind '" + kind + "'");
      }
      out << detail::dump(report);
      if (code != kOk) err << "maxmin: certificate failed verification\n";
      return code;
    }
    if (*plot) {
      const auto inst = io::instance_from_json(detail::read_json(input));
      std::optional<io::Json> cert;
      if (!cert_path.empty()) cert = detail::read_json(cert_path);
      if (grid_d == 0) grid_d = inst.grid.value_or(20);
      detail::emit(detail::plot_scene(inst, cert, grid_d), output, out);
      return kOk;
    }
  } catch (const Error& e) {
    err << "maxmin: " << e.what() << "\n";
    return kError;
  } catch (const nlohmann::json::exception& e) {
    err << "maxmin: malformed document: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace maxmin::cli

#endif  // MAXMIN_TOOLS_CLI_APP_HPP
