#ifndef MAXMIN_JSON_IO_HPP
#define MAXMIN_JSON_IO_HPP

// JSON interchange: instances, descriptors, and certificates. Scalars are
// exact strings; coordinate indices are 1-based in every document.

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxmin/convex.hpp"
#include "maxmin/planar.hpp"
#include "maxmin/semispace.hpp"
#include "maxmin/separation.hpp"

namespace maxmin::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Scalar& s) { return s.str(); }

inline Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() <= 1) {
    return Scalar::ratio(static_cast<Scalar::int_type>(j.get<std::uint64_t>()), 1);
  }
  throw ParseError("scalar must be a decimal or fraction string, got " + j.dump());
}

inline Json to_json(const Point& p) {
  Json arr = Json::array();
  for (const auto& s : p) arr.push_back(to_json(s));
  return arr;
}

inline Point point_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("point must be a nonempty array, got " + j.dump());
  std::vector<Scalar> coords;
  for (const auto& s : j) coords.push_back(scalar_from_json(s));
  return Point(std::move(coords));
}

inline Json to_json(const Box& b) { return Json{{"lower", to_json(b.lower())}, {"upper", to_json(b.upper())}}; }

inline Box box_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lower") || !j.contains("upper")) {
    throw ParseError("box needs \"lower\" and \"upper\"");
  }
  return Box(point_from_json(j.at("lower")), point_from_json(j.at("upper")));
}

inline Json to_json(const GeneratedConvexSet& c) {
  Json arr = Json::array();
  for (const auto& g : c.generators()) arr.push_back(to_json(g));
  return arr;
}

inline GeneratedConvexSet set_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("convex set must be a nonempty array of points");
  std::vector<Point> gens;
  for (const auto& p : j) gens.push_back(point_from_json(p));
  return GeneratedConvexSet(std::move(gens));
}

inline Json to_json(const SemispaceDescriptor& s) {
  Json j{{"type", s.is_s0() ? "S0" : "Si"}, {"x0", to_json(s.x0())}};
  if (!s.is_s0()) j["i"] = s.coordinate() + 1;
  return j;
}

inline Json to_json(const HemispaceDescriptor& h) {
  Json m = Json::array();
  for (auto i : h.coordinates()) m.push_back(i + 1);
  return Json{{"type", "S0"}, {"x0", to_json(h.x0())}, {"M", std::move(m)}};
}

inline Json to_json(const Candidate& c) {
  return std::visit([](const auto& d) { return to_json(d); }, c);
}

/// A descriptor document; "S0" with an "M" list is a hemispace.
inline Candidate descriptor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.contains("x0")) throw ParseError("descriptor needs \"type\" and \"x0\"");
  Point x0 = point_from_json(j.at("x0"));
  const auto type = j.at("type").get<std::string>();
  if (type == "S0") {
    if (!j.contains("M")) return SemispaceDescriptor::s0(std::move(x0));
    std::vector<std::size_t> m;
    for (const auto& i : j.at("M")) {
      const auto idx = i.get<std::size_t>();
      if (idx < 1) throw ParseError("hemispace index must be >= 1");
      m.push_back(idx - 1);
    }
    return HemispaceDescriptor(std::move(x0), std::move(m));
  }
  if (type == "Si") {
    const auto idx = j.at("i").get<std::size_t>();
    if (idx < 1 || idx > x0.dimension()) throw ParseError("semispace index out of range");
    return SemispaceDescriptor::for_coordinate(std::move(x0), idx - 1);
  }
  throw ParseError("unknown descriptor type '" + type + "'");
}

/// A problem instance: an optional box, named generator lists, and options.
struct Instance {
  std::size_t dimension = 0;
  std::optional<Box> box;
  std::vector<std::pair<std::string, GeneratedConvexSet>> sets;
  std::optional<int> grid;
  bool fallback = true;

  const GeneratedConvexSet* find(const std::string& name) const {
    for (const auto& [key, set] : sets) {
      if (key == name) return &set;
    }
    return nullptr;
  }

  const GeneratedConvexSet& require(std::initializer_list<const char*> names) const {
    for (const char* name : names) {
      if (const auto* s = find(name)) return *s;
    }
    throw ParseError(std::string("instance lacks set \"") + *names.begin() + "\"");
  }

  const Box& require_box() const {
    if (!box) throw ParseError("instance lacks a \"box\"");
    return *box;
  }
};

inline Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  Instance inst;
  if (j.contains("box")) inst.box = box_from_json(j.at("box"));
  if (j.contains("sets")) {
    for (const auto& [name, value] : j.at("sets").items()) inst.sets.emplace_back(name, set_from_json(value));
  }
  if (j.contains("dimension")) {
    inst.dimension = j.at("dimension").get<std::size_t>();
  } else if (inst.box) {
    inst.dimension = inst.box->dimension();
  } else if (!inst.sets.empty()) {
    inst.dimension = inst.sets.front().second.dimension();
  }
  if (inst.box) detail::require_same_dimension(inst.box->dimension(), inst.dimension, "instance box");
  for (const auto& [name, set] : inst.sets) detail::require_same_dimension(set.dimension(), inst.dimension, "instance set");
  if (j.contains("options")) {
    const auto& opts = j.at("options");
    if (opts.contains("grid")) inst.grid = opts.at("grid").get<int>();
    if (opts.contains("fallback")) inst.fallback = opts.at("fallback").get<bool>();
  }
  return inst;
}

inline Json to_json(const Instance& inst) {
  Json j{{"dimension", inst.dimension}};
  if (inst.box) j["box"] = to_json(*inst.box);
  Json sets = Json::object();
  for (const auto& [name, set] : inst.sets) sets[name] = to_json(set);
  j["sets"] = std::move(sets);
  Json opts = Json::object();
  if (inst.grid) opts["grid"] = *inst.grid;
  opts["fallback"] = inst.fallback;
  j["options"] = std::move(opts);
  return j;
}

inline const char* outcome_name(const SeparationCertificate& cert) {
  if (cert.semispace()) return "SeparatedBySemispace";
  if (cert.hemispace()) return "SeparatedByHemispace";
  return "NotSeparable";
}

inline Json to_json(const SeparationCertificate& cert, const Instance& inst) {
  Json j{{"kind", "box-separation"}, {"outcome", outcome_name(cert)}};
  if (const auto* s = cert.semispace()) {
    j["separator"] = to_json(*s);
  } else if (const auto* h = cert.hemispace()) {
    j["separator"] = to_json(*h);
  } else {
    j["separator"] = nullptr;
  }
  j["witness"] = cert.witness() ? to_json(*cert.witness()) : Json(nullptr);
  j["oracle_calls"] = cert.oracle_calls;
  Json trace = Json::array();
  for (const auto& entry : cert.trace) {
    trace.push_back(Json{{"stage", entry.stage},
                         {"candidate", to_json(entry.candidate)},
                         {"witness", entry.witness ? to_json(*entry.witness) : Json(nullptr)}});
  }
  j["trace"] = std::move(trace);
  j["instance"] = to_json(inst);
  return j;
}

inline SeparationCertificate certificate_from_json(const Json& j) {
  SeparationCertificate cert{NotSeparable{Point{}}, 0, {}};
  const auto outcome = j.at("outcome").get<std::string>();
  if (outcome == "SeparatedBySemispace" || outcome == "SeparatedByHemispace") {
    auto sep = descriptor_from_json(j.at("separator"));
    const bool semi = std::holds_alternative<SemispaceDescriptor>(sep);
    if (semi != (outcome == "SeparatedBySemispace")) throw ParseError("separator type does not match outcome");
    if (semi) {
      cert.outcome = SeparatedBySemispace{std::get<SemispaceDescriptor>(std::move(sep))};
    } else {
      cert.outcome = SeparatedByHemispace{std::get<HemispaceDescriptor>(std::move(sep))};
    }
  } else if (outcome == "NotSeparable") {
    cert.outcome = NotSeparable{point_from_json(j.at("witness"))};
  } else {
    throw ParseError("unknown outcome '" + outcome + "'");
  }
  cert.oracle_calls = j.at("oracle_calls").get<std::size_t>();
  for (const auto& entry : j.at("trace")) {
    std::optional<Point> w;
    if (!entry.at("witness").is_null()) w = point_from_json(entry.at("witness"));
    cert.trace.push_back({entry.at("stage").get<std::string>(), descriptor_from_json(entry.at("candidate")), std::move(w)});
  }
  return cert;
}

inline Json to_json(const PlanarBoxCertificate& cert, const std::optional<SemispaceDescriptor>& semispace,
                    const Instance& inst) {
  Json j{{"kind", "planar"}, {"boxed_set", cert.boxed_set}, {"box", to_json(cert.box)}};
  if (semispace) j["semispace"] = to_json(*semispace);
  j["instance"] = to_json(inst);
  return j;
}

}  // namespace maxmin::io

#endif  // MAXMIN_JSON_IO_HPP
