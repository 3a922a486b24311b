#include "coarsedim/serialize.hpp"

#include "coarsedim/ko.hpp"

#include "json.hpp"

namespace coarsedim {

using ordered_json = nlohmann::ordered_json;

std::string coloring_to_json(const FiniteMetricSpace& space, const Coloring& coloring) {
  ordered_json doc;
  doc["palette"] = coloring.palette;
  ordered_json points = ordered_json::object();
  for (size_t p = 0; p < space.size(); ++p) points[space.label(p)] = coloring.colors_of[p];
  doc["points"] = points;
  return doc.dump();
}

Coloring coloring_from_json(const FiniteMetricSpace& space, const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  Coloring c;
  c.palette = doc.at("palette").get<std::vector<int>>();
  c.colors_of.assign(space.size(), {});
  for (auto& [label, colors] : doc.at("points").items()) {
    size_t idx = space.find(label);
    if (idx == static_cast<size_t>(-1))
      throw std::domain_error("coloring_from_json: unknown point " + label);
    c.colors_of[idx] = colors.get<std::vector<int>>();
  }
  for (const auto& cs : c.colors_of)
    if (cs.empty()) throw std::domain_error("coloring_from_json: uncovered point");
  return c;
}

std::string validation_to_json(const FiniteMetricSpace& space, const ValidationReport& report) {
  ordered_json doc;
  doc["valid"] = report.valid;
  doc["colors_used"] = report.colors_used;
  ordered_json rows = ordered_json::array();
  for (const auto& pc : report.per_color) {
    ordered_json row;
    row["color"] = pc.color;
    row["clusters"] = pc.cluster_count;
    row["worst_diameter"] = pc.worst_diameter.str();
    ordered_json members = ordered_json::array();
    for (size_t p : pc.worst_cluster) members.push_back(space.label(p));
    row["worst_cluster"] = members;
    row["ok"] = pc.ok;
    rows.push_back(row);
  }
  doc["per_color"] = rows;
  return doc.dump();
}

std::string validation_to_csv(const FiniteMetricSpace& space, const ValidationReport& report) {
  (void)space;
  std::string out = "color,clusters,worst_diameter,ok\n";
  for (const auto& pc : report.per_color)
    out += std::to_string(pc.color) + "," + std::to_string(pc.cluster_count) + "," +
           pc.worst_diameter.str() + "," + (pc.ok ? "true" : "false") + "\n";
  return out;
}

std::string cube_witness_to_json(int n, int r, const CubeSubset& subset) {
  ordered_json doc;
  doc["n"] = n;
  doc["r"] = r;
  doc["subset"] = cube_to_hex(subset);
  return doc.dump();
}

CubeWitness cube_witness_from_json(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  CubeWitness w;
  w.n = doc.at("n").get<int>();
  w.r = doc.at("r").get<int>();
  w.subset = cube_from_hex(doc.at("subset").get<std::string>());
  return w;
}

std::string property_p_witness_to_json(int r, const Rat& eps,
                                       const std::vector<uint32_t>& subset) {
  ordered_json doc;
  doc["r"] = r;
  doc["epsilon"] = eps.str();
  doc["subset"] = subset;
  return doc.dump();
}

PropertyPWitness property_p_witness_from_json(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  PropertyPWitness w;
  w.r = doc.at("r").get<int>();
  w.eps = Rat::parse(doc.at("epsilon").get<std::string>());
  w.subset = doc.at("subset").get<std::vector<uint32_t>>();
  return w;
}

namespace {

ordered_json iter_to_json(const IterElem& e) {
  if (e.level == 0) return e.payload;
  ordered_json doc;
  doc["cursor"] = e.cursor;
  ordered_json support = ordered_json::object();
  for (const auto& [pos, val] : e.lamps) support[std::to_string(pos)] = iter_to_json(val);
  doc["support"] = support;
  return doc;
}

}  // namespace

std::string wreath_to_json(const IterElem& e) { return iter_to_json(e).dump(); }

std::string wreath_to_json(const LampElem& e) {
  ordered_json doc;
  doc["cursor"] = e.cursor;
  ordered_json support = ordered_json::object();
  for (long long p : e.lit) support[std::to_string(p)] = 1;
  doc["support"] = support;
  return doc.dump();
}

std::string ko_to_json(const KOColoring& c, size_t cap) {
  if (c.box.size() > cap) throw ResourceLimit("ko_to_json: box exceeds cap");
  ordered_json doc;
  doc["m"] = c.m;
  doc["n"] = c.n;
  doc["lambda"] = c.lambda;
  doc["control"] = c.control;
  ordered_json points = ordered_json::object();
  for (unsigned long long i = 0; i < c.box.size(); ++i) {
    auto coords = c.box.coords(i);
    std::string label;
    for (size_t a = 0; a < coords.size(); ++a) {
      if (a) label += ",";
      label += std::to_string(coords[a]);
    }
    uint32_t mask = c.mask_of(coords);
    std::vector<int> colors;
    for (int b = 0; b < c.palette(); ++b)
      if (mask & (uint32_t(1) << b)) colors.push_back(b);
    points[label] = colors;
  }
  doc["points"] = points;
  return doc.dump();
}

}  // namespace coarsedim
