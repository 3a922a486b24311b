#pragma once

#include <string>

#include "coarsedim/cluster.hpp"
#include "coarsedim/cube.hpp"
#include "coarsedim/metric.hpp"
#include "coarsedim/wreath.hpp"

namespace coarsedim {

// JSON schemas used by the CLI and the witness round-trip checks.

// {"palette":[...], "points":{"<label>":[colors...]}}
std::string coloring_to_json(const FiniteMetricSpace& space, const Coloring& coloring);
Coloring coloring_from_json(const FiniteMetricSpace& space, const std::string& text);

std::string validation_to_json(const FiniteMetricSpace& space, const ValidationReport& report);
std::string validation_to_csv(const FiniteMetricSpace& space, const ValidationReport& report);

// {"n":..., "r":..., "subset":"n:hex"}
std::string cube_witness_to_json(int n, int r, const CubeSubset& subset);
struct CubeWitness {
  int n = 0, r = 0;
  CubeSubset subset;
};
CubeWitness cube_witness_from_json(const std::string& text);

// {"r":..., "epsilon":"p/q", "subset":[v...]}
std::string property_p_witness_to_json(int r, const Rat& eps,
                                       const std::vector<uint32_t>& subset);
struct PropertyPWitness {
  int r = 0;
  Rat eps;
  std::vector<uint32_t> subset;
};
PropertyPWitness property_p_witness_from_json(const std::string& text);

// {"cursor":..., "support":{"pos":"value"}} (values nested for higher levels)
std::string wreath_to_json(const IterElem& e);
std::string wreath_to_json(const LampElem& e);

// {"m":..., "n":..., "lambda":..., "control":..., "points":{"id":[colors]}}
std::string ko_to_json(const struct KOColoring& c, size_t cap = 100000);

}  // namespace coarsedim
