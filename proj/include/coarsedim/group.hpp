#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "coarsedim/metric.hpp"

namespace coarsedim {

// A finitely generated group presented through a canonical-form oracle:
// elements are canonical strings, equal elements have equal strings.
// The generator list is closed under inversion.
struct MarkedGroup {
  std::string name;
  std::string identity;
  std::function<std::string(const std::string&, const std::string&)> mul;
  std::function<std::string(const std::string&)> inv;
  std::vector<std::string> gens;
};

struct WordBall {
  int radius = 0;
  std::vector<std::string> elements;          // BFS order, identity first
  std::vector<int> length;                    // word length per element
  std::unordered_map<std::string, size_t> index;

  bool contains(const std::string& g) const { return index.count(g) > 0; }
  int length_of(const std::string& g) const { return length.at(index.at(g)); }
};

// All elements at word length <= radius, with exact lengths (BFS layers).
WordBall word_ball_bfs(const MarkedGroup& group, int radius, size_t cap = 1000000);

// Metric-space view of a ball.  d(g,h) = |g^-1 h| when that element lies in
// the enumerated ball, absent otherwise; pairs inside the radius/2 sub-ball
// are always determined.
FiniteMetricSpace word_ball_space(const MarkedGroup& group, const WordBall& ball);

MarkedGroup make_z();
MarkedGroup make_zn(int n);
MarkedGroup make_free(int rank);

// Finite group given by a multiplication table:
// {"elements": [...], "mul": [[...]] (index table), "gens": [...]}.
MarkedGroup group_from_json_text(const std::string& text);

}  // namespace coarsedim
