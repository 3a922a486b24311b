#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "coarsedim/bigint.hpp"
#include "coarsedim/metric.hpp"
#include "coarsedim/rng.hpp"

namespace coarsedim {

struct DisjointSets {
  std::vector<size_t> parent;

  explicit DisjointSets(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), size_t{0});
  }
  size_t find(size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// A coloring where each point carries a nonempty set of color ids from the
// palette.  Single-color colorings are the size-one special case.
struct Coloring {
  std::vector<int> palette;
  std::vector<std::vector<int>> colors_of;  // per point index of the space

  static Coloring single(std::vector<int> assignment, int palette_size);
  int colors_used() const;
};

struct ColoringSpec {
  Rat lambda;
  Rat D;
};

// Maximal lambda-clusters of `subset`: parts are lambda-connected inside the
// subset and pairwise more than lambda apart.
std::vector<std::vector<size_t>> lambda_clusters(const FiniteMetricSpace& space,
                                                 const std::vector<size_t>& subset,
                                                 const Rat& lambda);

struct ColorClusterReport {
  int color = 0;
  size_t cluster_count = 0;
  Rat worst_diameter;
  std::vector<size_t> worst_cluster;
  bool ok = true;
};

struct ValidationReport {
  bool valid = true;
  int colors_used = 0;
  std::vector<ColorClusterReport> per_color;
};

ValidationReport validate_coloring(const FiniteMetricSpace& space, const Coloring& coloring,
                                   const ColoringSpec& spec);

// Greedy proper coloring of the lambda-Rips graph; every monochromatic
// lambda-cluster is a singleton, colors used <= maxdeg + 1.
Coloring greedy_rips_coloring(const FiniteMetricSpace& space, const Rat& lambda);

struct MinColorsResult {
  int colors = 0;
  Coloring certificate;
};

// Smallest k admitting a single-color-per-point (lambda, D)-coloring in k
// colors, by branch and bound with color-index symmetry breaking.
MinColorsResult min_colors_exact(const FiniteMetricSpace& space, const ColoringSpec& spec,
                                 size_t cap = 64);

// --- small-set expansion checks (property P_r(eps)) ---

struct Graph {
  size_t n = 0;
  std::vector<std::vector<uint32_t>> adj;

  void add_edge(uint32_t u, uint32_t v);
};

Graph graph_from_edge_list(const std::string& text);
Graph cycle_graph(size_t n);
Graph complete_graph(size_t n);

enum class Verdict { Pass, Fail, Indeterminate };
const char* verdict_name(Verdict v);

struct PropertyPReport {
  Verdict verdict = Verdict::Pass;
  std::vector<uint32_t> witness;  // violating subset when verdict == Fail
  size_t witness_boundary = 0;
  unsigned long long subsets_checked = 0;
};

enum class CheckMode { Exhaustive, Sampled };

// Verifies |boundary(A)| >= eps |A| for subsets A of diameter <= r
// (diameter measured in the graph metric; A = V excluded).
PropertyPReport check_property_p(const Graph& g, int r, const Rat& eps, CheckMode mode,
                                 unsigned long long budget, uint64_t seed = 0,
                                 unsigned long long samples = 20000);

// Expansion epsilon available from girth: (k-2)/(2k) for minimal degree k.
Rat girth_epsilon(long long k);

// ceil((1+eps)^(lambda/2)): a lower bound for the color count of any
// (lambda,.)-coloring of a graph with property P_r(eps) for large r.
BigNat expansion_color_bound(const Rat& eps, long long lambda);

}  // namespace coarsedim
