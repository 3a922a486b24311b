#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coarsedim/cluster.hpp"
#include "coarsedim/grid.hpp"
#include "coarsedim/rng.hpp"

namespace coarsedim {

// A subset of the binary cube {0,1}^n under the Hamming (l1) metric,
// stored as a bitset over the 2^n vertex indices.
struct CubeSubset {
  int n = 0;
  std::vector<uint64_t> bits;

  explicit CubeSubset(int dim = 0)
      : n(dim), bits(((uint64_t(1) << dim) + 63) / 64, 0) {}

  uint64_t capacity() const { return uint64_t(1) << n; }
  bool test(uint64_t v) const { return (bits[v >> 6] >> (v & 63)) & 1; }
  void set(uint64_t v) { bits[v >> 6] |= uint64_t(1) << (v & 63); }
  void reset(uint64_t v) { bits[v >> 6] &= ~(uint64_t(1) << (v & 63)); }
  size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<uint32_t> members() const;

  static CubeSubset of(int n, const std::vector<uint32_t>& vertices);
};

bool operator==(const CubeSubset& a, const CubeSubset& b);

inline int hamming(uint32_t a, uint32_t b) { return __builtin_popcount(a ^ b); }

// Max pairwise Hamming distance (0 for empty or singleton sets).
int cube_diameter(const CubeSubset& a);

// {x : 0 < d(x, A) <= r}, computed in the whole cube.
CubeSubset r_boundary(const CubeSubset& a, int r);

// Hex header "n:deadbeef..." (bits of the vertex bitset, low vertex first).
std::string cube_to_hex(const CubeSubset& a);
CubeSubset cube_from_hex(const std::string& text);

struct CubeExpansionReport {
  Verdict verdict = Verdict::Pass;
  std::optional<CubeSubset> witness;
  size_t witness_boundary = 0;
  unsigned long long subsets_checked = 0;
  Rat epsilon;
};

// |dA| >= (n/(r+1) - 2) |A| over nonempty subsets of diameter <= r.
// Exhaustive mode enumerates every subset (n <= 4); sampled mode grows
// random subsets by walk steps with diameter rejection.
CubeExpansionReport verify_cube_expansion(int n, int r, CheckMode mode,
                                          unsigned long long budget, uint64_t seed = 0,
                                          unsigned long long samples = 100000);

// Strict second-boundary bound |d2 A| > n^2 / (4 (r+2)^2) |A|.
CubeExpansionReport verify_boundary2(int n, int r, CheckMode mode,
                                     unsigned long long budget, uint64_t seed = 0,
                                     unsigned long long samples = 100000,
                                     bool exploratory = false);

struct CubeColoringReport {
  bool satisfies = true;  // no monochromatic 4-cluster of diameter > sqrt(n)/4
  int colors_used = 0;
  int witness_color = -1;
  std::vector<uint32_t> witness_cluster;
  int witness_diameter = 0;
};

// Checks one concrete coloring of the whole cube against the (4, sqrt(n)/4)
// constraint; diameter comparison d > sqrt(n)/4 is exact (16 d^2 > n).
CubeColoringReport cube_coloring_check(int n, const Coloring& coloring);

// Parity coloring of a box in Z^n; a (1,0)-coloring in two colors.
Coloring checker_coloring(const GridBox& box);
GridRowFiller checker_row_filler(const GridBox& box);

// Exact minimal color count of a (lambda=2, D)-coloring of the board
// {1..s}^k, with certificate.
MinColorsResult hex1_min_colors(int k, int s, const Rat& D, size_t cap = 64);

FiniteMetricSpace cube_space(int n);

}  // namespace coarsedim
