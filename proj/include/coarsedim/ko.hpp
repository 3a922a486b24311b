#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "coarsedim/bigint.hpp"
#include "coarsedim/cluster.hpp"
#include "coarsedim/grid.hpp"

namespace coarsedim {

// A coloring of a grid box in which every point carries at least m+1 of the
// m+n palette colors, with every monochromatic lambda-cluster of diameter at
// most `control`.  Colorings are functional (mask per point) so windows can
// be large.
struct KOColoring {
  int m = 0;        // surplus
  int n = 2;        // KO dimension bound; palette = m + n
  long long lambda = 1;
  long long control = 0;
  GridBox box;
  std::function<uint32_t(const std::vector<long long>&)> mask_of;

  int palette() const { return m + n; }
};

// Single-color-per-point coloring of a grid box.
struct GridColoring {
  int palette = 0;
  GridBox box;
  std::function<uint32_t(const std::vector<long long>&)> mask_of;  // one bit set
};

// Staggered-block line coloring: block b = floor(x / (lambda+1)) excludes
// color b mod (m+2).  Every point carries exactly m+1 of m+2 colors and
// every lambda-cluster has diameter < (m+1)(lambda+1) <= 2(m+1)(lambda+1).
// With `literal_rule` the printed residue rule (color i kept iff
// b != 2i+1 mod 2m+2) is used instead; it under-colors odd blocks at m = 0
// and is retained only as a regression fixture.
KOColoring ko_color_line(long long lambda, int m, long long window_lo, long long window_hi,
                         bool literal_rule = false);

struct KOValidationReport {
  bool valid = false;
  bool points_ok = false;       // every point carries >= m+1 colors
  bool clusters_ok = false;     // every cluster within control
  int min_colors_per_point = 0;
  int max_colors_per_point = 0;
  int colors_used = 0;
  long long worst_cluster_diameter = 0;
};

KOValidationReport ko_validate(const KOColoring& c);

// l1-product coloring: the color set of (x, y) is the intersection of the
// factor color sets.  Factors must be drawn at surpluses m + n_other - 1 on
// a shared palette.
KOColoring ko_product(const KOColoring& X, const KOColoring& Y);

// k-fold product of X with itself; `family` must produce X's coloring at any
// requested surplus (the product recursion consumes factors at different
// surpluses).
KOColoring ko_power(const std::function<KOColoring(int)>& family, int k, int m);

// k-fold power of the line coloring over window^k.
KOColoring ko_power_line(int k, long long lambda, int m, long long window_lo,
                         long long window_hi, bool literal_rule = false);

// One color per point, chosen by `selector` from the carried set (default:
// smallest color id).  Cluster diameters never grow.
GridColoring ko_to_single(const KOColoring& c,
                          const std::function<int(uint32_t)>& selector = nullptr);

// Plain (n+1)-coloring of a box in Z^n valid at (lambda, (4n^2-2n)(lambda+1)).
struct GridColorBound {
  GridColoring coloring;
  long long control = 0;
};
GridColorBound ko_color_grid(int n, long long lambda, long long window_lo,
                             long long window_hi);

GridValidation validate_grid_coloring(const GridColoring& c, long long lambda, long long D);

// Dense-space conversions for oracle cross-checks on small boxes.
Coloring materialize_coloring(const GridColoring& c, size_t cap = 100000);
Coloring materialize_ko(const KOColoring& c, size_t cap = 100000);

// --- coset-translation extension over Z^((Z)) (Prop-6.9-style sample check) ---

struct CosetExtendReport {
  unsigned long long samples = 0;
  unsigned long long cross_coset_pairs = 0;
  bool separation_ok = true;      // cross-coset rho-distance > lambda everywhere
  bool clusters_ok = true;        // sampled cluster diameters within d_prime
  long long d_prime = 0;
  long long worst_cluster_diameter = 0;
  int palette = 0;
  int min_colors_per_point = 0;
};

// Colors finitely supported maps Z->Z by translating the window coloring of
// Z^(2 lambda + 1) along coset representatives, validates lambda-separation
// of cosets under the restricted wreath metric and the cluster control
// D' = (2l+1) D(m + 2l n(l), l) + 4l + 1 on sampled clusters.
// A separation violation is a hard error (the construction would be unsound).
CosetExtendReport coset_extend(long long lambda, int m, unsigned long long samples,
                               uint64_t seed = 0);

// --- iterated-wreath KO upper bound (recursion a_{k+1}=4a_k, b_{k+1}=4a_k b_k) ---

struct KOBoundReport {
  int k = 0;
  long long lambda = 1;
  long long m = 0;
  BigNat a_k, b_k;
  BigNat colors;   // a_k lambda^k
  BigNat control;  // b_k (m + lambda^k) lambda^(k+1)
};

KOBoundReport bk_ko_bound(int k, long long lambda, long long m);

}  // namespace coarsedim
