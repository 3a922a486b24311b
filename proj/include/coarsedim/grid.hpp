#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coarsedim/metric.hpp"

namespace coarsedim {

// An axis-aligned box of integer points with the l1 metric.  Points are
// ordered lexicographically; the last axis varies fastest.
struct GridBox {
  std::vector<long long> lo, hi;  // inclusive bounds per axis

  int dims() const { return static_cast<int>(lo.size()); }
  long long extent(int axis) const { return hi[axis] - lo[axis] + 1; }
  unsigned long long size() const {
    unsigned long long s = 1;
    for (int a = 0; a < dims(); ++a) s *= static_cast<unsigned long long>(extent(a));
    return s;
  }
  std::vector<long long> coords(unsigned long long index) const;
  unsigned long long index(const std::vector<long long>& coords) const;

  static GridBox cube(int dims, long long lo, long long hi);
};

// Small-box adapter to the generic metric-space machinery.
FiniteMetricSpace grid_space(const GridBox& box, size_t cap = 1u << 20);

// Fills one row (fixed prefix coordinates, last axis sweeping lo..hi) with
// color bitmasks: bit c set means the point carries color c.
using GridRowFiller =
    std::function<void(const std::vector<long long>& prefix, uint32_t* out)>;

GridRowFiller row_filler_from_fn(
    const GridBox& box, std::function<uint32_t(const std::vector<long long>&)> mask_of);

struct GridColorStats {
  int color = 0;
  unsigned long long clusters = 0;
  long long worst_diameter = 0;
  bool present = false;
  bool ok = true;
};

struct GridValidation {
  bool valid = true;
  int colors_used = 0;
  int min_colors_per_point = 0;
  int max_colors_per_point = 0;
  unsigned long long points = 0;
  std::vector<GridColorStats> per_color;
};

// Exact (lambda, D) validation of a (possibly multi-color) grid coloring.
// Clusters are tracked through maximal constant-color runs along the last
// axis, so boxes far beyond the dense-matrix regime stay exact.  Diameters
// use the 2^n signed linear functionals of the l1 metric; for dims > 8 only
// D == 0 is supported.
GridValidation validate_grid(const GridBox& box, const GridRowFiller& fill, int palette_size,
                             long long lambda, long long D);

}  // namespace coarsedim
