#include "coarsedim/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "coarsedim/cluster.hpp"

namespace coarsedim {

std::vector<long long> GridBox::coords(unsigned long long index) const {
  std::vector<long long> c(dims());
  for (int a = dims() - 1; a >= 0; --a) {
    unsigned long long e = static_cast<unsigned long long>(extent(a));
    c[a] = lo[a] + static_cast<long long>(index % e);
    index /= e;
  }
  return c;
}

unsigned long long GridBox::index(const std::vector<long long>& coords) const {
  unsigned long long idx = 0;
  for (int a = 0; a < dims(); ++a)
    idx = idx * static_cast<unsigned long long>(extent(a)) +
          static_cast<unsigned long long>(coords[a] - lo[a]);
  return idx;
}

GridBox GridBox::cube(int dims, long long lo, long long hi) {
  GridBox box;
  box.lo.assign(dims, lo);
  box.hi.assign(dims, hi);
  return box;
}

FiniteMetricSpace grid_space(const GridBox& box, size_t cap) {
  if (box.size() > cap) throw ResourceLimit("grid_space: box exceeds cap");
  std::vector<std::string> labels;
  labels.reserve(box.size());
  for (unsigned long long i = 0; i < box.size(); ++i) {
    auto c = box.coords(i);
    std::string s;
    for (size_t a = 0; a < c.size(); ++a) {
      if (a) s += ",";
      s += std::to_string(c[a]);
    }
    labels.push_back(s);
  }
  auto b = std::make_shared<GridBox>(box);
  return FiniteMetricSpace(std::move(labels), [b](size_t i, size_t j) -> std::optional<Rat> {
    auto ci = b->coords(i), cj = b->coords(j);
    long long d = 0;
    for (size_t a = 0; a < ci.size(); ++a) d += std::llabs(ci[a] - cj[a]);
    return Rat(d);
  });
}

GridRowFiller row_filler_from_fn(
    const GridBox& box, std::function<uint32_t(const std::vector<long long>&)> mask_of) {
  int last = box.dims() - 1;
  long long lo = box.lo[last], hi = box.hi[last];
  return [mask_of, last, lo, hi](const std::vector<long long>& prefix, uint32_t* out) {
    std::vector<long long> p(prefix);
    p.push_back(0);
    for (long long z = lo; z <= hi; ++z) {
      p[last] = z;
      out[z - lo] = mask_of(p);
    }
  };
}

namespace {

// Maximal constant-presence runs of one color along rows, linked within and
// across rows by chain distance <= lambda, with exact l1 diameters.
struct AtomScan {
  const GridBox& box;
  int dims, last;
  long long row_len;
  unsigned long long row_count;
  std::vector<unsigned long long> atom_row_start;  // CSR over rows
  std::vector<uint32_t> starts, ends;              // offsets inside the row

  explicit AtomScan(const GridBox& b)
      : box(b), dims(b.dims()), last(b.dims() - 1), row_len(b.extent(last)) {
    row_count = 1;
    for (int a = 0; a < last; ++a)
      row_count *= static_cast<unsigned long long>(box.extent(a));
    atom_row_start.assign(row_count + 1, 0);
  }

  std::vector<long long> row_coords(unsigned long long row) const {
    std::vector<long long> c(last);
    for (int a = last - 1; a >= 0; --a) {
      unsigned long long e = static_cast<unsigned long long>(box.extent(a));
      c[a] = box.lo[a] + static_cast<long long>(row % e);
      row /= e;
    }
    return c;
  }

  bool row_id_of(const std::vector<long long>& coords, unsigned long long* out) const {
    unsigned long long id = 0;
    for (int a = 0; a < last; ++a) {
      if (coords[a] < box.lo[a] || coords[a] > box.hi[a]) return false;
      id = id * static_cast<unsigned long long>(box.extent(a)) +
           static_cast<unsigned long long>(coords[a] - box.lo[a]);
    }
    *out = id;
    return true;
  }
};

// All nonzero prefix offsets with |delta|_1 <= lambda whose first nonzero
// entry is positive (each unordered row pair is visited once).
void enumerate_prefix_offsets(int axes, long long lambda,
                              std::vector<std::pair<std::vector<long long>, long long>>* out) {
  std::vector<long long> delta(axes, 0);
  std::function<void(int, long long, bool)> rec = [&](int axis, long long left, bool fixed_pos) {
    if (axis == axes) {
      if (fixed_pos) out->push_back({delta, lambda - left});
      return;
    }
    for (long long v = fixed_pos ? -left : 0; v <= left; ++v) {
      if (!fixed_pos && v == 0) {
        delta[axis] = 0;
        rec(axis + 1, left, false);
        continue;
      }
      delta[axis] = v;
      rec(axis + 1, left - std::llabs(v), fixed_pos || v > 0);
      delta[axis] = 0;
    }
  };
  rec(0, lambda, false);
}

}  // namespace

GridValidation validate_grid(const GridBox& box, const GridRowFiller& fill, int palette_size,
                             long long lambda, long long D) {
  if (palette_size > 32) throw std::domain_error("validate_grid: palette limited to 32 colors");
  if (box.dims() > 8 && D != 0)
    throw std::domain_error("validate_grid: exact diameters supported up to 8 axes");
  GridValidation report;
  report.points = box.size();
  report.min_colors_per_point = palette_size + 1;
  report.max_colors_per_point = 0;

  AtomScan scan(box);
  std::vector<uint32_t> row(scan.row_len);
  uint32_t used_mask = 0;

  // Point-level pass: colors per point, palette usage.
  {
    std::vector<long long> prefix;
    for (unsigned long long r = 0; r < scan.row_count; ++r) {
      prefix = scan.row_coords(r);
      fill(prefix, row.data());
      for (long long z = 0; z < scan.row_len; ++z) {
        int k = __builtin_popcount(row[z]);
        report.min_colors_per_point = std::min(report.min_colors_per_point, k);
        report.max_colors_per_point = std::max(report.max_colors_per_point, k);
        used_mask |= row[z];
      }
    }
  }
  report.colors_used = __builtin_popcount(used_mask);

  auto prefix_offsets = std::make_shared<
      std::vector<std::pair<std::vector<long long>, long long>>>();
  enumerate_prefix_offsets(scan.last, lambda, prefix_offsets.get());

  for (int color = 0; color < palette_size; ++color) {
    GridColorStats stats;
    stats.color = color;
    if (!(used_mask & (1u << color))) {
      report.per_color.push_back(stats);
      continue;
    }
    stats.present = true;

    // Run extraction for this color.
    scan.starts.clear();
    scan.ends.clear();
    for (unsigned long long r = 0; r < scan.row_count; ++r) {
      auto prefix = scan.row_coords(r);
      fill(prefix, row.data());
      long long z = 0;
      while (z < scan.row_len) {
        if (!(row[z] & (1u << color))) { ++z; continue; }
        long long start = z;
        while (z < scan.row_len && (row[z] & (1u << color))) ++z;
        scan.starts.push_back(static_cast<uint32_t>(start));
        scan.ends.push_back(static_cast<uint32_t>(z - 1));
      }
      scan.atom_row_start[r + 1] = scan.starts.size();
    }
    size_t atom_count = scan.starts.size();
    DisjointSets dsu(atom_count);
    bool any_union = false;
    long long max_run = 0;
    for (size_t i = 0; i < atom_count; ++i)
      max_run = std::max(max_run, static_cast<long long>(scan.ends[i] - scan.starts[i]));

    // In-row links.
    for (unsigned long long r = 0; r < scan.row_count; ++r) {
      for (auto i = scan.atom_row_start[r] + 1; i < scan.atom_row_start[r + 1]; ++i)
        if (static_cast<long long>(scan.starts[i]) - scan.ends[i - 1] <= lambda)
          any_union |= dsu.unite(i - 1, i);
    }
    // Cross-row links.
    std::vector<long long> ncoords(scan.last);
    for (unsigned long long r = 0; r < scan.row_count; ++r) {
      if (scan.atom_row_start[r] == scan.atom_row_start[r + 1]) continue;
      auto coords = scan.row_coords(r);
      for (const auto& [delta, dist] : *prefix_offsets) {
        for (int a = 0; a < scan.last; ++a) ncoords[a] = coords[a] + delta[a];
        unsigned long long nr;
        if (!scan.row_id_of(ncoords, &nr)) continue;
        long long slack = lambda - dist;
        auto i = scan.atom_row_start[r], iend = scan.atom_row_start[r + 1];
        auto j = scan.atom_row_start[nr], jend = scan.atom_row_start[nr + 1];
        while (i < iend && j < jend) {
          long long gap_ij = static_cast<long long>(scan.starts[j]) - scan.ends[i];
          long long gap_ji = static_cast<long long>(scan.starts[i]) - scan.ends[j];
          if (gap_ij > slack) { ++i; continue; }
          if (gap_ji > slack) { ++j; continue; }
          any_union |= dsu.unite(i, j);
          // Advance whichever run ends first; the other may still touch more.
          if (scan.ends[i] <= scan.ends[j]) ++i;
          else ++j;
        }
      }
    }

    // Diameters.
    if (box.dims() > 8) {
      // D == 0 regime: a union or a multi-point run means some positive diameter.
      stats.worst_diameter = any_union ? std::max(max_run, 1ll) : max_run;
      std::unordered_map<size_t, char> roots;
      for (size_t i = 0; i < atom_count; ++i) roots[dsu.find(i)] = 1;
      stats.clusters = roots.size();
    } else {
      int sigmas = 1 << box.dims();
      int prefix_sigmas = 1 << scan.last;
      std::unordered_map<size_t, size_t> root_slot;
      std::vector<long long> agg_max, agg_min;
      std::vector<long long> pd(prefix_sigmas);
      size_t cursor = 0;
      for (unsigned long long r = 0; r < scan.row_count; ++r) {
        if (scan.atom_row_start[r] == scan.atom_row_start[r + 1]) continue;
        auto coords = scan.row_coords(r);
        for (int sp = 0; sp < prefix_sigmas; ++sp) {
          long long dot = 0;
          for (int a = 0; a < scan.last; ++a)
            dot += ((sp >> a) & 1) ? coords[a] : -coords[a];
          pd[sp] = dot;
        }
        for (; cursor < scan.atom_row_start[r + 1]; ++cursor) {
          size_t root = dsu.find(cursor);
          auto [it, fresh] = root_slot.try_emplace(root, root_slot.size());
          if (fresh) {
            agg_max.resize(root_slot.size() * sigmas, INT64_MIN);
            agg_min.resize(root_slot.size() * sigmas, INT64_MAX);
          }
          size_t base = it->second * sigmas;
          long long a = box.lo[scan.last] + scan.starts[cursor];
          long long b = box.lo[scan.last] + scan.ends[cursor];
          for (int sp = 0; sp < prefix_sigmas; ++sp) {
            // last-axis sign +1
            long long hi2 = pd[sp] + b, lo2 = pd[sp] + a;
            size_t s = base + static_cast<size_t>(sp) * 2 + 1;
            agg_max[s] = std::max(agg_max[s], hi2);
            agg_min[s] = std::min(agg_min[s], lo2);
            // last-axis sign -1
            hi2 = pd[sp] - a;
            lo2 = pd[sp] - b;
            s = base + static_cast<size_t>(sp) * 2;
            agg_max[s] = std::max(agg_max[s], hi2);
            agg_min[s] = std::min(agg_min[s], lo2);
          }
        }
      }
      stats.clusters = root_slot.size();
      long long worst = 0;
      for (size_t slot = 0; slot < root_slot.size(); ++slot)
        for (int s = 0; s < sigmas; ++s)
          worst = std::max(worst, agg_max[slot * sigmas + s] - agg_min[slot * sigmas + s]);
      stats.worst_diameter = worst;
    }
    stats.ok = stats.worst_diameter <= D;
    if (!stats.ok) report.valid = false;
    report.per_color.push_back(std::move(stats));
  }
  return report;
}

}  // namespace coarsedim
