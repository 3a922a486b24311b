#include "coarsedim/ko.hpp"

#include <algorithm>
#include <stdexcept>

#include "coarsedim/wreath.hpp"

namespace coarsedim {

namespace {

long long floor_div(long long x, long long d) {
  long long q = x / d;
  if (x % d != 0 && ((x < 0) != (d < 0))) --q;
  return q;
}

long long pos_mod(long long x, long long d) {
  long long r = x % d;
  return r < 0 ? r + d : r;
}

}  // namespace

KOColoring ko_color_line(long long lambda, int m, long long window_lo, long long window_hi,
                         bool literal_rule) {
  if (lambda < 1) throw std::domain_error("ko_color_line: lambda must be a positive integer");
  if (m < 0) throw std::domain_error("ko_color_line: m must be >= 0");
  if (window_hi < window_lo) throw std::domain_error("ko_color_line: empty window");
  KOColoring c;
  c.m = m;
  c.n = 2;
  c.lambda = lambda;
  c.control = 2ll * (m + 1) * (lambda + 1);
  c.box.lo = {window_lo};
  c.box.hi = {window_hi};
  int palette = m + 2;
  if (!literal_rule) {
    c.mask_of = [lambda, palette](const std::vector<long long>& p) {
      long long block = floor_div(p[0], lambda + 1);
      int excluded = static_cast<int>(pos_mod(block, palette));
      return ((uint32_t(1) << palette) - 1u) & ~(uint32_t(1) << excluded);
    };
  } else {
    c.mask_of = [lambda, m, palette](const std::vector<long long>& p) {
      long long block = floor_div(p[0], lambda + 1);
      uint32_t mask = 0;
      for (int i = 0; i < palette; ++i)
        if (pos_mod(block, 2ll * m + 2) != pos_mod(2ll * i + 1, 2ll * m + 2))
          mask |= uint32_t(1) << i;
      return mask;
    };
  }
  return c;
}

KOValidationReport ko_validate(const KOColoring& c) {
  KOValidationReport report;
  auto fill = row_filler_from_fn(c.box, c.mask_of);
  auto grid = validate_grid(c.box, fill, c.palette(), c.lambda, c.control);
  report.min_colors_per_point = grid.min_colors_per_point;
  report.max_colors_per_point = grid.max_colors_per_point;
  report.colors_used = grid.colors_used;
  report.points_ok = grid.min_colors_per_point >= c.m + 1;
  report.clusters_ok = grid.valid;
  for (const auto& pc : grid.per_color)
    report.worst_cluster_diameter = std::max(report.worst_cluster_diameter, pc.worst_diameter);
  report.valid = report.points_ok && report.clusters_ok;
  return report;
}

KOColoring ko_product(const KOColoring& X, const KOColoring& Y) {
  if (X.lambda != Y.lambda) throw std::domain_error("ko_product: lambda mismatch");
  if (X.palette() != Y.palette())
    throw std::domain_error("ko_product: factor palettes must coincide");
  if (X.m - (Y.n - 1) != Y.m - (X.n - 1))
    throw std::domain_error("ko_product: factor surpluses inconsistent");
  int m = X.m - (Y.n - 1);
  if (m < 0) throw std::domain_error("ko_product: factors drawn at too small a surplus");
  KOColoring c;
  c.m = m;
  c.n = X.n + Y.n - 1;
  c.lambda = X.lambda;
  c.control = X.control + Y.control;
  c.box.lo = X.box.lo;
  c.box.hi = X.box.hi;
  c.box.lo.insert(c.box.lo.end(), Y.box.lo.begin(), Y.box.lo.end());
  c.box.hi.insert(c.box.hi.end(), Y.box.hi.begin(), Y.box.hi.end());
  int dx = X.box.dims();
  auto fx = X.mask_of;
  auto fy = Y.mask_of;
  c.mask_of = [fx, fy, dx](const std::vector<long long>& p) {
    std::vector<long long> left(p.begin(), p.begin() + dx);
    std::vector<long long> right(p.begin() + dx, p.end());
    return fx(left) & fy(right);
  };
  return c;
}

KOColoring ko_power(const std::function<KOColoring(int)>& family, int k, int m) {
  if (k < 1) throw std::domain_error("ko_power: k must be >= 1");
  if (k == 1) return family(m);
  KOColoring left = ko_power(family, k - 1, m + 1);
  KOColoring right = family(m + k - 1);
  return ko_product(left, right);
}

KOColoring ko_power_line(int k, long long lambda, int m, long long window_lo,
                         long long window_hi, bool literal_rule) {
  auto family = [lambda, window_lo, window_hi, literal_rule](int surplus) {
    return ko_color_line(lambda, surplus, window_lo, window_hi, literal_rule);
  };
  return ko_power(family, k, m);
}

GridColoring ko_to_single(const KOColoring& c, const std::function<int(uint32_t)>& selector) {
  GridColoring single;
  single.palette = c.palette();
  single.box = c.box;
  auto mask_of = c.mask_of;
  if (selector) {
    single.mask_of = [mask_of, selector](const std::vector<long long>& p) {
      uint32_t mask = mask_of(p);
      if (mask == 0) throw std::logic_error("ko_to_single: point without colors");
      return uint32_t(1) << selector(mask);
    };
  } else {
    single.mask_of = [mask_of](const std::vector<long long>& p) {
      uint32_t mask = mask_of(p);
      if (mask == 0) throw std::logic_error("ko_to_single: point without colors");
      return mask & ~(mask - 1);  // lowest set bit = smallest color id
    };
  }
  return single;
}

GridColorBound ko_color_grid(int n, long long lambda, long long window_lo,
                             long long window_hi) {
  if (n < 1) throw std::domain_error("ko_color_grid: n must be >= 1");
  GridColorBound out;
  out.control = (4ll * n * n - 2ll * n) * (lambda + 1);
  out.coloring = ko_to_single(ko_power_line(n, lambda, 0, window_lo, window_hi));
  return out;
}

GridValidation validate_grid_coloring(const GridColoring& c, long long lambda, long long D) {
  auto fill = row_filler_from_fn(c.box, c.mask_of);
  return validate_grid(c.box, fill, c.palette, lambda, D);
}

namespace {

std::vector<std::vector<int>> masks_to_lists(const GridBox& box,
                                             const std::function<uint32_t(const std::vector<long long>&)>& fn,
                                             int palette, size_t cap) {
  if (box.size() > cap) throw ResourceLimit("materialize: box exceeds cap");
  std::vector<std::vector<int>> lists;
  lists.reserve(box.size());
  for (unsigned long long i = 0; i < box.size(); ++i) {
    uint32_t mask = fn(box.coords(i));
    std::vector<int> cs;
    for (int c = 0; c < palette; ++c)
      if (mask & (uint32_t(1) << c)) cs.push_back(c);
    lists.push_back(std::move(cs));
  }
  return lists;
}

}  // namespace

Coloring materialize_coloring(const GridColoring& c, size_t cap) {
  Coloring out;
  out.palette.resize(c.palette);
  std::iota(out.palette.begin(), out.palette.end(), 0);
  out.colors_of = masks_to_lists(c.box, c.mask_of, c.palette, cap);
  return out;
}

Coloring materialize_ko(const KOColoring& c, size_t cap) {
  Coloring out;
  out.palette.resize(c.palette());
  std::iota(out.palette.begin(), out.palette.end(), 0);
  out.colors_of = masks_to_lists(c.box, c.mask_of, c.palette(), cap);
  return out;
}

CosetExtendReport coset_extend(long long lambda, int m, unsigned long long samples,
                               uint64_t seed) {
  if (lambda < 1) throw std::domain_error("coset_extend: lambda must be >= 1");
  CosetExtendReport report;
  // Window coloring of Z^(2 lambda + 1): every axis carries the line coloring
  // at surplus m + 2 lambda, palette m + 2 lambda + 2.
  int axis_surplus = m + static_cast<int>(2 * lambda);
  int palette = axis_surplus + 2;
  report.palette = palette;
  auto line = ko_color_line(lambda, axis_surplus, -lambda, lambda);
  // D' = (2l+1) D(m + 2l n(l), l) + 4l + 1 with n(l) = 2, D(m,l) = 2(m+1)(l+1).
  report.d_prime = (2 * lambda + 1) * 2 * (m + 4 * lambda + 1) * (lambda + 1) + 4 * lambda + 1;

  using Config = std::map<long long, long long>;  // finitely supported Z -> Z
  auto color_mask = [&](const Config& g) {
    uint32_t mask = (uint32_t(1) << palette) - 1u;
    for (long long p = -lambda; p <= lambda; ++p) {
      auto it = g.find(p);
      long long v = it == g.end() ? 0 : it->second;
      mask &= line.mask_of({v});
    }
    return mask;
  };
  auto rho = [](const Config& a, const Config& b) {
    IterElem e = IterElem::zero(1);
    Config diff = b;
    for (const auto& [p, v] : a) diff[p] -= v;
    for (const auto& [p, v] : diff) {
      if (v == 0) continue;
      IterElem base;
      base.payload = v;
      e.lamps.emplace_back(p, base);
    }
    std::sort(e.lamps.begin(), e.lamps.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return iter_norm(e);
  };

  SplitMix64 rng(seed);
  std::vector<Config> pool;
  long long span = lambda + 2;
  for (unsigned long long s = 0; s < samples; ++s) {
    Config g;
    int terms = static_cast<int>(rng.below(4));
    for (int t = 0; t < terms; ++t) {
      long long pos = rng.range(-span, span);
      long long val = rng.range(-3, 3);
      if (val != 0) g[pos] += val;
    }
    for (auto it = g.begin(); it != g.end();)
      it = it->second == 0 ? g.erase(it) : std::next(it);
    pool.push_back(std::move(g));
  }
  report.samples = pool.size();

  report.min_colors_per_point = palette + 1;
  for (const auto& g : pool) {
    int colors = __builtin_popcount(color_mask(g));
    report.min_colors_per_point = std::min(report.min_colors_per_point, colors);
  }

  auto coset_key = [lambda](const Config& g) {
    Config outside;
    for (const auto& [p, v] : g)
      if (p < -lambda || p > lambda) outside[p] = v;
    return outside;
  };
  // Lambda-separation across cosets under rho.
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) {
      if (coset_key(pool[i]) == coset_key(pool[j])) continue;
      ++report.cross_coset_pairs;
      if (rho(pool[i], pool[j]) <= lambda) {
        report.separation_ok = false;
        throw std::logic_error("coset_extend: coset separation violated");
      }
    }

  // Per-color clusters among the sampled elements under rho.
  for (int color = 0; color < palette; ++color) {
    std::vector<size_t> members;
    for (size_t i = 0; i < pool.size(); ++i)
      if (color_mask(pool[i]) & (uint32_t(1) << color)) members.push_back(i);
    if (members.empty()) continue;
    DisjointSets dsu(members.size());
    std::vector<std::vector<long long>> d(members.size(),
                                          std::vector<long long>(members.size(), 0));
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b) {
        d[a][b] = d[b][a] = rho(pool[members[a]], pool[members[b]]);
        if (d[a][b] <= lambda) dsu.unite(a, b);
      }
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b)
        if (dsu.find(a) == dsu.find(b))
          report.worst_cluster_diameter = std::max(report.worst_cluster_diameter, d[a][b]);
  }
  report.clusters_ok = report.worst_cluster_diameter <= report.d_prime;
  return report;
}

KOBoundReport bk_ko_bound(int k, long long lambda, long long m) {
  if (k < 0) throw std::domain_error("bk_ko_bound: k must be >= 0");
  if (lambda < 1) throw std::domain_error("bk_ko_bound: lambda must be >= 1");
  if (m < 0) throw std::domain_error("bk_ko_bound: m must be >= 0");
  KOBoundReport report;
  report.k = k;
  report.lambda = lambda;
  report.m = m;
  // Base constants from the line coloring: D_0(m, l) = 2(m+1)(l+1) <= 4(m+1)l
  // for l >= 1, so a_0 = 2, b_0 = 4; then a_{k+1} = 4 a_k, b_{k+1} = 4 a_k b_k.
  BigNat a(2), b(4);
  for (int i = 0; i < k; ++i) {
    BigNat na = BigNat(4) * a;
    BigNat nb = BigNat(4) * a * b;
    a = na;
    b = nb;
  }
  report.a_k = a;
  report.b_k = b;
  BigNat lk = BigNat::pow(BigNat(static_cast<unsigned long long>(lambda)), k);
  BigNat lk1 = lk * BigNat(static_cast<unsigned long long>(lambda));
  report.colors = a * lk;
  report.control = b * (BigNat(static_cast<unsigned long long>(m)) + lk) * lk1;
  return report;
}

}  // namespace coarsedim
