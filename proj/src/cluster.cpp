#include "coarsedim/cluster.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace coarsedim {

Coloring Coloring::single(std::vector<int> assignment, int palette_size) {
  Coloring c;
  c.palette.resize(palette_size);
  std::iota(c.palette.begin(), c.palette.end(), 0);
  c.colors_of.reserve(assignment.size());
  for (int a : assignment) c.colors_of.push_back({a});
  return c;
}

int Coloring::colors_used() const {
  std::vector<char> seen;
  for (const auto& cs : colors_of)
    for (int c : cs) {
      if (static_cast<size_t>(c) >= seen.size()) seen.resize(c + 1, 0);
      seen[c] = 1;
    }
  return static_cast<int>(std::count(seen.begin(), seen.end(), 1));
}

std::vector<std::vector<size_t>> lambda_clusters(const FiniteMetricSpace& space,
                                                 const std::vector<size_t>& subset,
                                                 const Rat& lambda) {
  DisjointSets dsu(subset.size());
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b)
      if (space.dist(subset[a], subset[b]) <= lambda) dsu.unite(a, b);
  std::vector<std::vector<size_t>> clusters;
  std::vector<long long> slot(subset.size(), -1);
  for (size_t a = 0; a < subset.size(); ++a) {
    size_t root = dsu.find(a);
    if (slot[root] < 0) {
      slot[root] = static_cast<long long>(clusters.size());
      clusters.emplace_back();
    }
    clusters[slot[root]].push_back(subset[a]);
  }
  return clusters;
}

ValidationReport validate_coloring(const FiniteMetricSpace& space, const Coloring& coloring,
                                   const ColoringSpec& spec) {
  ValidationReport report;
  for (int color : coloring.palette) {
    std::vector<size_t> members;
    for (size_t p = 0; p < space.size(); ++p) {
      const auto& cs = coloring.colors_of[p];
      if (std::find(cs.begin(), cs.end(), color) != cs.end()) members.push_back(p);
    }
    if (members.empty()) continue;
    ++report.colors_used;
    ColorClusterReport cr;
    cr.color = color;
    auto clusters = lambda_clusters(space, members, spec.lambda);
    cr.cluster_count = clusters.size();
    cr.worst_diameter = Rat(0);
    for (auto& cluster : clusters) {
      Rat diam = subset_diameter(space, cluster);
      if (cr.worst_cluster.empty() || diam > cr.worst_diameter) {
        cr.worst_diameter = diam;
        cr.worst_cluster = cluster;
      }
    }
    cr.ok = cr.worst_diameter <= spec.D;
    if (!cr.ok) report.valid = false;
    report.per_color.push_back(std::move(cr));
  }
  return report;
}

Coloring greedy_rips_coloring(const FiniteMetricSpace& space, const Rat& lambda) {
  size_t n = space.size();
  std::vector<int> assignment(n, 0);
  int max_color = -1;
  for (size_t p = 0; p < n; ++p) {
    std::vector<char> used(n, 0);
    for (size_t q = 0; q < p; ++q)
      if (space.dist(p, q) <= lambda) used[assignment[q]] = 1;
    int c = 0;
    while (used[c]) ++c;
    assignment[p] = c;
    max_color = std::max(max_color, c);
  }
  return Coloring::single(std::move(assignment), max_color + 1);
}

namespace {

// Search state for min_colors_exact: per color, the assigned points plus a
// cluster structure that is rebuilt for the color being extended.
struct ExactSearch {
  const FiniteMetricSpace& space;
  Rat lambda, D;
  int k;
  std::vector<int> assignment;
  std::vector<std::vector<size_t>> by_color;

  ExactSearch(const FiniteMetricSpace& s, const ColoringSpec& spec, int colors)
      : space(s), lambda(spec.lambda), D(spec.D), k(colors),
        assignment(s.size(), -1), by_color(colors) {}

  bool color_feasible(int c) const {
    const auto& members = by_color[c];
    DisjointSets dsu(members.size());
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b)
        if (space.dist(members[a], members[b]) <= lambda) dsu.unite(a, b);
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b)
        if (dsu.find(a) == dsu.find(b) &&
            space.dist(members[a], members[b]) > D)
          return false;
    return true;
  }

  bool extend(size_t p, int colors_touched) {
    if (p == space.size()) return true;
    int limit = std::min(colors_touched + 1, k);
    for (int c = 0; c < limit; ++c) {
      assignment[p] = c;
      by_color[c].push_back(p);
      if (color_feasible(c) &&
          extend(p + 1, std::max(colors_touched, c + 1)))
        return true;
      by_color[c].pop_back();
      assignment[p] = -1;
    }
    return false;
  }
};

}  // namespace

MinColorsResult min_colors_exact(const FiniteMetricSpace& space, const ColoringSpec& spec,
                                 size_t cap) {
  if (space.size() > cap)
    throw ResourceLimit("min_colors_exact: space exceeds exhaustive-search cap");
  MinColorsResult result;
  if (space.size() == 0) {
    result.colors = 0;
    result.certificate = Coloring::single({}, 0);
    return result;
  }
  for (int k = 1;; ++k) {
    ExactSearch search(space, spec, k);
    if (search.extend(0, 0)) {
      result.colors = k;
      result.certificate = Coloring::single(search.assignment, k);
      return result;
    }
  }
}

void Graph::add_edge(uint32_t u, uint32_t v) {
  size_t need = std::max(u, v) + 1;
  if (need > n) {
    n = need;
    adj.resize(n);
  }
  adj[u].push_back(v);
  adj[v].push_back(u);
}

Graph graph_from_edge_list(const std::string& text) {
  Graph g;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ls(line);
    uint32_t u, v;
    if (ls >> u >> v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(size_t n) {
  Graph g;
  for (size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(size_t n) {
  Graph g;
  g.n = n;
  g.adj.resize(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "indeterminate";
  }
}

namespace {

constexpr int kUnreachable = -1;

std::vector<std::vector<int>> all_pairs_dist(const Graph& g) {
  std::vector<std::vector<int>> dist(g.n, std::vector<int>(g.n, kUnreachable));
  for (size_t s = 0; s < g.n; ++s) {
    auto& d = dist[s];
    d[s] = 0;
    std::deque<uint32_t> queue{static_cast<uint32_t>(s)};
    while (!queue.empty()) {
      uint32_t u = queue.front();
      queue.pop_front();
      for (uint32_t v : g.adj[u])
        if (d[v] == kUnreachable) {
          d[v] = d[u] + 1;
          queue.push_back(v);
        }
    }
  }
  return dist;
}

size_t boundary_size(const Graph& g, const std::vector<char>& in_set) {
  size_t count = 0;
  for (size_t v = 0; v < g.n; ++v) {
    if (in_set[v]) continue;
    for (uint32_t u : g.adj[v])
      if (in_set[u]) {
        ++count;
        break;
      }
  }
  return count;
}

bool expands(const Rat& eps, size_t boundary, size_t size) {
  // |dA| >= eps |A|, exactly.
  return Rat(static_cast<long long>(boundary)) >= eps * Rat(static_cast<long long>(size));
}

}  // namespace

PropertyPReport check_property_p(const Graph& g, int r, const Rat& eps, CheckMode mode,
                                 unsigned long long budget, uint64_t seed,
                                 unsigned long long samples) {
  PropertyPReport report;
  if (g.n == 0) return report;
  auto dist = all_pairs_dist(g);

  auto diameter_ok = [&](const std::vector<uint32_t>& members) {
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b) {
        int d = dist[members[a]][members[b]];
        if (d == kUnreachable || d > r) return false;
      }
    return true;
  };

  auto evaluate = [&](const std::vector<uint32_t>& members) -> bool {
    // Returns false when budget ran out; records a witness on violation.
    if (report.subsets_checked >= budget) return false;
    ++report.subsets_checked;
    if (members.empty() || members.size() == g.n) return true;  // excluded cases
    std::vector<char> in_set(g.n, 0);
    for (uint32_t v : members) in_set[v] = 1;
    size_t b = boundary_size(g, in_set);
    if (!expands(eps, b, members.size())) {
      report.verdict = Verdict::Fail;
      report.witness = members;
      report.witness_boundary = b;
    }
    return true;
  };

  if (mode == CheckMode::Exhaustive) {
    if (g.n > 16)
      throw std::domain_error("check_property_p: exhaustive mode limited to <= 16 vertices");
    for (uint64_t mask = 1; mask + 1 < (uint64_t(1) << g.n); ++mask) {
      std::vector<uint32_t> members;
      for (size_t v = 0; v < g.n; ++v)
        if (mask & (uint64_t(1) << v)) members.push_back(v);
      if (!diameter_ok(members)) continue;
      if (!evaluate(members)) {
        report.verdict = report.verdict == Verdict::Fail ? Verdict::Fail : Verdict::Indeterminate;
        return report;
      }
      if (report.verdict == Verdict::Fail) return report;
    }
    return report;
  }

  SplitMix64 rng(seed);
  for (unsigned long long s = 0; s < samples; ++s) {
    // Grow a random connected subset, rejecting additions that push the
    // diameter past r, then greedily shrink the boundary-to-size ratio.
    std::vector<uint32_t> members{static_cast<uint32_t>(rng.below(g.n))};
    std::vector<char> in_set(g.n, 0);
    in_set[members[0]] = 1;
    size_t target = 1 + rng.below(std::max<size_t>(g.n - 1, 1));
    size_t attempts = 4 * target + 8;
    while (members.size() < target && attempts-- > 0) {
      uint32_t host = members[rng.below(members.size())];
      if (g.adj[host].empty()) continue;
      uint32_t cand = g.adj[host][rng.below(g.adj[host].size())];
      if (in_set[cand]) continue;
      bool ok = true;
      for (uint32_t m : members) {
        int d = dist[cand][m];
        if (d == kUnreachable || d > r) { ok = false; break; }
      }
      if (!ok) continue;
      in_set[cand] = 1;
      members.push_back(cand);
    }
    if (!evaluate(members)) {
      report.verdict = report.verdict == Verdict::Fail ? Verdict::Fail : Verdict::Indeterminate;
      return report;
    }
    if (report.verdict == Verdict::Fail) return report;

    // Adversarial shrink: drop the member whose removal minimizes the ratio.
    while (members.size() > 1) {
      size_t best_idx = members.size();
      Rat best_ratio;
      size_t cur_boundary = boundary_size(g, in_set);
      Rat cur_ratio = Rat(static_cast<long long>(cur_boundary)) /
                      Rat(static_cast<long long>(members.size()));
      for (size_t i = 0; i < members.size(); ++i) {
        in_set[members[i]] = 0;
        Rat ratio = Rat(static_cast<long long>(boundary_size(g, in_set))) /
                    Rat(static_cast<long long>(members.size() - 1));
        in_set[members[i]] = 1;
        if (best_idx == members.size() || ratio < best_ratio) {
          best_idx = i;
          best_ratio = ratio;
        }
      }
      if (best_idx == members.size() || !(best_ratio < cur_ratio)) break;
      in_set[members[best_idx]] = 0;
      members.erase(members.begin() + best_idx);
      if (!evaluate(members)) {
        report.verdict =
            report.verdict == Verdict::Fail ? Verdict::Fail : Verdict::Indeterminate;
        return report;
      }
      if (report.verdict == Verdict::Fail) return report;
    }
  }
  return report;
}

Rat girth_epsilon(long long k) {
  if (k < 3) throw std::domain_error("girth_epsilon: degree must be >= 3");
  return Rat(k - 2, 2 * k);
}

namespace {

BigNat isqrt(const BigNat& n) {
  if (n.is_zero()) return BigNat();
  BigNat lo(1), hi(2);
  while (hi * hi <= n) hi = hi * BigNat(2);
  // Largest s with s*s <= n in (lo, hi].
  while (lo < hi) {
    BigNat mid = BigNat::divmod(lo + hi + BigNat(1), BigNat(2)).first;
    if (mid * mid <= n) lo = mid;
    else hi = mid - BigNat(1);
  }
  return lo;
}

}  // namespace

BigNat expansion_color_bound(const Rat& eps, long long lambda) {
  if (eps < Rat(0)) throw std::domain_error("expansion_color_bound: eps must be >= 0");
  if (lambda < 0) throw std::domain_error("expansion_color_bound: lambda must be >= 0");
  Rat base = Rat(1) + eps;
  BigNat num = BigNat::pow(BigNat(static_cast<unsigned long long>(base.num())),
                           static_cast<unsigned long long>(lambda));
  BigNat den = BigNat::pow(BigNat(static_cast<unsigned long long>(base.den())),
                           static_cast<unsigned long long>(lambda));
  if (lambda % 2 == 0) {
    // Exact rational power (1+eps)^(lambda/2) = sqrt of num/den, both squares.
    BigNat half_num = BigNat::pow(BigNat(static_cast<unsigned long long>(base.num())),
                                  static_cast<unsigned long long>(lambda / 2));
    BigNat half_den = BigNat::pow(BigNat(static_cast<unsigned long long>(base.den())),
                                  static_cast<unsigned long long>(lambda / 2));
    auto [q, rem] = BigNat::divmod(half_num, half_den);
    return rem.is_zero() ? q : q + BigNat(1);
  }
  // ceil(sqrt(num/den)): smallest m with m^2 * den >= num.
  auto [ratio, rem] = BigNat::divmod(num, den);
  BigNat n_ceil = rem.is_zero() ? ratio : ratio + BigNat(1);
  BigNat s = isqrt(n_ceil);
  if (s * s * den >= num) {
    // s could still overshoot by one when n_ceil rounded up.
    BigNat down = s.is_zero() ? BigNat() : s - BigNat(1);
    if (!s.is_zero() && down * down * den >= num) return down;
    return s;
  }
  return s + BigNat(1);
}

}  // namespace coarsedim
