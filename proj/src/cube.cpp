#include "coarsedim/cube.hpp"

#include <algorithm>
#include <stdexcept>

namespace coarsedim {

size_t CubeSubset::count() const {
  size_t c = 0;
  for (uint64_t w : bits) c += __builtin_popcountll(w);
  return c;
}

std::vector<uint32_t> CubeSubset::members() const {
  std::vector<uint32_t> out;
  for (uint64_t v = 0; v < capacity(); ++v)
    if (test(v)) out.push_back(static_cast<uint32_t>(v));
  return out;
}

CubeSubset CubeSubset::of(int n, const std::vector<uint32_t>& vertices) {
  CubeSubset a(n);
  for (uint32_t v : vertices) {
    if (v >= a.capacity()) throw std::domain_error("CubeSubset: vertex out of range");
    a.set(v);
  }
  return a;
}

bool operator==(const CubeSubset& a, const CubeSubset& b) {
  return a.n == b.n && a.bits == b.bits;
}

int cube_diameter(const CubeSubset& a) {
  auto m = a.members();
  int best = 0;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j) best = std::max(best, hamming(m[i], m[j]));
  return best;
}

CubeSubset r_boundary(const CubeSubset& a, int r) {
  if (a.empty()) throw std::domain_error("r_boundary: set must be nonempty");
  if (r < 1) throw std::domain_error("r_boundary: r must be positive");
  CubeSubset reached = a;
  CubeSubset frontier = a;
  CubeSubset boundary(a.n);
  for (int step = 0; step < r; ++step) {
    CubeSubset next(a.n);
    for (uint32_t v : frontier.members())
      for (int b = 0; b < a.n; ++b) {
        uint32_t u = v ^ (uint32_t(1) << b);
        if (!reached.test(u)) {
          reached.set(u);
          next.set(u);
          boundary.set(u);
        }
      }
    frontier = next;
  }
  return boundary;
}

std::string cube_to_hex(const CubeSubset& a) {
  static const char* digits = "0123456789abcdef";
  uint64_t nibbles = (a.capacity() + 3) / 4;
  std::string out = std::to_string(a.n) + ":";
  for (uint64_t i = 0; i < nibbles; ++i) {
    unsigned val = 0;
    for (int b = 0; b < 4; ++b) {
      uint64_t v = i * 4 + b;
      if (v < a.capacity() && a.test(v)) val |= 1u << b;
    }
    out.push_back(digits[val]);
  }
  return out;
}

CubeSubset cube_from_hex(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::domain_error("cube_from_hex: missing header");
  int n = std::stoi(text.substr(0, colon));
  CubeSubset a(n);
  std::string payload = text.substr(colon + 1);
  for (uint64_t i = 0; i < payload.size(); ++i) {
    char c = payload[i];
    unsigned val = c <= '9' ? c - '0' : 10 + (c - 'a');
    for (int b = 0; b < 4; ++b)
      if ((val >> b) & 1) {
        uint64_t v = i * 4 + b;
        if (v >= a.capacity()) throw std::domain_error("cube_from_hex: payload too long");
        a.set(v);
      }
  }
  return a;
}

namespace {

// |boundary| * (r+1) >= (n - 2(r+1)) * |A|, exactly.
bool cube_expands(int n, int r, size_t boundary, size_t size) {
  long long lhs = static_cast<long long>(boundary) * (r + 1);
  long long rhs = (static_cast<long long>(n) - 2ll * (r + 1)) * static_cast<long long>(size);
  return lhs >= rhs;
}

// |boundary2| * 4 (r+2)^2 > n^2 |A|, exactly (strict).
bool boundary2_expands(int n, int r, size_t boundary2, size_t size) {
  long long lhs = static_cast<long long>(boundary2) * 4ll * (r + 2) * (r + 2);
  long long rhs = static_cast<long long>(n) * n * static_cast<long long>(size);
  return lhs > rhs;
}

using SubsetPredicate = bool (*)(int, int, size_t, size_t);

size_t boundary_count(const CubeSubset& a, int depth) {
  return r_boundary(a, depth).count();
}

CubeExpansionReport run_cube_check(int n, int r, CheckMode mode, unsigned long long budget,
                                   uint64_t seed, unsigned long long samples, int boundary_depth,
                                   SubsetPredicate pred) {
  CubeExpansionReport report;
  auto evaluate = [&](const CubeSubset& a) -> bool {
    if (report.subsets_checked >= budget) return false;
    ++report.subsets_checked;
    size_t b = boundary_count(a, boundary_depth);
    if (!pred(n, r, b, a.count())) {
      report.verdict = Verdict::Fail;
      report.witness = a;
      report.witness_boundary = b;
    }
    return true;
  };

  if (mode == CheckMode::Exhaustive) {
    if (n > 4) throw std::domain_error("cube check: exhaustive mode only for n <= 4");
    uint64_t total = uint64_t(1) << (uint64_t(1) << n);
    for (uint64_t mask = 1; mask < total; ++mask) {
      CubeSubset a(n);
      a.bits[0] = mask;
      if (cube_diameter(a) > r) continue;
      if (a.count() == a.capacity()) continue;  // whole cube: empty boundary by fiat
      if (!evaluate(a)) {
        if (report.verdict != Verdict::Fail) report.verdict = Verdict::Indeterminate;
        return report;
      }
      if (report.verdict == Verdict::Fail) return report;
    }
    return report;
  }

  SplitMix64 rng(seed);
  uint64_t vertex_count = uint64_t(1) << n;
  for (unsigned long long s = 0; s < samples; ++s) {
    // Random-walk growth with diameter rejection.
    std::vector<uint32_t> members{static_cast<uint32_t>(rng.below(vertex_count))};
    CubeSubset a(n);
    a.set(members[0]);
    size_t target = 1 + rng.below(48);
    size_t attempts = 4 * target + 8;
    while (members.size() < target && attempts-- > 0) {
      uint32_t host = members[rng.below(members.size())];
      uint32_t cand = host ^ (uint32_t(1) << rng.below(n));
      if (a.test(cand)) continue;
      bool ok = true;
      for (uint32_t m : members)
        if (hamming(cand, m) > r) { ok = false; break; }
      if (!ok) continue;
      a.set(cand);
      members.push_back(cand);
    }
    if (members.size() == vertex_count) continue;
    if (!evaluate(a)) {
      if (report.verdict != Verdict::Fail) report.verdict = Verdict::Indeterminate;
      return report;
    }
    if (report.verdict == Verdict::Fail) return report;
  }
  return report;
}

}  // namespace

CubeExpansionReport verify_cube_expansion(int n, int r, CheckMode mode,
                                          unsigned long long budget, uint64_t seed,
                                          unsigned long long samples) {
  if (r < 0) throw std::domain_error("verify_cube_expansion: r must be >= 0");
  // eps = n/(r+1) - 2 must not be negative; eps == 0 is a degenerate pass.
  Rat eps = Rat(n, r + 1) - Rat(2);
  if (eps < Rat(0))
    throw std::domain_error("verify_cube_expansion: requires n/(r+1) - 2 >= 0");
  auto report = run_cube_check(n, r, mode, budget, seed, samples, 1, &cube_expands);
  report.epsilon = eps;
  return report;
}

CubeExpansionReport verify_boundary2(int n, int r, CheckMode mode, unsigned long long budget,
                                     uint64_t seed, unsigned long long samples,
                                     bool exploratory) {
  if (r < 0) throw std::domain_error("verify_boundary2: r must be >= 0");
  if (!exploratory && (r * 4 > n || n <= 16))
    throw std::domain_error(
        "verify_boundary2: stated regime needs r <= n/4 and n > 16 (use exploratory mode)");
  auto report = run_cube_check(n, r, mode, budget, seed, samples, 2, &boundary2_expands);
  report.epsilon = Rat(static_cast<long long>(n) * n, 4ll * (r + 2) * (r + 2));
  return report;
}

CubeColoringReport cube_coloring_check(int n, const Coloring& coloring) {
  if (n > 24) throw std::domain_error("cube_coloring_check: n limited to 24");
  uint64_t vertices = uint64_t(1) << n;
  if (coloring.colors_of.size() != vertices)
    throw std::domain_error("cube_coloring_check: coloring must cover all vertices");
  CubeColoringReport report;
  report.colors_used = coloring.colors_used();

  for (int color : coloring.palette) {
    std::vector<uint32_t> members;
    for (uint64_t v = 0; v < vertices; ++v) {
      const auto& cs = coloring.colors_of[v];
      if (std::find(cs.begin(), cs.end(), color) != cs.end())
        members.push_back(static_cast<uint32_t>(v));
    }
    if (members.empty()) continue;
    // 4-clusters of this class: BFS over Hamming-<=4 neighborhoods.
    std::vector<int> member_index(vertices, -1);
    for (size_t i = 0; i < members.size(); ++i) member_index[members[i]] = static_cast<int>(i);
    DisjointSets dsu(members.size());
    // Neighborhood offsets of weight 1..4.
    std::vector<uint32_t> offsets;
    for (uint32_t x = 1; x < (uint32_t(1) << n); ++x)
      if (__builtin_popcount(x) <= 4) offsets.push_back(x);
    for (size_t i = 0; i < members.size(); ++i)
      for (uint32_t off : offsets) {
        uint32_t u = members[i] ^ off;
        if (member_index[u] >= 0) dsu.unite(i, member_index[u]);
      }
    std::vector<std::vector<uint32_t>> clusters(members.size());
    for (size_t i = 0; i < members.size(); ++i) clusters[dsu.find(i)].push_back(members[i]);
    for (auto& cluster : clusters) {
      if (cluster.size() < 2) continue;
      for (size_t i = 0; i < cluster.size(); ++i)
        for (size_t j = i + 1; j < cluster.size(); ++j) {
          int d = hamming(cluster[i], cluster[j]);
          if (16ll * d * d > n) {  // d > sqrt(n)/4
            report.satisfies = false;
            report.witness_color = color;
            report.witness_cluster = cluster;
            report.witness_diameter = d;
            return report;
          }
        }
    }
  }
  return report;
}

Coloring checker_coloring(const GridBox& box) {
  if (box.dims() == 0 || box.size() == 0)
    throw std::domain_error("checker_coloring: box must be nonempty");
  std::vector<int> assignment(box.size());
  for (unsigned long long i = 0; i < box.size(); ++i) {
    auto c = box.coords(i);
    long long sum = 0;
    for (long long x : c) sum += x;
    assignment[i] = static_cast<int>(((sum % 2) + 2) % 2);
  }
  return Coloring::single(std::move(assignment), 2);
}

GridRowFiller checker_row_filler(const GridBox& box) {
  int last = box.dims() - 1;
  long long lo = box.lo[last], hi = box.hi[last];
  return [lo, hi](const std::vector<long long>& prefix, uint32_t* out) {
    long long sum = 0;
    for (long long x : prefix) sum += x;
    for (long long z = lo; z <= hi; ++z)
      out[z - lo] = uint32_t(1) << static_cast<int>((((sum + z) % 2) + 2) % 2);
  };
}

MinColorsResult hex1_min_colors(int k, int s, const Rat& D, size_t cap) {
  GridBox board = GridBox::cube(k, 1, s);
  auto space = grid_space(board);
  return min_colors_exact(space, ColoringSpec{Rat(2), D}, cap);
}

FiniteMetricSpace cube_space(int n) {
  if (n < 0 || n > 20) throw std::domain_error("cube_space: n limited to 20");
  uint64_t vertices = uint64_t(1) << n;
  std::vector<std::string> labels;
  labels.reserve(vertices);
  for (uint64_t v = 0; v < vertices; ++v) {
    std::string s;
    for (int b = n - 1; b >= 0; --b) s.push_back(((v >> b) & 1) ? '1' : '0');
    if (s.empty()) s = "0";
    labels.push_back(s);
  }
  return FiniteMetricSpace(std::move(labels), [](size_t i, size_t j) -> std::optional<Rat> {
    return Rat(__builtin_popcountll(i ^ j));
  });
}

}  // namespace coarsedim
