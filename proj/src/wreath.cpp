#include "coarsedim/wreath.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coarsedim {

IterElem IterElem::zero(int level) {
  IterElem e;
  e.level = level;
  return e;
}

bool iter_is_identity(const IterElem& a) {
  if (a.level == 0) return a.payload == 0;
  return a.lamps.empty() && a.cursor == 0;
}

bool iter_eq(const IterElem& a, const IterElem& b) {
  if (a.level != b.level) return false;
  if (a.level == 0) return a.payload == b.payload;
  if (a.cursor != b.cursor || a.lamps.size() != b.lamps.size()) return false;
  for (size_t i = 0; i < a.lamps.size(); ++i) {
    if (a.lamps[i].first != b.lamps[i].first) return false;
    if (!iter_eq(a.lamps[i].second, b.lamps[i].second)) return false;
  }
  return true;
}

IterElem iter_mul(const IterElem& a, const IterElem& b) {
  if (a.level != b.level) throw std::domain_error("iter_mul: level mismatch");
  if (a.level == 0) {
    IterElem r;
    r.payload = a.payload + b.payload;
    return r;
  }
  IterElem r;
  r.level = a.level;
  r.cursor = a.cursor + b.cursor;
  // (f, s)(g, t) = (f * shift_s(g), s + t): merge sorted lamp lists.
  size_t i = 0, j = 0;
  while (i < a.lamps.size() || j < b.lamps.size()) {
    long long pa = i < a.lamps.size() ? a.lamps[i].first : INT64_MAX;
    long long pb = j < b.lamps.size() ? b.lamps[j].first + a.cursor : INT64_MAX;
    if (pa < pb) {
      r.lamps.push_back(a.lamps[i++]);
    } else if (pb < pa) {
      r.lamps.emplace_back(pb, b.lamps[j++].second);
    } else {
      IterElem merged = iter_mul(a.lamps[i].second, b.lamps[j].second);
      if (!iter_is_identity(merged)) r.lamps.emplace_back(pa, std::move(merged));
      ++i;
      ++j;
    }
  }
  return r;
}

IterElem iter_inv(const IterElem& a) {
  if (a.level == 0) {
    IterElem r;
    r.payload = -a.payload;
    return r;
  }
  IterElem r;
  r.level = a.level;
  r.cursor = -a.cursor;
  r.lamps.reserve(a.lamps.size());
  for (const auto& [pos, val] : a.lamps) r.lamps.emplace_back(pos - a.cursor, iter_inv(val));
  std::sort(r.lamps.begin(), r.lamps.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return r;
}

std::string iter_str(const IterElem& a) {
  if (a.level == 0) return std::to_string(a.payload);
  std::string out = "[";
  for (size_t i = 0; i < a.lamps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.lamps[i].first) + ":" + iter_str(a.lamps[i].second);
  }
  out += ";" + std::to_string(a.cursor) + "]";
  return out;
}

long long z_visiting_walk(const std::vector<long long>& positions, long long end) {
  long long lo = std::min<long long>(0, end), hi = std::max<long long>(0, end);
  for (long long p : positions) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  long long left_first = (0 - lo) + (hi - lo) + (hi - end);
  long long right_first = (hi - 0) + (hi - lo) + (end - lo);
  return std::min(left_first, right_first);
}

long long iter_norm(const IterElem& a) {
  if (a.level == 0) return a.payload < 0 ? -a.payload : a.payload;
  std::vector<long long> positions;
  positions.reserve(a.lamps.size());
  long long lamp_cost = 0;
  for (const auto& [pos, val] : a.lamps) {
    positions.push_back(pos);
    lamp_cost += iter_norm(val);
  }
  return z_visiting_walk(positions, a.cursor) + lamp_cost;
}

IterElem bk_generator(int k, int j, int sign) {
  if (j < 0 || j > k) throw std::domain_error("bk_generator: index out of range");
  if (k == 0) {
    IterElem e;
    e.payload = sign;
    return e;
  }
  IterElem e = IterElem::zero(k);
  if (j == k) {
    e.cursor = sign;
  } else {
    e.lamps.emplace_back(0, bk_generator(k - 1, j, sign));
  }
  return e;
}

bool lamp_eq(const LampElem& a, const LampElem& b) {
  return a.cursor == b.cursor && a.lit == b.lit;
}

LampElem lamp_mul(const LampElem& a, const LampElem& b) {
  LampElem r;
  r.cursor = a.cursor + b.cursor;
  // Symmetric difference of a.lit and (b.lit shifted by a.cursor).
  size_t i = 0, j = 0;
  while (i < a.lit.size() || j < b.lit.size()) {
    long long pa = i < a.lit.size() ? a.lit[i] : INT64_MAX;
    long long pb = j < b.lit.size() ? b.lit[j] + a.cursor : INT64_MAX;
    if (pa < pb) {
      r.lit.push_back(a.lit[i++]);
    } else if (pb < pa) {
      r.lit.push_back(pb);
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return r;
}

LampElem lamp_inv(const LampElem& a) {
  LampElem r;
  r.cursor = -a.cursor;
  r.lit.reserve(a.lit.size());
  for (long long p : a.lit) r.lit.push_back(p - a.cursor);
  std::sort(r.lit.begin(), r.lit.end());
  return r;
}

long long lamp_norm(const LampElem& a) {
  return z_visiting_walk(a.lit, a.cursor) + static_cast<long long>(a.lit.size());
}

std::string lamp_str(const LampElem& a) {
  std::string out = "L{";
  for (size_t i = 0; i < a.lit.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a.lit[i]);
  }
  out += "};" + std::to_string(a.cursor);
  return out;
}

long long shortest_visiting_walk(const std::vector<std::vector<long long>>& dist,
                                 size_t start, size_t end, const std::vector<size_t>& sites) {
  size_t m = sites.size();
  if (m == 0) return dist[start][end];
  if (m > 15) throw ResourceLimit("shortest_visiting_walk: support too large for subset DP");
  size_t full = (size_t(1) << m) - 1;
  std::vector<std::vector<long long>> dp(full + 1,
                                         std::vector<long long>(m, INT64_MAX / 4));
  for (size_t i = 0; i < m; ++i) dp[size_t(1) << i][i] = dist[start][sites[i]];
  for (size_t mask = 1; mask <= full; ++mask)
    for (size_t i = 0; i < m; ++i) {
      if (!(mask & (size_t(1) << i))) continue;
      long long cur = dp[mask][i];
      if (cur >= INT64_MAX / 4) continue;
      for (size_t j = 0; j < m; ++j) {
        if (mask & (size_t(1) << j)) continue;
        size_t next = mask | (size_t(1) << j);
        dp[next][j] = std::min(dp[next][j], cur + dist[sites[i]][sites[j]]);
      }
    }
  long long best = INT64_MAX;
  for (size_t i = 0; i < m; ++i)
    best = std::min(best, dp[full][i] + dist[sites[i]][end]);
  return best;
}

namespace {

std::vector<long long> parse_ll_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoll(item));
  return out;
}

}  // namespace

LampElem lamp_parse(const std::string& s) {
  auto brace = s.find('}');
  LampElem e;
  e.lit = parse_ll_list(s.substr(2, brace - 2));
  e.cursor = std::stoll(s.substr(brace + 2));
  return e;
}

IterElem iter_parse(int level, const std::string& s) {
  if (level == 0) {
    IterElem e;
    e.payload = std::stoll(s);
    return e;
  }
  IterElem e = IterElem::zero(level);
  // "[p:v,p:v;c]" with v possibly bracketed.
  size_t depth = 0, item_start = 1;
  size_t semi = std::string::npos;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (s[i] == ';' && depth == 0) semi = i;
  }
  for (size_t i = 1; i <= semi; ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if ((s[i] == ',' && depth == 0) || i == semi) {
      if (i > item_start) {
        std::string item = s.substr(item_start, i - item_start);
        auto colon = item.find(':');
        e.lamps.emplace_back(std::stoll(item.substr(0, colon)),
                             iter_parse(level - 1, item.substr(colon + 1)));
      }
      item_start = i + 1;
    }
  }
  e.cursor = std::stoll(s.substr(semi + 1, s.size() - semi - 2));
  return e;
}

MarkedGroup make_lamplighter() {
  MarkedGroup g;
  g.name = "lamplighter";
  g.identity = lamp_str(LampElem{});
  g.mul = [](const std::string& a, const std::string& b) {
    return lamp_str(lamp_mul(lamp_parse(a), lamp_parse(b)));
  };
  g.inv = [](const std::string& a) { return lamp_str(lamp_inv(lamp_parse(a))); };
  LampElem t;
  t.cursor = 1;
  LampElem tinv;
  tinv.cursor = -1;
  LampElem lamp;
  lamp.lit = {0};
  g.gens = {lamp_str(t), lamp_str(tinv), lamp_str(lamp)};
  return g;
}

MarkedGroup make_bk(int k) {
  if (k < 0 || k > 6) throw std::domain_error("make_bk: level limited to 6");
  MarkedGroup g;
  g.name = "bk:" + std::to_string(k);
  g.identity = iter_str(IterElem::zero(k));
  g.mul = [k](const std::string& a, const std::string& b) {
    return iter_str(iter_mul(iter_parse(k, a), iter_parse(k, b)));
  };
  g.inv = [k](const std::string& a) { return iter_str(iter_inv(iter_parse(k, a))); };
  for (int j = 0; j <= k; ++j) {
    g.gens.push_back(iter_str(bk_generator(k, j, 1)));
    g.gens.push_back(iter_str(bk_generator(k, j, -1)));
  }
  return g;
}

InducedMetricReport induced_metric_check(long long a, long long x, long long y) {
  // x^a, y^a: lamp values x and y at position a of Z wr Z, cursor home.
  auto place = [a](long long v) {
    IterElem e = IterElem::zero(1);
    if (v != 0) {
      IterElem base;
      base.payload = v;
      e.lamps.emplace_back(a, base);
    }
    return e;
  };
  IterElem xa = place(x), ya = place(y);
  InducedMetricReport report;
  report.lhs = iter_norm(iter_mul(iter_inv(xa), ya));
  long long diff = x < y ? y - x : x - y;
  report.rhs = diff + 2 * (a < 0 ? -a : a);
  report.equal = x != y && report.lhs == report.rhs;
  return report;
}

bool l1_lower_bound_holds(const IterElem& f, const IterElem& g) {
  IterElem diff = iter_mul(iter_inv(f), g);
  long long l1 = 0;
  for (const auto& [pos, val] : diff.lamps) l1 += iter_norm(val);
  return iter_norm(diff) >= l1;
}

IterElem dk_to_element(int k, const DkVector& v) {
  if (k == 0) {
    IterElem e;
    for (const auto& [idx, val] : v) {
      if (!idx.empty()) throw std::domain_error("dk_to_element: index arity mismatch");
      e.payload += val;
    }
    return e;
  }
  IterElem e = IterElem::zero(k);
  std::map<long long, DkVector> by_top;
  for (const auto& [idx, val] : v) {
    if (static_cast<int>(idx.size()) != k)
      throw std::domain_error("dk_to_element: index arity mismatch");
    if (val == 0) continue;
    std::vector<long long> rest(idx.begin(), idx.end() - 1);
    by_top[idx.back()][rest] = val;
  }
  for (const auto& [top, sub] : by_top) {
    IterElem child = dk_to_element(k - 1, sub);
    if (!iter_is_identity(child)) e.lamps.emplace_back(top, std::move(child));
  }
  return e;
}

long long dk_norm(int k, const DkVector& v) { return iter_norm(dk_to_element(k, v)); }

BiLipschitzReport bilipschitz_check(int k, long long r, unsigned long long pairs,
                                    uint64_t seed) {
  BiLipschitzReport report;
  report.max_ratio = Rat(0);
  SplitMix64 rng(seed);
  // Index pool: all i in Z^k with |i|_1 <= r.
  std::vector<std::vector<long long>> indices;
  std::vector<long long> cur(k, 0);
  std::function<void(int, long long)> gen = [&](int axis, long long left) {
    if (axis == k) {
      indices.push_back(cur);
      return;
    }
    for (long long v = -left; v <= left; ++v) {
      cur[axis] = v;
      gen(axis + 1, left - std::llabs(v));
      cur[axis] = 0;
    }
  };
  gen(0, r);
  for (unsigned long long s = 0; s < pairs; ++s) {
    DkVector x, y;
    int terms = 1 + static_cast<int>(rng.below(4));
    for (int t = 0; t < terms; ++t) {
      x[indices[rng.below(indices.size())]] += rng.range(-3, 3);
      y[indices[rng.below(indices.size())]] += rng.range(-3, 3);
    }
    long long l1 = 0;
    DkVector diff = x;
    for (const auto& [idx, val] : y) diff[idx] -= val;
    for (auto& [idx, val] : diff) l1 += std::llabs(val);
    long long dk = dk_norm(k, diff);
    ++report.pairs;
    if (dk < l1) report.lower_ok = false;
    if (l1 > 0) {
      Rat ratio(dk, l1);
      if (ratio > report.max_ratio) {
        report.max_ratio = ratio;
        report.worst_pair = iter_str(dk_to_element(k, diff));
      }
    }
  }
  return report;
}

QiProductReport qi_product_check(unsigned long long samples, uint64_t seed) {
  QiProductReport report;
  SplitMix64 rng(seed);
  for (unsigned long long s = 0; s < samples; ++s) {
    LampElem g;
    int lamps = static_cast<int>(rng.below(7));
    for (int i = 0; i < lamps; ++i) {
      long long p = rng.range(-5, 5);
      auto it = std::lower_bound(g.lit.begin(), g.lit.end(), p);
      if (it == g.lit.end() || *it != p) g.lit.insert(it, p);
    }
    g.cursor = rng.range(-6, 6);
    LampElem lamps_only = g;
    lamps_only.cursor = 0;
    long long whole = lamp_norm(g);
    long long split = lamp_norm(lamps_only) + std::llabs(g.cursor);
    ++report.samples;
    if (!(whole <= split && split <= 3 * whole)) ++report.violations;
  }
  return report;
}

BkBoundReport bk_lower_bound(int k, const Rat& lambda) {
  // Largest r >= 1 with lambda / (2r+1) >= 5.
  long long r = ((lambda / Rat(5) - Rat(1)) / Rat(2)).floor();
  if (r < 1) throw std::domain_error("bk_lower_bound: lambda too small (needs lambda >= 15)");
  BkBoundReport report;
  report.k = k;
  report.lambda = lambda;
  report.r = r;
  report.L = ehrhart_corrected({k, r});
  report.bound = report.L;
  if (!report.L.fits_u64())
    throw ResourceLimit("bk_lower_bound: lattice count exceeds the exact-ratio range");
  Rat L(static_cast<long long>(report.L.as_u64()));
  report.r_max_squared = L / Rat(16);
  Rat lambda_k(1);
  for (int i = 0; i < k; ++i) lambda_k *= lambda;
  report.alpha_squared = report.r_max_squared / lambda_k;
  report.beta = L / lambda_k;
  return report;
}

ZwgBoundReport zwg_lower_bound(const std::map<long long, unsigned long long>& ball_sizes,
                               const Rat& lambda) {
  long long r = (lambda / Rat(5)).floor();
  if (r < 1) throw std::domain_error("zwg_lower_bound: lambda too small (needs lambda >= 5)");
  auto it = ball_sizes.find(r);
  if (it == ball_sizes.end())
    throw std::domain_error("zwg_lower_bound: ball size missing for r=" + std::to_string(r));
  ZwgBoundReport report;
  report.r = r;
  report.ball_size = it->second;
  report.bound = it->second;
  report.ceiling_squared =
      Rat(static_cast<long long>(it->second)) / Rat(16ll * r * r);
  return report;
}

unsigned long long ball_size_z(long long r) {
  return static_cast<unsigned long long>(2 * r + 1);
}

unsigned long long ball_size_free(int rank, long long r) {
  unsigned long long total = 1, sphere = 1;
  for (long long i = 1; i <= r; ++i) {
    sphere = i == 1 ? static_cast<unsigned long long>(2 * rank)
                    : sphere * static_cast<unsigned long long>(2 * rank - 1);
    total += sphere;
  }
  return total;
}

}  // namespace coarsedim
