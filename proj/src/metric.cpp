#include "coarsedim/metric.hpp"

#include <algorithm>

namespace coarsedim {

FiniteMetricSpace FiniteMetricSpace::dense(std::vector<std::string> labels,
                                           std::vector<std::vector<Rat>> matrix) {
  auto m = std::make_shared<std::vector<std::vector<Rat>>>(std::move(matrix));
  return FiniteMetricSpace(std::move(labels),
                           [m](size_t i, size_t j) -> std::optional<Rat> { return (*m)[i][j]; });
}

size_t FiniteMetricSpace::find(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return static_cast<size_t>(-1);
}

FiniteMetricSpace path_space(size_t n) {
  std::vector<long long> pts(n);
  for (size_t i = 0; i < n; ++i) pts[i] = static_cast<long long>(i);
  return z_subset_space(pts);
}

FiniteMetricSpace z_subset_space(const std::vector<long long>& points) {
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (auto p : points) labels.push_back(std::to_string(p));
  auto vals = std::make_shared<std::vector<long long>>(points);
  return FiniteMetricSpace(std::move(labels), [vals](size_t i, size_t j) -> std::optional<Rat> {
    long long d = (*vals)[i] - (*vals)[j];
    return Rat(d < 0 ? -d : d);
  });
}

FiniteMetricSpace shift_metric(const FiniteMetricSpace& space, const Rat& r) {
  if (r < Rat(0)) throw std::domain_error("shift_metric: r must be nonnegative");
  auto base = std::make_shared<FiniteMetricSpace>(space);
  return FiniteMetricSpace(space.labels(),
                           [base, r](size_t i, size_t j) -> std::optional<Rat> {
                             auto d = base->dist_opt(i, j);
                             if (!d) return std::nullopt;
                             return *d + r;
                           });
}

FiniteMetricSpace product_l1(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                             size_t cap) {
  if (X.size() == 0 || Y.size() == 0)
    throw std::domain_error("product_l1: both factors must be nonempty");
  if (X.size() * Y.size() > cap) throw ResourceLimit("product_l1: product exceeds cap");
  std::vector<std::string> labels;
  labels.reserve(X.size() * Y.size());
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = 0; j < Y.size(); ++j) labels.push_back(X.label(i) + "|" + Y.label(j));
  auto px = std::make_shared<FiniteMetricSpace>(X);
  auto py = std::make_shared<FiniteMetricSpace>(Y);
  size_t ny = Y.size();
  return FiniteMetricSpace(std::move(labels),
                           [px, py, ny](size_t a, size_t b) -> std::optional<Rat> {
                             auto dx = px->dist_opt(a / ny, b / ny);
                             auto dy = py->dist_opt(a % ny, b % ny);
                             if (!dx || !dy) return std::nullopt;
                             return *dx + *dy;
                           });
}

Rat space_diameter(const FiniteMetricSpace& space) {
  Rat best(0);
  for (size_t i = 0; i < space.size(); ++i)
    for (size_t j = i + 1; j < space.size(); ++j) best = std::max(best, space.dist(i, j));
  return best;
}

Rat subset_diameter(const FiniteMetricSpace& space, const std::vector<size_t>& subset) {
  Rat best(0);
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b)
      best = std::max(best, space.dist(subset[a], subset[b]));
  return best;
}

void check_metric_axioms(const FiniteMetricSpace& space) {
  size_t n = space.size();
  for (size_t i = 0; i < n; ++i) {
    if (space.dist(i, i) != Rat(0)) throw std::logic_error("dist(x,x) != 0");
    for (size_t j = i + 1; j < n; ++j) {
      if (!space.has_dist(i, j)) continue;
      if (space.dist(i, j) <= Rat(0)) throw std::logic_error("dist(x,y) <= 0 for x != y");
      if (space.dist(i, j) != space.dist(j, i)) throw std::logic_error("asymmetric distance");
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        if (!space.has_dist(i, k) || !space.has_dist(i, j) || !space.has_dist(j, k)) continue;
        if (space.dist(i, k) > space.dist(i, j) + space.dist(j, k))
          throw std::logic_error("triangle inequality violated");
      }
}

MonotoneFn MonotoneFn::identity() {
  return {[](const Rat& t) { return t; }, [](const Rat& t) { return t; }};
}

MonotoneFn MonotoneFn::affine(const Rat& a, const Rat& b) {
  if (a <= Rat(0)) throw std::domain_error("MonotoneFn::affine: slope must be positive");
  return {[a, b](const Rat& t) { return a * t + b; },
          [a, b](const Rat& t) { return (t - b) / a; }};
}

MonotoneFn MonotoneFn::power(int p) {
  if (p < 1) throw std::domain_error("MonotoneFn::power: exponent must be >= 1");
  auto ipow = [p](const Rat& t) {
    Rat r(1);
    for (int i = 0; i < p; ++i) r *= t;
    return r;
  };
  auto iroot = [p](const Rat& t) {
    if (t < Rat(0)) throw std::domain_error("power inverse: negative argument");
    auto exact_root = [p](long long v) -> std::optional<long long> {
      if (v == 0) return 0;
      auto pow_at_least = [p, v](long long m) {  // m^p >= v, overflow-safe
        __int128 acc = 1;
        for (int i = 0; i < p; ++i) {
          acc *= m;
          if (acc >= v) return true;
        }
        return acc >= v;
      };
      long long lo = 1, hi = p >= 2 ? std::min<long long>(v, 3037000499ll) : v;
      while (lo < hi) {  // smallest m with m^p >= v
        long long mid = lo + (hi - lo) / 2;
        if (pow_at_least(mid)) hi = mid;
        else lo = mid + 1;
      }
      __int128 acc = 1;
      for (int i = 0; i < p; ++i) acc *= lo;
      if (acc == v) return lo;
      return std::nullopt;
    };
    auto rn = exact_root(t.num());
    auto rd = exact_root(t.den());
    if (!rn || !rd) throw std::domain_error("power inverse: not an exact rational root");
    return Rat(*rn, *rd);
  };
  return {ipow, iroot};
}

std::pair<Rat, Rat> transfer_bound(const TransferSpec& spec, const Rat& lambda, const Rat& D) {
  if (!(lambda > spec.r) || !(D > spec.r))
    throw std::domain_error("transfer_bound: requires lambda, D > r");
  return {spec.rho2.invert(lambda), spec.rho1.invert(D)};
}

std::pair<Rat, Rat> qi_transfer(const Rat& c, const Rat& r, const Rat& c1, const Rat& r1,
                                const Rat& lambda, const Rat& D) {
  if (!(lambda > r)) throw std::domain_error("qi_transfer: requires lambda > r");
  return {(lambda - r) / c, c1 * (D + r1)};
}

QiReport check_quasi_isometry(const std::vector<QiSample>& samples, const Rat& c,
                              const Rat& c1, const Rat& r, const Rat& r1) {
  QiReport report;
  for (size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (s.dy < s.dx / c1 - r1) report.violations.push_back({i, true});
    if (s.dy > c * s.dx + r) report.violations.push_back({i, false});
    if (s.dx > Rat(0)) {
      Rat need_c = (s.dy - r) / s.dx;
      if (!report.c_needed || need_c > *report.c_needed) report.c_needed = need_c;
    }
    if (s.dy + r1 > Rat(0)) {
      Rat need_c1 = s.dx / (s.dy + r1);
      if (!report.c1_needed || need_c1 > *report.c1_needed) report.c1_needed = need_c1;
    }
  }
  return report;
}

}  // namespace coarsedim
