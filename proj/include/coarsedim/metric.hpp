#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coarsedim/rational.hpp"

namespace coarsedim {

struct MissingDistance : std::runtime_error {
  MissingDistance() : std::runtime_error("distance not determined inside this space") {}
};

struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// A finite point set with an exact, possibly partial, distance oracle.
// Distances are rationals; a pair may be reported absent when the backing
// construction (e.g. a truncated word ball) cannot determine it exactly.
class FiniteMetricSpace {
 public:
  using DistFn = std::function<std::optional<Rat>(size_t, size_t)>;

  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<std::string> labels, DistFn fn)
      : labels_(std::move(labels)), fn_(std::move(fn)) {}

  static FiniteMetricSpace dense(std::vector<std::string> labels,
                                 std::vector<std::vector<Rat>> matrix);

  size_t size() const { return labels_.size(); }
  const std::string& label(size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<Rat> dist_opt(size_t i, size_t j) const {
    if (i == j) return Rat(0);
    return fn_(i, j);
  }
  bool has_dist(size_t i, size_t j) const { return dist_opt(i, j).has_value(); }
  Rat dist(size_t i, size_t j) const {
    auto d = dist_opt(i, j);
    if (!d) throw MissingDistance();
    return *d;
  }

  // Index of a label, or npos.
  size_t find(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  DistFn fn_;
};

// Integer path {0..n-1} inside Z.
FiniteMetricSpace path_space(size_t n);
// Arbitrary integer subset of Z.
FiniteMetricSpace z_subset_space(const std::vector<long long>& points);

// d + r on distinct points; metric axioms are preserved for r >= 0.
FiniteMetricSpace shift_metric(const FiniteMetricSpace& space, const Rat& r);

// l1 product: d((x,y),(x',y')) = d_X(x,x') + d_Y(y,y').
FiniteMetricSpace product_l1(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                             size_t cap = 1u << 20);

Rat space_diameter(const FiniteMetricSpace& space);
Rat subset_diameter(const FiniteMetricSpace& space, const std::vector<size_t>& subset);

// Throws std::logic_error naming the first violated axiom, if any.
void check_metric_axioms(const FiniteMetricSpace& space);

// A strictly monotone function R+ -> R+ carried with its inverse.
struct MonotoneFn {
  std::function<Rat(const Rat&)> apply;
  std::function<Rat(const Rat&)> invert;  // throws std::domain_error when undefined

  static MonotoneFn identity();
  static MonotoneFn affine(const Rat& a, const Rat& b);  // t -> a t + b, a > 0
  static MonotoneFn power(int p);  // t -> t^p; inverse requires an exact root
};

struct TransferSpec {
  MonotoneFn rho1, rho2;
  Rat r;  // inequalities guaranteed only for distances >= r
};

// Parameter transfer along a coarse embedding: (lambda, D) on the target
// pulls back to (rho2^-1(lambda), rho1^-1(D)) on the source.
std::pair<Rat, Rat> transfer_bound(const TransferSpec& spec, const Rat& lambda, const Rat& D);

// Affine quasi-isometric case: (lambda, D) -> ((lambda - r)/c, c1 (D + r1)).
std::pair<Rat, Rat> qi_transfer(const Rat& c, const Rat& r, const Rat& c1, const Rat& r1,
                                const Rat& lambda, const Rat& D);

struct QiSample {
  Rat dx, dy;  // distances of a sampled pair under the two metrics
};

struct QiViolation {
  size_t sample_index;
  bool lower_side;  // true: (1/c1) dx - r1 <= dy failed; false: dy <= c dx + r failed
};

struct QiReport {
  std::vector<QiViolation> violations;
  // Tightest constants that would make every sample pass with the given r, r1.
  std::optional<Rat> c_needed;   // max (dy - r)/dx over dx > 0
  std::optional<Rat> c1_needed;  // max dx/(dy + r1) over dy + r1 > 0
  bool ok() const { return violations.empty(); }
};

QiReport check_quasi_isometry(const std::vector<QiSample>& samples, const Rat& c,
                              const Rat& c1, const Rat& r, const Rat& r1);

}  // namespace coarsedim
