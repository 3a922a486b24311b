#include "coarsedim/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace coarsedim {

Tree caret(Tree left, Tree right) {
  int leaves = tree_leaves(left) + tree_leaves(right);
  return std::make_shared<const TreeNode>(TreeNode{std::move(left), std::move(right), leaves});
}

bool tree_eq(const Tree& a, const Tree& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->leaf_count != b->leaf_count) return false;
  return tree_eq(a->left, b->left) && tree_eq(a->right, b->right);
}

int forest_leaves(const Forest& f) {
  int total = 0;
  for (const auto& t : f) total += tree_leaves(t);
  return total;
}

int forest_carets(const Forest& f) { return forest_leaves(f) - static_cast<int>(f.size()); }

bool diagram_eq(const Diagram& a, const Diagram& b) {
  if (a.top.size() != b.top.size() || a.bottom.size() != b.bottom.size()) return false;
  for (size_t i = 0; i < a.top.size(); ++i)
    if (!tree_eq(a.top[i], b.top[i])) return false;
  for (size_t i = 0; i < a.bottom.size(); ++i)
    if (!tree_eq(a.bottom[i], b.bottom[i])) return false;
  return true;
}

Diagram trivial_diagram(int p) {
  Diagram d;
  d.top.assign(p, leaf());
  d.bottom.assign(p, leaf());
  return d;
}

Diagram cell_diagram() {
  Diagram d;
  d.top = {caret(leaf(), leaf())};
  d.bottom = {leaf(), leaf()};
  return d;
}

Diagram add(const Diagram& a, const Diagram& b) {
  Diagram d = a;
  d.top.insert(d.top.end(), b.top.begin(), b.top.end());
  d.bottom.insert(d.bottom.end(), b.bottom.begin(), b.bottom.end());
  return d;
}

Diagram inv(const Diagram& a) {
  Diagram d;
  d.top = a.bottom;
  d.bottom = a.top;
  return d;
}

namespace {

Tree tree_union(const Tree& a, const Tree& b) {
  if (!a) return b;
  if (!b) return a;
  return caret(tree_union(a->left, b->left), tree_union(a->right, b->right));
}

// `full` refines `base`: collect the subtree of `full` hanging below each
// leaf of `base`, in leaf order.
void extract_extensions(const Tree& base, const Tree& full, std::vector<Tree>* out) {
  if (!base) {
    out->push_back(full);
    return;
  }
  extract_extensions(base->left, full->left, out);
  extract_extensions(base->right, full->right, out);
}

Tree graft_tree(const Tree& t, const std::vector<Tree>& grafts, size_t* cursor) {
  if (!t) return grafts[(*cursor)++];
  Tree l = graft_tree(t->left, grafts, cursor);
  Tree r = graft_tree(t->right, grafts, cursor);
  if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
  return caret(l, r);
}

Forest graft_forest(const Forest& f, const std::vector<Tree>& grafts) {
  Forest out;
  out.reserve(f.size());
  size_t cursor = 0;
  for (const auto& t : f) out.push_back(graft_tree(t, grafts, &cursor));
  return out;
}

// Leaf indices whose caret has two leaf children (candidate dipole halves).
void caret_positions(const Tree& t, int* counter, std::vector<int>* out) {
  if (!t) {
    ++*counter;
    return;
  }
  if (!t->left && !t->right) {
    out->push_back(*counter);
    *counter += 2;
    return;
  }
  caret_positions(t->left, counter, out);
  caret_positions(t->right, counter, out);
}

std::vector<int> forest_caret_positions(const Forest& f) {
  std::vector<int> out;
  int counter = 0;
  for (const auto& t : f) caret_positions(t, &counter, &out);
  return out;
}

Tree remove_caret(const Tree& t, int* counter, int pos) {
  if (!t) {
    ++*counter;
    return t;
  }
  if (!t->left && !t->right) {
    if (*counter == pos) {
      *counter += 2;
      return leaf();
    }
    *counter += 2;
    return t;
  }
  Tree l = remove_caret(t->left, counter, pos);
  Tree r = remove_caret(t->right, counter, pos);
  if (l.get() == t->left.get() && r.get() == t->right.get()) return t;
  return caret(l, r);
}

Forest forest_remove_caret(const Forest& f, int pos) {
  Forest out;
  out.reserve(f.size());
  int counter = 0;
  for (const auto& t : f) out.push_back(remove_caret(t, &counter, pos));
  return out;
}

}  // namespace

Diagram reduce(Diagram d, SplitMix64* rng) {
  while (true) {
    auto top_pos = forest_caret_positions(d.top);
    auto bottom_pos = forest_caret_positions(d.bottom);
    std::vector<int> common;
    std::set_intersection(top_pos.begin(), top_pos.end(), bottom_pos.begin(),
                          bottom_pos.end(), std::back_inserter(common));
    if (common.empty()) return d;
    int pick = rng ? common[rng->below(common.size())] : common.front();
    d.top = forest_remove_caret(d.top, pick);
    d.bottom = forest_remove_caret(d.bottom, pick);
  }
}

Diagram compose(const Diagram& a, const Diagram& b) {
  if (a.bottom_roots() != b.top_roots())
    throw std::domain_error("compose: bottom label of the first diagram does not match "
                            "the top label of the second");
  std::vector<Tree> ext_a, ext_b;
  for (size_t i = 0; i < a.bottom.size(); ++i) {
    Tree common = tree_union(a.bottom[i], b.top[i]);
    extract_extensions(a.bottom[i], common, &ext_a);
    extract_extensions(b.top[i], common, &ext_b);
  }
  Diagram out;
  out.top = graft_forest(a.top, ext_a);
  out.bottom = graft_forest(b.bottom, ext_b);
  return out;
}

Diagram mul(const Diagram& a, const Diagram& b) { return reduce(compose(a, b)); }

Diagram gen_x0() {
  Tree right_vine = caret(leaf(), caret(leaf(), leaf()));
  Tree left_vine = caret(caret(leaf(), leaf()), leaf());
  return Diagram{{right_vine}, {left_vine}};
}

Diagram gen_x1() {
  Tree right_vine = caret(leaf(), caret(leaf(), leaf()));
  Tree left_vine = caret(caret(leaf(), leaf()), leaf());
  return Diagram{{caret(leaf(), right_vine)}, {caret(leaf(), left_vine)}};
}

long long diagram_dist(const Diagram& a, const Diagram& b) {
  if (!a.spherical() || !b.spherical())
    throw std::domain_error("diagram_dist: both diagrams must be spherical");
  return mul(inv(a), b).cells();
}

namespace {

void tree_to_string(const Tree& t, std::string* out) {
  out->push_back('(');
  if (t) {
    tree_to_string(t->left, out);
    tree_to_string(t->right, out);
  }
  out->push_back(')');
}

Tree tree_from_string(const std::string& s, size_t* pos) {
  if (s[*pos] != '(') throw std::domain_error("diagram_parse: expected '('");
  ++*pos;
  if (s[*pos] == ')') {
    ++*pos;
    return leaf();
  }
  Tree l = tree_from_string(s, pos);
  Tree r = tree_from_string(s, pos);
  if (s[*pos] != ')') throw std::domain_error("diagram_parse: expected ')'");
  ++*pos;
  return caret(l, r);
}

Forest forest_from_string(const std::string& s) {
  Forest f;
  size_t pos = 0;
  while (pos < s.size()) f.push_back(tree_from_string(s, &pos));
  return f;
}

}  // namespace

std::string diagram_str(const Diagram& d) {
  std::string out;
  for (const auto& t : d.top) tree_to_string(t, &out);
  out.push_back('|');
  for (const auto& t : d.bottom) tree_to_string(t, &out);
  return out;
}

Diagram diagram_parse(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos) throw std::domain_error("diagram_parse: missing '|'");
  Diagram d;
  d.top = forest_from_string(s.substr(0, bar));
  d.bottom = forest_from_string(s.substr(bar + 1));
  if (forest_leaves(d.top) != forest_leaves(d.bottom))
    throw std::domain_error("diagram_parse: leaf counts differ");
  return d;
}

MarkedGroup make_thompson() {
  MarkedGroup g;
  g.name = "thompson";
  g.identity = diagram_str(trivial_diagram(1));
  g.mul = [](const std::string& a, const std::string& b) {
    return diagram_str(mul(diagram_parse(a), diagram_parse(b)));
  };
  g.inv = [](const std::string& a) { return diagram_str(inv(diagram_parse(a))); };
  Diagram x0 = gen_x0(), x1 = gen_x1();
  g.gens = {diagram_str(x0), diagram_str(inv(x0)), diagram_str(x1), diagram_str(inv(x1))};
  return g;
}

std::vector<Diagram> commuting_family(int n) {
  if (n < 0 || n > 6) throw std::domain_error("commuting_family: n limited to 6");
  std::vector<Diagram> family{gen_x0()};
  Diagram pi = cell_diagram();
  Diagram pi_inv = inv(pi);
  for (int level = 1; level <= n; ++level) {
    std::vector<Diagram> next;
    next.reserve(family.size() * 2);
    for (const auto& d : family) {
      next.push_back(mul(mul(pi, add(trivial_diagram(1), d)), pi_inv));
      next.push_back(mul(mul(pi, add(d, trivial_diagram(1))), pi_inv));
    }
    family = std::move(next);
  }
  return family;
}

Diagram balanced_contraction(int n) {
  std::function<Tree(int)> complete = [&](int depth) -> Tree {
    if (depth == 0) return leaf();
    Tree sub = complete(depth - 1);
    return caret(sub, sub);
  };
  Diagram d;
  d.top.assign(size_t(1) << n, leaf());
  d.bottom = {complete(n)};
  return d;
}

Diagram xi_embed(int n, const std::vector<long long>& exponents, long long sum_cap) {
  auto family = commuting_family(n);
  if (exponents.size() != family.size())
    throw std::domain_error("xi_embed: exponent vector length must be 2^n");
  long long total = 0;
  for (long long e : exponents) total += e < 0 ? -e : e;
  if (total > sum_cap) throw ResourceLimit("xi_embed: exponent sum exceeds cap");
  Diagram acc = trivial_diagram(1);
  for (size_t i = 0; i < family.size(); ++i) {
    if (exponents[i] == 0) continue;
    Diagram step = exponents[i] > 0 ? family[i] : inv(family[i]);
    long long reps = exponents[i] < 0 ? -exponents[i] : exponents[i];
    for (long long s = 0; s < reps; ++s) acc = mul(acc, step);
  }
  return acc;
}

BurilloReport burillo_check(int radius, size_t cap) {
  if (radius > 7) throw ResourceLimit("burillo_check: radius limited to 7");
  BurilloReport report;
  report.radius = radius;
  report.max_cells_over_word = Rat(0);
  report.max_word_over_cells = Rat(0);
  auto ball = word_ball_bfs(make_thompson(), radius, cap);
  report.elements = ball.elements.size();
  for (size_t i = 0; i < ball.elements.size(); ++i) {
    long long w = ball.length[i];
    long long c = diagram_parse(ball.elements[i]).cells();
    Rat rw(w), rc(c);
    bool ok = rc / Rat(6) - Rat(2) <= rw && rw <= Rat(6) * rc + Rat(2) &&
              rw / Rat(6) - Rat(2) <= rc && rc <= Rat(6) * rw + Rat(2);
    if (!ok) ++report.violations;
    if (w > 0) report.max_cells_over_word = std::max(report.max_cells_over_word, rc / rw);
    if (c > 0) report.max_word_over_cells = std::max(report.max_word_over_cells, rw / rc);
  }
  return report;
}

DistortionReport distortion_report(int n, unsigned long long samples, uint64_t seed) {
  DistortionReport report;
  report.n = n;
  auto family = commuting_family(n);
  size_t width = family.size();
  SplitMix64 rng(seed);

  auto needed_constant = [n](long long t, long long c) -> long long {
    // Smallest integer C with 6c+2 <= C (n t + 1) and t/(C n) - C <= c/6 - 2.
    for (long long C = 1; C <= 1000000; ++C) {
      Rat upper_ok = Rat(6 * c + 2);
      if (!(upper_ok <= Rat(C) * Rat(n) * Rat(t) + Rat(C))) continue;
      if (Rat(t) / (Rat(C) * Rat(n)) - Rat(C) <= Rat(c, 6) - Rat(2)) return C;
    }
    throw std::logic_error("distortion_report: no feasible constant");
  };

  Rat best(0);
  for (unsigned long long s = 0; s < samples; ++s) {
    std::vector<long long> u(width), v(width);
    for (size_t i = 0; i < width; ++i) {
      u[i] = rng.range(-3, 3);
      v[i] = rng.range(-3, 3);
    }
    long long t = 0;
    for (size_t i = 0; i < width; ++i) t += std::llabs(u[i] - v[i]);
    Diagram du = xi_embed(n, u), dv = xi_embed(n, v);
    long long c = diagram_dist(du, dv);
    ++report.samples;
    if (t == 0) {
      if (c != 0) throw std::logic_error("distortion_report: equal vectors, unequal diagrams");
      continue;
    }
    long long C = needed_constant(t, c);
    if (Rat(C) > best) {
      best = Rat(C);
      report.worst_pair = "l1=" + std::to_string(t) + ",cells=" + std::to_string(c);
    }
  }
  report.constant_needed = best;
  report.within_25 = best <= Rat(25);
  report.lambda_threshold = Rat(5) * best * Rat(n) + best;
  report.transferred_bound = BigNat::pow(BigNat(2), n);
  return report;
}

}  // namespace coarsedim
