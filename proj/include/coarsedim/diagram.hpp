#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coarsedim/bigint.hpp"
#include "coarsedim/group.hpp"
#include "coarsedim/rational.hpp"
#include "coarsedim/rng.hpp"

namespace coarsedim {

// Diagrams over the single cell x -> x^2.  A reduced (x^p, x^q)-diagram is
// stored as a pair of ordered binary forests with equal leaf counts: the top
// forest records the expansion cells, the bottom forest the contraction
// cells, and a dipole is a caret over the same leaf pair present in both.
// Reduced spherical (x, x)-diagrams under o-composition form Thompson's
// group F.

struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;  // nullptr = leaf

struct TreeNode {
  Tree left, right;
  int leaf_count;
};

Tree caret(Tree left, Tree right);
inline Tree leaf() { return nullptr; }
inline int tree_leaves(const Tree& t) { return t ? t->leaf_count : 1; }
bool tree_eq(const Tree& a, const Tree& b);

using Forest = std::vector<Tree>;
int forest_leaves(const Forest& f);
int forest_carets(const Forest& f);

struct Diagram {
  Forest top, bottom;

  int top_roots() const { return static_cast<int>(top.size()); }
  int bottom_roots() const { return static_cast<int>(bottom.size()); }
  int cells() const { return forest_carets(top) + forest_carets(bottom); }
  bool spherical() const { return top.size() == 1 && bottom.size() == 1; }
};

bool diagram_eq(const Diagram& a, const Diagram& b);

// Trivial diagram eps(x^p): p parallel edges, no cells.
Diagram trivial_diagram(int p = 1);
// The single cell x -> x^2 as an (x, x^2)-diagram.
Diagram cell_diagram();

Diagram add(const Diagram& a, const Diagram& b);
Diagram inv(const Diagram& a);

// Vertical concatenation (bottom of a identified with top of b) without
// dipole elimination.
Diagram compose(const Diagram& a, const Diagram& b);

// compose followed by dipole elimination; the reduced result is independent
// of elimination order.
Diagram mul(const Diagram& a, const Diagram& b);

// Dipole elimination alone; `rng` randomizes the elimination order (used by
// the confluence tests), otherwise the first dipole is taken each round.
Diagram reduce(Diagram d, SplitMix64* rng = nullptr);

Diagram gen_x0();
Diagram gen_x1();

// Number of cells of a^-1 b; a left-invariant metric on spherical diagrams.
long long diagram_dist(const Diagram& a, const Diagram& b);

std::string diagram_str(const Diagram& d);
Diagram diagram_parse(const std::string& s);

MarkedGroup make_thompson();

// 2^n pairwise commuting reduced spherical diagrams with 2n+4 cells each;
// index order interleaves the two paddings of each level-(n-1) element.
std::vector<Diagram> commuting_family(int n);

// Balanced full contraction (x^(2^n), x)-diagram used by the conjugate
// normal form of the commuting family.
Diagram balanced_contraction(int n);

// Reduced product family[0]^k0 ... family[2^n-1]^k(2^n-1).
Diagram xi_embed(int n, const std::vector<long long>& exponents,
                 long long sum_cap = 4096);

struct BurilloReport {
  int radius = 0;
  size_t elements = 0;
  unsigned long long violations = 0;
  // Tightest observed two-sided comparisons between word length w and cells c.
  Rat max_cells_over_word;  // max c/w over w > 0
  Rat max_word_over_cells;  // max w/c over c > 0
};

// Checks (1/6) c - 2 <= w <= 6 c + 2 and (1/6) w - 2 <= c <= 6 w + 2 for
// every element of the radius ball of F with generators {x0, x1}.
BurilloReport burillo_check(int radius, size_t cap = 2000000);

struct DistortionReport {
  int n = 0;
  unsigned long long samples = 0;
  // Smallest single constant C making both quasi-isometry sides hold with
  // (C n, C) on every sample, using the (6,2) word/cell conversion.
  Rat constant_needed;
  bool within_25 = true;
  std::string worst_pair;
  // Arithmetic of the transferred bound at the measured constants.
  Rat lambda_threshold;      // smallest lambda with (lambda - C)/(C n) >= 5
  BigNat transferred_bound;  // 2^n
};

DistortionReport distortion_report(int n, unsigned long long samples, uint64_t seed = 0);

}  // namespace coarsedim
