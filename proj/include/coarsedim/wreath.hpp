#pragma once

#include <map>
#include <string>
#include <vector>

#include "coarsedim/crosspoly.hpp"
#include "coarsedim/group.hpp"
#include "coarsedim/rational.hpp"
#include "coarsedim/rng.hpp"

namespace coarsedim {

// --- iterated wreath products of Z ---
//
// Level 0 is Z itself; a level-k element is a finitely supported map
// Z -> (level k-1 elements) plus a cursor in the top Z.  Lamp lists are kept
// sorted with identity values dropped, so structural equality is canonical.
struct IterElem {
  int level = 0;
  long long payload = 0;                              // level 0 only
  std::vector<std::pair<long long, IterElem>> lamps;  // level >= 1, sorted by position
  long long cursor = 0;                               // level >= 1

  static IterElem zero(int level);
};

bool iter_is_identity(const IterElem& a);
bool iter_eq(const IterElem& a, const IterElem& b);
IterElem iter_mul(const IterElem& a, const IterElem& b);
IterElem iter_inv(const IterElem& a);
std::string iter_str(const IterElem& a);

// Exact word length w.r.t. the standard generators b_0..b_k: the shortest
// walk on Z from 0 through the support to the cursor, plus the recursively
// computed lamp costs.
long long iter_norm(const IterElem& a);

// Lamp generator (value +-1 at position 0 of every nesting level below j).
IterElem bk_generator(int k, int j, int sign);

// --- lamplighter Z2 wr Z ---
struct LampElem {
  std::vector<long long> lit;  // sorted positions of lit lamps
  long long cursor = 0;
};

bool lamp_eq(const LampElem& a, const LampElem& b);
LampElem lamp_mul(const LampElem& a, const LampElem& b);
LampElem lamp_inv(const LampElem& a);
long long lamp_norm(const LampElem& a);
std::string lamp_str(const LampElem& a);

// --- Parry walk primitives ---

// Optimal left/right sweep on Z: shortest walk from 0 visiting every listed
// position and ending at `end`.
long long z_visiting_walk(const std::vector<long long>& positions, long long end);

// Held-Karp subset DP for a general distance table; `sites`, `start`, `end`
// are node indices into `dist`.  Exponential only in |sites| (<= 15).
long long shortest_visiting_walk(const std::vector<std::vector<long long>>& dist,
                                 size_t start, size_t end, const std::vector<size_t>& sites);

// --- wreath groups as marked groups (for BFS oracles) ---
MarkedGroup make_lamplighter();          // Z2 wr Z, generators {t, t^-1, a}
MarkedGroup make_bk(int k);              // B_k, generators b_0^+-..b_k^+-
IterElem iter_parse(int level, const std::string& s);
LampElem lamp_parse(const std::string& s);

// --- metric facts and bound calculators ---

struct InducedMetricReport {
  long long lhs = 0, rhs = 0;
  bool equal = false;
};

// Cor-style shifted-metric identity inside Z wr Z: distance between x^a and
// y^a equals |x - y| + 2|a| for x != y.
InducedMetricReport induced_metric_check(long long a, long long x, long long y);

// l1 lower bound d(f,g) >= sum |f(p) - g(p)| for lamp configurations.
bool l1_lower_bound_holds(const IterElem& f, const IterElem& g);

// D_k lattice vectors: finitely many integer entries indexed by Z^k.
using DkVector = std::map<std::vector<long long>, long long>;

IterElem dk_to_element(int k, const DkVector& v);
long long dk_norm(int k, const DkVector& v);

struct BiLipschitzReport {
  unsigned long long pairs = 0;
  bool lower_ok = true;               // |x-y|_l1 <= d_k(x,y) on every pair
  Rat max_ratio;                      // largest observed d_k / l1
  std::string worst_pair;
};

BiLipschitzReport bilipschitz_check(int k, long long r, unsigned long long pairs,
                                    uint64_t seed = 0);

struct QiProductReport {
  unsigned long long samples = 0;
  unsigned long long violations = 0;
};

// ||ba|| <= ||b|| + ||a|| <= 3 ||ba|| on sampled lamplighter elements.
QiProductReport qi_product_check(unsigned long long samples, uint64_t seed = 0);

struct BkBoundReport {
  int k = 0;
  Rat lambda;
  long long r = 0;          // chosen dilation
  BigNat L;                 // lattice count L(P_k, r)
  Rat r_max_squared;        // R_max = sqrt(L)/4 kept exactly via its square
  Rat alpha_squared;        // alpha = R_max / lambda^(k/2)
  Rat beta;                 // bound / lambda^k
  BigNat bound;             // certified lower bound (= L)
};

// Largest admissible r with lambda/(2r+1) >= 5, bound L(P_k, r) from the
// oracle-validated count; errors when no r >= 1 is admissible.
BkBoundReport bk_lower_bound(int k, const Rat& lambda);

struct ZwgBoundReport {
  long long r = 0;
  unsigned long long ball_size = 0;   // |B_r| of G
  Rat ceiling_squared;                // (sqrt(|B_r|)/(4r))^2
  unsigned long long bound = 0;       // = |B_r|
};

ZwgBoundReport zwg_lower_bound(const std::map<long long, unsigned long long>& ball_sizes,
                               const Rat& lambda);

unsigned long long ball_size_z(long long r);
unsigned long long ball_size_free(int rank, long long r);

}  // namespace coarsedim
