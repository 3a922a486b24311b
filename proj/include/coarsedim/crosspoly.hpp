#pragma once

#include <string>

#include "coarsedim/bigint.hpp"

namespace coarsedim {

// Lattice-point counting for the regular cross-polytope P_k (convex hull of
// +-e_1..+-e_k): L(P_k, r) = #{ i in Z^k : |i|_1 <= r }.
struct EhrhartQuery {
  int k = 1;           // dimension >= 1
  long long r = 0;     // dilation >= 0
};

// Direct enumeration; the ground truth everything else is checked against.
BigNat lattice_count_bruteforce(const EhrhartQuery& q,
                                unsigned long long budget = 200000000ull);

// Literal evaluation of the closed form sum_{i=0}^k 2^i * C(r, i).  Known to
// agree with the oracle at k = 1 and to diverge at (k=2, r=1); kept as a
// permanent regression fixture.
BigNat ehrhart_paper_formula(const EhrhartQuery& q);

// sum_{i=0}^k 2^i * C(k, i) * C(r, i); validated wholesale against the
// brute-force oracle.  All downstream bounds use this count.
BigNat ehrhart_corrected(const EhrhartQuery& q);

struct EhrhartRow {
  int k;
  long long r;
  BigNat oracle, paper, corrected;
  bool corrected_matches;
  bool paper_matches;
};

EhrhartRow ehrhart_compare(const EhrhartQuery& q);
std::string ehrhart_csv_header();
std::string ehrhart_csv_row(const EhrhartRow& row);

}  // namespace coarsedim
