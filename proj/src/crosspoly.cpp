#include "coarsedim/crosspoly.hpp"

#include <stdexcept>

#include "coarsedim/metric.hpp"

namespace coarsedim {

namespace {

void check_query(const EhrhartQuery& q) {
  if (q.k < 1) throw std::domain_error("ehrhart: dimension must be >= 1");
  if (q.r < 0) throw std::domain_error("ehrhart: dilation must be >= 0");
}

// Counts points coordinate by coordinate, descending only into feasible
// prefixes, so the work is proportional to the answer.
void count_rec(int axes_left, long long budget_norm, unsigned long long* count,
               unsigned long long budget) {
  if (axes_left == 0) {
    ++*count;
    return;
  }
  for (long long v = -budget_norm; v <= budget_norm; ++v) {
    if (*count >= budget) throw ResourceLimit("lattice_count_bruteforce: budget exceeded");
    count_rec(axes_left - 1, budget_norm - (v < 0 ? -v : v), count, budget);
  }
}

}  // namespace

BigNat lattice_count_bruteforce(const EhrhartQuery& q, unsigned long long budget) {
  check_query(q);
  unsigned long long count = 0;
  count_rec(q.k, q.r, &count, budget);
  return BigNat(count);
}

BigNat ehrhart_paper_formula(const EhrhartQuery& q) {
  check_query(q);
  BigNat total(0);
  for (int i = 0; i <= q.k; ++i)
    total += BigNat::pow(BigNat(2), i) *
             BigNat::binomial(static_cast<unsigned long long>(q.r), i);
  return total;
}

BigNat ehrhart_corrected(const EhrhartQuery& q) {
  check_query(q);
  BigNat total(0);
  for (int i = 0; i <= q.k; ++i)
    total += BigNat::pow(BigNat(2), i) * BigNat::binomial(q.k, i) *
             BigNat::binomial(static_cast<unsigned long long>(q.r), i);
  return total;
}

EhrhartRow ehrhart_compare(const EhrhartQuery& q) {
  EhrhartRow row;
  row.k = q.k;
  row.r = q.r;
  row.oracle = lattice_count_bruteforce(q);
  row.paper = ehrhart_paper_formula(q);
  row.corrected = ehrhart_corrected(q);
  row.corrected_matches = row.corrected == row.oracle;
  row.paper_matches = row.paper == row.oracle;
  return row;
}

std::string ehrhart_csv_header() { return "k,r,oracle,paper_formula,corrected,match"; }

std::string ehrhart_csv_row(const EhrhartRow& row) {
  std::string match = row.corrected_matches
                          ? (row.paper_matches ? "ok" : "mismatch-paper-formula")
                          : "mismatch-corrected";
  return std::to_string(row.k) + "," + std::to_string(row.r) + "," + row.oracle.str() + "," +
         row.paper.str() + "," + row.corrected.str() + "," + match;
}

}  // namespace coarsedim
