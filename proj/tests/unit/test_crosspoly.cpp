#include "doctest.h"

#include <vector>

#include "coarsedim/crosspoly.hpp"
#include "coarsedim/metric.hpp"

using namespace coarsedim;

TEST_CASE("brute-force lattice counts on small instances") {
  CHECK(lattice_count_bruteforce({3, 0}).as_u64() == 1);
  CHECK(lattice_count_bruteforce({1, 3}).as_u64() == 7);
  CHECK(lattice_count_bruteforce({2, 1}).as_u64() == 5);
  CHECK(lattice_count_bruteforce({3, 2}).as_u64() == 25);
}

TEST_CASE("printed closed form reproduces k=1 and diverges at k=2, r=1") {
  for (long long r = 0; r <= 100; ++r)
    CHECK(ehrhart_paper_formula({1, r}).as_u64() == 2 * r + 1);
  // Permanent regression fixture: the printed form loses the binomial factor.
  CHECK(ehrhart_paper_formula({2, 1}).as_u64() == 3);
  CHECK(lattice_count_bruteforce({2, 1}).as_u64() == 5);
  CHECK_FALSE(ehrhart_compare({2, 1}).paper_matches);
  CHECK(ehrhart_compare({1, 50}).paper_matches);
}

TEST_CASE("corrected form equals the oracle on a k, r grid") {
  for (int k = 1; k <= 5; ++k)
    for (long long r = 0; r <= 8; ++r)
      CHECK(ehrhart_corrected({k, r}) == lattice_count_bruteforce({k, r}));
}

TEST_CASE("both evaluators are degree-k polynomials with leading term 2^k/k!") {
  // k-th finite difference of a degree-k polynomial is constant k! * lead.
  for (int k = 1; k <= 4; ++k) {
    std::vector<long long> corrected, paper;
    for (long long r = 0; r <= k + 3; ++r) {
      corrected.push_back(static_cast<long long>(ehrhart_corrected({k, r}).as_u64()));
      paper.push_back(static_cast<long long>(ehrhart_paper_formula({k, r}).as_u64()));
    }
    for (int step = 0; step < k; ++step) {
      for (size_t i = 0; i + 1 < corrected.size(); ++i) {
        corrected[i] = corrected[i + 1] - corrected[i];
        paper[i] = paper[i + 1] - paper[i];
      }
      corrected.pop_back();
      paper.pop_back();
    }
    long long expected = 1 << k;  // k! * (2^k / k!)
    for (long long v : corrected) CHECK(v == expected);
    for (long long v : paper) CHECK(v == expected);
  }
}

TEST_CASE("corrected form matches the oracle beyond the acceptance grid") {
  CHECK(ehrhart_corrected({7, 15}) == lattice_count_bruteforce({7, 15}, 100000000ull));
  CHECK(ehrhart_corrected({2, 600}) == lattice_count_bruteforce({2, 600}, 100000000ull));
}

TEST_CASE("csv row carries the mismatch marker") {
  auto row = ehrhart_compare({2, 1});
  CHECK(ehrhart_csv_row(row) == "2,1,5,3,5,mismatch-paper-formula");
  CHECK(ehrhart_csv_row(ehrhart_compare({1, 3})) == "1,3,7,7,7,ok");
}

TEST_CASE("brute force budget is enforced") {
  CHECK_THROWS_AS(lattice_count_bruteforce({6, 12}, 1000), ResourceLimit);
}
