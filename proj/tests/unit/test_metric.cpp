#include "doctest.h"

#include "coarsedim/cluster.hpp"
#include "coarsedim/group.hpp"
#include "coarsedim/metric.hpp"
#include "coarsedim/diagram.hpp"
#include "coarsedim/rng.hpp"

using namespace coarsedim;

TEST_CASE("constructed spaces satisfy the metric axioms") {
  check_metric_axioms(path_space(20));
  check_metric_axioms(z_subset_space({-4, 0, 3, 9}));
  check_metric_axioms(shift_metric(path_space(12), Rat(5, 2)));
  check_metric_axioms(product_l1(path_space(6), path_space(5)));
}

TEST_CASE("shift metric adds r off the diagonal") {
  auto two = z_subset_space({0, 3});
  auto shifted = shift_metric(two, Rat(2));
  CHECK(shifted.dist(0, 1) == Rat(5));
  CHECK(shifted.dist(0, 0) == Rat(0));
  auto same = shift_metric(two, Rat(0));
  CHECK(same.dist(0, 1) == two.dist(0, 1));
}

TEST_CASE("l1 product geometry") {
  auto square = product_l1(path_space(2), path_space(2));
  CHECK(square.size() == 4);
  CHECK(square.dist(square.find("0|0"), square.find("1|1")) == Rat(2));

  auto xsingle = product_l1(path_space(1), path_space(5));
  CHECK(xsingle.size() == 5);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) CHECK(xsingle.dist(i, j) == path_space(5).dist(i, j));
}

TEST_CASE("product diameter is additive on random subsets") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long long> xs, ys;
    for (int i = 0; i < 5; ++i) {
      xs.push_back(rng.range(-30, 30));
      ys.push_back(rng.range(-30, 30));
    }
    auto X = z_subset_space(xs), Y = z_subset_space(ys);
    auto P = product_l1(X, Y);
    CHECK(space_diameter(P) == space_diameter(X) + space_diameter(Y));
  }
}

TEST_CASE("coarse-embedding parameter transfer") {
  TransferSpec identity{MonotoneFn::identity(), MonotoneFn::identity(), Rat(0)};
  auto [l1, d1] = transfer_bound(identity, Rat(7), Rat(9));
  CHECK(l1 == Rat(7));
  CHECK(d1 == Rat(9));

  TransferSpec quadratic{MonotoneFn::identity(), MonotoneFn::power(2), Rat(0)};
  CHECK(transfer_bound(quadratic, Rat(16), Rat(5)).first == Rat(4));
  CHECK_THROWS_AS(transfer_bound(quadratic, Rat(17), Rat(5)), std::domain_error);

  auto [ql, qd] = qi_transfer(Rat(6), Rat(2), Rat(6), Rat(2), Rat(14), Rat(10));
  CHECK(ql == Rat(2));
  CHECK(qd == Rat(72));
}

TEST_CASE("quasi-isometry report on identity and doubling maps") {
  std::vector<QiSample> ident;
  for (int d = 1; d <= 10; ++d) ident.push_back({Rat(d), Rat(d)});
  auto r1 = check_quasi_isometry(ident, Rat(1), Rat(1), Rat(0), Rat(0));
  CHECK(r1.ok());
  CHECK(*r1.c_needed == Rat(1));

  std::vector<QiSample> doubling;
  for (int d = 1; d <= 10; ++d) doubling.push_back({Rat(d), Rat(2 * d)});
  CHECK(check_quasi_isometry(doubling, Rat(2), Rat(2), Rat(0), Rat(0)).ok());
  CHECK_FALSE(check_quasi_isometry(doubling, Rat(3, 2), Rat(2), Rat(0), Rat(0)).ok());
}

TEST_CASE("word balls of Z and Z^2") {
  auto zball = word_ball_bfs(make_z(), 3);
  CHECK(zball.elements.size() == 7);
  // d(-3, 3) = 6 is determined once the ball holds the difference element.
  auto wide = word_ball_bfs(make_z(), 6);
  auto zspace = word_ball_space(make_z(), wide);
  CHECK(zspace.dist(zspace.find("-3"), zspace.find("3")) == Rat(6));

  auto z2ball = word_ball_bfs(make_zn(2), 1);
  CHECK(z2ball.elements.size() == 5);
}

TEST_CASE("word ball reports out-of-ball distances as absent") {
  auto ball = word_ball_bfs(make_z(), 2);
  auto space = word_ball_space(make_z(), ball);
  // d(-2, 2) = 4 needs the radius-4 ball.
  CHECK_FALSE(space.has_dist(space.find("-2"), space.find("2")));
  CHECK_THROWS_AS(space.dist(space.find("-2"), space.find("2")), MissingDistance);
  // Distances inside the radius/2 sub-ball are exact.
  CHECK(space.dist(space.find("-1"), space.find("1")) == Rat(2));
}

TEST_CASE("word ball respects the size cap") {
  CHECK_THROWS_AS(word_ball_bfs(make_zn(2), 40, 100), ResourceLimit);
}

TEST_CASE("finite multiplication table groups load from json") {
  // Z/4 as a table.
  std::string doc = R"({
    "elements": ["e", "a", "a2", "a3"],
    "mul": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
    "gens": ["a", "a3"]
  })";
  auto g = group_from_json_text(doc);
  CHECK(g.identity == "e");
  CHECK(g.mul("a", "a3") == "e");
  CHECK(g.inv("a") == "a3");
  auto ball = word_ball_bfs(g, 2);
  CHECK(ball.elements.size() == 4);
  CHECK(ball.length_of("a2") == 2);
}

TEST_CASE("half-radius sub-ball distances are always determined") {
  for (auto group : {make_zn(2), make_free(2)}) {
    auto ball = word_ball_bfs(group, 6);
    auto space = word_ball_space(group, ball);
    for (size_t i = 0; i < ball.elements.size(); ++i) {
      if (ball.length[i] > 3) continue;
      for (size_t j = 0; j < ball.elements.size(); ++j) {
        if (ball.length[j] > 3) continue;
        CHECK(space.has_dist(i, j));
      }
    }
  }
}

TEST_CASE("lattice-embedding samples respect the (25n, 25) envelope") {
  // Sampled pairs measured with the diagram-metric oracle.
  for (int n = 1; n <= 3; ++n) {
    SplitMix64 rng(900 + n);
    std::vector<QiSample> samples;
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long long> u(size_t(1) << n), v(size_t(1) << n);
      long long t = 0;
      for (size_t i = 0; i < u.size(); ++i) {
        u[i] = rng.range(-2, 2);
        v[i] = rng.range(-2, 2);
        t += std::llabs(u[i] - v[i]);
      }
      if (t == 0) continue;
      long long cells = diagram_dist(xi_embed(n, u), xi_embed(n, v));
      samples.push_back({Rat(t), Rat(cells)});
    }
    auto report = check_quasi_isometry(samples, Rat(25 * n), Rat(25 * n), Rat(25), Rat(25));
    CHECK(report.ok());
  }
}
