// Python bindings for the main workbench operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coarsedim/cluster.hpp"
#include "coarsedim/crosspoly.hpp"
#include "coarsedim/cube.hpp"
#include "coarsedim/diagram.hpp"
#include "coarsedim/grid.hpp"
#include "coarsedim/ko.hpp"
#include "coarsedim/registry.hpp"
#include "coarsedim/wreath.hpp"

namespace py = pybind11;
using namespace coarsedim;

namespace {

unsigned long long big_u64(const BigNat& n) { return n.as_u64(); }

py::dict validation_dict(const KOValidationReport& r) {
  py::dict d;
  d["valid"] = r.valid;
  d["min_colors_per_point"] = r.min_colors_per_point;
  d["max_colors_per_point"] = r.max_colors_per_point;
  d["colors_used"] = r.colors_used;
  d["worst_cluster_diameter"] = r.worst_cluster_diameter;
  return d;
}

}  // namespace

PYBIND11_MODULE(_coarsedim, m) {
  m.doc() = "coloring-dimension workbench: exact colorings, wreath metrics, "
            "diagram calculus, lattice counts";

  m.def("lattice_count", [](int k, long long r) {
    return big_u64(lattice_count_bruteforce({k, r}));
  }, py::arg("k"), py::arg("r"), "Brute-force |{i in Z^k : |i|_1 <= r}|.");
  m.def("ehrhart_corrected", [](int k, long long r) {
    return big_u64(ehrhart_corrected({k, r}));
  }, py::arg("k"), py::arg("r"));
  m.def("ehrhart_paper_formula", [](int k, long long r) {
    return big_u64(ehrhart_paper_formula({k, r}));
  }, py::arg("k"), py::arg("r"));

  m.def("word_ball_sizes", [](const std::string& group, int radius) {
    auto ball = word_ball_bfs(group_by_name(group), radius);
    std::vector<size_t> sizes(radius + 1, 0);
    for (int len : ball.length) ++sizes[len];
    return sizes;
  }, py::arg("group"), py::arg("radius"), "Sphere sizes by word length.");

  m.def("parry_mismatches", [](const std::string& instance, int radius) {
    auto group = group_by_name(instance);
    auto ball = word_ball_bfs(group, radius);
    unsigned long long mismatches = 0;
    bool lamplighter = group.name == "lamplighter";
    for (size_t i = 0; i < ball.elements.size(); ++i) {
      long long p = lamplighter ? lamp_norm(lamp_parse(ball.elements[i]))
                                : iter_norm(iter_parse(std::stoi(group.name.substr(3)),
                                                       ball.elements[i]));
      if (p != ball.length[i]) ++mismatches;
    }
    return mismatches;
  }, py::arg("instance"), py::arg("radius"));

  m.def("min_colors", [](const std::string& space, const std::string& lambda,
                         const std::string& D) {
    return min_colors_exact(space_by_name(space), {Rat::parse(lambda), Rat::parse(D)}).colors;
  }, py::arg("space"), py::arg("lambda_"), py::arg("D"));

  m.def("hex1_min_colors", [](int k, int s, const std::string& D) {
    return hex1_min_colors(k, s, Rat::parse(D)).colors;
  }, py::arg("k"), py::arg("s"), py::arg("D"));

  m.def("cube_expansion_verdict", [](int n, int r, const std::string& mode,
                                     unsigned long long samples, uint64_t seed) {
    auto report = verify_cube_expansion(n, r,
                                        mode == "exhaustive" ? CheckMode::Exhaustive
                                                             : CheckMode::Sampled,
                                        1ull << 24, seed, samples);
    return std::string(verdict_name(report.verdict));
  }, py::arg("n"), py::arg("r"), py::arg("mode") = "exhaustive",
     py::arg("samples") = 10000, py::arg("seed") = 0);

  m.def("expansion_color_bound", [](const std::string& eps, long long lambda) {
    return expansion_color_bound(Rat::parse(eps), lambda).str();
  }, py::arg("eps"), py::arg("lambda_"));

  m.def("x0_cells", [] { return gen_x0().cells(); });
  m.def("x1_cells", [] { return gen_x1().cells(); });
  m.def("diagram_distance", [](const std::string& a, const std::string& b) {
    return diagram_dist(diagram_parse(a), diagram_parse(b));
  }, py::arg("a"), py::arg("b"), "Cells of a^-1 b for spherical diagrams.");
  m.def("diagram_product", [](const std::string& a, const std::string& b) {
    return diagram_str(mul(diagram_parse(a), diagram_parse(b)));
  });
  m.def("commuting_family_cells", [](int n) {
    std::vector<long long> cells;
    for (const auto& d : commuting_family(n)) cells.push_back(d.cells());
    return cells;
  }, py::arg("n"));
  m.def("xi_cells", [](int n, const std::vector<long long>& k) {
    return static_cast<long long>(xi_embed(n, k).cells());
  }, py::arg("n"), py::arg("k"));
  m.def("burillo_violations", [](int radius) { return burillo_check(radius).violations; },
        py::arg("radius"));

  m.def("parry_length", [](const std::string& instance, const std::string& element) {
    auto group = group_by_name(instance);
    if (group.name == "lamplighter") return lamp_norm(lamp_parse(element));
    return iter_norm(iter_parse(std::stoi(group.name.substr(3)), element));
  }, py::arg("instance"), py::arg("element"));

  m.def("bk_lower_bound", [](int k, const std::string& lambda) {
    auto r = bk_lower_bound(k, Rat::parse(lambda));
    py::dict d;
    d["r"] = r.r;
    d["bound"] = big_u64(r.bound);
    d["r_max_squared"] = r.r_max_squared.str();
    return d;
  }, py::arg("k"), py::arg("lambda_"));

  m.def("ko_line_report", [](long long lambda, int m, long long periods, bool literal) {
    long long period = (m + 2) * (lambda + 1);
    auto c = ko_color_line(lambda, m, 0, periods * period - 1, literal);
    return validation_dict(ko_validate(c));
  }, py::arg("lambda_"), py::arg("m"), py::arg("periods") = 10,
     py::arg("literal") = false);

  m.def("ko_grid_valid", [](int n, long long lambda, long long side) {
    auto bound = ko_color_grid(n, lambda, 0, side - 1);
    auto report = validate_grid_coloring(bound.coloring, lambda, bound.control);
    py::dict d;
    d["valid"] = report.valid;
    d["colors_used"] = report.colors_used;
    d["control"] = bound.control;
    return d;
  }, py::arg("n"), py::arg("lambda_"), py::arg("side"));

  m.def("ko_bk_bound", [](int k, long long lambda, long long m) {
    auto r = bk_ko_bound(k, lambda, m);
    py::dict d;
    d["a_k"] = r.a_k.str();
    d["b_k"] = r.b_k.str();
    d["colors"] = r.colors.str();
    d["control"] = r.control.str();
    return d;
  }, py::arg("k"), py::arg("lambda_"), py::arg("m"));
}
