#include "doctest.h"

#include "coarsedim/ko.hpp"
#include "coarsedim/registry.hpp"
#include "coarsedim/serialize.hpp"

using namespace coarsedim;

TEST_CASE("coloring json round-trip") {
  auto space = path_space(4);
  auto coloring = Coloring::single({0, 1, 0, 1}, 2);
  auto text = coloring_to_json(space, coloring);
  auto back = coloring_from_json(space, text);
  CHECK(back.palette == coloring.palette);
  CHECK(back.colors_of == coloring.colors_of);
}

TEST_CASE("validation report serializes") {
  auto space = path_space(6);
  auto coloring = Coloring::single({0, 0, 0, 1, 1, 1}, 2);
  auto report = validate_coloring(space, coloring, {Rat(1), Rat(2)});
  auto json = validation_to_json(space, report);
  CHECK(json.find("\"valid\":true") != std::string::npos);
  auto csv = validation_to_csv(space, report);
  CHECK(csv.rfind("color,clusters,worst_diameter,ok\n", 0) == 0);
}

TEST_CASE("cube witness round-trip") {
  auto subset = CubeSubset::of(4, {1, 2, 8});
  auto text = cube_witness_to_json(4, 2, subset);
  auto w = cube_witness_from_json(text);
  CHECK(w.n == 4);
  CHECK(w.r == 2);
  CHECK(w.subset == subset);
}

TEST_CASE("property P witness round-trip") {
  auto text = property_p_witness_to_json(3, Rat(1, 2), {0, 4, 7});
  auto w = property_p_witness_from_json(text);
  CHECK(w.r == 3);
  CHECK(w.eps == Rat(1, 2));
  CHECK(w.subset == std::vector<uint32_t>{0, 4, 7});
}

TEST_CASE("wreath elements as json") {
  IterElem e = IterElem::zero(1);
  IterElem v;
  v.payload = -2;
  e.lamps.emplace_back(3, v);
  e.cursor = 1;
  auto text = wreath_to_json(e);
  CHECK(text == R"({"cursor":1,"support":{"3":-2}})");
}

TEST_CASE("lamp elements as json") {
  LampElem e;
  e.lit = {-1, 2};
  e.cursor = 3;
  CHECK(wreath_to_json(e) == R"({"cursor":3,"support":{"-1":1,"2":1}})");
}

TEST_CASE("registry descriptors") {
  CHECK(group_by_name("z").name == "z");
  CHECK(group_by_name("zn:3").gens.size() == 6);
  CHECK(group_by_name("lamplighter").gens.size() == 3);
  CHECK(group_by_name("zwrz").name == "bk:1");
  CHECK(group_by_name("thompson").gens.size() == 4);
  CHECK_THROWS_AS(group_by_name("nope"), UsageError);

  CHECK(space_by_name("zpath:21").size() == 21);
  CHECK(space_by_name("cube:3").size() == 8);
  CHECK(space_by_name("box:3x4").size() == 12);
  CHECK(space_by_name("hexboard:2:3").size() == 9);
  CHECK_THROWS_AS(space_by_name("nope"), UsageError);
}

TEST_CASE("ko coloring json schema") {
  auto c = ko_color_line(1, 1, 0, 5);
  auto text = ko_to_json(c);
  CHECK(text.find("\"m\":1") != std::string::npos);
  CHECK(text.find("\"n\":2") != std::string::npos);
  CHECK(text.find("\"lambda\":1") != std::string::npos);
  CHECK(text.find("\"control\":8") != std::string::npos);
  // Block 0 excludes color 0: points 0,1 carry {1,2}.
  CHECK(text.find("\"0\":[1,2]") != std::string::npos);
}
