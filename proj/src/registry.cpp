#include "coarsedim/registry.hpp"

#include <vector>

#include "coarsedim/cube.hpp"
#include "coarsedim/diagram.hpp"
#include "coarsedim/grid.hpp"
#include "coarsedim/wreath.hpp"

namespace coarsedim {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

MarkedGroup group_by_name(const std::string& descriptor) {
  auto parts = split(descriptor, ':');
  const std::string& kind = parts[0];
  if (kind == "z") return make_z();
  if (kind == "zn") return make_zn(std::stoi(parts.at(1)));
  if (kind == "z2") return make_zn(2);
  if (kind == "free") return make_free(std::stoi(parts.at(1)));
  if (kind == "lamplighter" || kind == "z2wrz") return make_lamplighter();
  if (kind == "zwrz") return make_bk(1);
  if (kind == "bk") return make_bk(std::stoi(parts.at(1)));
  if (kind == "thompson") return make_thompson();
  throw UsageError("unknown group descriptor: " + descriptor);
}

FiniteMetricSpace space_by_name(const std::string& descriptor) {
  auto parts = split(descriptor, ':');
  const std::string& kind = parts[0];
  if (kind == "zpath") return path_space(std::stoul(parts.at(1)));
  if (kind == "cube") return cube_space(std::stoi(parts.at(1)));
  if (kind == "box") {
    GridBox box;
    for (const auto& side : split(parts.at(1), 'x')) {
      box.lo.push_back(0);
      box.hi.push_back(std::stoll(side) - 1);
    }
    return grid_space(box);
  }
  if (kind == "hexboard")
    return grid_space(GridBox::cube(std::stoi(parts.at(1)), 1, std::stoll(parts.at(2))));
  throw UsageError("unknown space descriptor: " + descriptor);
}

}  // namespace coarsedim
