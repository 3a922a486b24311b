#pragma once

#include <string>

#include "coarsedim/group.hpp"
#include "coarsedim/metric.hpp"

namespace coarsedim {

// Compact instance descriptors used by the CLI and reports:
//   groups:  z | zn:<n> | free:<rank> | lamplighter | zwrz | bk:<k> | thompson
//   spaces:  zpath:<n> | cube:<n> | box:<s1>x<s2>x... | hexboard:<k>:<s>
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

MarkedGroup group_by_name(const std::string& descriptor);
FiniteMetricSpace space_by_name(const std::string& descriptor);

}  // namespace coarsedim
