#pragma once

#include <boost/rational.hpp>
#include <string>
#include <string_view>

namespace hamgraph {

// All combinatorial data (moment values, areas, polytope constants,
// localization coefficients) is kept exact. int64 components are ample for
// the label/size ranges this library works with; boost::rational keeps
// values reduced after every operation.
using Rat = boost::rational<long long>;

// Parses "p/q" or "n" (optional leading sign). Anything else, including
// decimal notation like "1.5", is rejected.
Rat rat_from_string(std::string_view text);

// Formats reduced: "p/q", or "n" when the denominator is 1.
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

}  // namespace hamgraph
