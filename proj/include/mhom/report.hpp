#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mhom/collapsing.hpp"
#include "mhom/monoid.hpp"

namespace mhom {

/// Parse command-line arguments, run the command and write one JSON report
/// to `out`. Exit status: 0 success/certified, 1 refuted certificate,
/// 2 error or fuel exhaustion.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string dot_cayley(const CayleyDigraph& g);
std::string dot_matching(const MatchingDigraph& g, const Alphabet& alphabet);

}  // namespace mhom
