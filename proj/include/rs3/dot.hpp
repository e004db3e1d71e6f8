// Hasse diagrams as Graphviz DOT. Only the cover relation is drawn,
// computed by transitive reduction of the order on the given set.
#pragma once

#include <string>
#include <vector>

#include "rs3/approx_pair.hpp"
#include "rs3/tvfunction.hpp"

namespace rs3 {

std::string hasse_dot(const std::vector<ApproxPair>& pairs, const std::string& name = "hasse");
std::string hasse_dot(const std::vector<TvFunction>& functions, const std::string& name = "hasse");

}  // namespace rs3
