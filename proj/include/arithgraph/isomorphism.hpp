#pragma once

#include <optional>
#include <vector>

#include "arithgraph/graph.hpp"

namespace arithgraph {

// Isomorphism invariant: equal codes iff the graphs are isomorphic.
std::vector<int> canonical_code(const Multigraph& g);
bool isomorphic(const Multigraph& a, const Multigraph& b);

// Vertex map pattern -> g such that the induced subgraph on the image equals the pattern
// (multiplicities included). The first map in backtracking order is returned.
std::optional<std::vector<std::size_t>> find_induced(const Multigraph& g, const Multigraph& pattern);

// All graphs on n vertices with multiplicities <= max_multiplicity, one per isomorphism class.
std::vector<Multigraph> all_graphs(std::size_t n, int max_multiplicity, bool connected_only);

}  // namespace arithgraph
