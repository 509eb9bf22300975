#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "arithgraph/classify.hpp"
#include "arithgraph/constructive.hpp"
#include "arithgraph/density.hpp"
#include "arithgraph/reproduce.hpp"
#include "arithgraph/sieve.hpp"
#include "arithgraph/structures.hpp"

namespace arithgraph {

using Json = nlohmann::ordered_json;

// Family DSL ("C7+", "K(2,3)", "A3(2,1)"), or JSON: {"n": 3, "edges": [[0, 1, 1], [1, 2, 2]]},
// {"adjacency": [[...]]} or a bare multiplicity matrix. Throws ContractError with the position on bad JSON.
Multigraph parse_graph(const std::string& text);

// Family name when the graph is exactly that family in its canonical order, else compact JSON.
std::string render_graph(const Multigraph& g);

// Comma separated integers, e.g. "3,2,2".
std::vector<Integer> parse_integer_list(const std::string& text);

// Integers are written as decimal strings.
Json to_json(const Integer& v);
Json to_json(const std::vector<Integer>& v);
Json graph_json(const Multigraph& g);
Json structure_json(const ArithmeticalStructure& s);
Json sieve_json(const SieveReport& r, bool witnesses);
Json unit_witness_json(const UnitWitness& w);
Json certificate_json(const DensityCertificate& c);
Json repro_json(const ReproResult& r);

}  // namespace arithgraph
