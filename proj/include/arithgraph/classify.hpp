#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arithgraph/constructive.hpp"
#include "arithgraph/graph.hpp"
#include "arithgraph/isomorphism.hpp"

namespace arithgraph {

struct FamilyMatch {
    std::optional<FamilySpec> primary;  // none: not a catalogue family
    std::vector<FamilySpec> aliases;    // other names of the same graph
    std::string name() const;           // primary name or "other"
};

FamilyMatch recognize_family(const Multigraph& g);

enum class DynkinNumeric { PositiveDefinite, SemidefiniteZero, Neither };

std::string to_string(DynkinNumeric d);

// Classifies M_G(2,...,2); cross-checked against the recognized family.
DynkinNumeric dynkin_numeric_check(const Multigraph& g);

// Every connected graph on at most max_n vertices with multiplicities <= max_multiplicity whose
// all-2 matrix has the given kind (PositiveDefinite or SemidefiniteZero), one per isomorphism class.
// Grows graphs one vertex at a time from positive definite ones, which is exhaustive because
// removing a non-cut vertex keeps the all-2 matrix positive definite.
std::vector<Multigraph> dynkin_census(std::size_t max_n, int max_multiplicity, DynkinNumeric kind);

enum class TypesKind { Tree, Cycle, Complete, CompleteBipartite, HasSeed };

std::string to_string(TypesKind k);

struct TypesResult {
    TypesKind kind = TypesKind::Tree;
    std::string seed;                    // "C3+", ..., "cone(A3)" for HasSeed
    std::vector<std::size_t> embedding;  // seed vertex i -> g vertex
};

// For connected simple graphs: one of the four families, or an induced C_m^+ or cone(A3).
TypesResult types_decompose(const Multigraph& g);

struct PositivityVerdict {
    bool contains_all_positives = false;
    std::string family;  // exceptional family when no witness is found
    std::optional<PositiveWitness> witness;
};

PositivityVerdict positivity_verdict(const Multigraph& g, const SeedOptions& seeds);

}  // namespace arithgraph
