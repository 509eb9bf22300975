#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arithgraph/critpoly.hpp"
#include "arithgraph/graph.hpp"
#include "arithgraph/structures.hpp"

namespace arithgraph {

// A determinant-one positive definite labeling of an induced subgraph of some host graph.
struct PartialWitness {
    std::vector<std::size_t> vertices;  // host vertices, increasing
    std::vector<Integer> diag;          // aligned with vertices
};

struct ProvenanceStep {
    std::size_t added = 0;  // host vertex
    Integer a;              // S^T N* S for the subgraph before the step
    Integer value;          // diagonal entry given to the added vertex
};

struct UnitWitness {
    Multigraph graph;
    DiagonalAssignment diag;  // det 1, positive definite
    std::string seed;         // catalogue name
    std::vector<std::size_t> seed_vertices;  // seed vertex i -> graph vertex
    std::vector<ProvenanceStep> steps;
};

// Extra seeds, such as K_n labelings built from Egyptian fraction solutions.
struct CatalogueSeed {
    std::string name;
    Multigraph graph;
    std::vector<Integer> diag;
};

struct SeedOptions {
    std::vector<CatalogueSeed> extra;
    bool proper_only = false;  // skip seeds that cover every vertex
};

struct SeedMatch {
    std::string name;
    std::vector<std::size_t> vertices;  // seed vertex i -> host vertex
    std::vector<Integer> diag;          // aligned with seed vertices
};

// r = 1: the first edge with labels (a^2 + 1, 1). r = 2: catalogue members in the order
// C_m^+ (m increasing), cone(A3), E8, A3(2,1), then extra seeds.
// Catalogue members with at most max_size vertices, in search order.
std::vector<CatalogueSeed> seed_catalogue(std::size_t max_size, const SeedOptions& options = {});

std::optional<SeedMatch> find_seed(const Multigraph& g, int r, const SeedOptions& options = {});

// Host vertices outside h, each adjacent to h and the vertices before it; lowest index first.
std::vector<std::size_t> connected_extension_chain(const Multigraph& g, const std::vector<std::size_t>& h);

// d_G(a + m, rest) = m where rest is a det-1 PD labeling of G minus v (in increasing index order).
DiagonalAssignment induction_step(const Multigraph& g, std::size_t v, const std::vector<Integer>& rest,
                                  const Integer& m);

// The zero case: t = a, R = (1, N* S). Throws ContractError when a < r.
ArithmeticalStructure induction_zero(const Multigraph& g, std::size_t v, const std::vector<Integer>& rest,
                                     std::int64_t r);

// Adds host vertex w to a partial witness, targeting determinant m.
PartialWitness extend_witness(const Multigraph& host, const PartialWitness& p, std::size_t w, const Integer& m,
                              Integer* a_out = nullptr);

// Adds the last host vertex w with the zero case; p must cover every other host vertex.
ArithmeticalStructure close_with_zero(const Multigraph& host, const PartialWitness& p, std::size_t w,
                                      std::int64_t r);

std::optional<UnitWitness> unit_witness(const Multigraph& g, int r, const SeedOptions& options = {});

// A proper seed chained up to g minus `vertex`; induction_step at `vertex` then reaches every m >= 1.
struct PositiveWitness {
    UnitWitness base;    // lives on the induced subgraph g minus vertex
    std::vector<std::size_t> base_to_g;
    std::size_t vertex = 0;

    DiagonalAssignment value(const Multigraph& g, const Integer& m) const;
};

std::optional<PositiveWitness> positive_witness(const Multigraph& g, int r, const SeedOptions& options = {});

// Arithmetical structure with trivial group, from an r = 1 witness and the zero case.
ArithmeticalStructure trivial_group_structure(const Multigraph& g);

bool egyptian_check(const std::vector<Integer>& y);

// Increasing, pairwise coprime y_1 < ... < y_n, all >= min_y, with sum 1/y_i + 1/prod y_i = 1.
std::optional<std::vector<Integer>> egyptian_search(int n, std::int64_t min_y = 3, unsigned jobs = 1);

// Appends prod y + 1.
std::vector<Integer> extend_egyptian(const std::vector<Integer>& y);

// K_n with x_i = y_i - 1.
UnitWitness kn_witness_from_solution(const std::vector<Integer>& y);

CatalogueSeed kn_seed_from_solution(const std::vector<Integer>& y);

}  // namespace arithgraph
