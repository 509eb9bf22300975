#pragma once

#include <cstddef>
#include <vector>

#include "arithgraph/critpoly.hpp"
#include "arithgraph/graph.hpp"
#include "arithgraph/linalg.hpp"

namespace arithgraph {

// (M, R) with M = M_G(diag) PSD of rank n-1, M R = 0, R > 0, gcd(R) = 1.
struct ArithmeticalStructure {
    Multigraph graph;
    DiagonalAssignment diag;
    std::vector<Integer> r;
    InvariantFactors phi;  // Smith form of M; torsion is the critical group

    ExactMatrix matrix() const { return matrix_at(graph, diag); }
    Integer group_order() const { return phi.torsion_order(); }
};

// Runs every check and computes phi. Throws ContractError naming the first failing check.
ArithmeticalStructure verify_structure(const Multigraph& g, const DiagonalAssignment& diag,
                                       const std::vector<Integer>& r);

ArithmeticalStructure laplacian_structure(const Multigraph& g);

struct StructureEnumeration {
    std::vector<ArithmeticalStructure> items;  // sorted by diagonal
    Integer box_min;
    Integer box_max;  // exhaustive inside [box_min, box_max]^n only
};

// All structures with diagonal in [r, bound]^n. Search is split over `jobs` threads.
StructureEnumeration enumerate_structures(const Multigraph& g, std::int64_t r, std::int64_t bound,
                                          unsigned jobs = 1);

// Wheel W_{2k}, order u, v_1..v_k, w_k..w_1; group of order 6k-1, cyclic.
ArithmeticalStructure wheel_structure_even(int k);

// Wheel W_{2k+1}, order u, v_1..v_k, u', w_k..w_1; group of order (2k+1)^2, not cyclic.
ArithmeticalStructure wheel_structure_odd(int k);

// C_{k+7}^+ in canonical order; cyclic group of order 2k+5.
ArithmeticalStructure tadpole_structure(int k);

enum class DynkinVariant {
    TwoLeaves,      // two new leaves at v, value 3 at v
    LeafExtension,  // ~D_n, new vertex on the leaf v, value 3 on the other leaf next to v
};

// h is an extended Dynkin diagram (or a cycle) with M_H(2,...,2) PSD of rank n-1.
// Result order: new vertices first, then v, then (for LeafExtension) the leaf paired with v,
// then the remaining vertices of h in increasing index.
ArithmeticalStructure semidefinite_from_extended_dynkin(const Multigraph& h, std::size_t v,
                                                        DynkinVariant variant);

}  // namespace arithgraph
