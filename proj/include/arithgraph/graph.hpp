#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arithgraph/integer.hpp"
#include "arithgraph/linalg.hpp"

namespace arithgraph {

// Finite undirected multigraph without loops, stored as a symmetric multiplicity matrix.
class Multigraph {
public:
    struct Edge {
        std::size_t u = 0;
        std::size_t v = 0;
        int multiplicity = 1;
    };

    Multigraph() = default;
    explicit Multigraph(std::size_t n) : n_(n), mult_(n * n, 0) {}
    // Repeated edges accumulate. Throws ContractError on loops or bad indices.
    Multigraph(std::size_t n, const std::vector<Edge>& edges);
    static Multigraph from_multiplicities(const std::vector<std::vector<int>>& m);

    std::size_t size() const { return n_; }
    int multiplicity(std::size_t i, std::size_t j) const { return mult_[i * n_ + j]; }
    bool adjacent(std::size_t i, std::size_t j) const { return multiplicity(i, j) > 0; }
    std::vector<std::size_t> neighbors(std::size_t i) const;
    // Number of edges at i, counted with multiplicity.
    int degree(std::size_t i) const;
    std::size_t neighbor_count(std::size_t i) const;
    std::vector<Edge> edges() const;
    bool is_simple() const;
    bool is_connected() const;
    bool is_tree() const;
    ExactMatrix adjacency() const;
    ExactMatrix laplacian() const;

    bool operator==(const Multigraph&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<int> mult_;
};

struct Subgraph {
    Multigraph graph;
    std::vector<std::size_t> to_parent;  // subgraph vertex i is parent vertex to_parent[i]
};

// Vertices are kept in the order given.
Subgraph induced_subgraph(const Multigraph& g, const std::vector<std::size_t>& vertices);
Subgraph delete_vertex(const Multigraph& g, std::size_t v);

// New vertex has index 0; old vertex i becomes i + 1.
Multigraph cone(const Multigraph& g);

// New vertex is appended (index n) and joined to v by e parallel edges.
Multigraph attach_pendant(const Multigraph& g, std::size_t v, int e = 1);

// Vertex i of the result is vertex order[i] of g.
Multigraph reorder(const Multigraph& g, const std::vector<std::size_t>& order);

Integer spanning_tree_count(const Multigraph& g);

enum class FamilyTag {
    A,
    D,
    E,
    TildeD,
    TildeE,
    C,
    CPlus,
    K,
    KPlus,
    Kpq,
    S,
    SPlus,
    W,
    Cone,
    Banana,
    WeightedPath,      // A3(e,f)
    WeightedTriangle,  // C3(e1,e2,e3)
    Custom,
};

struct FamilySpec {
    FamilyTag tag = FamilyTag::Custom;
    std::vector<int> params;
    std::vector<FamilySpec> inner;  // argument of cone(...)

    std::string name() const;
    bool operator==(const FamilySpec&) const = default;
};

// Canonical vertex orders:
//   A_n      path 0-1-...-(n-1)
//   D_n      chain 0..n-3 (n-3 is the branch vertex), leaves n-2 and n-1 on it
//   E_n      path 0..n-2, vertex n-1 attached to vertex 2
//   ~D_n     chain 0..n-2, vertex n-1 on 1 and vertex n on n-3
//   ~E_6     path 0..4, vertex 5 on 2, vertex 6 on 5
//   ~E_7     path 0..6, vertex 7 on 3
//   ~E_8     path 0..7, vertex 8 on 5
//   C_n      cycle 0..n-1 (C_2 is the double edge)
//   C_n^+    cycle 0..n-1, pendant n attached to 1
//   K_n^+    K_n on 0..n-1, pendant n on 0
//   K(p,q)   parts {0..p-1} and {p..p+q-1}
//   S_n      hub 0, leaves 1..n-1;  S_n^+ adds pendant n on leaf 1
//   W_n      hub 0, rim cycle 1..n
//   cone(H)  apex 0, then H shifted by one
//   A3(e,f)  path 0-1-2 with multiplicities e, f
//   C3(e1,e2,e3)  mult(1,2)=e1, mult(0,2)=e2, mult(0,1)=e3
Multigraph build_family(const FamilySpec& spec);

// DSL: "A5", "~D4", "C7+", "K(2,5)", "cone(A4)", "banana(3)", "A3(2,1)", "C3(2,1,1)".
FamilySpec parse_family(const std::string& text);

}  // namespace arithgraph
