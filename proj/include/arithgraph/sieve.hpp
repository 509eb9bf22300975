#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arithgraph/critpoly.hpp"
#include "arithgraph/graph.hpp"
#include "arithgraph/structures.hpp"

namespace arithgraph {

enum class SieveMode { Any, PD, PDCyclic, StructureZero };

std::string to_string(SieveMode m);
SieveMode parse_sieve_mode(const std::string& s);

struct SieveOptions {
    SieveMode mode = SieveMode::Any;
    std::int64_t r = 2;
    std::int64_t max_value = 100;  // N
    std::int64_t box = 40;         // per-coordinate upper bound
    unsigned jobs = 1;
};

struct SieveReport {
    SieveOptions options;
    std::map<std::int64_t, std::vector<std::int64_t>> hits;  // value -> lexicographically smallest witness
    std::vector<std::int64_t> complement;                    // values in [0, N] without a hit
    // No search loop was cut off by the box: the hits are exactly the value set within [0, N].
    bool complete = false;
    std::optional<std::int64_t> proven_box;  // box that provably suffices, when one is known
};

SieveReport sieve(const Multigraph& g, const SieveOptions& options);

// Unpruned scan of [r, box]^n with the same hit rules; used for cross-checks.
SieveReport sieve_brute_force(const Multigraph& g, const SieveOptions& options);

// Calls visit(point, det) on every point of [r, box]^n that satisfies the mode's
// point condition (any: 0 <= det <= N; pd and pd-cyclic: PD with det <= N; structure-zero:
// det = 0 with a positive kernel vector), in lexicographic order. Returns false if the
// box cut off some branch of the search.
bool enumerate_points(const Multigraph& g, const SieveOptions& options,
                      const std::function<bool(const std::vector<std::int64_t>&, const Integer&)>& visit);

// Per-coordinate bound B such that every point with value <= N lies in [r, B]^n.
// Known when M_G(r,...,r) is PD or PSD of rank n-1 (monotonicity), and for two vertices.
std::optional<std::int64_t> proven_box_bound(const Multigraph& g, std::int64_t r, std::int64_t max_value);

// d_G(r,...,r) when M_G(r,...,r) is PD or PSD of rank n-1: the minimum of the value set.
std::optional<Integer> floor_value(const Multigraph& g, std::int64_t r);

struct MultipleWitness {
    DiagonalAssignment diag;
    Integer value;  // ell * |Phi| * R_i^2
};

MultipleWitness multiples_family(const ArithmeticalStructure& s, std::size_t i, const Integer& ell);

using Triple = std::array<Integer, 3>;

// Witness (x, y, z), all >= 2, with xyz - x - z = w, when one of the constructive cases applies.
std::optional<Triple> a3_certificate(const Integer& w);

// Witness (x, y, z), all >= 2, with xyz - a x - b z = w, when one of the constructive cases applies.
std::optional<Triple> generalized_path_witness(const Integer& a, const Integer& b, const Integer& w);

}  // namespace arithgraph
