#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arithgraph/sieve.hpp"

namespace arithgraph {

enum class ReproKind {
    Complement,   // computed complement must lie inside the listed set
    Exact,        // computed complement must equal the listed set
    PrimeShift,   // complement must equal {0} and p - 1 for primes p <= N + 1
    Floors,       // d_G(2,...,2) for the Dynkin diagrams
    FirstValues,  // the nine smallest values of A_n contain the listed ones
};

struct ReproTarget {
    std::string id;
    std::string graph;  // family DSL, or a construction name for G2 / G3
    ReproKind kind = ReproKind::Complement;
    SieveMode mode = SieveMode::Any;
    std::int64_t max_value = 200;
    std::optional<std::int64_t> box;  // unset: the proven bound, else 40
    std::vector<std::int64_t> listed;
    std::string source;  // short description of where the list comes from
};

const std::vector<ReproTarget>& repro_targets();
std::optional<ReproTarget> find_target(const std::string& id);

// Multigraph for a target graph name; knows "G2" and "G3" besides the family DSL.
Multigraph target_graph(const std::string& name);

struct ReproResult {
    ReproTarget target;
    std::int64_t max_value = 0;
    std::int64_t box = 0;
    bool box_proven = false;
    std::vector<std::int64_t> complement;
    std::vector<std::int64_t> unexpected;  // in the complement but not listed
    std::vector<std::int64_t> reached;     // listed, at most N, but hit by the search
    bool complete = false;
    bool pass = false;
    std::vector<std::string> notes;  // per-graph lines for Floors / FirstValues
};

// Overrides replace the shipped N and box.
ReproResult reproduce(const ReproTarget& t, std::optional<std::int64_t> max_value = std::nullopt,
                      std::optional<std::int64_t> box = std::nullopt, unsigned jobs = 1);

}  // namespace arithgraph
