#pragma once

#include <cstdint>
#include <vector>

#include "arithgraph/critpoly.hpp"
#include "arithgraph/graph.hpp"
#include "arithgraph/linalg.hpp"

namespace arithgraph::detail {

Integer from_int128(__int128 v);

// Evaluates M_G at many diagonals; uses the fixed-width elimination when safe.
class PointEvaluator {
public:
    struct Result {
        bool positive_definite = false;
        Integer det;
    };

    explicit PointEvaluator(const Multigraph& g);
    Result operator()(const std::vector<std::int64_t>& diag);

private:
    const Multigraph& g_;
    fast::SmallMatrix m_;
};

std::vector<Integer> as_integers(const std::vector<std::int64_t>& v);

}  // namespace arithgraph::detail
