#pragma once

#include <span>
#include <variant>
#include <vector>

#include "arithgraph/graph.hpp"
#include "arithgraph/integer.hpp"
#include "arithgraph/linalg.hpp"

namespace arithgraph {

// Diagonal assignment with every entry >= 1.
class DiagonalAssignment {
public:
    DiagonalAssignment() = default;
    explicit DiagonalAssignment(std::vector<Integer> values);
    static DiagonalAssignment from_ints(const std::vector<std::int64_t>& values);

    std::size_t size() const { return values_.size(); }
    const Integer& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<Integer>& values() const { return values_; }
    operator std::span<const Integer>() const { return values_; }
    bool operator==(const DiagonalAssignment&) const = default;
    bool operator<(const DiagonalAssignment& o) const { return values_ < o.values_; }

private:
    std::vector<Integer> values_;
};

// M_G(a) = Diag(a) - A_G. Entries of `diag` may be arbitrary integers here.
ExactMatrix matrix_at(const Multigraph& g, std::span<const Integer> diag);
Integer evaluate(const Multigraph& g, std::span<const Integer> diag);

// alpha * t - beta with alpha > 0.
struct LinearForm {
    Integer alpha;
    Integer beta;
    Integer at(const Integer& t) const { return alpha * t - beta; }
    bool operator==(const LinearForm&) const = default;
};

// Returned instead of a LinearForm when the slope is not positive.
struct DegenerateForm {
    Integer alpha;
    Integer beta;
};

using LinearInT = std::variant<LinearForm, DegenerateForm>;

// d_G with t at vertex v and `rest` on the other vertices (in increasing index order).
LinearInT linear_in_t(const Multigraph& g, std::size_t v, std::span<const Integer> rest);

// Linear form of the Laplacian diagonal with t at vertex i: (kappa, kappa * deg(i)).
LinearForm laplacian_line(const Multigraph& g, std::size_t i);

// d_{K_n}(x) = prod(x_j + 1) - sum_i prod_{j != i}(x_j + 1).
Integer complete_graph_det(std::span<const Integer> x);

// d_{K(2,q)}(t, x, y_1..y_q) with vertex order t, x, y_1..y_q.
Integer bipartite_K2q_det(const Integer& t, const Integer& x, std::span<const Integer> y);

struct PendantExtension {
    LinearForm form;
    Integer content;  // gcd(alpha, beta); progressions with non-coprime data are not prime-rich
};

// Attaching a new vertex with value q through e edges to the vertex carrying t:
// q(alpha t - beta) - e^2 alpha.
PendantExtension extend_pendant_form(const Integer& q, int e, const LinearForm& f);

}  // namespace arithgraph
