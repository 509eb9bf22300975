#include "arithgraph/critpoly.hpp"

#include "arithgraph/error.hpp"

namespace arithgraph {

DiagonalAssignment::DiagonalAssignment(std::vector<Integer> values) : values_(std::move(values)) {
    for (const auto& v : values_) require(v >= 1, "diagonal entries must be >= 1");
}

DiagonalAssignment DiagonalAssignment::from_ints(const std::vector<std::int64_t>& values) {
    return DiagonalAssignment(to_integers(values));
}

ExactMatrix matrix_at(const Multigraph& g, std::span<const Integer> diag) {
    require(diag.size() == g.size(), "diagonal length must equal the number of vertices");
    const std::size_t n = g.size();
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? diag[i] : Integer(-g.multiplicity(i, j));
    return m;
}

Integer evaluate(const Multigraph& g, std::span<const Integer> diag) {
    return determinant(matrix_at(g, diag));
}

LinearInT linear_in_t(const Multigraph& g, std::size_t v, std::span<const Integer> rest) {
    const std::size_t n = g.size();
    require(v < n, "vertex out of range");
    require(rest.size() + 1 == n, "rest must assign every other vertex");

    // d = det(N) t - S^T adj(N) S with N the matrix on the other vertices.
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
        if (i != v) others.push_back(i);
    const Multigraph h = induced_subgraph(g, others).graph;
    const ExactMatrix nmat = matrix_at(h, rest);
    const ExactMatrix adj = adjugate(nmat);
    Integer alpha = determinant(nmat);
    Integer beta = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j)
            beta += Integer(g.multiplicity(v, others[i])) * adj(i, j) * g.multiplicity(v, others[j]);

    for (long t : {0L, 17L}) {
        std::vector<Integer> full(n);
        for (std::size_t i = 0, k = 0; i < n; ++i) full[i] = i == v ? Integer(t) : rest[k++];
        ensure(evaluate(g, full) == alpha * t - beta, "bordered determinant identity failed");
    }
    if (alpha > 0) return LinearForm{alpha, beta};
    return DegenerateForm{alpha, beta};
}

LinearForm laplacian_line(const Multigraph& g, std::size_t i) {
    require(i < g.size(), "vertex out of range");
    require(g.size() >= 2 && g.is_connected(), "laplacian line needs a connected graph");
    std::vector<Integer> rest;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) rest.push_back(g.degree(j));
    auto r = linear_in_t(g, i, rest);
    const auto* f = std::get_if<LinearForm>(&r);
    ensure(f != nullptr, "laplacian minor must be positive");
    const Integer kappa = spanning_tree_count(g);
    ensure(f->alpha == kappa && f->beta == kappa * g.degree(i), "laplacian line mismatch");
    return *f;
}

Integer complete_graph_det(std::span<const Integer> x) {
    const std::size_t n = x.size();
    // prefix/suffix products avoid division
    std::vector<Integer> pre(n + 1, 1), suf(n + 1, 1);
    for (std::size_t i = 0; i < n; ++i) pre[i + 1] = pre[i] * (x[i] + 1);
    for (std::size_t i = n; i-- > 0;) suf[i] = suf[i + 1] * (x[i] + 1);
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i) s += pre[i] * suf[i + 1];
    return pre[n] - s;
}

Integer bipartite_K2q_det(const Integer& t, const Integer& x, std::span<const Integer> y) {
    const std::size_t q = y.size();
    std::vector<Integer> pre(q + 1, 1), suf(q + 1, 1);
    for (std::size_t i = 0; i < q; ++i) pre[i + 1] = pre[i] * y[i];
    for (std::size_t i = q; i-- > 0;) suf[i] = suf[i + 1] * y[i];
    const Integer& p = pre[q];
    Integer s = 0;  // P * sum 1/y_i
    for (std::size_t i = 0; i < q; ++i) s += pre[i] * suf[i + 1];
    return (x * p - s) * t - x * s;
}

PendantExtension extend_pendant_form(const Integer& q, int e, const LinearForm& f) {
    require(q >= 1, "pendant value must be >= 1");
    require(e >= 1, "pendant multiplicity must be >= 1");
    LinearForm out{q * f.alpha, q * f.beta + Integer(e) * e * f.alpha};
    return {out, gcd(out.alpha, out.beta)};
}

}  // namespace arithgraph
