#include "point_eval.hpp"

namespace arithgraph::detail {

Integer from_int128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::uint64_t words[2] = {static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(u >> 64)};
    Integer r;
    mpz_import(r.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    if (neg) r = -r;
    return r;
}

PointEvaluator::PointEvaluator(const Multigraph& g) : g_(g) {
    const std::size_t n = g.size();
    m_.dim = n;
    m_.a.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m_.at(i, j) = -g.multiplicity(i, j);
}

PointEvaluator::Result PointEvaluator::operator()(const std::vector<std::int64_t>& diag) {
    for (std::size_t i = 0; i < m_.dim; ++i) m_.at(i, i) = diag[i];
    Result out;
    if (fast::within_fast_range(m_)) {
        auto e = fast::eliminate(m_);
        out.positive_definite = e.positive_definite;
        out.det = from_int128(e.det);
        return out;
    }
    const auto big = as_integers(diag);
    const ExactMatrix m = matrix_at(g_, big);
    out.positive_definite = is_positive_definite(m);
    out.det = determinant(m);
    return out;
}

std::vector<Integer> as_integers(const std::vector<std::int64_t>& v) { return to_integers(v); }

}  // namespace arithgraph::detail
