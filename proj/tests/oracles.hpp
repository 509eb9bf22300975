#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "arithgraph/graph.hpp"
#include "arithgraph/integer.hpp"
#include "arithgraph/linalg.hpp"

namespace oracle {

using arithgraph::ExactMatrix;
using arithgraph::Integer;

// Laplace expansion along the first row.
inline Integer cofactor_det(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Integer c = m(0, j) * cofactor_det(m.without(0, j));
        s += (j % 2 == 0) ? c : Integer(-c);
    }
    return s;
}

inline std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline Integer minor_det(const ExactMatrix& m, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
    ExactMatrix s(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
    return cofactor_det(s);
}

// Invariant factors from determinantal divisors d_k = gcd of all k x k minors.
inline std::vector<Integer> determinantal_factors(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Integer g = 0;
        auto sets = subsets_of_size(n, k);
        for (const auto& r : sets)
            for (const auto& c : sets) g = arithgraph::gcd(g, minor_det(m, r, c));
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

inline std::size_t rank_by_minors(const ExactMatrix& m) {
    return determinantal_factors(m).size();
}

// PD iff every principal minor is positive.
inline bool pd_by_all_principal_minors(const ExactMatrix& m) {
    const std::size_t n = m.dim();
    for (std::size_t k = 1; k <= n; ++k)
        for (const auto& s : subsets_of_size(n, k))
            if (cofactor_det(m.principal_submatrix(s)) <= 0) return false;
    return true;
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi, bool symmetric) {
    std::uniform_int_distribution<int> d(lo, hi);
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
            m(i, j) = d(rng);
            if (symmetric) m(j, i) = m(i, j);
        }
    return m;
}

inline arithgraph::Multigraph random_multigraph(std::mt19937_64& rng, std::size_t n, int max_mult,
                                                double p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> mult(1, max_mult);
    std::vector<arithgraph::Multigraph::Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng) < p) e.push_back({i, j, mult(rng)});
    return arithgraph::Multigraph(n, e);
}

inline arithgraph::Multigraph random_connected_multigraph(std::mt19937_64& rng, std::size_t n, int max_mult,
                                                          double p) {
    while (true) {
        auto g = random_multigraph(rng, n, max_mult, p);
        if (g.is_connected()) return g;
    }
}

inline std::vector<Integer> random_diag(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<Integer> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline int edge_count(const arithgraph::Multigraph& g) {
    int e = 0;
    for (std::size_t i = 0; i < g.size(); ++i) e += g.degree(i);
    return e / 2;
}

// Structural test for C_m^+: m + 1 vertices, m + 1 edges, degrees 3, 1 and the rest 2, connected.
inline bool looks_like_cplus(const arithgraph::Multigraph& h) {
    if (h.size() < 4 || !h.is_connected() || edge_count(h) != static_cast<int>(h.size())) return false;
    int ones = 0, threes = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const int d = h.degree(i);
        if (d == 1) ++ones;
        else if (d == 3) ++threes;
        else if (d != 2) return false;
    }
    return ones == 1 && threes == 1;
}

inline bool looks_like_diamond(const arithgraph::Multigraph& h) { return h.size() == 4 && edge_count(h) == 5; }

// Any vertex subset whose induced subgraph is C_m^+ or the diamond.
inline bool brute_has_seed(const arithgraph::Multigraph& g) {
    const std::size_t n = g.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> vs;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) vs.push_back(i);
        if (vs.size() < 4) continue;
        auto h = arithgraph::induced_subgraph(g, vs).graph;
        if (looks_like_cplus(h) || looks_like_diamond(h)) return true;
    }
    return false;
}

inline bool brute_complete_bipartite(const arithgraph::Multigraph& g) {
    const std::size_t n = g.size();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        bool ok = true;
        std::size_t left = 0;
        for (std::size_t i = 0; i < n && ok; ++i) {
            left += mask >> i & 1u;
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                const bool cross = (mask >> i & 1u) != (mask >> j & 1u);
                ok = g.adjacent(i, j) == cross;
            }
        }
        if (ok && left >= 2 && n - left >= 2) return true;
    }
    return false;
}

}  // namespace oracle
