#include "arithgraph/structures.hpp"

#include <algorithm>
#include <mutex>

#include "arithgraph/error.hpp"
#include "arithgraph/parallel.hpp"
#include "point_eval.hpp"

namespace arithgraph {

ArithmeticalStructure verify_structure(const Multigraph& g, const DiagonalAssignment& diag,
                                       const std::vector<Integer>& r) {
    const std::size_t n = g.size();
    require(n >= 1 && diag.size() == n && r.size() == n, "structure size mismatch");
    require(g.is_connected(), "structures are defined on connected graphs");
    for (const auto& x : r) require(x > 0, "R must be positive");
    require(gcd_of(r) == 1, "R must have gcd 1");
    const ExactMatrix m = matrix_at(g, diag);
    require(m * r == std::vector<Integer>(n, Integer(0)), "M R != 0");
    require(is_psd_rank_deficient_one(m, true), "M is not PSD of rank n-1");

    ArithmeticalStructure s{g, diag, r, smith_normal_form(m)};
    ensure(s.phi.rank + 1 == n, "Smith form rank differs from n-1");
    const Integer order = s.phi.torsion_order();
    const ExactMatrix adj = adjugate(m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            require(adj(i, j) == order * r[i] * r[j], "adjugate differs from |Phi| R R^T");
    return s;
}

ArithmeticalStructure laplacian_structure(const Multigraph& g) {
    std::vector<Integer> d, ones(g.size(), Integer(1));
    for (std::size_t i = 0; i < g.size(); ++i) d.push_back(g.degree(i));
    return verify_structure(g, DiagonalAssignment(d), ones);
}

namespace {

struct StructureSearch {
    const Multigraph& g;
    std::int64_t lo;
    std::int64_t hi;
    detail::PointEvaluator eval;
    std::vector<std::int64_t> diag;
    std::vector<ArithmeticalStructure> found;

    StructureSearch(const Multigraph& graph, std::int64_t l, std::int64_t h)
        : g(graph), lo(l), hi(h), eval(graph), diag(graph.size(), l) {}

    void consider() {
        const auto big = detail::as_integers(diag);
        const ExactMatrix m = matrix_at(g, big);
        auto r = positive_kernel_vector(m);
        if (!r) return;
        found.push_back(verify_structure(g, DiagonalAssignment(big), *r));
    }

    // Entries before k are fixed, the rest sit at lo.
    void descend(std::size_t k) {
        const std::size_t n = g.size();
        if (k + 1 == n) {
            diag[k] = 0;
            const Integer f0 = eval(diag).det;
            diag[k] = 1;
            const Integer alpha = eval(diag).det - f0;
            if (alpha == 0) {
                if (f0 == 0)
                    for (std::int64_t t = lo; t <= hi; ++t) {
                        diag[k] = t;
                        consider();
                    }
            } else if (mpz_divisible_p(f0.get_mpz_t(), alpha.get_mpz_t())) {
                const Integer t = -f0 / alpha;
                if (t >= lo && t <= hi) {
                    diag[k] = t.get_si();
                    consider();
                }
            }
            diag[k] = lo;
            return;
        }
        for (std::int64_t t = lo; t <= hi; ++t) {
            diag[k] = t;
            if (eval(diag).positive_definite) break;  // every completion is PD as well
            descend(k + 1);
        }
        diag[k] = lo;
    }
};

}  // namespace

StructureEnumeration enumerate_structures(const Multigraph& g, std::int64_t r, std::int64_t bound,
                                          unsigned jobs) {
    require(g.is_connected(), "structures are defined on connected graphs");
    require(r >= 1 && bound >= r, "box must satisfy 1 <= r <= bound");
    StructureEnumeration out{{}, Integer(r), Integer(bound)};
    std::mutex mu;
    const std::size_t n = g.size();
    if (n == 1) return out;
    run_workers(jobs, [&](unsigned w) {
        StructureSearch s(g, r, bound);
        const unsigned stride = std::max(1u, jobs);
        for (std::int64_t t = r + w; t <= bound; t += stride) {
            s.diag.assign(n, r);
            s.diag[0] = t;
            if (s.eval(s.diag).positive_definite) break;
            s.descend(1);
        }
        std::lock_guard<std::mutex> lock(mu);
        for (auto& x : s.found) out.items.push_back(std::move(x));
    });
    std::sort(out.items.begin(), out.items.end(),
              [](const auto& a, const auto& b) { return a.diag < b.diag; });
    return out;
}

namespace {

std::vector<Integer> ints(const std::vector<std::int64_t>& v) { return to_integers(v); }

}  // namespace

ArithmeticalStructure wheel_structure_even(int k) {
    require(k >= 2, "even wheel construction needs k >= 2");
    const std::size_t n = 2 * k;
    const Multigraph g = build_family({FamilyTag::W, {static_cast<int>(n)}, {}});
    std::vector<std::int64_t> s(k + 1, 0);  // s[i] = i + (i+1) + ... + k
    for (int i = k; i >= 1; --i) s[i] = (i < k ? s[i + 1] : 0) + i;
    std::vector<std::int64_t> r(n + 1), d(n + 1, 2);
    r[0] = 1;
    d[0] = static_cast<std::int64_t>(k) * (k + 1) * (2 * k + 1) / 3;
    for (int i = 1; i <= k; ++i) {
        r[i] = s[i];              // v_i
        r[2 * k + 1 - i] = s[i];  // w_i
    }
    d[k] = 3;
    d[k + 1] = 3;
    auto st = verify_structure(g, DiagonalAssignment(ints(d)), ints(r));
    ensure(st.group_order() == 6 * k - 1 && st.phi.is_cyclic(), "even wheel group mismatch");
    return st;
}

ArithmeticalStructure wheel_structure_odd(int k) {
    require(k >= 1, "odd wheel construction needs k >= 1");
    const std::size_t n = 2 * k + 1;
    const Multigraph g = build_family({FamilyTag::W, {static_cast<int>(n)}, {}});
    std::vector<std::int64_t> s(k + 1, 0);  // s[i] = 1 + i + ... + k
    for (int i = k; i >= 1; --i) s[i] = (i < k ? s[i + 1] : 1) + i;
    std::vector<std::int64_t> r(n + 1), d(n + 1, 2);
    r[0] = 1;
    std::int64_t sum = 0;
    for (int i = 1; i <= k; ++i) {
        r[i] = s[i];          // v_i
        r[n + 1 - i] = s[i];  // w_i
        sum += 2 * s[i];
    }
    r[k + 1] = 1;  // u'
    d[k + 1] = 2 * k + 3;
    d[0] = 1 + sum;
    auto st = verify_structure(g, DiagonalAssignment(ints(d)), ints(r));
    ensure(st.group_order() == Integer(2 * k + 1) * (2 * k + 1), "odd wheel group order mismatch");
    return st;
}

ArithmeticalStructure tadpole_structure(int k) {
    require(k >= 0, "tadpole construction needs k >= 0");
    const int n = k + 7;
    const Multigraph g = build_family({FamilyTag::CPlus, {n}, {}});
    // Cycle 0..n-1 with the pendant n on vertex 1.
    std::vector<std::int64_t> d = {2, 2, 2, 2, 3};
    std::vector<std::int64_t> r = {3, 4, 3, 2, 1};
    for (int i = 0; i < k; ++i) {
        d.push_back(2);
        r.push_back(1);
    }
    d.insert(d.end(), {3, 2, 2});
    r.insert(r.end(), {1, 2, 2});
    auto st = verify_structure(g, DiagonalAssignment(ints(d)), ints(r));
    ensure(st.group_order() == 2 * k + 5 && st.phi.is_cyclic(), "tadpole group mismatch");
    return st;
}

ArithmeticalStructure semidefinite_from_extended_dynkin(const Multigraph& h, std::size_t v,
                                                        DynkinVariant variant) {
    const std::size_t n = h.size();
    require(v < n, "vertex out of range");
    const std::vector<Integer> twos(n, Integer(2));
    auto rh = positive_kernel_vector(matrix_at(h, twos));
    require(rh.has_value() && h.is_connected(), "M_H(2,...,2) must be PSD of rank n-1");

    if (variant == DynkinVariant::TwoLeaves) {
        const Integer& rv = (*rh)[v];
        require(rv == 1 || rv == 2, "two-leaf variant needs R_H(v) in {1, 2}");
        const Integer scale = rv == 2 ? 1 : 2;
        std::vector<std::size_t> order{v};
        for (std::size_t i = 0; i < n; ++i)
            if (i != v) order.push_back(i);
        std::vector<Multigraph::Edge> edges{{0, 2, 1}, {1, 2, 1}};
        for (const auto& e : reorder(h, order).edges()) edges.push_back({e.u + 2, e.v + 2, e.multiplicity});
        const Multigraph g(n + 2, edges);
        std::vector<Integer> d(n + 2, Integer(2)), r{1, 1};
        d[2] = 3;
        for (auto i : order) r.push_back(scale * (*rh)[i]);
        return verify_structure(g, DiagonalAssignment(d), r);
    }

    require(h.is_tree() && h.neighbor_count(v) == 1, "leaf extension needs a leaf of a tree");
    const std::size_t p = h.neighbors(v).front();
    std::size_t pair = n;
    for (auto u : h.neighbors(p))
        if (u != v && h.neighbor_count(u) == 1) {
            pair = u;
            break;
        }
    require(pair < n, "leaf extension needs a second leaf next to v");
    std::vector<std::size_t> order{v, pair};
    for (std::size_t i = 0; i < n; ++i)
        if (i != v && i != pair) order.push_back(i);
    std::vector<Multigraph::Edge> edges{{0, 1, 1}};
    for (const auto& e : reorder(h, order).edges()) edges.push_back({e.u + 1, e.v + 1, e.multiplicity});
    const Multigraph g(n + 1, edges);
    std::vector<Integer> d(n + 1, Integer(2)), r{2, 4, 2};
    d[2] = 3;
    for (std::size_t i = 2; i < n; ++i) r.push_back(h.neighbor_count(order[i]) == 1 ? 3 : 6);
    return verify_structure(g, DiagonalAssignment(d), r);
}

}  // namespace arithgraph
