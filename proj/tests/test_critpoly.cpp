#include <doctest.h>

#include "arithgraph/critpoly.hpp"
#include "arithgraph/error.hpp"
#include "oracles.hpp"

using namespace arithgraph;

namespace {

Multigraph fam(const std::string& s) { return build_family(parse_family(s)); }

std::vector<Integer> I(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

std::vector<Integer> filled(std::size_t n, long value) { return std::vector<Integer>(n, Integer(value)); }

LinearForm form_of(const LinearInT& r) {
    REQUIRE(std::holds_alternative<LinearForm>(r));
    return std::get<LinearForm>(r);
}

}  // namespace

TEST_CASE("evaluation examples") {
    CHECK(evaluate(fam("C3"), I({2, 2, 2})) == 0);
    CHECK(evaluate(fam("cone(A3)"), I({2, 2, 3, 5})) == 1);
    CHECK(evaluate(fam("A3(2,1)"), I({3, 2, 2})) == 1);
    CHECK(evaluate(fam("A3"), I({3, 2, 2})) == 7);
    // d = xyz - f^2 x - e^2 z for A3(e,f)
    CHECK(evaluate(fam("A3(3,2)"), I({5, 7, 11})) == 5 * 7 * 11 - 4 * 5 - 9 * 11);
    // d = xyz - e1^2 x - e2^2 y - e3^2 z - 2 e1 e2 e3 for C3(e1,e2,e3)
    CHECK(evaluate(fam("C3(2,3,5)"), I({7, 11, 13})) == 7 * 11 * 13 - 4 * 7 - 9 * 11 - 25 * 13 - 2 * 30);
    CHECK_THROWS_AS(evaluate(fam("A3"), I({1, 2})), ContractError);
    CHECK_THROWS_AS(DiagonalAssignment(I({1, 0})), ContractError);
}

TEST_CASE("evaluation agrees with cofactor expansion on random multigraphs") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 6;
        auto g = oracle::random_multigraph(rng, n, 3, 0.5);
        auto d = oracle::random_diag(rng, n, 1, 9);
        CHECK(evaluate(g, d) == oracle::cofactor_det(matrix_at(g, d)));
    }
}

TEST_CASE("critical polynomial is affine in each coordinate") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + trial % 5;
        auto g = oracle::random_multigraph(rng, n, 2, 0.6);
        auto d = oracle::random_diag(rng, n, 1, 6);
        std::size_t i = trial % n;
        auto at = [&](long t) {
            auto e = d;
            e[i] = t;
            return evaluate(g, e);
        };
        CHECK(at(9) - 2 * at(8) + at(7) == 0);
    }
}

TEST_CASE("laplacian has determinant zero and its line is (kappa, kappa*deg)") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_connected_multigraph(rng, 2 + trial % 5, 3, 0.6);
        CHECK(determinant(g.laplacian()) == 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            auto f = laplacian_line(g, i);
            CHECK(f.alpha == spanning_tree_count(g));
            CHECK(f.beta == f.alpha * g.degree(i));
        }
    }
}

TEST_CASE("linear forms of named families") {
    for (int n = 2; n <= 12; ++n) {
        auto f = form_of(linear_in_t(fam("A" + std::to_string(n)), 0, filled(n - 1, 2)));
        CHECK(f == LinearForm{n, n - 1});
    }
    for (int n = 2; n <= 12; ++n) {
        auto f = form_of(linear_in_t(fam("C" + std::to_string(n) + "+"), 0, filled(n, 2)));
        CHECK(f == LinearForm{n + 1, 3 * n + 2});
        CHECK(f.at(3) == 1);
    }
    for (int n = 4; n <= 12; ++n) {
        auto rest = filled(n - 1, 2);
        rest.back() = 3;
        auto f = form_of(linear_in_t(fam("D" + std::to_string(n)), 0, rest));
        CHECK(f == LinearForm{n + 3, n + 2});
    }
    for (int n = 3; n <= 12; ++n) {
        auto rest = filled(n - 1, 2);
        rest.back() = 3;
        auto f = form_of(linear_in_t(fam("C" + std::to_string(n)), 0, rest));
        CHECK(f == LinearForm{2 * n - 1, 3 * n - 2});
    }
    // removing the pendant leaves the all-2 cycle, which is singular
    auto r = linear_in_t(fam("C5+"), 5, filled(5, 2));
    REQUIRE(std::holds_alternative<DegenerateForm>(r));
    CHECK(std::get<DegenerateForm>(r).alpha == 0);
}

TEST_CASE("linear form matches direct evaluation") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 2 + trial % 5;
        auto g = oracle::random_multigraph(rng, n, 3, 0.6);
        auto rest = oracle::random_diag(rng, n - 1, 1, 7);
        std::size_t v = trial % n;
        auto r = linear_in_t(g, v, rest);
        Integer a, b;
        std::visit([&](const auto& f) {
            a = f.alpha;
            b = f.beta;
        }, r);
        for (long t : {1L, 2L, 5L}) {
            std::vector<Integer> full;
            for (std::size_t i = 0, k = 0; i < n; ++i) full.push_back(i == v ? Integer(t) : rest[k++]);
            CHECK(evaluate(g, full) == a * t - b);
        }
    }
}

TEST_CASE("complete graph closed form") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 7;
        auto x = oracle::random_diag(rng, n, 1, 30);
        CHECK(complete_graph_det(x) == evaluate(fam("K" + std::to_string(n)), x));
    }
    CHECK(complete_graph_det(filled(4, 2)) == -27);
}

TEST_CASE("K(2,q) closed form") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t q = 1 + trial % 6;
        auto d = oracle::random_diag(rng, q + 2, 1, 25);
        std::vector<Integer> y(d.begin() + 2, d.end());
        auto g = fam("K(2," + std::to_string(q) + ")");
        CHECK(bipartite_K2q_det(d[0], d[1], y) == evaluate(g, d));
    }
}

TEST_CASE("pendant extension of a linear form") {
    for (int n = 2; n <= 9; ++n)
        for (int e = 1; e <= 3; ++e)
            for (long q = 1; q <= 4; ++q) {
                auto base = form_of(linear_in_t(fam("A" + std::to_string(n)), 0, filled(n - 1, 2)));
                auto ext = extend_pendant_form(Integer(q), e, base);
                auto g = attach_pendant(fam("A" + std::to_string(n)), 0, e);
                for (long t : {2L, 3L, 11L}) {
                    auto d = filled(n + 1, 2);
                    d[0] = t;
                    d[n] = q;
                    CHECK(evaluate(g, d) == ext.form.at(t));
                }
                CHECK(ext.content == gcd(ext.form.alpha, ext.form.beta));
            }
    auto f = extend_pendant_form(Integer(1), 1, LinearForm{5, 4});
    CHECK(f.form == LinearForm{5, 9});
}
