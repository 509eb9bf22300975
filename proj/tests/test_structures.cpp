#include <doctest.h>

#include <algorithm>
#include <map>

#include "arithgraph/error.hpp"
#include "arithgraph/structures.hpp"
#include "oracles.hpp"

using namespace arithgraph;

namespace {

Multigraph fam(const std::string& s) { return build_family(parse_family(s)); }

std::vector<Integer> I(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// Every diagonal in the box whose matrix is PSD of rank n-1, by the generic minor test.
std::vector<std::vector<Integer>> brute_structures(const Multigraph& g, long lo, long hi) {
    const std::size_t n = g.size();
    std::vector<std::vector<Integer>> out;
    std::vector<Integer> d(n, Integer(lo));
    while (true) {
        auto m = matrix_at(g, d);
        if (determinant(m) == 0 && is_psd_rank_deficient_one(m, false)) out.push_back(d);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (d[i] < hi) {
                d[i] += 1;
                break;
            }
            d[i] = lo;
            if (i == 0) return out;
        }
    }
}

std::vector<int> degree_sequence(const Multigraph& g) {
    std::vector<int> d;
    for (std::size_t i = 0; i < g.size(); ++i) d.push_back(g.degree(i));
    std::sort(d.begin(), d.end());
    return d;
}

Integer det_without(const ExactMatrix& m, std::vector<std::size_t> drop) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
    return determinant(m.principal_submatrix(keep));
}

}  // namespace

TEST_CASE("laplacian structure group order is the tree count") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_connected_multigraph(rng, 2 + trial % 5, 3, 0.5);
        auto s = laplacian_structure(g);
        CHECK(s.group_order() == spanning_tree_count(g));
    }
    for (int n = 4; n <= 6; ++n) CHECK(!laplacian_structure(fam("W" + std::to_string(n))).phi.is_cyclic());
    CHECK(laplacian_structure(fam("C5")).phi.is_cyclic());
}

TEST_CASE("verify_structure rejects broken inputs") {
    auto g = fam("C3");
    auto d = DiagonalAssignment(I({2, 2, 2}));
    CHECK_NOTHROW(verify_structure(g, d, I({1, 1, 1})));
    CHECK_THROWS_AS(verify_structure(g, d, I({2, 2, 2})), ContractError);
    CHECK_THROWS_AS(verify_structure(g, d, I({1, 1, 0})), ContractError);
    CHECK_THROWS_AS(verify_structure(g, d, I({1, 2, 1})), ContractError);
    CHECK_THROWS_AS(verify_structure(fam("A3"), DiagonalAssignment(I({1, 2, 2})), I({1, 1, 1})),
                    ContractError);
}

TEST_CASE("structure enumeration matches exhaustive scan") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + trial % 4;
        auto g = oracle::random_connected_multigraph(rng, n, 2, 0.6);
        const long hi = n <= 3 ? 9 : 5;
        auto found = enumerate_structures(g, 1, hi, 1 + trial % 3);
        auto expected = brute_structures(g, 1, hi);
        std::vector<std::vector<Integer>> got;
        for (const auto& s : found.items) got.push_back(s.diag.values());
        CHECK(got == expected);
    }
}

TEST_CASE("extended Dynkin diagrams have one structure at r = 2") {
    for (int n = 4; n <= 7; ++n) {
        auto e = enumerate_structures(fam("~D" + std::to_string(n)), 2, 6);
        REQUIRE(e.items.size() == 1);
        CHECK(e.items[0].diag.values() == std::vector<Integer>(n + 1, Integer(2)));
    }
}

TEST_CASE("tadpoles with small cycles carry these structures") {
    auto c4 = enumerate_structures(fam("C4+"), 2, 4);
    bool seen4 = false;
    for (const auto& s : c4.items)
        if (s.diag.values() == I({2, 2, 2, 3, 2})) {
            seen4 = true;
            CHECK(s.r == I({3, 4, 3, 2, 2}));
            CHECK(s.group_order() == 1);
        }
    CHECK(seen4);
    auto c6 = enumerate_structures(fam("C6+"), 2, 4);
    bool seen6 = false;
    for (const auto& s : c6.items)
        if (s.diag.values() == I({2, 2, 2, 2, 4, 2, 2})) {
            seen6 = true;
            CHECK(s.group_order() == 3);
        }
    CHECK(seen6);
}

TEST_CASE("even wheel structure") {
    auto w2 = wheel_structure_even(2);
    CHECK(w2.r == I({1, 3, 2, 2, 3}));
    CHECK(w2.diag.values() == I({10, 2, 3, 3, 2}));
    CHECK(w2.group_order() == 11);
    CHECK(wheel_structure_even(3).diag[0] == 28);
    for (int k = 2; k <= 7; ++k) {
        auto s = wheel_structure_even(k);
        auto m = s.matrix();
        CHECK(s.phi.is_cyclic());
        CHECK(s.group_order() == 6 * k - 1);
        CHECK(det_without(m, {0}) == 6 * k - 1);
        CHECK(det_without(m, {0, static_cast<std::size_t>(k)}) == 4 * k - 1);
    }
}

TEST_CASE("odd wheel structure") {
    auto w = wheel_structure_odd(2);
    CHECK(w.diag[0] == 15);
    CHECK(w.diag[3] == 7);
    CHECK(w.group_order() == 25);
    CHECK(!w.phi.is_cyclic());
    for (int k = 1; k <= 6; ++k) {
        auto s = wheel_structure_odd(k);
        CHECK(s.group_order() == (2 * k + 1) * (2 * k + 1));
        CHECK(s.phi.nontrivial() == I({2 * k + 1, 2 * k + 1}));
    }
}

TEST_CASE("tadpole structure") {
    for (int k = 0; k <= 6; ++k) {
        auto s = tadpole_structure(k);
        auto m = s.matrix();
        CHECK(s.graph == fam("C" + std::to_string(k + 7) + "+"));
        CHECK(s.group_order() == 2 * k + 5);
        CHECK(s.phi.is_cyclic());
        CHECK(det_without(m, {1}) == 16 * (2 * k + 5));
        CHECK(det_without(m, {1, 0}) == 2 * (12 * k + 29));
        CHECK(det_without(m, {1, 2}) == 2 * (12 * k + 29));
    }
}

TEST_CASE("semidefinite constructions from extended Dynkin diagrams") {
    // ~D6: chain 0..4, leaves 5 (on 1) and 6 (on 3); vertex 2 is the middle of the chain.
    auto g1 = semidefinite_from_extended_dynkin(fam("~D6"), 2, DynkinVariant::TwoLeaves);
    CHECK(g1.graph.size() == 9);
    CHECK(g1.r == I({1, 1, 2, 1, 2, 2, 1, 1, 1}));

    // Same tree as drawn with a determinant-one labeling.
    // order: v1 v33 w v2 v44 v55 v3 v v4
    Multigraph drawn(9, {{0, 1, 1}, {1, 3, 1}, {3, 6, 1}, {6, 8, 1}, {7, 6, 1}, {4, 3, 1}, {3, 5, 1}, {1, 2, 1}});
    CHECK(degree_sequence(drawn) == degree_sequence(g1.graph));
    CHECK(evaluate(drawn, I({4, 2, 15, 2, 5, 2, 2, 3, 4})) == 1);

    auto g2 = semidefinite_from_extended_dynkin(fam("~D5"), 0, DynkinVariant::TwoLeaves);
    CHECK(g2.graph.size() == 8);
    CHECK(g2.r[2] == 2);

    auto g3 = semidefinite_from_extended_dynkin(fam("~D5"), 0, DynkinVariant::LeafExtension);
    CHECK(g3.graph.size() == 7);
    CHECK(g3.r == I({2, 4, 2, 6, 6, 3, 3}));

    auto s5 = semidefinite_from_extended_dynkin(fam("~D4"), 0, DynkinVariant::LeafExtension);
    CHECK(degree_sequence(s5.graph) == degree_sequence(fam("S5+")));

    CHECK_THROWS_AS(semidefinite_from_extended_dynkin(fam("~D5"), 1, DynkinVariant::LeafExtension),
                    ContractError);
    CHECK_THROWS_AS(semidefinite_from_extended_dynkin(fam("E8"), 0, DynkinVariant::TwoLeaves), ContractError);
}
