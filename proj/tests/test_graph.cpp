#include <doctest.h>

#include <algorithm>
#include <map>

#include "arithgraph/error.hpp"
#include "arithgraph/graph.hpp"
#include "oracles.hpp"

using namespace arithgraph;

namespace {

Multigraph fam(const std::string& s) { return build_family(parse_family(s)); }

std::vector<int> degree_sequence(const Multigraph& g) {
    std::vector<int> d;
    for (std::size_t i = 0; i < g.size(); ++i) d.push_back(g.degree(i));
    std::sort(d.begin(), d.end());
    return d;
}

// Counts spanning trees by checking every (n-1)-subset of the edge multiset.
long brute_spanning_trees(const Multigraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : g.edges())
        for (int k = 0; k < e.multiplicity; ++k) edges.push_back({e.u, e.v});
    const std::size_t n = g.size();
    long count = 0;
    for (const auto& pick : oracle::subsets_of_size(edges.size(), n - 1)) {
        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool acyclic = true;
        for (auto idx : pick) {
            auto a = find(edges[idx].first), b = find(edges[idx].second);
            if (a == b) {
                acyclic = false;
                break;
            }
            parent[a] = b;
        }
        count += acyclic;
    }
    return count;
}

}  // namespace

TEST_CASE("family sizes and shapes") {
    CHECK(fam("A5").size() == 5);
    CHECK(fam("D6").size() == 6);
    CHECK(fam("E8").size() == 8);
    CHECK(fam("~D4").size() == 5);
    CHECK(fam("~E6").size() == 7);
    CHECK(fam("~E7").size() == 8);
    CHECK(fam("~E8").size() == 9);
    CHECK(fam("C7").size() == 7);
    CHECK(fam("C7+").size() == 8);
    CHECK(fam("K6+").size() == 7);
    CHECK(fam("K(2,5)").size() == 7);
    CHECK(fam("S6").size() == 6);
    CHECK(fam("S6+").size() == 7);
    CHECK(fam("W5").size() == 6);
    CHECK(fam("cone(A4)").size() == 5);
    CHECK(fam("banana(3)").multiplicity(0, 1) == 3);
    CHECK(fam("C2").multiplicity(0, 1) == 2);

    for (const char* t : {"A5", "D6", "E6", "E7", "E8", "~D4", "~D7", "~E6", "~E7", "~E8", "S6", "S6+"})
        CHECK(fam(t).is_tree());

    CHECK(degree_sequence(fam("~D4")) == std::vector<int>{1, 1, 1, 1, 4});
    CHECK(degree_sequence(fam("~D6")) == std::vector<int>{1, 1, 1, 1, 2, 3, 3});
    CHECK(degree_sequence(fam("D5")) == std::vector<int>{1, 1, 1, 2, 3});
    CHECK(degree_sequence(fam("W5")) == std::vector<int>{3, 3, 3, 3, 3, 5});
    CHECK(fam("W5").degree(0) == 5);
    CHECK(fam("S6").degree(0) == 5);
    CHECK(fam("C7+").degree(1) == 3);
    CHECK(fam("C7+").degree(7) == 1);

    // E_n arms from the branch vertex
    auto arms = [](const Multigraph& g) {
        std::size_t hub = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g.degree(i) == 3) hub = i;
        std::vector<int> lens;
        for (auto start : g.neighbors(hub)) {
            int len = 1;
            std::size_t prev = hub, cur = start;
            while (g.degree(cur) == 2) {
                for (auto nx : g.neighbors(cur))
                    if (nx != prev) {
                        prev = cur;
                        cur = nx;
                        break;
                    }
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end());
        return lens;
    };
    CHECK(arms(fam("E6")) == std::vector<int>{1, 2, 2});
    CHECK(arms(fam("E7")) == std::vector<int>{1, 2, 3});
    CHECK(arms(fam("E8")) == std::vector<int>{1, 2, 4});
    CHECK(arms(fam("~E6")) == std::vector<int>{2, 2, 2});
    CHECK(arms(fam("~E7")) == std::vector<int>{1, 3, 3});
    CHECK(arms(fam("~E8")) == std::vector<int>{1, 2, 5});
}

TEST_CASE("weighted families") {
    auto p = fam("A3(2,1)");
    CHECK(p.multiplicity(0, 1) == 2);
    CHECK(p.multiplicity(1, 2) == 1);
    auto t = fam("C3(2,1,1)");
    CHECK(t.multiplicity(1, 2) == 2);
    CHECK(t.multiplicity(0, 2) == 1);
    CHECK(t.multiplicity(0, 1) == 1);
}

TEST_CASE("family names round trip") {
    for (const char* s : {"A5", "D6", "E8", "~D4", "~E7", "C7", "C7+", "K6", "K6+", "K(2,5)", "S6", "S6+",
                          "W5", "cone(A4)", "banana(3)", "A3(2,1)", "C3(2,1,1)", "cone(cone(C4))"})
        CHECK(parse_family(s).name() == s);
}

TEST_CASE("invalid families are rejected") {
    for (const char* s : {"E9", "E5", "~D3", "~E9", "S3", "C1", "C1+", "W2", "D3", "A0", "banana(0)", "X4",
                          "K(0,3)", "A3(1)", "C4(1,1,1)", "A5+", "~A4", ""})
        CHECK_THROWS_AS(parse_family(s), ContractError);
}

TEST_CASE("graph construction contracts") {
    CHECK_THROWS_AS(Multigraph(3, {{1, 1, 1}}), ContractError);
    CHECK_THROWS_AS(Multigraph(3, {{0, 3, 1}}), ContractError);
    CHECK_THROWS_AS(Multigraph::from_multiplicities({{0, 1}, {2, 0}}), ContractError);
    CHECK_THROWS_AS(Multigraph::from_multiplicities({{1, 0}, {0, 0}}), ContractError);
    auto g = Multigraph(3, {{0, 1, 1}, {1, 0, 2}});
    CHECK(g.multiplicity(0, 1) == 3);
}

TEST_CASE("cone, pendant and induced subgraphs") {
    auto a3 = fam("A3");
    auto c = cone(a3);
    CHECK(c.size() == 4);
    CHECK(c.degree(0) == 3);
    CHECK(c.multiplicity(1, 2) == 1);
    CHECK(c.multiplicity(1, 3) == 0);
    auto p = attach_pendant(a3, 2, 3);
    CHECK(p.size() == 4);
    CHECK(p.multiplicity(2, 3) == 3);
    auto w = fam("W6");
    auto sub = induced_subgraph(w, {3, 0, 4});
    CHECK(sub.to_parent == std::vector<std::size_t>{3, 0, 4});
    CHECK(sub.graph.multiplicity(0, 2) == 1);
    CHECK(sub.graph.multiplicity(0, 1) == 1);
    CHECK(delete_vertex(w, 0).graph == fam("C6"));
    CHECK(cone(fam("C5")) == fam("W5"));
}

TEST_CASE("spanning tree counts") {
    for (int n = 2; n <= 7; ++n) {
        Integer cayley;
        mpz_ui_pow_ui(cayley.get_mpz_t(), n, n - 2);
        CHECK(spanning_tree_count(fam("K" + std::to_string(n))) == cayley);
        CHECK(spanning_tree_count(fam("C" + std::to_string(n))) == n);
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_connected_multigraph(rng, 2 + trial % 4, 2, 0.6);
        CHECK(spanning_tree_count(g) == brute_spanning_trees(g));
    }
}
