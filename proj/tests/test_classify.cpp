#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "arithgraph/classify.hpp"
#include "arithgraph/error.hpp"
#include "oracles.hpp"

using namespace arithgraph;

namespace {

Multigraph fam(const std::string& s) { return build_family(parse_family(s)); }

// Isomorphism by trying every permutation.
bool brute_isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i)
            for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a.multiplicity(i, j) == b.multiplicity(p[i], p[j]);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace

TEST_CASE("canonical codes separate isomorphism classes") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 6;
        auto a = oracle::random_multigraph(rng, n, 2, 0.5);
        auto b = oracle::random_multigraph(rng, n, 2, 0.5);
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(canonical_code(a) == canonical_code(reorder(a, p)));
        CHECK(isomorphic(a, reorder(a, p)));
        const bool same = brute_isomorphic(a, b);
        CHECK((canonical_code(a) == canonical_code(b)) == same);
        CHECK(isomorphic(a, b) == same);
    }
}

TEST_CASE("graph catalogue counts") {
    // connected simple graphs on 1..7 vertices
    const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853};
    for (std::size_t n = 1; n <= 7; ++n) CHECK(all_graphs(n, 1, true).size() == connected[n - 1]);
    const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156};
    for (std::size_t n = 1; n <= 6; ++n) CHECK(all_graphs(n, 1, false).size() == all[n - 1]);
}

TEST_CASE("induced subgraph search") {
    CHECK(find_induced(fam("W4"), fam("cone(A3)")));
    CHECK(!find_induced(fam("K4"), fam("C3+")));
    CHECK(!find_induced(fam("K(2,3)"), fam("C4+")));
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_multigraph(rng, 7, 2, 0.5);
        auto h = oracle::random_multigraph(rng, 3 + trial % 3, 2, 0.6);
        auto map = find_induced(g, h);
        if (map) CHECK(canonical_code(induced_subgraph(g, *map).graph) == canonical_code(h));
        // embed h on purpose
        std::vector<Multigraph::Edge> edges = g.edges();
        Multigraph big(g.size() + h.size(), edges);
        auto he = h.edges();
        for (auto e : he) edges.push_back({e.u + g.size(), e.v + g.size(), e.multiplicity});
        big = Multigraph(g.size() + h.size(), edges);
        auto found = find_induced(big, h);
        REQUIRE(found);
        CHECK(canonical_code(induced_subgraph(big, *found).graph) == canonical_code(h));
    }
}

TEST_CASE("family recognition") {
    for (const char* s : {"A1", "A6", "D5", "E7", "~D6", "~E6", "~E8", "C5", "C5+", "K5", "K4+", "K(2,4)", "S5",
                          "S5+", "W5", "banana(3)", "A3(2,1)", "C3(2,1,1)", "cone(A4)"}) {
        CAPTURE(s);
        auto f = recognize_family(fam(s));
        REQUIRE(f.primary);
        CHECK(isomorphic(build_family(*f.primary), fam(s)));
    }
    auto k4 = recognize_family(fam("K4"));
    CHECK(k4.name() == "K4");
    CHECK(std::count(k4.aliases.begin(), k4.aliases.end(), parse_family("W3")) == 1);
    auto c3p = recognize_family(fam("C3+"));
    CHECK(c3p.name() == "C3+");
    CHECK(std::count(c3p.aliases.begin(), c3p.aliases.end(), parse_family("K3+")) == 1);
    CHECK(recognize_family(fam("A5")).name() == "A5");
    CHECK(recognize_family(fam("cone(C5)")).name() == "W5");
    CHECK(recognize_family(reorder(fam("E8"), {7, 3, 5, 1, 0, 2, 4, 6})).name() == "E8");
    Multigraph odd(5, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 3, 1}, {3, 4, 1}, {4, 2, 1}});
    CHECK(recognize_family(odd).name() == "other");
}

TEST_CASE("Dynkin numeric check") {
    CHECK(dynkin_numeric_check(fam("E7")) == DynkinNumeric::PositiveDefinite);
    CHECK(dynkin_numeric_check(fam("~E7")) == DynkinNumeric::SemidefiniteZero);
    CHECK(dynkin_numeric_check(fam("K5")) == DynkinNumeric::Neither);
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : all_graphs(n, n <= 4 ? 2 : 1, true)) CHECK_NOTHROW(dynkin_numeric_check(g));
}

TEST_CASE("Dynkin census") {
    auto pd = dynkin_census(9, 2, DynkinNumeric::PositiveDefinite);
    auto zero = dynkin_census(9, 2, DynkinNumeric::SemidefiniteZero);
    // A_n for n <= 9, D_n for 4 <= n <= 9, E6, E7, E8
    CHECK(pd.size() == 9 + 6 + 3);
    // C_n for 2 <= n <= 9, ~D_n for 4 <= n <= 8, ~E6, ~E7, ~E8
    CHECK(zero.size() == 8 + 5 + 3);
    for (const auto& g : pd) {
        auto f = recognize_family(g);
        REQUIRE(f.primary);
        CHECK((f.primary->tag == FamilyTag::A || f.primary->tag == FamilyTag::D || f.primary->tag == FamilyTag::E));
    }
    for (const auto& g : zero) {
        auto f = recognize_family(g);
        REQUIRE(f.primary);
        const auto t = f.primary->tag;
        CHECK((t == FamilyTag::C || t == FamilyTag::TildeD || t == FamilyTag::TildeE));
    }
    // agrees with the plain enumeration on small sizes
    for (std::size_t n = 1; n <= 5; ++n) {
        std::size_t count = 0;
        for (const auto& g : all_graphs(n, 2, true))
            count += dynkin_numeric_check(g) == DynkinNumeric::PositiveDefinite;
        std::size_t census = 0;
        for (const auto& g : pd) census += g.size() == n;
        CHECK(count == census);
    }
}

TEST_CASE("types decomposition") {
    CHECK(types_decompose(fam("S7")).kind == TypesKind::Tree);
    CHECK(types_decompose(fam("K(3,4)")).kind == TypesKind::CompleteBipartite);
    CHECK(types_decompose(fam("K6")).kind == TypesKind::Complete);
    Multigraph chord(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 0, 1}, {0, 2, 1}});
    CHECK(types_decompose(chord).kind == TypesKind::HasSeed);
    CHECK_THROWS_AS(types_decompose(fam("banana(2)")), ContractError);

    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : all_graphs(n, 1, true)) {
            auto t = types_decompose(g);
            const bool seed = oracle::brute_has_seed(g);
            if (t.kind == TypesKind::HasSeed) {
                CHECK(seed);
                auto h = induced_subgraph(g, t.embedding).graph;
                CHECK((oracle::looks_like_cplus(h) || oracle::looks_like_diamond(h)));
            } else {
                CHECK(!seed);
                if (t.kind == TypesKind::CompleteBipartite) CHECK(oracle::brute_complete_bipartite(g));
                if (t.kind == TypesKind::Complete) CHECK(oracle::edge_count(g) == static_cast<int>(n * (n - 1) / 2));
                if (t.kind == TypesKind::Tree) CHECK(g.is_tree());
            }
        }
}

TEST_CASE("positivity verdicts") {
    auto w6 = positivity_verdict(fam("W6"), {});
    CHECK(w6.contains_all_positives);
    REQUIRE(w6.witness);
    CHECK(evaluate(fam("W6"), w6.witness->value(fam("W6"), 17)) == 17);
    auto s7 = positivity_verdict(fam("S7"), {});
    CHECK(!s7.contains_all_positives);
    CHECK(s7.family == "tree");
    CHECK(positivity_verdict(fam("C6"), {}).family == "cycle");
    CHECK(positivity_verdict(fam("C7+"), {}).family == "C7+");
    CHECK(positivity_verdict(fam("C8+"), {}).contains_all_positives);
    CHECK(positivity_verdict(fam("cone(A3)"), {}).family == "cone(A3)");
    CHECK(positivity_verdict(fam("K7"), {}).family == "complete");
    CHECK(positivity_verdict(fam("~E8"), {}).contains_all_positives);
}
