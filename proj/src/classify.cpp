#include "arithgraph/classify.hpp"

#include <algorithm>
#include <map>

#include "arithgraph/error.hpp"

namespace arithgraph {

std::string FamilyMatch::name() const { return primary ? primary->name() : "other"; }

namespace {

std::vector<int> degree_sequence(const Multigraph& g) {
    std::vector<int> d;
    for (std::size_t i = 0; i < g.size(); ++i) d.push_back(g.degree(i));
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<FamilySpec> candidates(const Multigraph& g) {
    const int n = static_cast<int>(g.size());
    std::vector<FamilySpec> out;
    auto add = [&](FamilyTag t, std::vector<int> p) { out.push_back({t, std::move(p), {}}); };
    if (n >= 1) add(FamilyTag::A, {n});
    if (n >= 4) add(FamilyTag::D, {n});
    if (n >= 6 && n <= 8) add(FamilyTag::E, {n});
    if (n - 1 >= 4) add(FamilyTag::TildeD, {n - 1});
    if (n - 1 >= 6 && n - 1 <= 8) add(FamilyTag::TildeE, {n - 1});
    if (n >= 2) add(FamilyTag::C, {n});
    if (n - 1 >= 2) add(FamilyTag::CPlus, {n - 1});
    if (n >= 1) add(FamilyTag::K, {n});
    if (n - 1 >= 1) add(FamilyTag::KPlus, {n - 1});
    for (int p = 1; 2 * p <= n; ++p) add(FamilyTag::Kpq, {p, n - p});
    if (n >= 4) add(FamilyTag::S, {n});
    if (n - 1 >= 4) add(FamilyTag::SPlus, {n - 1});
    if (n - 1 >= 3) add(FamilyTag::W, {n - 1});
    if (n == 2 && g.multiplicity(0, 1) >= 1) add(FamilyTag::Banana, {g.multiplicity(0, 1)});
    if (n == 3) {
        // weighted path with the middle vertex adjacent to both others
        for (std::size_t mid = 0; mid < 3; ++mid) {
            const std::size_t a = (mid + 1) % 3, b = (mid + 2) % 3;
            if (g.adjacent(mid, a) && g.adjacent(mid, b) && !g.adjacent(a, b)) {
                int e = g.multiplicity(mid, a), f = g.multiplicity(mid, b);
                if (e < f) std::swap(e, f);
                add(FamilyTag::WeightedPath, {e, f});
            }
        }
        if (g.adjacent(0, 1) && g.adjacent(0, 2) && g.adjacent(1, 2)) {
            std::vector<int> m = {g.multiplicity(1, 2), g.multiplicity(0, 2), g.multiplicity(0, 1)};
            std::sort(m.rbegin(), m.rend());
            add(FamilyTag::WeightedTriangle, m);
        }
    }
    return out;
}

}  // namespace

FamilyMatch recognize_family(const Multigraph& g) {
    FamilyMatch out;
    if (g.size() == 0 || !g.is_connected()) return out;
    const auto degrees = degree_sequence(g);
    for (const auto& spec : candidates(g)) {
        const Multigraph h = build_family(spec);
        if (degree_sequence(h) != degrees || !isomorphic(g, h)) continue;
        if (!out.primary)
            out.primary = spec;
        else
            out.aliases.push_back(spec);
    }
    if (!out.primary) {
        // cone over a recognized graph
        for (std::size_t apex = 0; apex < g.size() && g.size() >= 3; ++apex) {
            bool full = true;
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != apex && g.multiplicity(apex, j) != 1) full = false;
            if (!full) continue;
            const auto inner = recognize_family(delete_vertex(g, apex).graph);
            if (!inner.primary) continue;
            out.primary = FamilySpec{FamilyTag::Cone, {}, {*inner.primary}};
            break;
        }
    }
    return out;
}

std::string to_string(DynkinNumeric d) {
    switch (d) {
        case DynkinNumeric::PositiveDefinite: return "PD-at-2";
        case DynkinNumeric::SemidefiniteZero: return "PSD0-at-2";
        case DynkinNumeric::Neither: return "neither";
    }
    return "neither";
}

namespace {

DynkinNumeric numeric_kind(const Multigraph& g) {
    const ExactMatrix m = matrix_at(g, std::vector<Integer>(g.size(), Integer(2)));
    if (is_positive_definite(m)) return DynkinNumeric::PositiveDefinite;
    if (determinant(m) == 0 && is_psd_rank_deficient_one(m, true)) return DynkinNumeric::SemidefiniteZero;
    return DynkinNumeric::Neither;
}

bool has_tag(const FamilyMatch& f, std::initializer_list<FamilyTag> tags) {
    auto hit = [&](const FamilySpec& s) { return std::find(tags.begin(), tags.end(), s.tag) != tags.end(); };
    if (f.primary && hit(*f.primary)) return true;
    return std::any_of(f.aliases.begin(), f.aliases.end(), hit);
}

}  // namespace

DynkinNumeric dynkin_numeric_check(const Multigraph& g) {
    require(g.size() >= 1 && g.is_connected(), "Dynkin check needs a connected graph");
    const DynkinNumeric kind = numeric_kind(g);
    const FamilyMatch f = recognize_family(g);
    ensure((kind == DynkinNumeric::PositiveDefinite) == has_tag(f, {FamilyTag::A, FamilyTag::D, FamilyTag::E}),
           "positive definite at 2 must mean A, D or E");
    ensure((kind == DynkinNumeric::SemidefiniteZero) ==
               has_tag(f, {FamilyTag::C, FamilyTag::TildeD, FamilyTag::TildeE}),
           "singular semidefinite at 2 must mean C, ~D or ~E");
    return kind;
}

std::vector<Multigraph> dynkin_census(std::size_t max_n, int max_multiplicity, DynkinNumeric kind) {
    require(kind != DynkinNumeric::Neither, "census covers the PD and PSD0 kinds");
    require(max_multiplicity >= 1, "multiplicity bound must be >= 1");
    std::vector<Multigraph> out;
    std::vector<Multigraph> pd = {Multigraph(1)};
    if (kind == DynkinNumeric::PositiveDefinite && max_n >= 1) out.push_back(pd[0]);
    for (std::size_t k = 2; k <= max_n; ++k) {
        std::map<std::vector<int>, Multigraph> next_pd, next_zero;
        for (const auto& h : pd) {
            std::vector<int> attach(k - 1, 0);
            while (true) {
                std::size_t i = 0;
                while (i < attach.size() && attach[i] == max_multiplicity) attach[i++] = 0;
                if (i == attach.size()) break;
                ++attach[i];
                auto edges = h.edges();
                for (std::size_t j = 0; j + 1 < k; ++j)
                    if (attach[j] > 0) edges.push_back({j, k - 1, attach[j]});
                Multigraph g(k, edges);
                const auto kd = numeric_kind(g);
                if (kd == DynkinNumeric::PositiveDefinite) next_pd.emplace(canonical_code(g), g);
                if (kd == DynkinNumeric::SemidefiniteZero) next_zero.emplace(canonical_code(g), g);
            }
        }
        pd.clear();
        for (auto& [c, g] : next_pd) pd.push_back(g);
        auto& chosen = kind == DynkinNumeric::PositiveDefinite ? next_pd : next_zero;
        for (auto& [c, g] : chosen) out.push_back(g);
    }
    return out;
}

std::string to_string(TypesKind k) {
    switch (k) {
        case TypesKind::Tree: return "tree";
        case TypesKind::Cycle: return "cycle";
        case TypesKind::Complete: return "complete";
        case TypesKind::CompleteBipartite: return "complete-bipartite";
        case TypesKind::HasSeed: return "has-seed";
    }
    return "tree";
}

namespace {

bool is_cycle_graph(const Multigraph& g) {
    if (g.size() < 3 || !g.is_connected()) return false;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.degree(i) != 2 || g.neighbor_count(i) != 2) return false;
    return true;
}

bool is_complete_graph(const Multigraph& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.multiplicity(i, j) != 1) return false;
    return true;
}

// Both parts of size >= 2.
bool is_complete_bipartite(const Multigraph& g) {
    const std::size_t n = g.size();
    std::vector<int> side(n, -1);
    side[0] = 0;
    std::vector<std::size_t> queue = {0};
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (auto v : g.neighbors(queue[h]))
            if (side[v] < 0) {
                side[v] = 1 - side[queue[h]];
                queue.push_back(v);
            }
    std::size_t left = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (side[i] == 0) ++left;
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.multiplicity(i, j) != (side[i] != side[j] ? 1 : 0)) return false;
    }
    return left >= 2 && n - left >= 2;
}

}  // namespace

TypesResult types_decompose(const Multigraph& g) {
    require(g.size() >= 1 && g.is_connected(), "types decomposition needs a connected graph");
    require(g.is_simple(), "types decomposition needs a simple graph");
    if (g.is_tree()) return {TypesKind::Tree, {}, {}};
    if (is_cycle_graph(g)) return {TypesKind::Cycle, {}, {}};
    if (g.size() >= 4 && is_complete_graph(g)) return {TypesKind::Complete, {}, {}};
    if (is_complete_bipartite(g)) return {TypesKind::CompleteBipartite, {}, {}};
    std::vector<FamilySpec> seeds = {{FamilyTag::CPlus, {3}, {}}, parse_family("cone(A3)")};
    for (int m = 4; m + 1 <= static_cast<int>(g.size()); ++m) seeds.push_back({FamilyTag::CPlus, {m}, {}});
    for (const auto& s : seeds)
        if (auto map = find_induced(g, build_family(s))) return {TypesKind::HasSeed, s.name(), *map};
    ensure(false, "graph is outside every type and has no induced C_m^+ or cone(A3)");
    return {};
}

PositivityVerdict positivity_verdict(const Multigraph& g, const SeedOptions& seeds) {
    const TypesResult t = types_decompose(g);
    PositivityVerdict v;
    if (g.size() >= 2) v.witness = positive_witness(g, 2, seeds);
    if (v.witness) {
        v.contains_all_positives = true;
        return v;
    }
    if (t.kind == TypesKind::HasSeed) {
        ensure(t.embedding.size() == g.size(), "a proper induced seed always yields a witness");
        v.family = t.seed;
    } else {
        v.family = to_string(t.kind);
    }
    return v;
}

}  // namespace arithgraph
