#include "arithgraph/constructive.hpp"

#include <algorithm>
#include <mutex>

#include "arithgraph/error.hpp"
#include "arithgraph/isomorphism.hpp"
#include "arithgraph/parallel.hpp"

namespace arithgraph {

namespace {

std::vector<Integer> fill(std::size_t n, long v) { return std::vector<Integer>(n, Integer(v)); }

bool pd_with_det(const Multigraph& g, const std::vector<Integer>& d, const Integer& det) {
    const ExactMatrix m = matrix_at(g, d);
    return determinant(m) == det && is_positive_definite(m);
}

std::vector<Integer> edge_vector(const Multigraph& g, std::size_t v) {
    std::vector<Integer> s;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (i != v) s.emplace_back(g.multiplicity(v, i));
    return s;
}

struct Step {
    Integer a;
    std::vector<Integer> adj_s;  // N* S
};

// N = M_{G - v}(rest) must be PD with det 1; returns a = S^T N* S, cross-checked against the linear form.
Step step_data(const Multigraph& g, std::size_t v, const std::vector<Integer>& rest) {
    const std::size_t n = g.size();
    require(n >= 2 && v < n, "induction needs a vertex of a graph with at least two vertices");
    require(rest.size() + 1 == n, "labeling size must be n - 1");
    require(g.is_connected(), "induction needs a connected graph");
    const Subgraph sub = delete_vertex(g, v);
    require(sub.graph.is_connected(), "G minus v must be connected");
    const ExactMatrix nm = matrix_at(sub.graph, rest);
    require(determinant(nm) == 1 && is_positive_definite(nm), "labeling of G minus v must be PD with det 1");
    const auto s = edge_vector(g, v);
    Step out{0, adjugate(nm) * s};
    for (std::size_t i = 0; i < s.size(); ++i) out.a += s[i] * out.adj_s[i];
    const auto form = linear_in_t(g, v, rest);
    ensure(std::holds_alternative<LinearForm>(form), "slope must be det N = 1");
    ensure(std::get<LinearForm>(form) == LinearForm{1, out.a}, "linear form disagrees with S^T N* S");
    return out;
}

std::vector<Integer> with_vertex(const std::vector<Integer>& rest, std::size_t v, const Integer& t) {
    std::vector<Integer> d = rest;
    d.insert(d.begin() + static_cast<std::ptrdiff_t>(v), t);
    return d;
}

struct CatalogueEntry {
    std::string name;
    Multigraph graph;
    std::vector<Integer> diag;
};

std::vector<CatalogueEntry> catalogue(std::size_t max_size, const SeedOptions& options) {
    std::vector<CatalogueEntry> out;
    for (std::size_t m = 2; m + 1 <= max_size; ++m) {
        auto d = fill(m + 1, 2);
        d[0] = 3;
        FamilySpec f{FamilyTag::CPlus, {static_cast<int>(m)}, {}};
        out.push_back({f.name(), build_family(f), d});
    }
    if (max_size >= 4) out.push_back({"cone(A3)", build_family(parse_family("cone(A3)")), {2, 2, 3, 5}});
    if (max_size >= 8) out.push_back({"E8", build_family(parse_family("E8")), fill(8, 2)});
    out.push_back({"A3(2,1)", build_family(parse_family("A3(2,1)")), {3, 2, 2}});
    for (const auto& s : options.extra)
        if (s.graph.size() <= max_size) out.push_back({s.name, s.graph, s.diag});
    return out;
}

PartialWitness from_seed(const SeedMatch& s) {
    std::vector<std::size_t> idx(s.vertices.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return s.vertices[x] < s.vertices[y]; });
    PartialWitness p;
    for (auto i : idx) {
        p.vertices.push_back(s.vertices[i]);
        p.diag.push_back(s.diag[i]);
    }
    return p;
}

std::size_t position(const std::vector<std::size_t>& sorted, std::size_t v) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

struct Chained {
    PartialWitness partial;
    std::vector<ProvenanceStep> steps;
};

Chained run_chain(const Multigraph& g, const SeedMatch& seed, const std::vector<std::size_t>& chain) {
    Chained c{from_seed(seed), {}};
    for (auto w : chain) {
        Integer a;
        c.partial = extend_witness(g, c.partial, w, 1, &a);
        c.steps.push_back({w, a, c.partial.diag[position(c.partial.vertices, w)]});
    }
    return c;
}

}  // namespace

std::optional<SeedMatch> find_seed(const Multigraph& g, int r, const SeedOptions& options) {
    require(r == 1 || r == 2, "seeds exist for r = 1 and r = 2");
    require(g.size() >= 1 && g.is_connected(), "seed search needs a connected graph");
    const std::size_t n = g.size();
    const std::size_t max_size = options.proper_only ? n - 1 : n;
    if (r == 1) {
        if (max_size == 0) return std::nullopt;
        if (n == 1 || max_size == 1) return SeedMatch{"A1", {0}, {1}};
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (g.adjacent(u, v)) {
                    const int a = g.multiplicity(u, v);
                    const std::string name = a == 1 ? "A2" : "banana(" + std::to_string(a) + ")";
                    return SeedMatch{name, {u, v}, {Integer(a * a + 1), 1}};
                }
    }
    for (const auto& entry : catalogue(max_size, options)) {
        if (entry.graph.size() > max_size) continue;
        for (const auto& x : entry.diag) require(x >= r, "catalogue labeling below r");
        auto map = find_induced(g, entry.graph);
        if (!map) continue;
        ensure(pd_with_det(entry.graph, entry.diag, 1), "catalogue seed is not PD with det 1");
        return SeedMatch{entry.name, *map, entry.diag};
    }
    return std::nullopt;
}

std::vector<std::size_t> connected_extension_chain(const Multigraph& g, const std::vector<std::size_t>& h) {
    require(!h.empty(), "the starting set must be nonempty");
    require(g.is_connected(), "extension chains need a connected graph");
    require(induced_subgraph(g, h).graph.is_connected(), "the starting subgraph must be connected");
    std::vector<bool> in(g.size(), false);
    for (auto v : h) in[v] = true;
    std::vector<std::size_t> chain;
    while (true) {
        std::size_t pick = g.size();
        for (std::size_t v = 0; v < g.size() && pick == g.size(); ++v) {
            if (in[v]) continue;
            for (auto u : g.neighbors(v))
                if (in[u]) {
                    pick = v;
                    break;
                }
        }
        if (pick == g.size()) break;
        in[pick] = true;
        chain.push_back(pick);
    }
    return chain;
}

DiagonalAssignment induction_step(const Multigraph& g, std::size_t v, const std::vector<Integer>& rest,
                                  const Integer& m) {
    require(m >= 1, "target must be >= 1");
    const Step s = step_data(g, v, rest);
    DiagonalAssignment d(with_vertex(rest, v, s.a + m));
    ensure(pd_with_det(g, d.values(), m), "induction step missed its target");
    return d;
}

ArithmeticalStructure induction_zero(const Multigraph& g, std::size_t v, const std::vector<Integer>& rest,
                                     std::int64_t r) {
    const Step s = step_data(g, v, rest);
    require(s.a >= r, "zero case needs a = S^T N* S >= r, which fails here");
    const DiagonalAssignment d(with_vertex(rest, v, s.a));
    auto st = verify_structure(g, d, with_vertex(s.adj_s, v, 1));
    ensure(st.group_order() == 1, "zero case group must be trivial");
    return st;
}

PartialWitness extend_witness(const Multigraph& host, const PartialWitness& p, std::size_t w, const Integer& m,
                              Integer* a_out) {
    require(w < host.size() && !std::binary_search(p.vertices.begin(), p.vertices.end(), w),
            "added vertex must be new");
    PartialWitness out;
    out.vertices = p.vertices;
    out.vertices.insert(out.vertices.begin() + static_cast<std::ptrdiff_t>(position(p.vertices, w)), w);
    const auto sub = induced_subgraph(host, out.vertices);
    const std::size_t v = position(out.vertices, w);
    if (a_out) *a_out = step_data(sub.graph, v, p.diag).a;
    out.diag = induction_step(sub.graph, v, p.diag, m).values();
    return out;
}

ArithmeticalStructure close_with_zero(const Multigraph& host, const PartialWitness& p, std::size_t w,
                                      std::int64_t r) {
    require(p.vertices.size() + 1 == host.size() && !std::binary_search(p.vertices.begin(), p.vertices.end(), w),
            "partial witness must cover every host vertex except w");
    return induction_zero(host, w, p.diag, r);
}

std::optional<UnitWitness> unit_witness(const Multigraph& g, int r, const SeedOptions& options) {
    auto seed = find_seed(g, r, options);
    if (!seed) return std::nullopt;
    const auto chain = connected_extension_chain(g, seed->vertices);
    Chained c = run_chain(g, *seed, chain);
    UnitWitness w{g, DiagonalAssignment(c.partial.diag), seed->name, seed->vertices, std::move(c.steps)};
    ensure(pd_with_det(g, w.diag.values(), 1), "unit witness is not PD with det 1");
    for (const auto& x : w.diag.values()) ensure(x >= r, "unit witness below r");
    return w;
}

DiagonalAssignment PositiveWitness::value(const Multigraph& g, const Integer& m) const {
    return induction_step(g, vertex, base.diag.values(), m);
}

std::optional<PositiveWitness> positive_witness(const Multigraph& g, int r, const SeedOptions& options) {
    require(g.size() >= 2, "positive witness needs at least two vertices");
    SeedOptions proper = options;
    proper.proper_only = true;
    auto seed = find_seed(g, r, proper);
    if (!seed) return std::nullopt;
    auto chain = connected_extension_chain(g, seed->vertices);
    ensure(!chain.empty(), "proper seed leaves at least one vertex");
    const std::size_t last = chain.back();
    chain.pop_back();
    Chained c = run_chain(g, *seed, chain);

    const auto& kept = c.partial.vertices;
    PositiveWitness pw;
    pw.vertex = last;
    pw.base_to_g = kept;
    pw.base.graph = induced_subgraph(g, kept).graph;
    pw.base.diag = DiagonalAssignment(c.partial.diag);
    pw.base.seed = seed->name;
    for (auto v : seed->vertices) pw.base.seed_vertices.push_back(position(kept, v));
    for (auto step : c.steps) {
        step.added = position(kept, step.added);
        pw.base.steps.push_back(step);
    }
    ensure(pd_with_det(pw.base.graph, pw.base.diag.values(), 1), "base witness is not PD with det 1");
    return pw;
}

ArithmeticalStructure trivial_group_structure(const Multigraph& g) {
    const std::size_t n = g.size();
    require(n >= 2 && g.is_connected(), "trivial group construction needs a connected graph on >= 2 vertices");
    std::size_t v = n;
    for (std::size_t i = n; i-- > 0 && v == n;)
        if (delete_vertex(g, i).graph.is_connected()) v = i;
    const auto base = unit_witness(delete_vertex(g, v).graph, 1);
    ensure(base.has_value(), "every connected graph has an r = 1 unit witness");
    auto st = induction_zero(g, v, base->diag.values(), 1);
    ensure(st.phi.nontrivial().empty(), "group is not trivial");
    return st;
}

bool egyptian_check(const std::vector<Integer>& y) {
    require(!y.empty(), "need at least one term");
    Rational sum = 0;
    Integer prod = 1;
    for (const auto& v : y) {
        require(v >= 1, "terms must be >= 1");
        sum += Rational(1, v);
        prod *= v;
    }
    sum += Rational(1, prod);
    return sum == 1;
}

namespace {

struct EgyptSearch {
    int n;
    std::int64_t min_y;
    std::vector<Integer> y;
    std::optional<std::vector<Integer>> found;

    // deficit = 1 - sum of chosen 1/y; prod = product of chosen y.
    bool descend(const Rational& deficit, const Integer& prod) {
        const int k = n - static_cast<int>(y.size());  // terms still to choose
        const Integer prev = y.empty() ? Integer(min_y - 1) : y.back();
        if (k == 1) {
            // 1/t + 1/(prod t) = deficit
            const Rational t = Rational(prod + 1, prod) / deficit;
            if (t.get_den() != 1) return false;
            const Integer v = t.get_num();
            if (v <= prev || v < min_y || gcd(v, prod) != 1) return false;
            y.push_back(v);
            found = y;
            return true;
        }
        Integer lo = prev + 1;
        const Integer above = floor_of(Rational(1 / deficit)) + 1;  // 1/t < deficit
        if (above > lo) lo = above;
        // deficit < k/t + 1/(prod t)
        const Rational cap = (Rational(k) + Rational(1, prod)) / deficit;
        const Integer hi = floor_of(cap);
        for (Integer t = lo; t <= hi; ++t) {
            if (gcd(t, prod) != 1) continue;
            y.push_back(t);
            if (descend(deficit - Rational(1, t), prod * t)) return true;
            y.pop_back();
        }
        return false;
    }

    static Integer floor_of(const Rational& q) {
        Integer out;
        mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        return out;
    }
};

}  // namespace

std::optional<std::vector<Integer>> egyptian_search(int n, std::int64_t min_y, unsigned jobs) {
    require(n >= 1, "need n >= 1");
    require(min_y >= 2, "need min_y >= 2");
    if (n == 1) {
        EgyptSearch s{n, min_y, {}, std::nullopt};
        s.descend(Rational(1), Integer(1));
        return s.found;
    }
    // First level: min_y <= y_1 <= n + 1 (deficit 1 < (n + 1)/y_1 for the smallest term).
    std::vector<std::int64_t> firsts;
    for (std::int64_t t = min_y; t <= n + 1; ++t) firsts.push_back(t);
    std::vector<std::optional<std::vector<Integer>>> results(firsts.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(firsts.size())));
    run_workers(workers, [&](unsigned w) {
        for (std::size_t i = w; i < firsts.size(); i += workers) {
            EgyptSearch s{n, min_y, {Integer(firsts[i])}, std::nullopt};
            s.descend(Rational(1) - Rational(1, firsts[i]), Integer(firsts[i]));
            results[i] = s.found;
        }
    });
    for (auto& r : results)
        if (r) {
            ensure(egyptian_check(*r), "egyptian search returned a non-solution");
            return r;
        }
    return std::nullopt;
}

std::vector<Integer> extend_egyptian(const std::vector<Integer>& y) {
    require(egyptian_check(y), "not a solution");
    Integer prod = 1;
    for (const auto& v : y) prod *= v;
    auto out = y;
    out.push_back(prod + 1);
    ensure(egyptian_check(out), "extension is not a solution");
    return out;
}

CatalogueSeed kn_seed_from_solution(const std::vector<Integer>& y) {
    require(egyptian_check(y), "not a solution of the unit fraction equation");
    for (const auto& v : y) require(v >= 3, "every term must be >= 3");
    const int n = static_cast<int>(y.size());
    FamilySpec f{FamilyTag::K, {n}, {}};
    std::vector<Integer> x;
    for (const auto& v : y) x.push_back(v - 1);
    CatalogueSeed s{f.name(), build_family(f), x};
    ensure(pd_with_det(s.graph, x, 1), "K_n labeling is not PD with det 1");
    return s;
}

UnitWitness kn_witness_from_solution(const std::vector<Integer>& y) {
    auto s = kn_seed_from_solution(y);
    std::vector<std::size_t> ids(y.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return UnitWitness{s.graph, DiagonalAssignment(s.diag), s.name, ids, {}};
}

std::vector<CatalogueSeed> seed_catalogue(std::size_t max_size, const SeedOptions& options) {
    std::vector<CatalogueSeed> out;
    for (auto& e : catalogue(max_size, options)) out.push_back({e.name, e.graph, e.diag});
    return out;
}

}  // namespace arithgraph
