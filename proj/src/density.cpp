#include "arithgraph/density.hpp"

#include <algorithm>

#include "arithgraph/classify.hpp"
#include "arithgraph/error.hpp"
#include "arithgraph/isomorphism.hpp"

namespace arithgraph {

ProgressionUnion::ProgressionUnion(std::vector<Progression> parts) {
    for (auto& p : parts) add(p.modulus, std::move(p.residues));
}

void ProgressionUnion::add(const Integer& modulus, std::vector<Integer> residues) {
    require(modulus > 0, "progression modulus must be positive");
    for (auto& r : residues) mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    parts_.push_back({modulus, std::move(residues)});
}

bool ProgressionUnion::pairwise_coprime() const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (std::size_t j = i + 1; j < parts_.size(); ++j)
            if (gcd(parts_[i].modulus, parts_[j].modulus) != 1) return false;
    return true;
}

Rational union_density(const ProgressionUnion& u) {
    require(u.pairwise_coprime(), "union density formula needs pairwise coprime moduli; count instead");
    Rational missing = 1;
    for (const auto& p : u.parts())
        missing *= Rational(p.modulus - static_cast<long>(p.residues.size()), p.modulus);
    Rational d = 1 - missing;
    d.canonicalize();
    return d;
}

Rational counted_density(const ProgressionUnion& u, std::int64_t n) {
    require(n > 0, "counting range must be nonempty");
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (const auto& p : u.parts()) {
        const auto a = to_int64(p.modulus);
        for (const auto& r : p.residues) {
            if (r > n) continue;
            const std::int64_t start = r.get_si();
            if (!a || *a > n) {
                hit[static_cast<std::size_t>(start)] = true;
                continue;
            }
            for (std::int64_t k = start; k <= n; k += *a) hit[static_cast<std::size_t>(k)] = true;
        }
    }
    return empirical_density(hit, n);
}

Rational empirical_density(const std::vector<bool>& member, std::int64_t n) {
    require(n > 0, "density needs N > 0");
    require(member.size() > static_cast<std::size_t>(n), "membership table shorter than N + 1");
    const long count = std::count(member.begin(), member.begin() + n + 1, true);
    Rational d(count, n);
    d.canonicalize();
    // 0 is counted too, so a full range would give (N + 1) / N
    return d > 1 ? Rational(1) : d;
}

namespace {

std::vector<Integer> with_t(const std::vector<Integer>& rest, std::size_t t_h, const Integer& t) {
    std::vector<Integer> d = rest;
    d.insert(d.begin() + static_cast<std::ptrdiff_t>(t_h), t);
    return d;
}

std::optional<LinearForm> coprime_form(const Multigraph& h, std::size_t t_h, const std::vector<Integer>& rest) {
    const auto r = linear_in_t(h, t_h, rest);
    const auto* f = std::get_if<LinearForm>(&r);
    if (!f || gcd(f->alpha, f->beta) != 1) return std::nullopt;
    return *f;
}

std::vector<Integer> first_primes(std::size_t count, long from) {
    std::vector<Integer> out;
    Integer p = from - 1;
    while (out.size() < count) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        out.push_back(p);
    }
    return out;
}

// Diagonal on the family's own labeling; t sits at pattern vertex 0.
std::optional<std::pair<std::string, std::vector<Integer>>> recipe_for(const FamilySpec& s, std::size_t n) {
    std::vector<Integer> d(n, Integer(2));
    switch (s.tag) {
        case FamilyTag::A: return std::make_pair(std::string("path"), d);
        case FamilyTag::C:
            d[n - 1] = 3;
            return std::make_pair(std::string("cycle"), d);
        case FamilyTag::D:
            d[n - 1] = 3;
            return std::make_pair(std::string("D"), d);
        case FamilyTag::S: {
            const auto p = first_primes(n - 1, 2);
            std::copy(p.begin(), p.end(), d.begin() + 1);
            return std::make_pair(std::string("star"), d);
        }
        case FamilyTag::K: {
            const auto p = first_primes(n - 1, 3);
            for (std::size_t i = 1; i < n; ++i) d[i] = p[i - 1] - 1;
            return std::make_pair(std::string("complete"), d);
        }
        case FamilyTag::Kpq: {
            if (s.params[0] != 2) return std::nullopt;
            const auto p = first_primes(n - 2, 2);
            std::copy(p.begin(), p.end(), d.begin() + 2);
            return std::make_pair(std::string("K(2,q)"), d);
        }
        default: return std::nullopt;
    }
}

std::optional<DensityCertificate> try_recipe(const Multigraph& g, std::size_t v, const Subgraph& hs,
                                             const FamilySpec& spec) {
    const std::size_t n = hs.graph.size();
    auto recipe = recipe_for(spec, n);
    if (!recipe) return std::nullopt;
    const auto map = find_induced(hs.graph, build_family(spec));
    ensure(map.has_value(), "recognized family must embed");
    auto& [name, pattern_diag] = *recipe;
    const std::size_t x_slot = spec.tag == FamilyTag::Kpq ? (*map)[1] : n;
    const int x_tries = spec.tag == FamilyTag::Kpq ? 500 : 1;
    for (int x = 2; x < 2 + x_tries; ++x) {
        std::vector<Integer> diag(n);
        for (std::size_t i = 0; i < n; ++i) diag[(*map)[i]] = pattern_diag[i];
        if (x_slot < n) diag[x_slot] = x;
        const std::size_t t_h = (*map)[0];
        std::vector<Integer> rest = diag;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t_h));
        if (auto f = coprime_form(hs.graph, t_h, rest)) {
            DensityCertificate c{g, v, hs.to_parent[t_h], spec.name(), name, {{*f, rest}}};
            ensure(verify_certificate(c), "recipe certificate must verify");
            return c;
        }
    }
    return std::nullopt;
}

std::optional<DensityCertificate> scan(const Multigraph& g, std::size_t v, const Subgraph& hs,
                                       const std::string& family) {
    const std::size_t n = hs.graph.size();
    for (std::size_t t_h = 0; t_h < n; ++t_h) {
        std::vector<Integer> rest(n - 1, Integer(2));
        while (true) {
            const Integer f0 = evaluate(hs.graph, with_t(rest, t_h, 0));
            const Integer alpha = evaluate(hs.graph, with_t(rest, t_h, 1)) - f0;
            if (alpha > 0 && gcd(alpha, f0) == 1) {
                auto f = coprime_form(hs.graph, t_h, rest);
                ensure(f.has_value() && f->alpha == alpha && f->beta == -f0, "scan form must match linear_in_t");
                DensityCertificate c{g, v, hs.to_parent[t_h], family, "scan", {{*f, rest}}};
                ensure(verify_certificate(c), "scan certificate must verify");
                return c;
            }
            std::size_t i = rest.size();
            while (i > 0 && rest[i - 1] == 7) rest[--i] = 2;
            if (i == 0) break;
            ++rest[i - 1];
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<DensityCertificate> density_certificate(const Multigraph& g) {
    require(g.size() >= 1 && g.is_connected(), "density certificate needs a connected graph");
    if (g.size() < 2) return std::nullopt;
    std::vector<Subgraph> subs;
    std::vector<FamilyMatch> matches;
    for (std::size_t v = 0; v < g.size(); ++v) {
        subs.push_back(delete_vertex(g, v));
        matches.push_back(recognize_family(subs.back().graph));
    }
    // recipes in a fixed order, each tried at every v before the next
    for (FamilyTag tag : {FamilyTag::A, FamilyTag::C, FamilyTag::D, FamilyTag::S, FamilyTag::K, FamilyTag::Kpq})
        for (std::size_t v = 0; v < g.size(); ++v) {
            const auto& f = matches[v];
            if (!f.primary) continue;
            std::vector<FamilySpec> specs = {*f.primary};
            specs.insert(specs.end(), f.aliases.begin(), f.aliases.end());
            for (const auto& s : specs)
                if (s.tag == tag)
                    if (auto c = try_recipe(g, v, subs[v], s)) return c;
        }
    for (std::size_t v = 0; v < g.size(); ++v)
        if (auto c = scan(g, v, subs[v], matches[v].name())) return c;
    return std::nullopt;
}

bool verify_certificate(const DensityCertificate& c) {
    if (c.vertex >= c.graph.size() || c.t_vertex >= c.graph.size() || c.t_vertex == c.vertex) return false;
    const auto hs = delete_vertex(c.graph, c.vertex);
    const std::size_t t_h = c.t_vertex - (c.t_vertex > c.vertex ? 1 : 0);
    if (c.forms.empty()) return false;
    for (const auto& cf : c.forms) {
        if (cf.rest.size() + 1 != hs.graph.size()) return false;
        if (cf.form.alpha <= 0 || gcd(cf.form.alpha, cf.form.beta) != 1) return false;
        for (const auto& x : cf.rest)
            if (x < 2) return false;
        for (long t : {2L, 3L, 101L})
            if (evaluate(hs.graph, with_t(cf.rest, t_h, t)) != cf.form.at(t)) return false;
    }
    return true;
}

CertificateProgressions progressions_from_certificate(const DensityCertificate& c, int budget, std::int64_t max_t) {
    require(verify_certificate(c), "progressions need a valid certificate");
    require(budget >= 0, "prime budget must be nonnegative");
    const auto hs = delete_vertex(c.graph, c.vertex);
    const std::size_t t_h = c.t_vertex - (c.t_vertex > c.vertex ? 1 : 0);
    const auto& cf = c.forms.front();
    CertificateProgressions out;
    for (std::int64_t t = 2; static_cast<int>(out.values.size()) < budget; ++t) {
        require(t <= max_t, "prime budget exhausted before enough primes were found");
        const Integer u = cf.form.at(t);
        if (u < 2 || mpz_probab_prime_p(u.get_mpz_t(), 30) == 0) continue;
        const auto h_diag = with_t(cf.rest, t_h, t);
        const auto r = linear_in_t(c.graph, c.vertex, h_diag);
        const auto* f = std::get_if<LinearForm>(&r);
        ensure(f && f->alpha == u, "slope at v must be the value of G minus v");
        std::vector<Integer> diag = h_diag;
        for (long s : {2L, 3L}) {
            diag.insert(diag.begin() + static_cast<std::ptrdiff_t>(c.vertex), Integer(s));
            ensure(evaluate(c.graph, diag) == f->at(s), "progression value must re-evaluate");
            diag.erase(diag.begin() + static_cast<std::ptrdiff_t>(c.vertex));
        }
        out.values.push_back({u, f->beta, t});
        out.progressions.add(u, {Integer(-f->beta)});
    }
    return out;
}

}  // namespace arithgraph
