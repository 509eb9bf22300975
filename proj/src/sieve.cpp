#include "arithgraph/sieve.hpp"

#include <algorithm>
#include <mutex>

#include "arithgraph/error.hpp"
#include "arithgraph/parallel.hpp"
#include "point_eval.hpp"

namespace arithgraph {

std::string to_string(SieveMode m) {
    switch (m) {
        case SieveMode::Any: return "any";
        case SieveMode::PD: return "pd";
        case SieveMode::PDCyclic: return "pd-cyclic";
        case SieveMode::StructureZero: return "structure-zero";
    }
    return "any";
}

SieveMode parse_sieve_mode(const std::string& s) {
    if (s == "any") return SieveMode::Any;
    if (s == "pd") return SieveMode::PD;
    if (s == "pd-cyclic") return SieveMode::PDCyclic;
    if (s == "structure-zero") return SieveMode::StructureZero;
    throw ContractError("unknown sieve mode: " + s);
}

namespace {

using Point = std::vector<std::int64_t>;
using Visitor = std::function<bool(const Point&, const Integer&)>;

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void check_options(const Multigraph& g, const SieveOptions& o) {
    require(g.size() >= 1, "sieve needs at least one vertex");
    require(o.r >= 1, "sieve needs r >= 1");
    require(o.max_value >= 0, "sieve needs N >= 0");
    require(o.box >= o.r, "sieve needs box >= r");
    require(o.box < (std::int64_t{1} << 40), "box too large");
}

bool is_pd_mode(SieveMode m) { return m == SieveMode::PD || m == SieveMode::PDCyclic; }

// Pruned depth-first search over [r, box]^n in lexicographic order.
// A node fixes the first k+1 coordinates and sets the rest to r.
class Search {
public:
    Search(const Multigraph& g, const SieveOptions& o, bool values_only, const Visitor& visit)
        : g_(g),
          o_(o),
          values_only_(values_only),
          visit_(visit),
          eval_(g),
          prefix_graph_(induced_prefix(g)),
          prefix_eval_(prefix_graph_),
          diag_(g.size(), o.r) {}

    // Runs the subtree of first coordinates r + offset, r + offset + stride, ...
    void run(std::int64_t offset, std::int64_t stride) {
        if (g_.size() == 1) {
            leaf(0);
            return;
        }
        level(0, offset, stride);
    }

    bool truncated() const { return truncated_; }

private:
    static Multigraph induced_prefix(const Multigraph& g) {
        std::vector<std::size_t> keep;
        if (g.size() == 1) return g;  // unused
        for (std::size_t i = 0; i + 1 < g.size(); ++i) keep.push_back(i);
        return induced_subgraph(g, keep).graph;
    }

    // Nodes at or beyond a stopping node carry no further points.
    bool stops(const detail::PointEvaluator::Result& e) const {
        if (!e.positive_definite) return false;
        return o_.mode == SieveMode::StructureZero || e.det > o_.max_value;
    }

    void level(std::size_t k, std::int64_t offset, std::int64_t stride) {
        bool closed = false;
        for (std::int64_t t = o_.r + offset; t <= o_.box && !stopped_; t += stride) {
            diag_[k] = t;
            if (stops(eval_(diag_))) {
                closed = true;
                break;
            }
            if (k + 2 == g_.size())
                leaf(k + 1);
            else
                level(k + 1, 0, 1);
        }
        if (!closed && !stopped_) {
            diag_[k] = o_.box + 1;
            if (!stops(eval_(diag_))) truncated_ = true;
        }
        diag_[k] = o_.r;
    }

    void emit(std::size_t k, const Integer& lo, const Integer& hi, const Integer& alpha, const Integer& f0) {
        const Integer from = std::max(lo, Integer(o_.r));
        const Integer to = std::min(hi, Integer(o_.box));
        for (Integer t = from; t <= to && !stopped_; ++t) {
            diag_[k] = t.get_si();
            if (!visit_(diag_, alpha * t + f0)) stopped_ = true;
        }
        if (hi > o_.box) truncated_ = true;
    }

    // The last coordinate enters linearly: det = alpha t + f0.
    void leaf(std::size_t k) {
        diag_[k] = 0;
        const Integer f0 = eval_(diag_).det;
        diag_[k] = 1;
        const Integer alpha = eval_(diag_).det - f0;
        const Integer n_max(o_.max_value);
        switch (o_.mode) {
            case SieveMode::Any:
                if (alpha > 0) {
                    emit(k, ceil_div(-f0, alpha), floor_div(n_max - f0, alpha), alpha, f0);
                } else if (alpha < 0) {
                    emit(k, ceil_div(f0 - n_max, -alpha), floor_div(f0, -alpha), alpha, f0);
                } else if (f0 >= 0 && f0 <= n_max) {
                    emit(k, Integer(o_.r), values_only_ ? Integer(o_.r) : Integer(o_.box), alpha, f0);
                    if (!values_only_) truncated_ = true;
                }
                break;
            case SieveMode::PD:
            case SieveMode::PDCyclic: {
                // PD exactly when the leading block is PD and the determinant is positive.
                bool prefix_pd = true;
                if (k > 0) {
                    Point head(diag_.begin(), diag_.begin() + k);
                    prefix_pd = prefix_eval_(head).positive_definite;
                }
                if (prefix_pd && alpha > 0) emit(k, ceil_div(1 - f0, alpha), floor_div(n_max - f0, alpha), alpha, f0);
                break;
            }
            case SieveMode::StructureZero:
                // alpha = 0 means the leading block is singular, which rules out a positive kernel.
                if (alpha != 0 && mpz_divisible_p(f0.get_mpz_t(), alpha.get_mpz_t())) {
                    const Integer t = -f0 / alpha;
                    if (t > o_.box) {
                        truncated_ = true;
                    } else if (t >= o_.r) {
                        diag_[k] = t.get_si();
                        const ExactMatrix m = matrix_at(g_, detail::as_integers(diag_));
                        if (positive_kernel_vector(m) && is_psd_rank_deficient_one(m, true))
                            if (!visit_(diag_, Integer(0))) stopped_ = true;
                    }
                }
                break;
        }
        diag_[k] = o_.r;
    }

    const Multigraph& g_;
    const SieveOptions& o_;
    bool values_only_;
    const Visitor& visit_;
    detail::PointEvaluator eval_;
    Multigraph prefix_graph_;
    detail::PointEvaluator prefix_eval_;
    Point diag_;
    bool truncated_ = false;
    bool stopped_ = false;
};

// gcd of the (n-1)-minors; 1 exactly when the cokernel is cyclic.
bool cokernel_cyclic(const Multigraph& g, const Point& diag, const Integer& value) {
    const std::size_t n = g.size();
    if (n == 1) return true;
    const ExactMatrix m = matrix_at(g, detail::as_integers(diag));
    const Integer corner = determinant(m.without(n - 1, n - 1));
    if (gcd(corner, value) == 1) return true;
    Integer acc = value;
    const ExactMatrix adj = adjugate(m);
    for (std::size_t i = 0; i < n && acc != 1; ++i)
        for (std::size_t j = i; j < n && acc != 1; ++j) acc = gcd(acc, adj(i, j));
    return acc == 1;
}

struct WorkerResult {
    std::map<std::int64_t, Point> hits;
    bool truncated = false;
};

using Runner = std::function<bool(const Visitor&, std::int64_t offset, std::int64_t stride)>;

SieveReport collect(const Multigraph& g, const SieveOptions& o, const Runner& runner) {
    const std::int64_t top = o.mode == SieveMode::StructureZero ? 0 : o.max_value;
    const std::int64_t wanted = is_pd_mode(o.mode) ? top : top + 1;  // PD values are positive
    const unsigned jobs = std::max(1u, o.jobs);
    std::vector<WorkerResult> results(jobs);
    run_workers(jobs, [&](unsigned w) {
        auto& res = results[w];
        Visitor visit = [&](const Point& p, const Integer& value) {
            if (value < 0 || value > top) return true;
            const std::int64_t v = value.get_si();
            if (res.hits.count(v)) return true;
            if (o.mode == SieveMode::PDCyclic && !cokernel_cyclic(g, p, value)) return true;
            if (o.mode == SieveMode::StructureZero) {
                const ExactMatrix m = matrix_at(g, detail::as_integers(p));
                if (!smith_normal_form(m).is_cyclic()) return true;
            }
            res.hits.emplace(v, p);
            return static_cast<std::int64_t>(res.hits.size()) < wanted;
        };
        res.truncated = !runner(visit, w, jobs);
    });

    SieveReport rep;
    rep.options = o;
    bool truncated = false;
    for (auto& res : results) {
        truncated = truncated || res.truncated;
        for (auto& [v, p] : res.hits) {
            auto it = rep.hits.find(v);
            if (it == rep.hits.end() || p < it->second) rep.hits[v] = p;
        }
    }
    for (std::int64_t v = 0; v <= top; ++v)
        if (!rep.hits.count(v)) rep.complement.push_back(v);
    const bool all_hit = static_cast<std::int64_t>(rep.hits.size()) == wanted;
    rep.complete = !truncated || all_hit;
    rep.proven_box = proven_box_bound(g, o.r, top);
    for (const auto& [v, p] : rep.hits) {
        ensure(evaluate(g, detail::as_integers(p)) == v, "sieve witness does not re-evaluate");
        for (auto a : p) ensure(a >= o.r && a <= o.box, "sieve witness outside the box");
    }
    return rep;
}

}  // namespace

bool enumerate_points(const Multigraph& g, const SieveOptions& options, const Visitor& visit) {
    check_options(g, options);
    Search s(g, options, false, visit);
    s.run(0, 1);
    return !s.truncated();
}

SieveReport sieve(const Multigraph& g, const SieveOptions& options) {
    check_options(g, options);
    return collect(g, options, [&](const Visitor& visit, std::int64_t offset, std::int64_t stride) {
        Search s(g, options, true, visit);
        if (g.size() == 1 && offset > 0) return true;
        s.run(offset, stride);
        return !s.truncated();
    });
}

SieveReport sieve_brute_force(const Multigraph& g, const SieveOptions& options) {
    check_options(g, options);
    const std::size_t n = g.size();
    SieveOptions o = options;
    o.jobs = 1;
    return collect(g, o, [&](const Visitor& visit, std::int64_t, std::int64_t) {
        detail::PointEvaluator eval(g);
        Point d(n, o.r);
        while (true) {
            auto e = eval(d);
            bool ok = false;
            switch (o.mode) {
                case SieveMode::Any: ok = true; break;
                case SieveMode::PD:
                case SieveMode::PDCyclic: ok = e.positive_definite; break;
                case SieveMode::StructureZero:
                    if (e.det == 0) {
                        const ExactMatrix m = matrix_at(g, detail::as_integers(d));
                        ok = positive_kernel_vector(m) && is_psd_rank_deficient_one(m, false);
                    }
                    break;
            }
            if (ok && !visit(d, e.det)) return true;
            std::size_t i = n;
            while (true) {
                --i;
                if (d[i] < o.box) {
                    ++d[i];
                    break;
                }
                d[i] = o.r;
                if (i == 0) return false;
            }
        }
    });
}

std::optional<std::int64_t> proven_box_bound(const Multigraph& g, std::int64_t r, std::int64_t max_value) {
    const std::size_t n = g.size();
    require(r >= 1 && max_value >= 0, "bound needs r >= 1 and N >= 0");
    if (n == 1) return std::max(r, max_value);
    if (n == 2) {
        // xy - e^2 <= N with y >= r
        const std::int64_t e = g.multiplicity(0, 1);
        return std::max(r, (max_value + e * e) / r);
    }
    const std::vector<Integer> fill(n, Integer(r));
    const ExactMatrix m = matrix_at(g, fill);
    const Integer d0 = determinant(m);
    if (!is_positive_definite(m) && !(d0 == 0 && is_psd_rank_deficient_one(m, false))) return std::nullopt;
    if (d0 > max_value) return r;
    // d(a) >= d0 + (a_i - r) * alpha_i for every a >= r, where alpha_i is the minor without i.
    Integer box(r);
    for (std::size_t i = 0; i < n; ++i) {
        const Integer alpha = determinant(m.without(i, i));
        if (alpha <= 0) return std::nullopt;
        box = std::max(box, Integer(Integer(r) + floor_div(Integer(max_value) - d0, alpha)));
    }
    return box.get_si();
}

std::optional<Integer> floor_value(const Multigraph& g, std::int64_t r) {
    require(r >= 1, "floor needs r >= 1");
    const ExactMatrix m = matrix_at(g, std::vector<Integer>(g.size(), Integer(r)));
    if (is_positive_definite(m)) return determinant(m);
    if (determinant(m) == 0 && is_psd_rank_deficient_one(m, false)) return Integer(0);
    return std::nullopt;
}

MultipleWitness multiples_family(const ArithmeticalStructure& s, std::size_t i, const Integer& ell) {
    require(i < s.graph.size(), "vertex out of range");
    require(ell >= 1, "ell must be >= 1");
    auto v = s.diag.values();
    v[i] += ell;
    MultipleWitness out{DiagonalAssignment(v), ell * s.group_order() * s.r[i] * s.r[i]};
    ensure(evaluate(s.graph, v) == out.value, "multiple does not re-evaluate");
    return out;
}

namespace {

// All divisors of m > 0 in increasing order, or none when m is too large to factor by trial division.
std::optional<std::vector<Integer>> divisors(const Integer& m) {
    if (m <= 0 || mpz_sizeinbase(m.get_mpz_t(), 2) > 80) return std::nullopt;
    std::vector<Integer> lo, hi;
    for (Integer d = 1; d * d <= m; ++d)
        if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            lo.push_back(d);
            if (d * d != m) hi.push_back(m / d);
        }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

// With z fixed, x (y z - 1) = w + z.
std::optional<Triple> fixed_z(const Integer& w, long z, const std::vector<Integer>& divs) {
    const Integer m = w + z;
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        const Integer& q = *it;  // y z - 1
        const Integer x = m / q;
        if (x < 2 || q < 2 * z - 1) continue;
        if (mpz_divisible_ui_p(Integer(q + 1).get_mpz_t(), z)) return Triple{x, (q + 1) / z, Integer(z)};
    }
    return std::nullopt;
}

bool is_power_of_two(const Integer& m) { return m > 0 && mpz_popcount(m.get_mpz_t()) == 1; }

}  // namespace

std::optional<Triple> a3_certificate(const Integer& w) {
    if (w <= 0) return std::nullopt;
    auto check = [&](const Triple& t) {
        ensure(t[0] >= 2 && t[1] >= 2 && t[2] >= 2 && t[0] * t[1] * t[2] - t[0] - t[2] == w,
               "A3 certificate does not evaluate");
        return t;
    };
    // z = 2, even w + 2 that is not a power of two: split off the odd part
    const Integer m2 = w + 2;
    if (mpz_even_p(m2.get_mpz_t()) && !is_power_of_two(m2)) {
        Integer odd = m2;
        const auto twos = mpz_scan1(odd.get_mpz_t(), 0);
        mpz_tdiv_q_2exp(odd.get_mpz_t(), odd.get_mpz_t(), twos);
        return check({m2 / odd, (odd + 1) / 2, Integer(2)});
    }
    // w = 2^m - 2 with m > 4 even: x = 4, z = 6
    if (is_power_of_two(m2)) {
        const auto m = mpz_scan1(m2.get_mpz_t(), 0);
        if (m > 4 && m % 2 == 0) {
            Integer y;
            mpz_ui_pow_ui(y.get_mpz_t(), 2, m - 3);
            return check({Integer(4), (y + 1) / 3, Integer(6)});
        }
    }
    for (long z : {2L, 4L}) {
        auto divs = divisors(w + z);
        if (!divs) continue;
        if (auto t = fixed_z(w, z, *divs)) return check(*t);
    }
    for (long z = 3; z <= 64; ++z) {
        if (z == 4) continue;
        auto divs = divisors(w + z);
        if (!divs) return std::nullopt;
        if (auto t = fixed_z(w, z, *divs)) return check(*t);
    }
    return std::nullopt;
}

namespace {

// Cases with roles of (x, a) and (z, b) as given; the caller also tries the mirror.
std::optional<Triple> path_case(const Integer& a, const Integer& b, const Integer& w) {
    // b + 1 composite: x y = b + 1, z = w + a x
    if (b + 1 >= 4 && !mpz_probab_prime_p(Integer(b + 1).get_mpz_t(), 30)) {
        auto divs = divisors(b + 1);
        if (divs) {
            const Integer x = (*divs)[1];
            const Integer z = w + a * x;
            if (z >= 2) return Triple{x, (b + 1) / x, z};
        }
    }
    // a prime p dividing a covers multiples of p: z = p, y = a/p + 1, x = w/p + b
    if (auto divs = divisors(a))
        for (const auto& p : *divs) {
            if (p < 2 || !mpz_divisible_p(w.get_mpz_t(), p.get_mpz_t())) continue;
            const Integer x = w / p + b;
            if (x >= 2) return Triple{x, a / p + 1, p};
        }
    // b = 1, 4 | a, odd w: y = 2, z = a/2 + 1, x = (w + z)/2
    if (b == 1 && mpz_divisible_ui_p(a.get_mpz_t(), 4) && mpz_odd_p(w.get_mpz_t())) {
        const Integer z = a / 2 + 1;
        const Integer x = (w + z) / 2;
        if (x >= 2) return Triple{x, Integer(2), z};
    }
    // w = 0, b = 1: c | a with 1 + a/c composite, x y = 1 + a/c, z = c x
    if (w == 0 && b == 1)
        if (auto divs = divisors(a))
            for (const auto& c : *divs) {
                const Integer m = 1 + a / c;
                if (m < 4 || mpz_probab_prime_p(m.get_mpz_t(), 30)) continue;
                auto md = divisors(m);
                if (!md) continue;
                const Integer x = (*md)[1];
                return Triple{x, m / x, c * x};
            }
    return std::nullopt;
}

}  // namespace

std::optional<Triple> generalized_path_witness(const Integer& a, const Integer& b, const Integer& w) {
    require(a >= 1 && b >= 1, "path witness needs a, b >= 1");
    if (w < 0) return std::nullopt;
    std::optional<Triple> t;
    if (w == 0 && a > 1 && b > 1) t = Triple{b, Integer(2), a};
    if (!t) t = path_case(a, b, w);
    if (!t)
        if (auto m = path_case(b, a, w)) t = Triple{(*m)[2], (*m)[1], (*m)[0]};
    if (t) {
        const auto& [x, y, z] = *t;
        ensure(x >= 2 && y >= 2 && z >= 2 && x * y * z - a * x - b * z == w, "path witness does not evaluate");
    }
    return t;
}

}  // namespace arithgraph
