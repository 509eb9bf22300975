#include "arithgraph/reproduce.hpp"

#include <algorithm>

#include "arithgraph/error.hpp"
#include "arithgraph/structures.hpp"

namespace arithgraph {

namespace {

using V = std::vector<std::int64_t>;

ReproTarget complement(std::string id, std::string graph, std::int64_t n, std::optional<std::int64_t> box, V listed,
                       std::string source, SieveMode mode = SieveMode::Any) {
    return {std::move(id), std::move(graph), ReproKind::Complement, mode, n, box, std::move(listed), std::move(source)};
}

std::vector<ReproTarget> build_targets() {
    std::vector<ReproTarget> t;
    t.push_back({"A2-formula", "A2", ReproKind::PrimeShift, SieveMode::Any, 200, std::nullopt, {},
                 "xy - 1 misses 0 and p - 1 for every prime p"});
    t.push_back({"A3", "A3", ReproKind::Exact, SieveMode::Any, 520, std::nullopt,
                 {0, 1, 2, 3, 5, 6, 9, 11, 14, 15, 35, 105, 510}, "path on 3 vertices"});
    t.push_back(complement("A4", "A4", 320, std::nullopt,
                           {0, 1, 2, 3, 4, 6, 7, 8, 10, 12, 14, 15, 20, 22, 24, 26, 28, 38, 40, 42, 48, 52, 68, 104,
                            132, 150, 188, 314},
                           "path on 4 vertices"));
    t.push_back(complement("A5", "A5", 200, std::nullopt,
                           {0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 12, 13, 17, 18, 19, 27, 28, 34, 40, 52, 63, 88},
                           "path on 5 vertices"));
    t.push_back(complement("A6", "A6", 240, std::nullopt,
                           {0,  1,  2,  3,  4,  5,  6,  8,  9,  10, 11, 12, 14,  15,  16,  18,  20,  21,  22,  23,
                            26, 29, 30, 32, 36, 38, 42, 44, 48, 52, 54, 56, 62,  70,  80,  81,  86,  96,  102, 108,
                            110, 122, 126, 140, 180, 236},
                           "path on 6 vertices"));
    t.push_back(complement(
        "D4", "D4", 1100, std::nullopt,
        {0,   1,   2,   3,   5,   6,   7,   9,   10,  11,  13,  14,   17,   18,   19,   21,   23,   25,  26,  30,
         31,  34,  35,  37,  38,  41,  45,  47,  49,  53,  58,  61,   65,   66,   67,   74,   77,   79,  83,  86,
         91,  93,  97,  101, 103, 109, 110, 114, 115, 121, 125, 126,  129,  130,  131,  143,  145,  153, 167, 173,
         178, 181, 187, 199, 206, 210, 223, 229, 247, 251, 258, 265,  301,  325,  343,  391,  417,  426, 437, 451,
         517, 593, 595, 606, 633, 637, 649, 671, 763, 823, 859, 871,  937,  977,  1027, 1087, 1330, 1517, 1661,
         4477, 4585, 5273},
        "D4"));
    t.push_back(complement("D5", "D5", 340, std::nullopt,
                           {0, 1, 2, 3, 5, 6, 7, 10, 11, 13, 15, 21, 22, 30, 31, 37, 43, 46, 55, 58, 75, 91, 102, 165,
                            330},
                           "D5"));
    t.push_back(complement("D6", "D6", 250, std::nullopt,
                           {0,  1,  2,  3,  5,  6,  7,  9,  11, 13, 14, 15, 17, 18, 23,  25,  27,  29,
                            33, 35, 38, 45, 47, 49, 50, 53, 69, 71, 78, 95, 97, 105, 133, 203, 245},
                           "D6"));
    t.push_back(complement("D7", "D7", 120, std::nullopt,
                           {0,  1,  2,  3,  5,  6,  7,  9,  10, 13, 14, 15, 17, 19, 22,
                            23, 26, 27, 30, 33, 38, 42, 43, 49, 55, 57, 62, 78, 79, 110},
                           "D7"));
    t.push_back(complement("D8", "D8", 260, std::nullopt,
                           {0,  1,  2,  3,  5,  6,  7,  9,  10, 11, 13, 14,  15,  17,  18,  19,  21,  22,
                            25, 26, 29, 30, 31, 33, 35, 37, 41, 43, 46, 49,  50,  54,  55,  58,  59,  61,
                            63, 65, 71, 73, 90, 91, 94, 101, 105, 118, 121, 138, 169, 183, 205, 250},
                           "D8"));
    t.push_back(complement("E6", "E6", 200, 40,
                           {0,  1,  2,  4,  5,  6,  8,  10, 12, 14, 16, 17, 20, 24,  26,  28,  30,
                            32, 34, 38, 44, 46, 48, 56, 60, 64, 74, 80, 88, 92, 98, 132, 158, 170},
                           "E6"));
    t.push_back(complement("E7", "E7", 200, 40, {0, 1, 3, 4, 7, 12, 15, 25, 28}, "E7"));
    t.push_back(complement("E8", "E8", 200, 40,
                           {0,  2,  3,  4,  6,  8,  10, 11, 14, 16, 18, 22, 23,
                            24, 28, 34, 38, 40, 46, 58, 60, 62, 88, 94, 134, 178},
                           "E8"));
    t.push_back(complement("~E6", "~E6", 400, std::nullopt,
                           {1,   2,   4,   5,   7,   8,   11,  13,  14,  16,  19,  20,  22,  23,  26,  29,  32,
                            34,  35,  37,  41,  44,  46,  49,  53,  56,  58,  62,  71,  74,  82,  89,  95,  104,
                            106, 118, 128, 137, 140, 167, 172, 184, 188, 212, 218, 271, 287, 302, 386},
                           "extended E6"));
    t.push_back(complement("~E7", "~E7", 200, std::nullopt,
                           {1,  3,  5,  9,  11, 13, 15, 19,  21,  23,  25,  29,  33,
                            43, 45, 49, 51, 59, 75, 81, 115, 121, 141, 145, 159, 189},
                           "extended E7"));
    const std::vector<V> tadpole = {{0}, {0, 2, 14, 20, 26, 38, 44, 68, 254}, {2, 3, 7, 10, 19, 39, 79, 154},
                                    {0, 2, 8, 12, 18}, {}, {6, 66, 94}};
    for (int n = 2; n <= 7; ++n)
        t.push_back(complement("tadpole-" + std::to_string(n), "C" + std::to_string(n) + "+", 300, 300,
                               tadpole[n - 2], "cycle C" + std::to_string(n) + " with a pendant vertex"));
    t.push_back(complement("cone-A3", "cone(A3)", 600, 200, {5, 17, 29, 71, 77, 101, 137, 551},
                           "diamond"));
    t.push_back(complement("G2", "G2", 1200, 160,
                           {1,   5,   23,  25,  31,  53,  61,  71,  73,  145, 163, 199,
                            211, 229, 275, 289, 365, 379, 383, 421, 451, 493, 799, 1153},
                           "two leaves added at a leaf of extended D5"));
    t.push_back(complement("G3", "G3", 300, std::nullopt, {1, 21, 25, 37, 75},
                           "pendant added at a leaf of extended D5"));
    t.push_back({"dynkin-floors", "A,D,E", ReproKind::Floors, SieveMode::Any, 0, std::nullopt, {},
                 "d(2,...,2) is n+1 on A_n, 4 on D_n, 3, 2, 1 on E6, E7, E8"});
    t.push_back({"an-first-values", "A3..A12", ReproKind::FirstValues, SieveMode::Any, 0, std::nullopt, {},
                 "n+1, 2n+1, 3n-1, 3n+1, 4n-5, 4n, 4n+1, 5n-11, 5n+1 are values of A_n"});
    return t;
}

std::vector<std::int64_t> primes_shifted(std::int64_t n) {
    std::vector<bool> composite(static_cast<std::size_t>(n) + 2, false);
    std::vector<std::int64_t> out = {0};
    for (std::int64_t p = 2; p <= n + 1; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        out.push_back(p - 1);
        for (std::int64_t k = p * p; k <= n + 1; k += p) composite[static_cast<std::size_t>(k)] = true;
    }
    return out;
}

SieveReport run_sieve(const Multigraph& g, SieveMode mode, std::int64_t n, std::int64_t box, unsigned jobs) {
    SieveOptions o;
    o.mode = mode;
    o.r = 2;
    o.max_value = n;
    o.box = box;
    o.jobs = jobs;
    return sieve(g, o);
}

void floors(ReproResult& res) {
    bool ok = true;
    auto check = [&](const std::string& name, long expected) {
        const auto v = floor_value(build_family(parse_family(name)), 2);
        const bool hit = v && *v == expected;
        ok = ok && hit;
        res.notes.push_back(name + ": " + (v ? v->get_str() : std::string("none")) + " (expected " +
                            std::to_string(expected) + ")");
    };
    for (int n = 2; n <= 10; ++n) check("A" + std::to_string(n), n + 1);
    for (int n = 4; n <= 10; ++n) check("D" + std::to_string(n), 4);
    check("E6", 3);
    check("E7", 2);
    check("E8", 1);
    res.complete = true;
    res.pass = ok;
}

void first_values(ReproResult& res, unsigned jobs) {
    bool ok = true;
    for (std::int64_t n = 3; n <= 12; ++n) {
        const auto g = build_family(parse_family("A" + std::to_string(n)));
        const std::int64_t top = 5 * n + 1;
        const auto box = *proven_box_bound(g, 2, top);
        const auto rep = run_sieve(g, SieveMode::Any, top, box, jobs);
        std::vector<std::int64_t> missing;
        for (std::int64_t v : {n + 1, 2 * n + 1, 3 * n - 1, 3 * n + 1, 4 * n - 5, 4 * n, 4 * n + 1, 5 * n - 11, 5 * n + 1})
            if (!rep.hits.count(v)) missing.push_back(v);
        const bool below = !rep.hits.empty() && rep.hits.begin()->first < n + 1;
        ok = ok && missing.empty() && !below && rep.complete;
        std::string line = "A" + std::to_string(n) + ": smallest " +
                           (rep.hits.empty() ? std::string("none") : std::to_string(rep.hits.begin()->first));
        if (!missing.empty()) {
            line += ", missing";
            for (auto v : missing) line += " " + std::to_string(v);
        }
        res.notes.push_back(line);
    }
    res.complete = true;
    res.pass = ok;
}

}  // namespace

const std::vector<ReproTarget>& repro_targets() {
    static const std::vector<ReproTarget> targets = build_targets();
    return targets;
}

std::optional<ReproTarget> find_target(const std::string& id) {
    for (const auto& t : repro_targets())
        if (t.id == id) return t;
    return std::nullopt;
}

Multigraph target_graph(const std::string& name) {
    const auto tilde_d5 = build_family(parse_family("~D5"));
    if (name == "G2") return semidefinite_from_extended_dynkin(tilde_d5, 0, DynkinVariant::TwoLeaves).graph;
    if (name == "G3") return semidefinite_from_extended_dynkin(tilde_d5, 0, DynkinVariant::LeafExtension).graph;
    return build_family(parse_family(name));
}

ReproResult reproduce(const ReproTarget& t, std::optional<std::int64_t> max_value, std::optional<std::int64_t> box,
                      unsigned jobs) {
    ReproResult res;
    res.target = t;
    if (t.kind == ReproKind::Floors) {
        floors(res);
        return res;
    }
    if (t.kind == ReproKind::FirstValues) {
        first_values(res, jobs);
        return res;
    }
    const Multigraph g = target_graph(t.graph);
    res.max_value = max_value.value_or(t.max_value);
    require(res.max_value >= 0, "N must be nonnegative");
    if (box) {
        res.box = *box;
    } else if (t.box) {
        res.box = *t.box;
    } else if (auto proven = proven_box_bound(g, 2, res.max_value); proven && t.mode == SieveMode::Any) {
        res.box = *proven;
        res.box_proven = true;
    } else {
        res.box = 40;
    }
    const auto rep = run_sieve(g, t.mode, res.max_value, res.box, jobs);
    res.complement = rep.complement;
    res.complete = rep.complete;
    std::vector<std::int64_t> listed = t.kind == ReproKind::PrimeShift ? primes_shifted(res.max_value) : t.listed;
    std::vector<std::int64_t> in_range;
    for (auto v : listed)
        if (v <= res.max_value) in_range.push_back(v);
    std::set_difference(res.complement.begin(), res.complement.end(), in_range.begin(), in_range.end(),
                        std::back_inserter(res.unexpected));
    std::set_difference(in_range.begin(), in_range.end(), res.complement.begin(), res.complement.end(),
                        std::back_inserter(res.reached));
    res.pass = res.unexpected.empty();
    if (t.kind != ReproKind::Complement) res.pass = res.pass && res.reached.empty();
    return res;
}

}  // namespace arithgraph
