#include "arithgraph/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace arithgraph {

namespace {

// Colour refinement starting from weighted degrees.
std::vector<int> refined_colours(const Multigraph& g) {
    const std::size_t n = g.size();
    std::vector<int> colour(n);
    for (std::size_t i = 0; i < n; ++i) colour[i] = g.degree(i);
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<int, std::vector<std::pair<int, int>>>> keys(n);
        for (std::size_t i = 0; i < n; ++i) {
            keys[i].first = colour[i];
            for (std::size_t j = 0; j < n; ++j)
                if (g.adjacent(i, j)) keys[i].second.push_back({colour[j], g.multiplicity(i, j)});
            std::sort(keys[i].second.begin(), keys[i].second.end());
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t i = 0; i < n; ++i)
            colour[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
        if (sorted.size() == classes) return colour;
        classes = sorted.size();
    }
}

struct CanonicalSearch {
    const Multigraph& g;
    std::vector<int> colour;
    std::vector<int> slot_colour;  // colour required at each position
    std::vector<std::size_t> order;
    std::vector<bool> used;
    std::vector<int> code;
    std::vector<int> best;
    bool have_best = false;

    explicit CanonicalSearch(const Multigraph& graph) : g(graph), colour(refined_colours(graph)) {
        slot_colour = colour;
        std::sort(slot_colour.begin(), slot_colour.end());
        used.assign(g.size(), false);
    }

    // less_so_far: the current prefix is already strictly below best.
    void place(std::size_t pos, bool less_so_far) {
        const std::size_t n = g.size();
        if (pos == n) {
            if (!have_best || less_so_far) {
                best = code;
                have_best = true;
            }
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v] || colour[v] != slot_colour[pos]) continue;
            const std::size_t mark = code.size();
            for (std::size_t q = 0; q < pos; ++q) code.push_back(g.multiplicity(v, order[q]));
            bool less = less_so_far;
            bool prune = false;
            if (have_best && !less)
                for (std::size_t k = mark; k < code.size(); ++k) {
                    if (code[k] < best[k]) {
                        less = true;
                        break;
                    }
                    if (code[k] > best[k]) {
                        prune = true;
                        break;
                    }
                }
            if (!prune) {
                used[v] = true;
                order.push_back(v);
                place(pos + 1, less);
                order.pop_back();
                used[v] = false;
            }
            code.resize(mark);
        }
    }
};

}  // namespace

std::vector<int> canonical_code(const Multigraph& g) {
    CanonicalSearch s(g);
    s.place(0, false);
    std::vector<int> out;
    out.push_back(static_cast<int>(g.size()));
    out.insert(out.end(), s.slot_colour.begin(), s.slot_colour.end());
    out.insert(out.end(), s.best.begin(), s.best.end());
    return out;
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
    return a.size() == b.size() && find_induced(a, b).has_value();
}

std::optional<std::vector<std::size_t>> find_induced(const Multigraph& g, const Multigraph& pattern) {
    const std::size_t k = pattern.size(), n = g.size();
    if (k > n) return std::nullopt;
    if (k == 0) return std::vector<std::size_t>{};

    // Pattern order: breadth first, so later vertices usually have a placed neighbour.
    std::vector<std::size_t> order;
    std::vector<bool> seen(k, false);
    while (order.size() < k) {
        std::size_t start = k;
        for (std::size_t i = 0; i < k; ++i)
            if (!seen[i] && (start == k || pattern.degree(i) > pattern.degree(start))) start = i;
        seen[start] = true;
        order.push_back(start);
        for (std::size_t h = order.size() - 1; h < order.size(); ++h)
            for (auto nb : pattern.neighbors(order[h]))
                if (!seen[nb]) {
                    seen[nb] = true;
                    order.push_back(nb);
                }
    }
    std::vector<std::size_t> anchor(k, k);  // earlier pattern neighbour in order, if any
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < p && anchor[p] == k; ++q)
            if (pattern.adjacent(order[p], order[q])) anchor[p] = q;

    std::vector<std::size_t> image(k);
    std::vector<bool> used(n, false);
    auto fits = [&](std::size_t p, std::size_t v) {
        const std::size_t pv = order[p];
        if (used[v] || g.degree(v) < pattern.degree(pv) || g.neighbor_count(v) < pattern.neighbor_count(pv))
            return false;
        if (k == n && (g.degree(v) != pattern.degree(pv))) return false;
        for (std::size_t q = 0; q < p; ++q)
            if (g.multiplicity(v, image[q]) != pattern.multiplicity(pv, order[q])) return false;
        return true;
    };
    auto search = [&](auto&& self, std::size_t p) -> bool {
        if (p == k) return true;
        std::vector<std::size_t> candidates;
        if (anchor[p] < k)
            candidates = g.neighbors(image[anchor[p]]);
        else
            for (std::size_t v = 0; v < n; ++v) candidates.push_back(v);
        for (auto v : candidates) {
            if (!fits(p, v)) continue;
            image[p] = v;
            used[v] = true;
            if (self(self, p + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    std::vector<std::size_t> out(k);
    for (std::size_t p = 0; p < k; ++p) out[order[p]] = image[p];
    return out;
}

std::vector<Multigraph> all_graphs(std::size_t n, int max_multiplicity, bool connected_only) {
    std::vector<Multigraph> level;
    if (n == 0) return level;
    level.push_back(Multigraph(1));
    for (std::size_t k = 2; k <= n; ++k) {
        std::map<std::vector<int>, Multigraph> next;
        for (const auto& h : level) {
            std::vector<int> attach(k - 1, 0);
            while (true) {
                std::vector<Multigraph::Edge> edges = h.edges();
                for (std::size_t i = 0; i + 1 < k; ++i)
                    if (attach[i] > 0) edges.push_back({i, k - 1, attach[i]});
                Multigraph g(k, edges);
                next.emplace(canonical_code(g), g);
                std::size_t i = 0;
                while (i < attach.size() && attach[i] == max_multiplicity) attach[i++] = 0;
                if (i == attach.size()) break;
                ++attach[i];
            }
        }
        level.clear();
        for (auto& [code, g] : next) level.push_back(std::move(g));
    }
    if (connected_only)
        level.erase(std::remove_if(level.begin(), level.end(), [](const Multigraph& g) { return !g.is_connected(); }),
                    level.end());
    return level;
}

}  // namespace arithgraph
