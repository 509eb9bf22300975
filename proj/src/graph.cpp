#include "arithgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

#include "arithgraph/error.hpp"

namespace arithgraph {

Multigraph::Multigraph(std::size_t n, const std::vector<Edge>& edges) : n_(n), mult_(n * n, 0) {
    for (const auto& e : edges) {
        require(e.u < n && e.v < n, "edge endpoint out of range");
        require(e.u != e.v, "self-loops are not allowed");
        require(e.multiplicity >= 0, "edge multiplicity must be non-negative");
        mult_[e.u * n + e.v] += e.multiplicity;
        mult_[e.v * n + e.u] += e.multiplicity;
    }
}

Multigraph Multigraph::from_multiplicities(const std::vector<std::vector<int>>& m) {
    const std::size_t n = m.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        require(m[i].size() == n, "multiplicity matrix must be square");
        require(m[i][i] == 0, "self-loops are not allowed");
        for (std::size_t j = 0; j < n; ++j) {
            require(m[i][j] >= 0, "edge multiplicity must be non-negative");
            require(m[i][j] == m[j][i], "multiplicity matrix must be symmetric");
            if (j > i && m[i][j] > 0) edges.push_back({i, j, m[i][j]});
        }
    }
    return Multigraph(n, edges);
}

std::vector<std::size_t> Multigraph::neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n_; ++j)
        if (multiplicity(i, j) > 0) out.push_back(j);
    return out;
}

int Multigraph::degree(std::size_t i) const {
    int d = 0;
    for (std::size_t j = 0; j < n_; ++j) d += multiplicity(i, j);
    return d;
}

std::size_t Multigraph::neighbor_count(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < n_; ++j) d += multiplicity(i, j) > 0 ? 1 : 0;
    return d;
}

std::vector<Multigraph::Edge> Multigraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (multiplicity(i, j) > 0) out.push_back({i, j, multiplicity(i, j)});
    return out;
}

bool Multigraph::is_simple() const {
    return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m <= 1; });
}

bool Multigraph::is_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n_; ++w)
            if (!seen[w] && multiplicity(v, w) > 0) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

bool Multigraph::is_tree() const {
    if (!is_connected()) return false;
    std::size_t e = 0;
    for (int m : mult_) e += static_cast<std::size_t>(m);
    return e / 2 + 1 == n_;
}

ExactMatrix Multigraph::adjacency() const {
    ExactMatrix a(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) a(i, j) = multiplicity(i, j);
    return a;
}

ExactMatrix Multigraph::laplacian() const {
    ExactMatrix l(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) l(i, j) = i == j ? degree(i) : -multiplicity(i, j);
    return l;
}

Subgraph induced_subgraph(const Multigraph& g, const std::vector<std::size_t>& vertices) {
    std::vector<char> used(g.size(), 0);
    for (auto v : vertices) {
        require(v < g.size(), "vertex out of range");
        require(!used[v], "duplicate vertex in induced subgraph");
        used[v] = 1;
    }
    std::vector<Multigraph::Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            int m = g.multiplicity(vertices[i], vertices[j]);
            if (m > 0) edges.push_back({i, j, m});
        }
    return {Multigraph(vertices.size(), edges), vertices};
}

Subgraph delete_vertex(const Multigraph& g, std::size_t v) {
    require(v < g.size(), "vertex out of range");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (i != v) keep.push_back(i);
    return induced_subgraph(g, keep);
}

Multigraph cone(const Multigraph& g) {
    std::vector<Multigraph::Edge> edges;
    for (std::size_t i = 0; i < g.size(); ++i) edges.push_back({0, i + 1, 1});
    for (const auto& e : g.edges()) edges.push_back({e.u + 1, e.v + 1, e.multiplicity});
    return Multigraph(g.size() + 1, edges);
}

Multigraph attach_pendant(const Multigraph& g, std::size_t v, int e) {
    require(v < g.size(), "vertex out of range");
    require(e >= 1, "pendant multiplicity must be positive");
    auto edges = g.edges();
    edges.push_back({v, g.size(), e});
    return Multigraph(g.size() + 1, edges);
}

Multigraph reorder(const Multigraph& g, const std::vector<std::size_t>& order) {
    require(order.size() == g.size(), "reorder needs a permutation of all vertices");
    return induced_subgraph(g, order).graph;
}

Integer spanning_tree_count(const Multigraph& g) {
    if (g.size() <= 1) return 1;
    return determinant(g.laplacian().without(0, 0));
}

namespace {

Multigraph path_graph(std::size_t n) {
    std::vector<Multigraph::Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
    return Multigraph(n, e);
}

Multigraph cycle_graph(std::size_t n) {
    if (n == 2) return Multigraph(2, {{0, 1, 2}});
    std::vector<Multigraph::Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n, 1});
    return Multigraph(n, e);
}

Multigraph complete_graph(std::size_t n) {
    std::vector<Multigraph::Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j, 1});
    return Multigraph(n, e);
}

Multigraph with_extra(const Multigraph& g, std::size_t extra,
                      const std::vector<Multigraph::Edge>& more) {
    auto e = g.edges();
    e.insert(e.end(), more.begin(), more.end());
    return Multigraph(g.size() + extra, e);
}

int single_param(const FamilySpec& s) {
    require(s.params.size() == 1, "family " + s.name() + " takes one parameter");
    return s.params[0];
}

}  // namespace

std::string FamilySpec::name() const {
    auto join = [](const std::vector<int>& v) {
        std::ostringstream os;
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        return os.str();
    };
    auto p0 = [&] { return params.empty() ? std::string("?") : std::to_string(params[0]); };
    switch (tag) {
        case FamilyTag::A: return "A" + p0();
        case FamilyTag::D: return "D" + p0();
        case FamilyTag::E: return "E" + p0();
        case FamilyTag::TildeD: return "~D" + p0();
        case FamilyTag::TildeE: return "~E" + p0();
        case FamilyTag::C: return "C" + p0();
        case FamilyTag::CPlus: return "C" + p0() + "+";
        case FamilyTag::K: return "K" + p0();
        case FamilyTag::KPlus: return "K" + p0() + "+";
        case FamilyTag::Kpq: return "K(" + join(params) + ")";
        case FamilyTag::S: return "S" + p0();
        case FamilyTag::SPlus: return "S" + p0() + "+";
        case FamilyTag::W: return "W" + p0();
        case FamilyTag::Cone: return "cone(" + (inner.empty() ? std::string("?") : inner[0].name()) + ")";
        case FamilyTag::Banana: return "banana(" + p0() + ")";
        case FamilyTag::WeightedPath: return "A" + std::to_string(params.size() + 1) + "(" + join(params) + ")";
        case FamilyTag::WeightedTriangle: return "C3(" + join(params) + ")";
        case FamilyTag::Custom: return "custom";
    }
    return "custom";
}

Multigraph build_family(const FamilySpec& s) {
    switch (s.tag) {
        case FamilyTag::A: {
            int n = single_param(s);
            require(n >= 1, "A_n needs n >= 1");
            return path_graph(n);
        }
        case FamilyTag::D: {
            int n = single_param(s);
            require(n >= 4, "D_n needs n >= 4");
            const std::size_t hub = n - 3;
            return with_extra(path_graph(n - 2), 2, {{hub, hub + 1, 1}, {hub, hub + 2, 1}});
        }
        case FamilyTag::E: {
            int n = single_param(s);
            require(n >= 6 && n <= 8, "E_n needs n in {6,7,8}");
            return with_extra(path_graph(n - 1), 1, {{2, static_cast<std::size_t>(n - 1), 1}});
        }
        case FamilyTag::TildeD: {
            int n = single_param(s);
            require(n >= 4, "~D_n needs n >= 4");
            const std::size_t m = n;
            return with_extra(path_graph(m - 1), 2, {{1, m - 1, 1}, {m - 3, m, 1}});
        }
        case FamilyTag::TildeE: {
            int n = single_param(s);
            require(n >= 6 && n <= 8, "~E_n needs n in {6,7,8}");
            if (n == 6) return with_extra(path_graph(5), 2, {{2, 5, 1}, {5, 6, 1}});
            if (n == 7) return with_extra(path_graph(7), 1, {{3, 7, 1}});
            return with_extra(path_graph(8), 1, {{5, 8, 1}});
        }
        case FamilyTag::C: {
            int n = single_param(s);
            require(n >= 2, "C_n needs n >= 2");
            return cycle_graph(n);
        }
        case FamilyTag::CPlus: {
            int n = single_param(s);
            require(n >= 2, "C_n^+ needs n >= 2");
            return attach_pendant(cycle_graph(n), 1);
        }
        case FamilyTag::K: {
            int n = single_param(s);
            require(n >= 1, "K_n needs n >= 1");
            return complete_graph(n);
        }
        case FamilyTag::KPlus: {
            int n = single_param(s);
            require(n >= 1, "K_n^+ needs n >= 1");
            return attach_pendant(complete_graph(n), 0);
        }
        case FamilyTag::Kpq: {
            require(s.params.size() == 2 && s.params[0] >= 1 && s.params[1] >= 1,
                    "K(p,q) needs p, q >= 1");
            const std::size_t p = s.params[0], q = s.params[1];
            std::vector<Multigraph::Edge> e;
            for (std::size_t i = 0; i < p; ++i)
                for (std::size_t j = 0; j < q; ++j) e.push_back({i, p + j, 1});
            return Multigraph(p + q, e);
        }
        case FamilyTag::S:
        case FamilyTag::SPlus: {
            int n = single_param(s);
            require(n >= 4, "S_n needs n >= 4");
            std::vector<Multigraph::Edge> e;
            for (std::size_t i = 1; i < static_cast<std::size_t>(n); ++i) e.push_back({0, i, 1});
            Multigraph star(n, e);
            return s.tag == FamilyTag::S ? star : attach_pendant(star, 1);
        }
        case FamilyTag::W: {
            int n = single_param(s);
            require(n >= 3, "W_n needs n >= 3");
            return cone(cycle_graph(n));
        }
        case FamilyTag::Cone: {
            require(s.inner.size() == 1, "cone needs exactly one argument");
            return cone(build_family(s.inner[0]));
        }
        case FamilyTag::Banana: {
            int e = single_param(s);
            require(e >= 1, "banana(e) needs e >= 1");
            return Multigraph(2, {{0, 1, e}});
        }
        case FamilyTag::WeightedPath: {
            require(!s.params.empty(), "weighted path needs multiplicities");
            std::vector<Multigraph::Edge> e;
            for (std::size_t i = 0; i < s.params.size(); ++i) {
                require(s.params[i] >= 1, "weighted path multiplicities must be positive");
                e.push_back({i, i + 1, s.params[i]});
            }
            return Multigraph(s.params.size() + 1, e);
        }
        case FamilyTag::WeightedTriangle: {
            require(s.params.size() == 3, "C3(e1,e2,e3) needs three multiplicities");
            for (int m : s.params) require(m >= 1, "triangle multiplicities must be positive");
            return Multigraph(3, {{1, 2, s.params[0]}, {0, 2, s.params[1]}, {0, 1, s.params[2]}});
        }
        case FamilyTag::Custom: break;
    }
    throw ContractError("custom graphs are built from JSON, not from a family name");
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        require(!item.empty() && std::all_of(item.begin(), item.end(), ::isdigit),
                "malformed parameter list: " + s);
        require(item.size() < 9, "parameter too large: " + item);
        out.push_back(std::stoi(item));
    }
    return out;
}

}  // namespace

FamilySpec parse_family(const std::string& raw) {
    const std::string text = trim(raw);
    FamilySpec s;
    if (text.rfind("cone(", 0) == 0 && text.back() == ')') {
        s.tag = FamilyTag::Cone;
        s.inner.push_back(parse_family(text.substr(5, text.size() - 6)));
        return s;
    }
    if (text.rfind("banana(", 0) == 0 && text.back() == ')') {
        s.tag = FamilyTag::Banana;
        s.params = parse_int_list(text.substr(7, text.size() - 8));
        require(s.params.size() == 1, "banana takes one multiplicity");
        build_family(s);
        return s;
    }
    static const std::regex kpq(R"(^K\(\s*(\d+)\s*,\s*(\d+)\s*\)$)");
    static const std::regex basic(R"(^(~?)([A-Z])(\d+)(\+?)(?:\(([0-9,\s]*)\))?$)");
    std::smatch m;
    if (std::regex_match(text, m, kpq)) {
        s.tag = FamilyTag::Kpq;
        s.params = parse_int_list(m[1].str() + "," + m[2].str());
        build_family(s);
        return s;
    }
    require(std::regex_match(text, m, basic), "unrecognized family: " + raw);
    const bool tilde = m[1].length() > 0;
    const char letter = m[2].str()[0];
    require(m[3].length() < 7, "family index too large: " + raw);
    const int n = std::stoi(m[3].str());
    const bool plus = m[4].length() > 0;
    const bool has_list = m[5].matched;
    s.params = {n};
    if (has_list) {
        require(!tilde && !plus, "unrecognized family: " + raw);
        auto list = parse_int_list(m[5].str());
        if (letter == 'A') {
            require(static_cast<int>(list.size()) + 1 == n, "A_n(e_1..e_{n-1}) needs n-1 multiplicities");
            s.tag = FamilyTag::WeightedPath;
            s.params = list;
            build_family(s);
            return s;
        }
        if (letter == 'C' && n == 3) {
            s.tag = FamilyTag::WeightedTriangle;
            s.params = list;
            build_family(s);
            return s;
        }
        throw ContractError("unrecognized family: " + raw);
    }
    if (tilde) {
        require(!plus, "unrecognized family: " + raw);
        if (letter == 'D') s.tag = FamilyTag::TildeD;
        else if (letter == 'E') s.tag = FamilyTag::TildeE;
        else throw ContractError("unrecognized family: " + raw);
    } else {
        switch (letter) {
            case 'A': s.tag = FamilyTag::A; break;
            case 'D': s.tag = FamilyTag::D; break;
            case 'E': s.tag = FamilyTag::E; break;
            case 'C': s.tag = plus ? FamilyTag::CPlus : FamilyTag::C; break;
            case 'K': s.tag = plus ? FamilyTag::KPlus : FamilyTag::K; break;
            case 'S': s.tag = plus ? FamilyTag::SPlus : FamilyTag::S; break;
            case 'W': s.tag = FamilyTag::W; break;
            default: throw ContractError("unrecognized family: " + raw);
        }
        require(!plus || letter == 'C' || letter == 'K' || letter == 'S', "unrecognized family: " + raw);
    }
    build_family(s);  // validates the parameter range
    return s;
}

}  // namespace arithgraph
