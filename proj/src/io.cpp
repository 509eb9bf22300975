#include "arithgraph/io.hpp"

#include <sstream>

#include "arithgraph/error.hpp"

namespace arithgraph {

namespace {

std::size_t index_of(const Json& v, const std::string& what) {
    require(v.is_number_integer() && v.get<long long>() >= 0, what + " must be a nonnegative integer");
    return v.get<std::size_t>();
}

Multigraph from_matrix(const Json& rows) {
    require(rows.is_array(), "adjacency must be an array of rows");
    std::vector<std::vector<int>> m;
    for (const auto& row : rows) {
        require(row.is_array() && row.size() == rows.size(), "adjacency must be square");
        std::vector<int> r;
        for (const auto& x : row) r.push_back(static_cast<int>(index_of(x, "multiplicity")));
        m.push_back(r);
    }
    return Multigraph::from_multiplicities(m);
}

Multigraph from_json(const Json& j) {
    if (j.is_array()) return from_matrix(j);
    require(j.is_object(), "graph JSON must be an object or a matrix");
    if (j.contains("adjacency")) return from_matrix(j.at("adjacency"));
    require(j.contains("n"), "graph JSON needs \"n\" and \"edges\", or \"adjacency\"");
    const std::size_t n = index_of(j.at("n"), "n");
    std::vector<Multigraph::Edge> edges;
    if (j.contains("edges")) {
        require(j.at("edges").is_array(), "edges must be an array");
        for (const auto& e : j.at("edges")) {
            require(e.is_array() && (e.size() == 2 || e.size() == 3), "an edge is [u, v] or [u, v, multiplicity]");
            const int m = e.size() == 3 ? static_cast<int>(index_of(e[2], "multiplicity")) : 1;
            require(m >= 1, "edge multiplicity must be >= 1");
            edges.push_back({index_of(e[0], "vertex"), index_of(e[1], "vertex"), m});
        }
    }
    return Multigraph(n, edges);
}

}  // namespace

Multigraph parse_graph(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    require(first != std::string::npos, "empty graph description");
    if (text[first] == '{' || text[first] == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ContractError("graph JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
        }
        return from_json(j);
    }
    return build_family(parse_family(text));
}

std::string render_graph(const Multigraph& g) {
    const auto f = recognize_family(g);
    if (f.primary && build_family(*f.primary) == g) return f.primary->name();
    for (const auto& a : f.aliases)
        if (build_family(a) == g) return a.name();
    Json j;
    j["n"] = g.size();
    j["edges"] = Json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v, e.multiplicity});
    return j.dump();
}

std::vector<Integer> parse_integer_list(const std::string& text) {
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_integer(item));
        } catch (const std::invalid_argument&) {
            throw ContractError("not an integer: '" + item + "'");
        }
    }
    return out;
}

Json to_json(const Integer& v) { return v.get_str(); }

Json to_json(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

Json graph_json(const Multigraph& g) {
    Json j;
    j["name"] = render_graph(g);
    j["n"] = g.size();
    j["edges"] = Json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v, e.multiplicity});
    return j;
}

Json structure_json(const ArithmeticalStructure& s) {
    Json j;
    j["diag"] = to_json(s.diag.values());
    j["r"] = to_json(s.r);
    j["phi"] = to_json(s.phi.nontrivial());
    j["order"] = to_json(s.group_order());
    j["cyclic"] = s.phi.is_cyclic();
    return j;
}

Json sieve_json(const SieveReport& r, bool witnesses) {
    Json j;
    j["mode"] = to_string(r.options.mode);
    j["r"] = r.options.r;
    j["max"] = r.options.max_value;
    j["box"] = r.options.box;
    j["complete"] = r.complete;
    j["proven_box"] = r.proven_box ? Json(*r.proven_box) : Json(nullptr);
    j["hit_count"] = r.hits.size();
    j["complement"] = r.complement;
    if (witnesses) {
        Json h = Json::object();
        for (const auto& [value, w] : r.hits) h[std::to_string(value)] = w;
        j["hits"] = h;
    }
    return j;
}

Json unit_witness_json(const UnitWitness& w) {
    Json j;
    j["diag"] = to_json(w.diag.values());
    j["seed"] = w.seed;
    j["seed_vertices"] = w.seed_vertices;
    Json steps = Json::array();
    for (const auto& s : w.steps) steps.push_back({{"vertex", s.added}, {"a", to_json(s.a)}, {"value", to_json(s.value)}});
    j["steps"] = steps;
    return j;
}

Json certificate_json(const DensityCertificate& c) {
    Json j;
    j["vertex"] = c.vertex;
    j["t_vertex"] = c.t_vertex;
    j["subgraph"] = c.subgraph;
    j["recipe"] = c.recipe;
    Json forms = Json::array();
    for (const auto& f : c.forms)
        forms.push_back({{"alpha", to_json(f.form.alpha)}, {"beta", to_json(f.form.beta)}, {"rest", to_json(f.rest)}});
    j["forms"] = forms;
    return j;
}

Json repro_json(const ReproResult& r) {
    Json j;
    j["target"] = r.target.id;
    j["graph"] = r.target.graph;
    j["description"] = r.target.source;
    j["pass"] = r.pass;
    if (!r.notes.empty()) {
        j["details"] = r.notes;
        return j;
    }
    j["mode"] = to_string(r.target.mode);
    j["max"] = r.max_value;
    j["box"] = r.box;
    j["box_proven"] = r.box_proven;
    j["complete"] = r.complete;
    j["complement"] = r.complement;
    j["unexpected"] = r.unexpected;
    j["listed_but_reached"] = r.reached;
    return j;
}

}  // namespace arithgraph
