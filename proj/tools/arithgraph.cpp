// Command-line front end. JSON goes to stdout, a short summary to stderr.
// Exit codes: 0 success, 1 usage error, 2 contract violation, 3 internal error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arithgraph/error.hpp"
#include "arithgraph/io.hpp"

using namespace arithgraph;

namespace {

std::string format = "json";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json with_graph(const Multigraph& g, const Json& rest) {
    Json j{{"graph", render_graph(g)}};
    j.update(rest);
    return j;
}

void emit_rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    auto line = [](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ",";
            const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
            if (!quote) {
                out += cells[i];
                continue;
            }
            out += '"';
            for (char c : cells[i]) out += c == '"' ? std::string("\"\"") : std::string(1, c);
            out += '"';
        }
        return out;
    };
    std::cout << line(header) << "\n";
    for (const auto& r : rows) std::cout << line(r) << "\n";
}

std::string joined(const std::vector<Integer>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i].get_str();
    return out;
}

template <class T>
std::string joined_ints(const std::vector<T>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

void json_only(const std::string& command) {
    if (format != "json") throw UsageError(command + " only supports --format json");
}

std::vector<Integer> read_integers(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::vector<Integer> out;
    std::string tok;
    while (in >> tok) {
        for (auto& c : tok)
            if (c == ',') c = ' ';
        std::stringstream ss(tok);
        std::string part;
        while (ss >> part) {
            try {
                out.push_back(parse_integer(part));
            } catch (const std::invalid_argument&) {
                throw ContractError("not an integer in " + path + ": '" + part + "'");
            }
        }
    }
    return out;
}

void cmd_eval(const std::string& graph, const std::string& diag) {
    json_only("eval");
    const auto g = parse_graph(graph);
    const auto d = parse_integer_list(diag);
    require(d.size() == g.size(), "--diag needs one value per vertex");
    const auto m = matrix_at(g, d);
    const auto snf = smith_normal_form(m);
    Json j;
    j["graph"] = render_graph(g);
    j["diag"] = to_json(d);
    j["det"] = to_json(determinant(m));
    j["pd"] = is_positive_definite(m);
    j["psd_corank_one"] = g.is_connected() && is_psd_rank_deficient_one(m, true);
    j["phi"] = to_json(snf.nontrivial());
    j["cyclic"] = snf.is_cyclic();
    emit(j);
    std::cerr << "det = " << determinant(m).get_str() << "\n";
}

void cmd_sieve(const std::string& graph, SieveOptions o, bool oracle, bool witnesses) {
    const auto g = parse_graph(graph);
    const auto rep = oracle ? sieve_brute_force(g, o) : sieve(g, o);
    if (format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [value, w] : rep.hits) rows.push_back({std::to_string(value), "hit", joined_ints(w)});
        for (auto v : rep.complement) rows.push_back({std::to_string(v), "missed", ""});
        emit_rows({"value", "status", "witness"}, rows);
    } else {
        emit(with_graph(g, sieve_json(rep, witnesses)));
    }
    std::cerr << rep.hits.size() << " values hit, " << rep.complement.size() << " missed in [0, " << o.max_value
              << "]" << (rep.complete ? "" : " (box-limited)") << "\n";
}

void cmd_structures(const std::string& graph, std::int64_t r, std::int64_t bound, unsigned jobs) {
    const auto g = parse_graph(graph);
    const auto e = enumerate_structures(g, r, bound, jobs);
    if (format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& s : e.items)
            rows.push_back({joined(s.diag.values()), joined(s.r), joined(s.phi.nontrivial()), s.group_order().get_str()});
        emit_rows({"diag", "r", "phi", "order"}, rows);
    } else {
        Json items = Json::array();
        for (const auto& s : e.items) items.push_back(structure_json(s));
        emit({{"graph", render_graph(g)},
              {"box_min", to_json(e.box_min)},
              {"box_max", to_json(e.box_max)},
              {"count", e.items.size()},
              {"structures", items}});
    }
    std::cerr << e.items.size() << " structures with diagonal in [" << e.box_min.get_str() << ", "
              << e.box_max.get_str() << "]\n";
}

SeedOptions seeds_from(const std::string& kn_file) {
    SeedOptions s;
    if (!kn_file.empty()) s.extra.push_back(kn_seed_from_solution(read_integers(kn_file)));
    return s;
}

void cmd_witness(const std::string& graph, int r, const std::string& m, const std::string& kn_file) {
    json_only("witness");
    const auto g = parse_graph(graph);
    const auto seeds = seeds_from(kn_file);
    Json j{{"graph", render_graph(g)}, {"r", r}};
    if (m.empty()) {
        const auto w = unit_witness(g, r, seeds);
        j["found"] = w.has_value();
        if (w) j["witness"] = unit_witness_json(*w);
        emit(j);
        std::cerr << (w ? "determinant-one labeling from seed " + w->seed : std::string("no seed embeds")) << "\n";
        return;
    }
    const Integer target = parse_integer(m);
    require(target >= 1, "--m must be >= 1");
    const auto pw = positive_witness(g, r, seeds);
    j["found"] = pw.has_value();
    if (pw) {
        const auto d = pw->value(g, target);
        j["m"] = to_json(target);
        j["diag"] = to_json(d.values());
        j["vertex"] = pw->vertex;
        j["base"] = unit_witness_json(pw->base);
        j["base_to_graph"] = pw->base_to_g;
        j["det"] = to_json(evaluate(g, d));
    }
    emit(j);
    std::cerr << (pw ? "labeling with determinant " + target.get_str() : std::string("no proper seed embeds")) << "\n";
}

void cmd_trivial(const std::string& graph) {
    json_only("trivial-structure");
    const auto g = parse_graph(graph);
    const auto s = trivial_group_structure(g);
    emit(with_graph(g, structure_json(s)));
    std::cerr << "structure with group order " << s.group_order().get_str() << "\n";
}

void cmd_classify(const std::string& graph, const std::string& kn_file) {
    json_only("classify");
    const auto g = parse_graph(graph);
    const auto f = recognize_family(g);
    Json j{{"graph", render_graph(g)}, {"family", f.name()}};
    Json aliases = Json::array();
    for (const auto& a : f.aliases) aliases.push_back(a.name());
    j["aliases"] = aliases;
    if (g.size() >= 1 && g.is_connected()) {
        j["dynkin"] = to_string(dynkin_numeric_check(g));
        if (auto fl = floor_value(g, 2)) j["floor_at_2"] = to_json(*fl);
        if (g.is_simple()) {
            const auto t = types_decompose(g);
            j["type"] = to_string(t.kind);
            if (t.kind == TypesKind::HasSeed) j["seed"] = {{"name", t.seed}, {"vertices", t.embedding}};
            const auto v = positivity_verdict(g, seeds_from(kn_file));
            j["all_positive_values"] = v.contains_all_positives;
            if (!v.contains_all_positives) j["blocking_family"] = v.family;
        }
    }
    emit(j);
    std::cerr << "family " << f.name() << "\n";
}

void cmd_density(const std::string& graph, int budget, std::int64_t empirical, unsigned jobs) {
    json_only("density");
    const auto g = parse_graph(graph);
    const auto c = density_certificate(g);
    Json j{{"graph", render_graph(g)}, {"certified", c.has_value()}};
    if (c) {
        j["certificate"] = certificate_json(*c);
        const auto p = progressions_from_certificate(*c, budget);
        Json values = Json::array();
        for (const auto& v : p.values) values.push_back({{"u", to_json(v.u)}, {"w", to_json(v.w)}, {"t", to_json(v.t)}});
        j["progressions"] = values;
        const Rational d = union_density(p.progressions);
        j["union_density"] = d.get_str();
        j["union_density_approx"] = d.get_d();
    }
    if (empirical > 0) {
        SieveOptions o;
        o.mode = SieveMode::Any;
        o.max_value = empirical;
        o.jobs = jobs;
        const auto proven = proven_box_bound(g, 2, empirical);
        o.box = proven.value_or(40);
        const auto rep = sieve(g, o);
        std::vector<bool> member(static_cast<std::size_t>(empirical) + 1, false);
        for (const auto& [v, w] : rep.hits) member[static_cast<std::size_t>(v)] = true;
        const Rational e = empirical_density(member, empirical);
        j["empirical"] = {{"max", empirical}, {"box", o.box}, {"complete", rep.complete},
                          {"density", e.get_str()}, {"density_approx", e.get_d()}};
    }
    emit(j);
    std::cerr << (c ? "coprime form found via " + c->recipe : std::string("no certificate")) << "\n";
}

void cmd_snf(const std::string& input, const std::string& diag) {
    json_only("snf");
    ExactMatrix m;
    if (!diag.empty()) {
        const auto g = parse_graph(input);
        const auto d = parse_integer_list(diag);
        require(d.size() == g.size(), "--diag needs one value per vertex");
        m = matrix_at(g, d);
    } else {
        Json j;
        try {
            j = Json::parse(input);
        } catch (const nlohmann::json::parse_error& e) {
            throw ContractError("matrix JSON parse error at byte " + std::to_string(e.byte));
        }
        require(j.is_array(), "matrix must be a JSON array of rows");
        std::vector<std::vector<Integer>> rows;
        for (const auto& row : j) {
            require(row.is_array() && row.size() == j.size(), "matrix must be square");
            std::vector<Integer> r;
            for (const auto& x : row) {
                require(x.is_number_integer() || x.is_string(), "matrix entries must be integers");
                r.push_back(x.is_string() ? parse_integer(x.get<std::string>()) : Integer(x.get<long>()));
            }
            rows.push_back(r);
        }
        m = ExactMatrix::from_rows(rows);
    }
    const auto s = smith_normal_form(m);
    emit({{"rank", s.rank}, {"factors", to_json(s.factors)}, {"phi", to_json(s.nontrivial())},
          {"cyclic", s.is_cyclic()}});
    std::cerr << "rank " << s.rank << "\n";
}

void cmd_egyptian(int n, std::int64_t min_y, unsigned jobs, const std::string& check, bool extend) {
    if (!check.empty()) {
        json_only("egyptian --check");
        auto y = read_integers(check);
        if (extend) y = extend_egyptian(y);
        const bool ok = egyptian_check(y);
        Json j{{"y", to_json(y)}, {"n", y.size()}, {"identity", ok}};
        const bool seed = ok && std::all_of(y.begin(), y.end(), [](const Integer& v) { return v >= 3; });
        if (seed) {
            const auto w = kn_witness_from_solution(y);
            const auto m = matrix_at(w.graph, w.diag);
            j["graph"] = render_graph(w.graph);
            j["diag"] = to_json(w.diag.values());
            j["det"] = to_json(determinant(m));
            j["pd"] = is_positive_definite(m);
        }
        emit(j);
        std::cerr << (ok ? "identity holds" : "identity fails") << "\n";
        return;
    }
    if (n < 1) throw UsageError("egyptian needs --n or --check");
    const auto start = std::chrono::steady_clock::now();
    const auto sol = egyptian_search(n, min_y, jobs);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (format == "csv") {
        emit_rows({"n", "min", "found", "y"}, {{std::to_string(n), std::to_string(min_y), sol ? "true" : "false",
                                               sol ? joined(*sol) : ""}});
    } else {
        emit({{"n", n}, {"min", min_y}, {"found", sol.has_value()}, {"y", sol ? to_json(*sol) : Json(nullptr)},
              {"seconds", secs}});
    }
    std::cerr << (sol ? "solution found" : "no solution") << "\n";
}

int cmd_reproduce(const std::string& table, bool all, bool list, std::optional<std::int64_t> max_value,
                  std::optional<std::int64_t> box, unsigned jobs) {
    if (list) {
        std::vector<std::vector<std::string>> rows;
        Json arr = Json::array();
        for (const auto& t : repro_targets()) {
            const std::string b = t.box ? std::to_string(*t.box) : std::string("proven");
            rows.push_back({t.id, t.graph, std::to_string(t.max_value), b, t.source});
            arr.push_back({{"id", t.id}, {"graph", t.graph}, {"max", t.max_value}, {"box", b}, {"description", t.source}});
        }
        if (format == "csv") emit_rows({"id", "graph", "max", "box", "description"}, rows);
        else emit(arr);
        return 0;
    }
    std::vector<ReproTarget> targets;
    if (all) {
        targets = repro_targets();
    } else {
        auto t = find_target(table);
        if (!t) throw UsageError("unknown table '" + table + "' (see reproduce --list)");
        targets.push_back(*t);
    }
    bool ok = true;
    Json arr = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& t : targets) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = reproduce(t, max_value, box, jobs);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        ok = ok && r.pass;
        Json j = repro_json(r);
        j["seconds"] = secs;
        arr.push_back(j);
        rows.push_back({t.id, r.pass ? "PASS" : "FAIL", joined_ints(r.complement), joined_ints(r.unexpected)});
        std::cerr << (r.pass ? "PASS " : "FAIL ") << t.id << "\n";
    }
    if (format == "csv") emit_rows({"target", "result", "complement", "unexpected"}, rows);
    else emit(all ? arr : arr[0]);
    return ok ? 0 : 4;
}

void print_catalogue() {
    Json arr = Json::array();
    for (const auto& s : seed_catalogue(12))
        arr.push_back({{"name", s.name}, {"graph", graph_json(s.graph)}, {"diag", to_json(s.diag)},
                       {"det", to_json(evaluate(s.graph, s.diag))}});
    emit(arr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Values of the critical polynomial det(Diag(x) - A_G) of multigraphs"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    bool catalogue = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--seed-catalogue", catalogue, "Print the r = 2 seed catalogue (C_m^+ up to m = 11)");

    std::string graph, diag, mode_name = "any", m_value, kn_file, check, table;
    SieveOptions so;
    unsigned jobs = 1;
    bool oracle = false, witnesses = false, extend = false, all = false, list = false;
    std::int64_t r = 2, bound = 20, min_y = 3, empirical = 0;
    int n = 0, budget = 8;
    std::optional<std::int64_t> max_override, box_override;

    auto* eval = app.add_subcommand("eval", "Evaluate d_G at a diagonal");
    eval->add_option("graph", graph, "Family name or JSON")->required();
    eval->add_option("--diag", diag, "Comma separated diagonal")->required();

    auto* sv = app.add_subcommand("sieve", "Values of d_G (or of V_G) in [0, max] with entries in [r, box]");
    sv->add_option("graph", graph)->required();
    sv->add_option("--mode", mode_name)->check(CLI::IsMember({"any", "pd", "pd-cyclic", "structure-zero"}));
    sv->add_option("--r", so.r);
    sv->add_option("--max", so.max_value);
    sv->add_option("--box", so.box);
    sv->add_option("--jobs", jobs);
    sv->add_flag("--oracle", oracle, "Unpruned full-box scan");
    sv->add_flag("--witnesses", witnesses, "Include one witness per value");

    auto* st = app.add_subcommand("structures", "Arithmetical structures with diagonal in [r, bound]");
    st->add_option("graph", graph)->required();
    st->add_option("--r", r);
    st->add_option("--bound", bound);
    st->add_option("--jobs", jobs);

    auto* wi = app.add_subcommand("witness", "Positive definite labeling with determinant 1 (or --m)");
    wi->add_option("graph", graph)->required();
    wi->add_option("--r", r);
    wi->add_option("--m,--value", m_value, "Target determinant");
    wi->add_option("--kn-solution", kn_file, "File with an Egyptian fraction solution to use as a K_n seed");

    auto* tr = app.add_subcommand("trivial-structure", "Arithmetical structure with trivial group");
    tr->add_option("graph", graph)->required();

    auto* cl = app.add_subcommand("classify", "Family, Dynkin type, graph type and positivity");
    cl->add_option("graph", graph)->required();
    cl->add_option("--kn-solution", kn_file);

    auto* de = app.add_subcommand("density", "Coprime linear form and progression lower bound");
    de->add_option("graph", graph)->required();
    de->add_option("--budget", budget, "Number of primes");
    de->add_option("--empirical", empirical, "Also sieve [0, N] and report the observed density");
    de->add_option("--jobs", jobs);

    auto* sn = app.add_subcommand("snf", "Smith normal form of a matrix (JSON rows) or of M_G(--diag)");
    sn->add_option("input", graph)->required();
    sn->add_option("--diag", diag);

    auto* eg = app.add_subcommand("egyptian", "Search or check sum 1/y_i + 1/prod y_i = 1");
    eg->add_option("--n", n);
    eg->add_option("--min", min_y);
    eg->add_option("--jobs", jobs);
    eg->add_option("--check", check, "File with y_1 ... y_n");
    eg->add_flag("--extend", extend, "Append prod y + 1 before checking");

    auto* rp = app.add_subcommand("reproduce", "Compare sieve complements with stored candidate lists");
    rp->add_option("--table", table);
    rp->add_flag("--all", all);
    rp->add_flag("--list", list);
    rp->add_option("--max", max_override);
    rp->add_option("--box", box_override);
    rp->add_option("--jobs", jobs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (catalogue) {
            print_catalogue();
            return 0;
        }
        if (eval->parsed()) cmd_eval(graph, diag);
        else if (sv->parsed()) {
            so.mode = parse_sieve_mode(mode_name);
            so.jobs = jobs;
            cmd_sieve(graph, so, oracle, witnesses);
        } else if (st->parsed()) cmd_structures(graph, r, bound, jobs);
        else if (wi->parsed()) cmd_witness(graph, static_cast<int>(r), m_value, kn_file);
        else if (tr->parsed()) cmd_trivial(graph);
        else if (cl->parsed()) cmd_classify(graph, kn_file);
        else if (de->parsed()) cmd_density(graph, budget, empirical, jobs);
        else if (sn->parsed()) cmd_snf(graph, diag);
        else if (eg->parsed()) cmd_egyptian(n, min_y, jobs, check, extend);
        else if (rp->parsed()) {
            if (!all && !list && table.empty()) throw UsageError("reproduce needs --table, --all or --list");
            return cmd_reproduce(table, all, list, max_override, box_override, jobs);
        } else {
            std::cerr << app.help();
            return 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
