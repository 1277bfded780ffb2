#include "pmcount/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmcount/edge_list.hpp"
#include "pmcount/error.hpp"
#include "pmcount/linalg.hpp"
#include "pmcount/matching.hpp"
#include "pmcount/orientation.hpp"

namespace pmcount::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::parse,
                    "invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, sep)) parts.push_back(part);
    return parts;
}

template <typename Reader>
auto read_file(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::parse, "cannot open '" + path + "'");
    try {
        return reader(in);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::parse) throw;
        throw Error(ErrorKind::parse, path + ": " + e.what());
    }
}

Tree parse_tree_spec(const std::string& spec) { return validate_tree(parse_graph_spec(spec)); }

OrientedGraph orient_tree(const Tree& t, const std::string& how) {
    if (how == "lex") return orient_lexicographic(t.graph());
    auto parts = split(how, ':');
    if (parts.size() == 2 && parts[0] == "random") {
        return orient_random(t.graph(), parse_unsigned(parts[1], "orientation seed"));
    }
    throw Error(ErrorKind::parse, "tree orientation must be 'lex' or 'random:SEED'");
}

bool is_path(const Tree& t) {
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        if (t.graph().degree(v) > 2) return false;
    }
    return true;
}

// The factor multiplied with the tree: C4, or P_m.
struct ProductKind {
    bool cycle = false;
    std::size_t layers = 0;

    Graph factor() const { return cycle ? cycle_graph(4) : path_graph(layers).graph(); }
    std::string name() const { return cycle ? "c4" : "p" + std::to_string(layers); }
};

ProductKind parse_product(const std::string& text) {
    if (text == "c4") return {true, 4};
    if (text.size() >= 2 && text[0] == 'p') {
        const auto m = parse_unsigned(std::string_view(text).substr(1), "product");
        if (m >= 1) return {false, m};
    }
    throw Error(ErrorKind::parse, "product must be 'c4' or 'pM' with M >= 1, got '" + text + "'");
}

struct Guards {
    std::size_t brute = default_brute_guard;
    std::size_t cycles = default_cycle_guard;
};

Guards resolve_guards(const std::optional<std::size_t>& flag) {
    Guards g;
    std::optional<std::size_t> chosen = flag;
    if (!chosen) {
        if (const char* env = std::getenv(guard_env_var); env && *env) {
            chosen = parse_unsigned(env, guard_env_var);
        }
    }
    if (chosen) g.brute = g.cycles = *chosen;
    return g;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return exit_parse_error;
        case ErrorKind::invalid_size:
        case ErrorKind::invalid_graph:
        case ErrorKind::not_a_tree:
        case ErrorKind::invalid_cycle:
        case ErrorKind::parity:
        case ErrorKind::domain:
        case ErrorKind::precondition:
        case ErrorKind::structure: return exit_precondition;
        case ErrorKind::size_limit: return exit_size_limit;
        case ErrorKind::not_pfaffian: return exit_violation;
        case ErrorKind::numerical_consistency: return exit_numerical;
        case ErrorKind::not_perfect_square:
        case ErrorKind::not_squarish:
        case ErrorKind::internal: return exit_failure;
    }
    return exit_failure;
}

Json cycle_json(const Cycle& c) { return Json(c.vertices); }

std::string cycle_text(const Cycle& c) {
    std::string s;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(c.vertices[i]);
    }
    return s;
}

// Shared state of one invocation: the request echo, the chosen format and
// the report being assembled.
struct Session {
    std::vector<std::string> args;
    std::string subcommand;
    bool json = false;
    Clock::time_point started = Clock::now();
    Json report;

    Json request() const {
        Json r;
        r["subcommand"] = subcommand;
        r["args"] = args;
        return r;
    }

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    }
};

struct CountOptions {
    std::string graph;
    std::string product;
    std::string tree;
    std::string method = "auto";
    std::string orient_file;
    std::string tree_orientation = "lex";
};

Json count_json(const CountResult& r) {
    Json j;
    j["method"] = std::string(to_string(r.method));
    j["count"] = r.count.str();
    if (r.matrix_dimension) j["matrix_dimension"] = *r.matrix_dimension;
    if (r.determinant) j["determinant"] = r.determinant->str();
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

CountResult count_product(const CountOptions& opt, const Guards& guards) {
    const ProductKind kind = parse_product(opt.product);
    const Tree t = parse_tree_spec(opt.tree);
    const std::string& method = opt.method;

    auto brute = [&] { return count_brute(cartesian_product(kind.factor(), t.graph()), guards.brute); };
    auto pfaffian = [&]() -> CountResult {
        const OrientedGraph d = orient_tree(t, opt.tree_orientation);
        OrientedGraph oriented;
        if (kind.cycle) {
            oriented = orient_c4_tree(d);
        } else if (kind.layers == 3 && !has_perfect_matching(t.graph())) {
            throw Error(ErrorKind::structure,
                        "the layered P3 x T orientation is only known to be Pfaffian when T "
                        "has a perfect matching; use --method brute");
        } else if (kind.layers > 4 && !is_path(t)) {
            throw Error(ErrorKind::structure,
                        "no Pfaffian orientation constructor for P" +
                            std::to_string(kind.layers) + " x T with T not a path; use --method brute");
        } else {
            oriented = orient_layered(d, kind.layers);
        }
        return count_pfaffian(oriented.base(), oriented);
    };
    auto grid = [&] {
        if (kind.cycle || !is_path(t)) {
            throw Error(ErrorKind::structure, "the grid product formula needs --product pM with a path tree");
        }
        return count_grid_dimer(kind.layers, t.vertex_count());
    };
    auto formula = [&]() -> CountResult {
        if (kind.cycle) return count_c4_tree(t);
        if (kind.layers == 4) return count_p4_tree(t);
        if (kind.layers == 3) return count_p3_tree(t);
        if (is_path(t) && kind.layers != 2) return grid();
        throw Error(ErrorKind::structure,
                    "no closed form for " + kind.name() + " x T; use --method brute or pfaffian");
    };

    if (method == "brute") return brute();
    if (method == "pfaffian") return pfaffian();
    if (method == "formula") return formula();
    if (method == "kasteleyn") return grid();
    if (method == "narumi-hosoya") {
        if (!kind.cycle || !is_path(t)) {
            throw Error(ErrorKind::structure, "the 2 x 2 x n lattice formula needs --product c4 with a path tree");
        }
        return count_c4_path(t.vertex_count());
    }
    if (method != "auto") throw Error(ErrorKind::parse, "unknown method '" + method + "'");

    // formula > pfaffian > brute
    if (kind.cycle || kind.layers == 4) return formula();
    if (kind.layers == 3) return has_perfect_matching(t.graph()) ? formula() : brute();
    if (kind.layers > 4 && is_path(t)) {
        try {
            return grid();
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::numerical_consistency) throw;
            return pfaffian();
        }
    }
    if (kind.layers <= 2) return pfaffian();
    return brute();
}

CountResult count_plain_graph(const CountOptions& opt, const Guards& guards) {
    const Graph g = parse_graph_spec(opt.graph);
    const std::string& method = opt.method;
    if (method == "brute" || (method == "auto" && opt.orient_file.empty())) {
        return count_brute(g, guards.brute);
    }
    if (method == "pfaffian" || method == "auto") {
        if (opt.orient_file.empty()) {
            throw Error(ErrorKind::structure, "--method pfaffian on a plain graph needs --orient-file");
        }
        const OrientedGraph d = read_file(opt.orient_file, read_oriented_edge_list);
        if (!(d.base() == g)) {
            throw Error(ErrorKind::precondition, "orientation file does not orient the given graph");
        }
        return count_pfaffian(g, d);
    }
    if (method == "formula" || method == "kasteleyn" || method == "narumi-hosoya") {
        throw Error(ErrorKind::structure,
                    "formula methods need --product with --tree; use --method brute");
    }
    throw Error(ErrorKind::parse, "unknown method '" + method + "'");
}

int do_count(Session& s, const CountOptions& opt, const Guards& guards, std::ostream& out) {
    const bool has_graph = !opt.graph.empty();
    const bool has_product = !opt.product.empty() || !opt.tree.empty();
    if (has_graph == has_product) {
        throw Error(ErrorKind::parse, "count needs either --graph or --product with --tree");
    }
    if (has_product && (opt.product.empty() || opt.tree.empty())) {
        throw Error(ErrorKind::parse, "--product and --tree must be given together");
    }
    const CountResult r = has_graph ? count_plain_graph(opt, guards) : count_product(opt, guards);
    if (s.json) {
        s.report.update(count_json(r));
        s.report["violations"] = Json::array();
    } else {
        out << "count: " << r.count << '\n' << "method: " << to_string(r.method) << '\n';
        if (r.matrix_dimension) out << "matrix dimension: " << *r.matrix_dimension << '\n';
        if (r.determinant) out << "determinant: " << *r.determinant << '\n';
        if (!r.notes.empty()) out << "notes: " << r.notes << '\n';
    }
    return exit_ok;
}

struct OrientOptions {
    bool c4 = false;
    bool double_ = false;
    std::size_t layers = 0;
    std::string tree;
    std::string graph;
    std::string tree_orientation = "lex";
};

// Builds the orientation selected by --c4 / --layers / --double.
std::pair<std::string, OrientedGraph> build_orientation(const OrientOptions& opt) {
    const int chosen = int(opt.c4) + int(opt.double_) + int(opt.layers > 0);
    if (chosen != 1) throw Error(ErrorKind::parse, "choose exactly one of --c4, --layers M, --double");
    if (!opt.tree.empty() == !opt.graph.empty()) {
        throw Error(ErrorKind::parse, "give exactly one of --tree or --graph");
    }
    if (opt.double_) {
        OrientedGraph base = opt.tree.empty()
                                 ? orient_lexicographic(parse_graph_spec(opt.graph))
                                 : orient_tree(parse_tree_spec(opt.tree), opt.tree_orientation);
        return {"double", orient_double(base)};
    }
    if (!opt.graph.empty()) validate_tree(parse_graph_spec(opt.graph));
    const Tree t = parse_tree_spec(opt.tree.empty() ? opt.graph : opt.tree);
    const OrientedGraph d = orient_tree(t, opt.tree_orientation);
    if (opt.c4) return {"c4", orient_c4_tree(d)};
    return {"layers:" + std::to_string(opt.layers), orient_layered(d, opt.layers)};
}

int do_orient(Session& s, const OrientOptions& opt, std::ostream& out) {
    auto [name, d] = build_orientation(opt);
    if (s.json) {
        s.report["method"] = "orient-" + name;
        s.report["vertices"] = d.vertex_count();
        Json arcs = Json::array();
        for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
        s.report["arcs"] = std::move(arcs);
        s.report["violations"] = Json::array();
    } else {
        write_oriented_edge_list(out, d, "orientation " + name);
    }
    return exit_ok;
}

struct VerifyOptions {
    bool pfaffian = false;
    bool identities = false;
    std::string orient_file;
    OrientOptions orientation;
};

int do_verify(Session& s, const VerifyOptions& opt, const Guards& guards, std::ostream& out) {
    if (!opt.pfaffian && !opt.identities) {
        throw Error(ErrorKind::parse, "verify needs --pfaffian and/or --identities");
    }
    bool violated = false;
    Json violations = Json::array();
    s.report["method"] = "verify";

    if (opt.pfaffian) {
        OrientedGraph d;
        std::string name;
        if (!opt.orient_file.empty()) {
            d = read_file(opt.orient_file, read_oriented_edge_list);
            name = "file";
            const std::string& spec = !opt.orientation.graph.empty() ? opt.orientation.graph
                                                                     : opt.orientation.tree;
            if (!spec.empty() && !(parse_graph_spec(spec) == d.base())) {
                throw Error(ErrorKind::precondition, "orientation file does not orient the given graph");
            }
        } else {
            std::tie(name, d) = build_orientation(opt.orientation);
        }
        const PfaffianReport report = check_pfaffian(d, guards.cycles);
        violated = violated || !report.pass;
        for (const Cycle& c : report.violations) violations.push_back(cycle_json(c));
        if (s.json) {
            s.report["pfaffian"] = {{"orientation", name},
                                    {"pass", report.pass},
                                    {"cycles", report.cycles_examined},
                                    {"nice_even_cycles", report.nice_even_cycles}};
        } else {
            out << "pfaffian (" << name << "): " << (report.pass ? "pass" : "FAIL") << " ("
                << report.nice_even_cycles << " nice even cycles of " << report.cycles_examined
                << " cycles)\n";
            for (const Cycle& c : report.violations) {
                out << "  violation: " << cycle_text(c) << " is not oddly oriented\n";
            }
        }
    }

    if (opt.identities) {
        if (opt.orientation.tree.empty()) throw Error(ErrorKind::parse, "--identities needs --tree");
        const IdentityReport report = verify_identities(parse_tree_spec(opt.orientation.tree), guards.cycles);
        violated = violated || !report.ok();
        Json clauses = Json::array();
        for (const auto& c : report.clauses) {
            const char* status = c.status == ClauseStatus::pass   ? "pass"
                                 : c.status == ClauseStatus::fail ? "fail"
                                                                  : "skipped";
            if (s.json) {
                clauses.push_back({{"name", c.name}, {"status", status}, {"detail", c.detail}});
            } else {
                out << c.name << ": " << status;
                if (!c.detail.empty()) out << " (" << c.detail << ')';
                out << '\n';
            }
        }
        if (s.json) {
            s.report["identities"] = {{"pass", report.ok()},
                                      {"c4_count", report.c4_count.str()},
                                      {"clauses", std::move(clauses)}};
            s.report["count"] = report.c4_count.str();
        } else {
            out << "identities: " << (report.ok() ? "pass" : "FAIL") << '\n';
        }
    }

    s.report["verdict"] = violated ? "fail" : "pass";
    s.report["violations"] = std::move(violations);
    if (!s.json) out << "verdict: " << (violated ? "fail" : "pass") << '\n';
    return violated ? exit_violation : exit_ok;
}

int do_product(Session& s, const std::string& left, const std::string& right, std::ostream& out) {
    const Graph g = parse_graph_spec(left);
    const Graph h = parse_graph_spec(right);
    const Graph p = cartesian_product(g, h);
    const std::string numbering = "product " + left + " x " + right + "\nvertex (i, j) is numbered i*" +
                                  std::to_string(h.vertex_count()) +
                                  " + j: one copy of the right factor per left vertex (layer-major)";
    if (s.json) {
        s.report["method"] = "product";
        s.report["numbering"] = "layer-major";
        s.report["vertices"] = p.vertex_count();
        Json edges = Json::array();
        for (const Edge& e : p.edges()) edges.push_back({e.u, e.v});
        s.report["edges"] = std::move(edges);
        s.report["violations"] = Json::array();
    } else {
        write_edge_list(out, p, numbering);
    }
    return exit_ok;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() == 2 && parts[0] == "path") {
        return path_graph(parse_unsigned(parts[1], "path length")).graph();
    }
    if (parts.size() == 2 && parts[0] == "cycle") {
        return cycle_graph(parse_unsigned(parts[1], "cycle length"));
    }
    if (parts.size() == 3 && parts[0] == "tree-random") {
        return random_tree(parse_unsigned(parts[1], "tree size"), parse_unsigned(parts[2], "seed"))
            .graph();
    }
    if (parts.size() >= 2 && (parts[0] == "path" || parts[0] == "cycle" || parts[0] == "tree-random")) {
        throw Error(ErrorKind::parse, "malformed generator spec '" + spec + "'");
    }
    return read_file(spec, read_edge_list);
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact perfect-matching counts for Cartesian products with trees", "pmcount"};
    app.require_subcommand(1);

    std::string format = "human";
    std::optional<std::size_t> max_vertices;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "json"}));
        sub->add_option("--max-vertices", max_vertices,
                        "Vertex guard for brute force and cycle enumeration");
    };

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "Count perfect matchings");
    count->add_option("--graph", count_opt.graph, "Generator spec or edge-list file");
    count->add_option("--product", count_opt.product, "Factor multiplied with --tree: c4 or pM");
    count->add_option("--tree", count_opt.tree, "Tree generator spec or edge-list file");
    count->add_option("--method", count_opt.method,
                      "auto | brute | pfaffian | formula | narumi-hosoya | kasteleyn");
    count->add_option("--orient-file", count_opt.orient_file, "Oriented edge list for --method pfaffian");
    count->add_option("--tree-orientation", count_opt.tree_orientation, "lex or random:SEED");
    add_common(count);

    OrientOptions orient_opt;
    auto* orient = app.add_subcommand("orient", "Emit a product orientation as an oriented edge list");
    orient->add_flag("--c4", orient_opt.c4, "Orientation of C4 x T");
    orient->add_option("--layers", orient_opt.layers, "Layered orientation of Pm x T");
    orient->add_flag("--double", orient_opt.double_, "Doubling orientation of P2 x G");
    orient->add_option("--tree", orient_opt.tree, "Tree generator spec or edge-list file");
    orient->add_option("--graph", orient_opt.graph, "Graph generator spec or edge-list file");
    orient->add_option("--tree-orientation", orient_opt.tree_orientation, "lex or random:SEED");
    add_common(orient);

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Check Pfaffian-ness and counting identities");
    verify->add_flag("--pfaffian", verify_opt.pfaffian, "Check every nice even cycle is oddly oriented");
    verify->add_flag("--identities", verify_opt.identities, "Check the C4/P3/P4 product identities");
    verify->add_option("--orient-file", verify_opt.orient_file, "Oriented edge list to check");
    verify->add_flag("--c4", verify_opt.orientation.c4, "Orientation of C4 x T");
    verify->add_option("--layers", verify_opt.orientation.layers, "Layered orientation of Pm x T");
    verify->add_flag("--double", verify_opt.orientation.double_, "Doubling orientation of P2 x G");
    verify->add_option("--tree", verify_opt.orientation.tree, "Tree generator spec or edge-list file");
    verify->add_option("--graph", verify_opt.orientation.graph, "Graph generator spec or edge-list file");
    verify->add_option("--tree-orientation", verify_opt.orientation.tree_orientation, "lex or random:SEED");
    add_common(verify);

    std::string left, right;
    auto* product = app.add_subcommand("product", "Emit a Cartesian product as an edge list");
    product->add_option("left", left, "Left factor spec")->required();
    product->add_option("right", right, "Right factor spec")->required();
    add_common(product);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse_error;
    }

    Session s;
    s.args.assign(args.begin(), args.end());
    s.subcommand = app.get_subcommands().front()->get_name();
    s.json = format == "json";
    s.report["request"] = s.request();

    int code = exit_ok;
    try {
        const Guards guards = resolve_guards(max_vertices);
        if (s.subcommand == "count") {
            code = do_count(s, count_opt, guards, out);
        } else if (s.subcommand == "orient") {
            code = do_orient(s, orient_opt, out);
        } else if (s.subcommand == "verify") {
            code = do_verify(s, verify_opt, guards, out);
        } else {
            code = do_product(s, left, right, out);
        }
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        if (s.json) {
            s.report["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
            s.report["elapsed_ms"] = s.elapsed_ms();
            out << s.report.dump(2) << '\n';
        }
        return exit_code_for(e.kind());
    }

    if (s.json) {
        s.report["elapsed_ms"] = s.elapsed_ms();
        out << s.report.dump(2) << '\n';
    } else if (s.subcommand == "count" || s.subcommand == "verify") {
        out << "elapsed: " << s.elapsed_ms() << " ms\n";
    }
    return code;
}

}  // namespace pmcount::cli
