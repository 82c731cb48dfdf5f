#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <matchdeck/matchdeck.hpp>

namespace {

using namespace matchdeck;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitUndetermined = 4;
constexpr int kExitInconsistentDeck = 5;
constexpr int kExitVerification = 6;

std::size_t memo_cap_from_env() {
    const char* raw = std::getenv("MATCHDECK_MEMO_CAP");
    if (!raw) return MatchingEngine::Config{}.memo_cap;
    std::string s(raw);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("MATCHDECK_MEMO_CAP must be a nonnegative integer, got '" + s + "'", 0);
    return value;
}

std::string read_file_or_stdin(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
    f << text << '\n';
}

// One graph input per invocation: a graph6 string, an edge-list file, or one
// generator spec (--union combines exactly two generator specs).
struct GraphCli {
    std::string graph6;
    std::string edges_path;
    std::vector<int> cycles;
    std::vector<int> paths;
    bool take_union = false;
    bool take_complement = false;
    CLI::Option* g6_opt = nullptr;
    CLI::Option* edges_opt = nullptr;

    void attach(CLI::App* cmd) {
        g6_opt = cmd->add_option("--graph6", graph6, "graph6 string (simple graphs)");
        edges_opt = cmd->add_option("--edges", edges_path,
                                    "edge-list file, '-' for stdin (multigraphs allowed)");
        cmd->add_option("--cycle", cycles, "cycle C_n generator (n >= 2; n = 2 is the doubled edge)");
        cmd->add_option("--path", paths, "path P_n generator (n >= 0)");
        cmd->add_flag("--union", take_union, "disjoint union of exactly two --cycle/--path specs");
        cmd->add_flag("--complement", take_complement, "complement the resulting simple graph");
    }

    Graph build() const {
        bool has_g6 = g6_opt->count() > 0;
        bool has_edges = edges_opt->count() > 0;
        std::size_t generators = cycles.size() + paths.size();
        if (take_union) {
            if (has_g6 || has_edges || generators != 2)
                throw std::invalid_argument("--union combines exactly two --cycle/--path specs");
        } else if (static_cast<std::size_t>(has_g6) + static_cast<std::size_t>(has_edges) +
                       generators != 1) {
            throw std::invalid_argument(
                "exactly one input source required (--graph6, --edges, --cycle or --path)");
        }

        std::vector<Graph> parts;
        if (has_g6) parts.push_back(from_graph6(graph6));
        if (has_edges) parts.push_back(parse_edge_list(read_file_or_stdin(edges_path)));
        for (int n : cycles) parts.push_back(cycle_graph(n));
        for (int n : paths) parts.push_back(path_graph(n));

        Graph g = parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i) g = disjoint_union(g, parts[i]);
        if (take_complement) g = complement(g);
        return g;
    }
};

int cmd_poly(const GraphCli& input, const std::string& format, MatchingEngine& engine) {
    BivariatePoly p = engine.polynomial(input.build());
    if (format == "json")
        std::cout << poly_to_json(p).dump(2) << '\n';
    else
        std::cout << p.to_string() << '\n';
    return kExitOk;
}

int cmd_stats(const GraphCli& input, const std::string& format, MatchingEngine& engine) {
    Graph g = input.build();
    MatchingStats s = engine.stats(g);
    if (format == "json") {
        nlohmann::json j{{"vertex_count", g.vertex_count()},
                         {"edge_count", g.edge_count()},
                         {"polynomial", poly_to_json(s.polynomial)},
                         {"perfect_matchings", s.num_perfect.str()},
                         {"near_perfect_matchings", s.num_near_perfect.str()},
                         {"total_matchings", s.total_matchings.str()}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "vertices: " << g.vertex_count() << '\n'
                  << "edges: " << g.edge_count() << '\n'
                  << "polynomial: " << s.polynomial.to_string() << '\n'
                  << "perfect matchings: " << s.num_perfect << '\n'
                  << "near-perfect matchings: " << s.num_near_perfect << '\n'
                  << "total matchings: " << s.total_matchings << '\n';
    }
    return kExitOk;
}

int cmd_deck(const GraphCli& input, const std::string& out_path, MatchingEngine& engine) {
    PolynomialDeck deck = build_deck(input.build(), engine);
    write_output(deck_to_json(deck).dump(2), out_path);
    return kExitOk;
}

int cmd_reconstruct(const std::string& deck_path, const std::string& hint_name,
                    const std::string& np_string, const std::string& format) {
    PolynomialDeck deck = deck_from_json(nlohmann::json::parse(read_file_or_stdin(deck_path)));

    DeckHint hint = DeckHint::none;
    if (hint_name == "forest") hint = DeckHint::is_forest;
    else if (hint_name == "pendant") hint = DeckHint::has_pendant_edge;
    else if (!hint_name.empty()) throw ParseError("--hint must be 'forest' or 'pendant'", 0);

    std::optional<BigInt> np;
    if (!np_string.empty()) {
        try {
            np = BigInt(np_string);
        } catch (const std::exception&) {
            throw ParseError("--np must be an integer, got '" + np_string + "'", 0);
        }
        if (*np < 0) throw ParseError("--np must be nonnegative", 0);
    }

    ReconstructionResult r = reconstruct(deck, hint, np);
    if (format == "json") {
        nlohmann::json j{{"n", r.n},
                         {"method", to_string(r.method)},
                         {"known_part", poly_to_json(r.known_part)},
                         {"perfect_matchings",
                          r.num_perfect ? nlohmann::json(r.num_perfect->str()) : nlohmann::json()}};
        if (r.determined()) j["polynomial"] = poly_to_json(r.full_polynomial());
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "n: " << r.n << '\n'
                  << "method: " << to_string(r.method) << '\n'
                  << "known part: " << r.known_part.to_string() << '\n'
                  << "perfect matchings: "
                  << (r.num_perfect ? r.num_perfect->str() : std::string("undetermined")) << '\n';
        if (r.determined()) std::cout << "polynomial: " << r.full_polynomial().to_string() << '\n';
    }
    return r.determined() ? kExitOk : kExitUndetermined;
}

int cmd_verify_family(int k, bool complemented, MatchingEngine& engine) {
    std::vector<std::string> passed;
    auto collect = [&passed](const std::string& clause) { passed.push_back(clause); };
    try {
        verify_family_member(k, complemented, engine, collect);
        verify_proof_identity(k, engine, collect);
    } catch (const VerificationError& e) {
        std::cerr << "FAIL: " << e.clause() << " (" << e.what() << ")\n";
        return kExitVerification;
    }
    for (const std::string& clause : passed) std::cout << "PASS: " << clause << '\n';
    return kExitOk;
}

int cmd_search(int n, const std::string& out_path, MatchingEngine& engine) {
    SearchReport report = search_counterexamples(n, engine);
    std::string json_text = search_pairs_to_json(report.pairs).dump(2);
    std::string count_line = std::to_string(report.pairs.size()) + " pairs found (" +
                             std::to_string(report.class_count) + " classes, " +
                             std::to_string(report.deck_group_count) + " distinct decks)";
    if (out_path.empty()) {
        std::cout << json_text << '\n';
        std::cerr << count_line << '\n';
    } else {
        write_output(json_text, out_path);
        std::cout << count_line << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bivariate matching polynomials, polynomial decks and reconstruction"};
    app.require_subcommand(1);

    std::string format = "text";

    CLI::App* poly = app.add_subcommand("poly", "print the matching polynomial M(G,x,y)");
    GraphCli poly_in;
    poly_in.attach(poly);
    poly->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* stats = app.add_subcommand("stats", "print matching counts and the polynomial");
    GraphCli stats_in;
    stats_in.attach(stats);
    stats->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* deck = app.add_subcommand("deck", "print the polynomial deck as JSON");
    GraphCli deck_in;
    deck_in.attach(deck);
    std::string deck_out;
    deck->add_option("--out", deck_out, "write the deck JSON to a file");

    CLI::App* rec = app.add_subcommand("reconstruct", "recover a polynomial from a deck JSON file");
    std::string deck_path, hint_name, np_string;
    rec->add_option("deck", deck_path, "deck JSON file, '-' for stdin")->required();
    rec->add_option("--hint", hint_name, "forest or pendant")
        ->check(CLI::IsMember({"forest", "pendant"}));
    rec->add_option("--np", np_string, "externally supplied perfect matching count");
    rec->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand("verify-family", "check one counterexample family member");
    int k = 0;
    bool complemented = false;
    verify->add_option("--k", k, "family parameter (2k-cycle vs two k-cycles)")->required();
    verify->add_flag("--complement", complemented, "verify the complemented pair (k >= 3)");

    CLI::App* search = app.add_subcommand("search", "exhaustive counterexample search at order n");
    int n = 0;
    std::string search_out;
    search->add_option("--n", n, "number of vertices (at most 7)")->required();
    search->add_option("--out", search_out, "write the report JSON to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        MatchingEngine engine(MatchingEngine::Config{.memo_cap = memo_cap_from_env()});
        if (poly->parsed()) return cmd_poly(poly_in, format, engine);
        if (stats->parsed()) return cmd_stats(stats_in, format, engine);
        if (deck->parsed()) return cmd_deck(deck_in, deck_out, engine);
        if (rec->parsed()) return cmd_reconstruct(deck_path, hint_name, np_string, format);
        if (verify->parsed()) return cmd_verify_family(k, complemented, engine);
        if (search->parsed()) return cmd_search(n, search_out, engine);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const InconsistentDeckError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInconsistentDeck;
    } catch (const VerificationError& e) {
        std::cerr << "FAIL: " << e.clause() << " (" << e.what() << ")\n";
        return kExitVerification;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
