#include "graphlink/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "graphlink/chord.hpp"
#include "graphlink/correspondence.hpp"
#include "graphlink/equiv_search.hpp"
#include "graphlink/error.hpp"
#include "graphlink/invariants.hpp"
#include "graphlink/io.hpp"
#include "graphlink/moves.hpp"
#include "graphlink/selftest.hpp"
#include "json.hpp"

namespace graphlink {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    std::uint64_t seed = 1;
    std::string file = "-";
    std::string file2;
    std::string seed_diagonal;
    std::string families;
    std::vector<std::string> moves;
    std::size_t max_vertices = 9;
    double time_budget = 0;
    std::size_t max_depth = 8;
    std::size_t max_states = 100000;
    std::size_t search_vertices = 0;
    double scale = 1.0;
};

class Runner {
public:
    Runner(const Options& o, std::string_view stdin_text) : o_(o), stdin_(stdin_text) {}

    std::string run(const std::string& command) {
        json result, stats = json::object();
        std::string text;
        json input = json::object();
        if (command == "selftest") {
            result = selftest(text);
        } else {
            const Document doc = load(o_.file);
            input = describe(doc, o_.file);
            if (command == "info") result = info(doc, text);
            else if (command == "chi") result = chi_cmd(doc, text);
            else if (command == "psi") result = psi_cmd(doc, text);
            else if (command == "roundtrip") result = roundtrip(doc, text);
            else if (command == "moves list") result = moves_list(doc, text);
            else if (command == "moves apply") result = moves_apply(doc, text);
            else if (command == "realize") result = realize_cmd(doc, text, stats);
            else if (command == "interlace") result = interlace(doc, text);
            else if (command == "ddiagram") result = ddiagram(doc, text);
            else if (command == "equiv") {
                const Document other = load(o_.file2);
                input = json{{"first", input}, {"second", describe(other, o_.file2)}};
                result = equiv(doc, other, text, stats);
            }
        }
        if (o_.format == "text") return text;
        const json out{{"command", command}, {"input", input}, {"result", result}, {"stats", stats}};
        return out.dump(2) + "\n";
    }

    bool failed = false;

private:
    Document load(const std::string& path) {
        if (path == "-") return parse_document(stdin_, "<stdin>");
        std::ifstream in(path, std::ios::binary);
        if (!in) throw UsageError("cannot read '" + path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            return parse_document(buf.str(), path);
        } catch (const ParseError& e) {
            throw ParseError(e.kind(), e.line(), e.column(), path + ": " + e.detail());
        }
    }

    static json describe(const Document& d, const std::string& path) {
        std::size_t n = 0;
        if (const auto* g = std::get_if<LabeledGraph>(&d.value)) n = g->size();
        if (const auto* l = std::get_if<LoopedGraph>(&d.value)) n = l->size();
        if (const auto* c = std::get_if<ChordDiagram>(&d.value)) n = c->chord_count();
        return {{"path", path}, {"kind", std::string(to_string(d.kind()))}, {"size", n}};
    }

    template <class T>
    static const T& expect(const Document& d, std::string_view what) {
        const auto* v = std::get_if<T>(&d.value);
        if (!v)
            throw Error(ErrorKind::BadLabel, "this command needs a " + std::string(what) + ", got a " +
                                                 std::string(to_string(d.kind())));
        return *v;
    }

    static json labeled_info(const LabeledGraph& g, std::string& text) {
        json r;
        r["vertices"] = g.size();
        r["edges"] = g.edges().size();
        r["components"] = component_count(g);
        r["knot"] = is_graph_knot(g);
        text += "vertices: " + std::to_string(g.size()) + "\nedges: " + std::to_string(g.edges().size()) +
                "\ncomponents: " + std::to_string(component_count(g)) + "\nknot: " + (is_graph_knot(g) ? "true" : "false") + "\n";
        if (is_graph_knot(g)) {
            const auto w = writhe(g);
            r["w"] = w.per_vertex;
            r["total"] = w.total;
            r["signs"] = w.signs;
            r["framings"] = w.framings;
            std::string ws;
            for (int x : w.per_vertex) ws += (ws.empty() ? "" : " ") + std::to_string(x);
            text += "w: " + ws + "\ntotal: " + std::to_string(w.total) + "\n";
        }
        return r;
    }

    json info(const Document& d, std::string& text) {
        if (const auto* g = std::get_if<LabeledGraph>(&d.value)) return labeled_info(*g, text);
        if (const auto* l = std::get_if<LoopedGraph>(&d.value)) {
            std::vector<std::string> loops;
            for (const auto& v : l->vertices())
                if (v.looped) loops.push_back(v.name);
            std::string ls;
            for (const auto& s : loops) ls += " " + s;
            text = "vertices: " + std::to_string(l->size()) + "\nedges: " + std::to_string(l->edges().size()) +
                   "\nlooped:" + ls + "\n";
            return {{"vertices", l->size()}, {"edges", l->edges().size()}, {"looped", loops}};
        }
        const auto& c = std::get<ChordDiagram>(d.value);
        text = "chords: " + std::to_string(c.chord_count()) + "\nd_diagram: " + (is_d_diagram(c) ? "true" : "false") + "\n";
        json r = labeled_info(interlacement(c), text);
        r["chords"] = c.chord_count();
        r["d_diagram"] = is_d_diagram(c);
        return r;
    }

    json chi_cmd(const Document& d, std::string& text) {
        const auto& g = expect<LabeledGraph>(d, "labeled graph");
        const auto l = chi(g);
        const auto seed = format_bits(seed_diagonal(g));
        const auto body = serialize(l);
        text = "# seed-diagonal " + seed + "\n" + body;
        return {{"graph", body}, {"seed_diagonal", seed}};
    }

    json psi_cmd(const Document& d, std::string& text) {
        const auto& l = expect<LoopedGraph>(d, "looped graph");
        std::optional<std::vector<int>> preferred;
        if (!o_.seed_diagonal.empty()) {
            try {
                preferred = parse_bits(o_.seed_diagonal);
            } catch (const Error& e) {
                throw UsageError(std::string("--seed-diagonal: ") + e.what());
            }
            if (preferred->size() != l.size())
                throw UsageError("--seed-diagonal has " + std::to_string(preferred->size()) + " bits for " +
                                 std::to_string(l.size()) + " vertices");
        }
        const auto completion = complete_diagonal(adjacency_matrix(l), preferred);
        const auto g = psi(l, completion.diagonal);
        text = serialize(g);
        return {{"graph", text},
                {"diagonal", completion.bits()},
                {"seed_used", preferred.has_value() && *preferred == completion.diagonal}};
    }

    json roundtrip(const Document& d, std::string& text) {
        const auto& g = expect<LabeledGraph>(d, "labeled graph");
        const auto r = roundtrip_check(g);
        text = std::string("psi_chi_exact: ") + (r.psi_chi_exact ? "true" : "false") +
               "\nchi_psi_exact: " + (r.chi_psi_exact ? "true" : "false") + "\nseed_diagonal: " + format_bits(r.seed) +
               "\ncanonical_diagonal: " + r.canonical.bits() + "\n";
        return {{"psi_chi_exact", r.psi_chi_exact},
                {"chi_psi_exact", r.chi_psi_exact},
                {"seed_diagonal", format_bits(r.seed)},
                {"canonical_diagonal", r.canonical.bits()},
                {"looped", serialize(r.looped)}};
    }

    FamilySet families(DocumentKind kind) const {
        const FamilySet all = kind == DocumentKind::LoopedGraph ? FamilySet::loop_moves() : FamilySet::graph_moves();
        if (o_.families.empty()) return all;
        FamilySet out;
        std::stringstream ss(o_.families);
        std::string token;
        while (std::getline(ss, token, ',')) {
            const auto f = family_from_token(token);
            if (!f) throw UsageError("unknown move family '" + token + "'");
            if (!all.contains(*f)) throw UsageError("family '" + token + "' does not act on this kind of graph");
            out.insert(*f);
        }
        if (out.empty()) throw UsageError("--families is empty");
        return out;
    }

    json moves_list(const Document& d, std::string& text) {
        std::vector<std::string> lines;
        if (const auto* g = std::get_if<LabeledGraph>(&d.value))
            for (const auto& m : list_graph_moves(*g, families(d.kind()))) lines.push_back(format_move(m));
        else
            for (const auto& m : list_loop_moves(expect<LoopedGraph>(d, "graph"), families(d.kind())))
                lines.push_back(format_move(m));
        for (const auto& l : lines) text += l + "\n";
        return {{"moves", lines}};
    }

    json moves_apply(const Document& d, std::string& text) {
        if (o_.moves.empty()) throw UsageError("moves apply needs at least one --move");
        std::vector<MoveDescriptor> steps;
        for (const auto& line : o_.moves) steps.push_back(parse_move(line));
        if (const auto* g = std::get_if<LabeledGraph>(&d.value))
            text = serialize(replay(*g, steps));
        else
            text = serialize(replay(expect<LoopedGraph>(d, "graph"), steps));
        std::vector<std::string> applied;
        for (const auto& m : steps) applied.push_back(format_move(m));
        return {{"graph", text}, {"applied", applied}};
    }

    json realize_cmd(const Document& d, std::string& text, json& stats) {
        RealizeOptions opts;
        opts.max_vertices = o_.max_vertices;
        if (o_.time_budget > 0) opts.time_budget_seconds = o_.time_budget;
        RealizeStats st;
        std::optional<ChordDiagram> r;
        if (const auto* g = std::get_if<LabeledGraph>(&d.value))
            r = realize(*g, opts, &st);
        else
            r = realize(expect<LoopedGraph>(d, "graph"), opts, &st);
        stats["nodes"] = st.nodes;
        json out{{"realizable", r.has_value()}, {"exhaustive", st.exhaustive}};
        if (r) {
            out["diagram"] = serialize(*r);
            text = serialize(*r);
        } else {
            out["diagram"] = nullptr;
            text = "realizable: false\nexhaustive: true\n";
        }
        return out;
    }

    json interlace(const Document& d, std::string& text) {
        text = serialize(interlacement(expect<ChordDiagram>(d, "chord diagram")));
        return {{"graph", text}};
    }

    json ddiagram(const Document& d, std::string& text) {
        const bool r = is_d_diagram(expect<ChordDiagram>(d, "chord diagram"));
        text = std::string("d_diagram: ") + (r ? "true" : "false") + "\n";
        return {{"d_diagram", r}};
    }

    json equiv(const Document& a, const Document& b, std::string& text, json& stats) {
        if (a.kind() != b.kind() || a.kind() == DocumentKind::ChordDiagram)
            throw Error(ErrorKind::BadLabel, "equiv needs two labeled graphs or two looped graphs");
        SearchBounds bounds{o_.max_depth, o_.max_states, std::nullopt};
        if (o_.search_vertices) bounds.max_vertices = o_.search_vertices;
        EquivResult r;
        if (a.kind() == DocumentKind::LabeledGraph)
            r = prove_equivalent(std::get<LabeledGraph>(a.value), std::get<LabeledGraph>(b.value), families(a.kind()), bounds);
        else
            r = prove_equivalent(std::get<LoopedGraph>(a.value), std::get<LoopedGraph>(b.value), families(a.kind()), bounds);
        stats["states_explored"] = r.states_explored;
        stats["depth_reached"] = r.depth_reached;
        json out{{"status", std::string(to_string(r.status))}, {"reason", r.reason}, {"certificate", nullptr}};
        text = "status: " + std::string(to_string(r.status)) + "\n";
        if (!r.reason.empty()) text += "reason: " + r.reason + "\n";
        if (r.certificate) {
            std::vector<std::string> lines;
            for (const auto& m : r.certificate->steps) {
                lines.push_back(format_move(m));
                text += lines.back() + "\n";
            }
            out["certificate"] = lines;
        }
        return out;
    }

    json selftest(std::string& text) {
        json checks = json::array();
        bool all = true;
        for (const auto& c : run_selftest(o_.seed, o_.scale)) {
            all = all && c.passed;
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
            text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + " (" + std::to_string(c.cases) + " cases)";
            text += c.detail.empty() ? "\n" : ": " + c.detail + "\n";
        }
        failed = !all;
        return {{"passed", all}, {"checks", checks}, {"seed", o_.seed}};
    }

    const Options& o_;
    std::string_view stdin_;
};

}  // namespace

CommandOutput run_command(const std::vector<std::string>& args, std::string_view stdin_text) {
    Options o;
    CLI::App app{"Graph-links, looped interlacement graphs and chord diagrams", "graphlink"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", o.seed, "Seed for randomized checks");

    auto* info = app.add_subcommand("info", "Components, graph-knot test and writhe numbers");
    auto* chi = app.add_subcommand("chi", "Graph-knot to looped graph");
    auto* psi = app.add_subcommand("psi", "Looped graph to graph-knot");
    psi->add_option("--seed-diagonal", o.seed_diagonal, "Diagonal to try first, as a 0/1 string");
    auto* roundtrip = app.add_subcommand("roundtrip", "Check psi(chi(G)) and chi(psi(L))");
    auto* moves = app.add_subcommand("moves", "List or apply moves");
    moves->require_subcommand(1);
    auto* moves_list = moves->add_subcommand("list", "Applicable removals and in-place moves");
    auto* moves_apply = moves->add_subcommand("apply", "Apply moves in order");
    moves_apply->add_option("--move", o.moves, "Move line, repeatable")->required();
    auto* realize = app.add_subcommand("realize", "Find a chord diagram or prove there is none");
    realize->add_option("--max-vertices", o.max_vertices, "Refuse larger graphs");
    realize->add_option("--time-budget", o.time_budget, "Seconds before giving up");
    auto* interlace = app.add_subcommand("interlace", "Labeled intersection graph of a chord diagram");
    auto* ddiagram = app.add_subcommand("ddiagram", "Whether the chords split into two unlinked families");
    auto* equiv = app.add_subcommand("equiv", "Bounded search for a move sequence");
    equiv->add_option("first", o.file, "First input file")->required();
    equiv->add_option("second", o.file2, "Second input file")->required();
    equiv->add_option("--max-depth", o.max_depth, "Total move bound");
    equiv->add_option("--max-states", o.max_states, "Stored state bound");
    equiv->add_option("--max-vertices", o.search_vertices, "Vertex bound for additions (default: larger input + 2)");
    auto* selftest = app.add_subcommand("selftest", "Run the property suites at reduced scale");
    selftest->add_option("--scale", o.scale, "Multiplier for case counts")->check(CLI::PositiveNumber);

    for (auto* sub : {info, chi, psi, roundtrip, moves_list, moves_apply, realize, interlace, ddiagram})
        sub->add_option("file", o.file, "Input file, - for stdin")->required();
    for (auto* sub : {moves_list, moves_apply, equiv}) sub->add_option("--families", o.families, "Comma-separated move families");

    CommandOutput result;
    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = code == 0 ? kExitOk : kExitUsage;
        return result;
    }

    std::string command;
    for (auto* sub : app.get_subcommands()) {
        command = sub->get_name();
        for (auto* inner : sub->get_subcommands()) command += " " + inner->get_name();
    }

    Runner runner(o, stdin_text);
    try {
        result.out = runner.run(command);
        if (runner.failed) result.exit_code = kExitCheckFailed;
    } catch (const UsageError& e) {
        result.err = std::string("usage error: ") + e.what() + "\n";
        result.exit_code = kExitUsage;
    } catch (const ParseError& e) {
        result.err = "parse error at line " + std::to_string(e.line()) + ", column " + std::to_string(e.column()) +
                     ": " + e.detail() + "\n";
        result.exit_code = kExitParse;
    } catch (const Error& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = kExitPrecondition;
    }
    return result;
}

}  // namespace graphlink
