#include "graphlink/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <vector>

#include "graphlink/error.hpp"

namespace graphlink {

std::string_view to_string(DocumentKind k) noexcept {
    switch (k) {
        case DocumentKind::LabeledGraph: return "labeled-graph";
        case DocumentKind::LoopedGraph: return "looped-graph";
        case DocumentKind::ChordDiagram: return "chord-diagram";
    }
    return "?";
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) {
        std::size_t line_no = 1;
        while (true) {
            const auto nl = text.find('\n');
            auto tokens = tokenize(text.substr(0, nl));
            if (!tokens.empty()) lines_.push_back({line_no, std::move(tokens)});
            if (nl == std::string_view::npos) break;
            text.remove_prefix(nl + 1);
            ++line_no;
        }
    }

    Document run(std::string source) {
        if (lines_.empty()) throw ParseError(ErrorKind::ParseError, 1, 1, "empty document");
        const auto& head = lines_.front();
        line_ = head.number;
        const auto word = head.tokens.front().text;
        Document d{LabeledGraph{}, std::move(source)};
        if (word == "lg")
            d.value = graph<LabeledVertex>(true);
        else if (word == "ug")
            d.value = graph<LoopedVertex>(false);
        else if (word == "cd")
            d.value = chords();
        else
            fail(head.tokens.front(), "expected header 'lg', 'ug' or 'cd'");
        return d;
    }

private:
    struct Line {
        std::size_t number;
        std::vector<Token> tokens;
    };

    [[noreturn]] void fail(const Token& t, const std::string& msg, ErrorKind kind = ErrorKind::ParseError) const {
        throw ParseError(kind, line_, t.column, msg);
    }

    void arity(const Line& l, std::size_t n) const {
        if (l.tokens.size() != n)
            fail(l.tokens.size() > n ? l.tokens[n] : l.tokens.back(),
                 "'" + std::string(l.tokens[0].text) + "' takes " + std::to_string(n - 1) + " argument(s)");
    }

    std::size_t count(const Token& t) const {
        std::size_t n = 0;
        const auto* end = t.text.data() + t.text.size();
        const auto [ptr, ec] = std::from_chars(t.text.data(), end, n);
        if (ec != std::errc{} || ptr != end) fail(t, "expected a vertex count");
        return n;
    }

    int framing(const Token& t) const {
        if (t.text == "0") return 0;
        if (t.text == "1") return 1;
        fail(t, "framing must be 0 or 1", ErrorKind::BadLabel);
    }

    int sign(const Token& t) const {
        if (t.text == "+") return 1;
        if (t.text == "-") return -1;
        fail(t, "sign must be + or -", ErrorKind::BadLabel);
    }

    template <class V>
    std::size_t vertex(const BasicGraph<V>& g, const Token& t) const {
        const auto i = g.find(t.text);
        if (!i) fail(t, "undeclared vertex '" + std::string(t.text) + "'");
        return *i;
    }

    template <class V>
    BasicGraph<V> graph(bool labeled) {
        const auto& head = lines_.front();
        arity(head, 2);
        const std::size_t declared = count(head.tokens[1]);
        BasicGraph<V> g;
        std::set<std::pair<std::size_t, std::size_t>> seen_edges;
        for (std::size_t k = 1; k < lines_.size(); ++k) {
            const auto& l = lines_[k];
            line_ = l.number;
            const auto word = l.tokens[0].text;
            if (word == "v") {
                arity(l, labeled ? 4 : 2);
                V v{};
                v.name = std::string(l.tokens[1].text);
                if constexpr (std::is_same_v<V, LabeledVertex>) {
                    v.framing = framing(l.tokens[2]);
                    v.sign = sign(l.tokens[3]);
                }
                if (g.find(v.name)) fail(l.tokens[1], "duplicate vertex '" + v.name + "'", ErrorKind::DuplicateName);
                g.add_vertex(std::move(v));
            } else if (word == "e") {
                arity(l, 3);
                const auto a = vertex(g, l.tokens[1]);
                const auto b = vertex(g, l.tokens[2]);
                if (a == b) fail(l.tokens[2], "self-edge; loops are written as 'loop <name>'");
                if (!seen_edges.insert(std::minmax(a, b)).second) fail(l.tokens[0], "duplicate edge");
                g.set_edge(a, b, true);
            } else if (word == "loop" && !labeled) {
                arity(l, 2);
                const auto a = vertex(g, l.tokens[1]);
                if constexpr (std::is_same_v<V, LoopedVertex>) {
                    if (g.vertex(a).looped) fail(l.tokens[0], "duplicate loop");
                    auto v = g.vertex(a);
                    v.looped = true;
                    g.set_vertex(a, v);
                }
            } else {
                fail(l.tokens[0], "unexpected directive '" + std::string(word) + "'");
            }
        }
        if (g.size() != declared) {
            line_ = head.number;
            fail(head.tokens[1], "header declares " + std::to_string(declared) + " vertices, found " +
                                     std::to_string(g.size()));
        }
        return g;
    }

    ChordDiagram chords() {
        const auto& head = lines_.front();
        std::vector<std::string> word;
        for (std::size_t k = 1; k < head.tokens.size(); ++k) word.emplace_back(head.tokens[k].text);
        ChordDiagram d;
        try {
            d = ChordDiagram(std::move(word));
        } catch (const Error& e) {
            fail(head.tokens[0], e.what());
        }
        std::set<std::string> labelled;
        for (std::size_t k = 1; k < lines_.size(); ++k) {
            const auto& l = lines_[k];
            line_ = l.number;
            if (l.tokens[0].text != "label") fail(l.tokens[0], "unexpected directive '" + std::string(l.tokens[0].text) + "'");
            arity(l, 4);
            const std::string name(l.tokens[1].text);
            if (!d.has_chord(name)) fail(l.tokens[1], "no chord named '" + name + "'");
            if (!labelled.insert(name).second) fail(l.tokens[1], "chord '" + name + "' labelled twice", ErrorKind::DuplicateName);
            d.set_label(name, {framing(l.tokens[2]), sign(l.tokens[3])});
        }
        return d;
    }

    std::vector<Line> lines_;
    std::size_t line_ = 1;
};

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

template <class V>
std::string edge_lines(const BasicGraph<V>& g) {
    std::string out;
    for (const auto& [a, b] : g.edges()) out += "e " + g.name(a) + " " + g.name(b) + "\n";
    return out;
}

}  // namespace

Document parse_document(std::string_view text, std::string source) { return Parser(text).run(std::move(source)); }

std::string serialize(const LabeledGraph& g) {
    std::string out = "lg " + std::to_string(g.size()) + "\n";
    for (const auto& v : g.vertices())
        out += "v " + v.name + " " + std::to_string(v.framing) + " " + sign_char(v.sign) + "\n";
    return out + edge_lines(g);
}

std::string serialize(const LoopedGraph& l) {
    std::string out = "ug " + std::to_string(l.size()) + "\n";
    for (const auto& v : l.vertices()) out += "v " + v.name + "\n";
    for (const auto& v : l.vertices())
        if (v.looped) out += "loop " + v.name + "\n";
    return out + edge_lines(l);
}

std::string serialize(const ChordDiagram& d) {
    std::string out = "cd";
    for (const auto& t : d.word()) out += " " + t;
    out += "\n";
    for (const auto& name : d.chords()) {
        const auto it = d.labels().find(name);
        if (it == d.labels().end()) continue;
        out += "label " + name + " " + std::to_string(it->second.framing) + " " + sign_char(it->second.sign) + "\n";
    }
    return out;
}

std::string serialize(const Document& d) {
    return std::visit([](const auto& v) { return serialize(v); }, d.value);
}

// ---- move lines ----

namespace {

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? std::string(sep) : "") + xs[i];
    return out;
}

std::string attachments(const MoveDescriptor& m) {
    return std::string(" adj=") + (m.pair_adjacent ? "1" : "0") + " nbrs=" + join(m.neighbors, ",");
}

std::string labeled_payload(const AddedVertex& a) {
    return a.name + ":(" + std::to_string(a.framing) + "," + sign_char(a.sign) + ")";
}

std::string looped_payload(const AddedVertex& a) { return a.name + (a.looped ? ":looped" : ":unlooped"); }

[[noreturn]] void move_error(const Token& t, const std::string& msg, ErrorKind kind = ErrorKind::ParseError) {
    throw ParseError(kind, 1, t.column, msg);
}

AddedVertex parse_labeled_payload(const Token& t) {
    // name:(f,s)
    const auto colon = t.text.rfind(':');
    if (colon == std::string_view::npos || colon == 0) move_error(t, "expected name:(framing,sign)");
    const auto rest = t.text.substr(colon + 1);
    if (rest.size() != 5 || rest[0] != '(' || rest[2] != ',' || rest[4] != ')') move_error(t, "expected name:(framing,sign)");
    AddedVertex a;
    a.name = std::string(t.text.substr(0, colon));
    if (rest[1] != '0' && rest[1] != '1') move_error(t, "framing must be 0 or 1", ErrorKind::BadLabel);
    if (rest[3] != '+' && rest[3] != '-') move_error(t, "sign must be + or -", ErrorKind::BadLabel);
    a.framing = rest[1] - '0';
    a.sign = rest[3] == '+' ? 1 : -1;
    return a;
}

AddedVertex parse_looped_payload(const Token& t) {
    const auto colon = t.text.rfind(':');
    if (colon == std::string_view::npos || colon == 0) move_error(t, "expected name:looped or name:unlooped");
    const auto rest = t.text.substr(colon + 1);
    AddedVertex a;
    a.name = std::string(t.text.substr(0, colon));
    if (rest == "looped")
        a.looped = true;
    else if (rest != "unlooped")
        move_error(t, "expected name:looped or name:unlooped", ErrorKind::BadLabel);
    return a;
}

void parse_attachments(const std::vector<Token>& ts, std::size_t from, MoveDescriptor& m) {
    if (ts.size() != from + 2) move_error(ts.back(), "expected adj=0|1 nbrs=<names>");
    const auto adj = ts[from].text;
    if (adj == "adj=0")
        m.pair_adjacent = false;
    else if (adj == "adj=1")
        m.pair_adjacent = true;
    else
        move_error(ts[from], "expected adj=0 or adj=1");
    auto nbrs = ts[from + 1].text;
    if (!nbrs.starts_with("nbrs=")) move_error(ts[from + 1], "expected nbrs=<comma-separated names>");
    nbrs.remove_prefix(5);
    while (!nbrs.empty()) {
        const auto comma = nbrs.find(',');
        const auto name = nbrs.substr(0, comma);
        if (name.empty()) move_error(ts[from + 1], "empty name in nbrs");
        m.neighbors.emplace_back(name);
        if (comma == std::string_view::npos) break;
        nbrs.remove_prefix(comma + 1);
        if (nbrs.empty()) move_error(ts[from + 1], "trailing comma in nbrs");
    }
}

}  // namespace

std::string format_move(const MoveDescriptor& m) {
    std::string out(family_token(m.family));
    switch (m.family) {
        case MoveFamily::Og1:
            return out + (m.is_addition() ? " add " + labeled_payload(m.added.at(0)) : " rm " + join(m.vertices, " "));
        case MoveFamily::Og2:
            if (!m.is_addition()) return out + " rm " + join(m.vertices, " ");
            return out + " add " + labeled_payload(m.added.at(0)) + " " + labeled_payload(m.added.at(1)) + attachments(m);
        case MoveFamily::Og3:
            return out + (m.direction == Direction::forward ? " fwd " : " inv ") + join(m.vertices, " ");
        case MoveFamily::O1:
            return out + (m.is_addition() ? " add " + looped_payload(m.added.at(0)) : " rm " + join(m.vertices, " "));
        case MoveFamily::O2:
            if (!m.is_addition()) return out + " rm " + join(m.vertices, " ");
            return out + " add " + looped_payload(m.added.at(0)) + " " + looped_payload(m.added.at(1)) + attachments(m);
        case MoveFamily::Og4:
        case MoveFamily::Og4p:
        case MoveFamily::O3: return out + " " + join(m.vertices, " ");
    }
    return out;
}

MoveDescriptor parse_move(std::string_view line) {
    const auto ts = tokenize(line);
    if (ts.empty()) throw ParseError(ErrorKind::ParseError, 1, 1, "empty move line");
    const auto family = family_from_token(ts[0].text);
    if (!family) move_error(ts[0], "unknown move family '" + std::string(ts[0].text) + "'");
    MoveDescriptor m;
    m.family = *family;
    auto names = [&](std::size_t from, std::size_t n) {
        if (ts.size() != from + n)
            move_error(ts.size() > from + n ? ts[from + n] : ts.back(),
                       std::string(family_token(m.family)) + " expects " + std::to_string(n) + " vertex name(s)");
        for (std::size_t k = from; k < ts.size(); ++k) m.vertices.emplace_back(ts[k].text);
    };
    auto mode = [&]() -> std::string_view {
        if (ts.size() < 2) move_error(ts[0], "missing direction");
        return ts[1].text;
    };
    switch (m.family) {
        case MoveFamily::Og1:
        case MoveFamily::O1: {
            const auto d = mode();
            if (d == "rm") {
                names(2, 1);
            } else if (d == "add") {
                if (ts.size() != 3) move_error(ts.back(), "expected one added vertex");
                m.direction = Direction::inverse;
                m.added.push_back(m.family == MoveFamily::Og1 ? parse_labeled_payload(ts[2]) : parse_looped_payload(ts[2]));
            } else {
                move_error(ts[1], "expected 'rm' or 'add'");
            }
            break;
        }
        case MoveFamily::Og2:
        case MoveFamily::O2: {
            const auto d = mode();
            if (d == "rm") {
                names(2, 2);
            } else if (d == "add") {
                if (ts.size() < 4) move_error(ts.back(), "expected two added vertices");
                m.direction = Direction::inverse;
                for (std::size_t k : {2U, 3U})
                    m.added.push_back(m.family == MoveFamily::Og2 ? parse_labeled_payload(ts[k]) : parse_looped_payload(ts[k]));
                parse_attachments(ts, 4, m);
            } else {
                move_error(ts[1], "expected 'rm' or 'add'");
            }
            break;
        }
        case MoveFamily::Og3: {
            const auto d = mode();
            if (d == "fwd")
                m.direction = Direction::forward;
            else if (d == "inv")
                m.direction = Direction::inverse;
            else
                move_error(ts[1], "expected 'fwd' or 'inv'");
            names(2, 3);
            break;
        }
        case MoveFamily::Og4: names(1, 2); break;
        case MoveFamily::Og4p: names(1, 1); break;
        case MoveFamily::O3: names(1, 3); break;
    }
    return m;
}

}  // namespace graphlink
