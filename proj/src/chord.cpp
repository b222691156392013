#include "graphlink/chord.hpp"

#include <algorithm>
#include <chrono>

#include "graphlink/error.hpp"

namespace graphlink {

ChordDiagram::ChordDiagram(std::vector<std::string> word) : word_(std::move(word)) {
    std::map<std::string, int> count;
    for (const auto& t : word_) {
        if (t.empty()) throw Error(ErrorKind::ParseError, "empty chord name");
        ++count[t];
    }
    for (const auto& [name, c] : count)
        if (c != 2)
            throw Error(ErrorKind::ParseError,
                        "chord '" + name + "' occurs " + std::to_string(c) + " time(s); every chord occurs twice");
}

std::vector<std::string> ChordDiagram::chords() const {
    std::vector<std::string> out;
    for (const auto& t : word_)
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    return out;
}

bool ChordDiagram::has_chord(std::string_view name) const {
    return std::find(word_.begin(), word_.end(), name) != word_.end();
}

ChordLabel ChordDiagram::label(std::string_view chord) const {
    if (auto it = labels_.find(std::string(chord)); it != labels_.end()) return it->second;
    return {};
}

void ChordDiagram::set_label(const std::string& chord, ChordLabel label) {
    if (!has_chord(chord)) throw Error(ErrorKind::UnknownVertex, "no chord named '" + chord + "'");
    if ((label.framing != 0 && label.framing != 1) || (label.sign != 1 && label.sign != -1))
        throw Error(ErrorKind::BadLabel, "label of chord '" + chord + "'");
    labels_[chord] = label;
}

LabeledGraph interlacement(const ChordDiagram& d) {
    const auto names = d.chords();
    std::vector<std::pair<std::size_t, std::size_t>> ends(names.size(), {SIZE_MAX, SIZE_MAX});
    for (std::size_t p = 0; p < d.word().size(); ++p) {
        const auto i = static_cast<std::size_t>(std::find(names.begin(), names.end(), d.word()[p]) - names.begin());
        (ends[i].first == SIZE_MAX ? ends[i].first : ends[i].second) = p;
    }
    LabeledGraph g;
    for (const auto& name : names) {
        const auto l = d.label(name);
        g.add_vertex({name, l.framing, l.sign});
    }
    for (std::size_t a = 0; a < names.size(); ++a)
        for (std::size_t b = a + 1; b < names.size(); ++b) {
            const bool first_inside = ends[a].first < ends[b].first && ends[b].first < ends[a].second;
            const bool second_inside = ends[a].first < ends[b].second && ends[b].second < ends[a].second;
            if (first_inside != second_inside) g.set_edge(a, b, true);
        }
    return g;
}

bool is_d_diagram(const ChordDiagram& d) {
    const LabeledGraph g = interlacement(d);
    std::vector<int> side(g.size(), -1);
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            for (const auto y : g.neighbors(x)) {
                if (side[y] == -1) {
                    side[y] = 1 - side[x];
                    stack.push_back(y);
                } else if (side[y] == side[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

class Realizer {
public:
    Realizer(std::vector<std::uint64_t> adj, const RealizeOptions& options)
        : adj_(std::move(adj)), n_(adj_.size()), open_at_(n_, -1), close_at_(n_, -1), options_(options) {
        start_ = std::chrono::steady_clock::now();
    }

    bool run() {
        if (n_ == 0) return true;
        return step(0);
    }

    std::vector<std::size_t> word() const { return word_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool step(int pos) {
        if (++nodes_ % 4096 == 0) check_budget();
        if (static_cast<std::size_t>(pos) == 2 * n_) return true;
        // The chord opened at position 0 closes at position <= n.
        const bool first_must_close = first_ != SIZE_MAX && close_at_[first_] < 0 && static_cast<std::size_t>(pos) >= n_;
        for (std::size_t x = 0; x < n_; ++x) {
            if (open_at_[x] < 0 || close_at_[x] >= 0) continue;
            if (first_must_close && x != first_) continue;
            if (!closable(x, pos)) continue;
            close_at_[x] = pos;
            word_.push_back(x);
            if (step(pos + 1)) return true;
            word_.pop_back();
            close_at_[x] = -1;
        }
        if (first_must_close) return false;
        for (std::size_t v = 0; v < n_; ++v) {
            if (open_at_[v] >= 0 || !openable(v)) continue;
            open_at_[v] = pos;
            if (pos == 0) first_ = v;
            word_.push_back(v);
            if (step(pos + 1)) return true;
            word_.pop_back();
            open_at_[v] = -1;
            if (pos == 0) first_ = SIZE_MAX;
        }
        return false;
    }

    // A chord opened now cannot link a chord that is already closed.
    bool openable(std::size_t v) const {
        for (std::size_t y = 0; y < n_; ++y)
            if (close_at_[y] >= 0 && ((adj_[v] >> y) & 1U)) return false;
        return true;
    }

    // Closing x at `pos` fixes every chord linked with x; compare with the graph.
    bool closable(std::size_t x, int pos) const {
        const int ox = open_at_[x];
        for (std::size_t y = 0; y < n_; ++y) {
            if (y == x) continue;
            const bool edge = (adj_[x] >> y) & 1U;
            if (open_at_[y] < 0) {
                if (edge) return false;
                continue;
            }
            const bool open_inside = open_at_[y] > ox && open_at_[y] < pos;
            const bool close_inside = close_at_[y] >= 0 && close_at_[y] > ox && close_at_[y] < pos;
            if ((open_inside != close_inside) != edge) return false;
        }
        return true;
    }

    void check_budget() const {
        if (!options_.time_budget_seconds) return;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        if (elapsed.count() > *options_.time_budget_seconds)
            throw Error(ErrorKind::BudgetExceeded, "realizability search exceeded " +
                                                       std::to_string(*options_.time_budget_seconds) + " s");
    }

    std::vector<std::uint64_t> adj_;
    std::size_t n_;
    std::vector<int> open_at_;
    std::vector<int> close_at_;
    std::vector<std::size_t> word_;
    std::size_t first_ = SIZE_MAX;
    std::uint64_t nodes_ = 0;
    RealizeOptions options_;
    std::chrono::steady_clock::time_point start_;
};

template <class V>
std::optional<ChordDiagram> realize_impl(const BasicGraph<V>& g, const RealizeOptions& options, RealizeStats* stats,
                                         auto&& label_of) {
    if (g.size() > options.max_vertices || g.size() > 64)
        throw Error(ErrorKind::TooLarge, "realizability search bound is " + std::to_string(options.max_vertices) +
                                             " vertices, got " + std::to_string(g.size()));
    std::vector<std::uint64_t> adj(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.adjacent(i, j)) adj[i] |= std::uint64_t{1} << j;
    Realizer r(std::move(adj), options);
    const bool found = r.run();
    if (stats) {
        stats->nodes = r.nodes();
        stats->exhaustive = true;
    }
    if (!found) return std::nullopt;
    std::vector<std::string> word;
    for (const auto v : r.word()) word.push_back(g.name(v));
    ChordDiagram d(std::move(word));
    for (std::size_t i = 0; i < g.size(); ++i)
        if (auto l = label_of(g.vertex(i))) d.set_label(g.name(i), *l);
    return d;
}

}  // namespace

std::optional<ChordDiagram> realize(const LabeledGraph& g, const RealizeOptions& options, RealizeStats* stats) {
    return realize_impl(g, options, stats, [](const LabeledVertex& v) -> std::optional<ChordLabel> {
        if (v.framing == 0 && v.sign == 1) return std::nullopt;
        return ChordLabel{v.framing, v.sign};
    });
}

std::optional<ChordDiagram> realize(const LoopedGraph& g, const RealizeOptions& options, RealizeStats* stats) {
    return realize_impl(g, options, stats, [](const LoopedVertex&) -> std::optional<ChordLabel> { return std::nullopt; });
}

}  // namespace graphlink
