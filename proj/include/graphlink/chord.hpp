#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphlink/graph.hpp"

namespace graphlink {

struct ChordLabel {
    int framing = 0;
    int sign = 1;

    friend bool operator==(const ChordLabel&, const ChordLabel&) = default;
};

/// Chord diagram as a double-occurrence word read around the circle.
/// Chords without an explicit label carry (0,+).
class ChordDiagram {
public:
    ChordDiagram() = default;
    /// Throws ParseError unless every token occurs exactly twice.
    explicit ChordDiagram(std::vector<std::string> word);

    [[nodiscard]] const std::vector<std::string>& word() const noexcept { return word_; }
    [[nodiscard]] std::size_t chord_count() const noexcept { return word_.size() / 2; }
    /// Chord names in order of first occurrence.
    [[nodiscard]] std::vector<std::string> chords() const;
    [[nodiscard]] bool has_chord(std::string_view name) const;

    [[nodiscard]] ChordLabel label(std::string_view chord) const;
    /// Throws UnknownVertex for a name not in the word, BadLabel for an invalid label.
    void set_label(const std::string& chord, ChordLabel label);
    /// Explicitly stored labels, including ones equal to the default.
    [[nodiscard]] const std::map<std::string, ChordLabel>& labels() const noexcept { return labels_; }

    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

private:
    std::vector<std::string> word_;
    std::map<std::string, ChordLabel> labels_;
};

/// Labeled intersection graph: one vertex per chord (first-occurrence order),
/// labels copied from the chords, edges between linked chords.
[[nodiscard]] LabeledGraph interlacement(const ChordDiagram& d);

/// True iff the chords split into two families of pairwise unlinked chords.
[[nodiscard]] bool is_d_diagram(const ChordDiagram& d);

struct RealizeOptions {
    std::size_t max_vertices = 9;
    std::optional<double> time_budget_seconds;
};

struct RealizeStats {
    std::uint64_t nodes = 0;
    bool exhaustive = false;
};

/// Chord diagram whose intersection graph is g, or nothing when none exists.
///
/// The search places chord endpoints on the 2n circle positions from left to
/// right; the chord at position 0 is pinned to have its partner at position
/// <= n (any diagram can be rotated and reflected into that form). The result
/// names chords after the vertices of g and carries their labels; loops are
/// ignored. Throws TooLarge above `max_vertices`, BudgetExceeded on timeout.
[[nodiscard]] std::optional<ChordDiagram> realize(const LabeledGraph& g, const RealizeOptions& options = {},
                                                  RealizeStats* stats = nullptr);
[[nodiscard]] std::optional<ChordDiagram> realize(const LoopedGraph& g, const RealizeOptions& options = {},
                                                  RealizeStats* stats = nullptr);

}  // namespace graphlink
