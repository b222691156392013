#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graphlink/graph.hpp"
#include "graphlink/moves.hpp"

namespace graphlink {

struct SearchBounds {
    std::size_t max_depth = 8;
    std::size_t max_states = 100000;
    /// Additions never grow a graph past this; defaults to the larger input size + 2.
    std::optional<std::size_t> max_vertices;
};

/// Move sequence taking the first graph to an isomorphic copy of the second.
struct MoveCertificate {
    std::string start_key;
    std::string end_key;
    std::vector<MoveDescriptor> steps;
};

enum class EquivStatus { Certificate, Distinguished, Inconclusive };

[[nodiscard]] std::string_view to_string(EquivStatus s) noexcept;

struct EquivResult {
    EquivStatus status = EquivStatus::Inconclusive;
    std::optional<MoveCertificate> certificate;
    /// Name of the differing invariant for Distinguished, the exhausted bound for Inconclusive.
    std::string reason;
    std::size_t states_explored = 0;
    std::size_t depth_reached = 0;
};

/// First invariant that differs between g1 and g2 and is preserved by every
/// family in `families`: component count always; for graph-knots also the
/// total writhe when Og1 is excluded, and the writhe multiset when only Og4
/// and Og4' are allowed.
[[nodiscard]] std::optional<std::string> invariant_distinguish(const LabeledGraph& g1, const LabeledGraph& g2,
                                                               FamilySet families = FamilySet::graph_moves());

/// Bidirectional breadth-first search over canonical forms.
///
/// Addition moves are generated only while the graph stays within
/// max_vertices. Looped graphs have no implemented invariant, so they are
/// never reported Distinguished. Throws TooLarge when an input exceeds
/// max_vertices or the canonical-form limit.
[[nodiscard]] EquivResult prove_equivalent(const LabeledGraph& g1, const LabeledGraph& g2,
                                           FamilySet families = FamilySet::graph_moves(),
                                           const SearchBounds& bounds = {});
[[nodiscard]] EquivResult prove_equivalent(const LoopedGraph& g1, const LoopedGraph& g2,
                                           FamilySet families = FamilySet::loop_moves(),
                                           const SearchBounds& bounds = {});

/// Applies the steps in order; throws MoveNotApplicable if one fails.
[[nodiscard]] LabeledGraph replay(const LabeledGraph& g, const std::vector<MoveDescriptor>& steps);
[[nodiscard]] LoopedGraph replay(const LoopedGraph& g, const std::vector<MoveDescriptor>& steps);

/// Replays the certificate from g1 and checks the end key and that the result is isomorphic to g2.
[[nodiscard]] bool certificate_valid(const LabeledGraph& g1, const LabeledGraph& g2, const MoveCertificate& c);
[[nodiscard]] bool certificate_valid(const LoopedGraph& g1, const LoopedGraph& g2, const MoveCertificate& c);

}  // namespace graphlink
