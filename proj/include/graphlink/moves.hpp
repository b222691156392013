#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphlink/graph.hpp"

namespace graphlink {

enum class MoveFamily : std::uint8_t { Og1, Og2, Og3, Og4, Og4p, O1, O2, O3 };

/// Additions and the inverse Og3 use `inverse`; removals, forward Og3 and the
/// self-inverse moves (Og4, Og4', O3) use `forward`.
enum class Direction : std::uint8_t { forward, inverse };

/// Bit set of move families.
class FamilySet {
public:
    constexpr FamilySet() = default;
    constexpr FamilySet(std::initializer_list<MoveFamily> families) {
        for (auto f : families) bits_ |= bit(f);
    }
    static constexpr FamilySet graph_moves() {
        return {MoveFamily::Og1, MoveFamily::Og2, MoveFamily::Og3, MoveFamily::Og4, MoveFamily::Og4p};
    }
    static constexpr FamilySet loop_moves() { return {MoveFamily::O1, MoveFamily::O2, MoveFamily::O3}; }

    [[nodiscard]] constexpr bool contains(MoveFamily f) const noexcept { return (bits_ & bit(f)) != 0; }
    constexpr void insert(MoveFamily f) noexcept { bits_ |= bit(f); }
    [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
    friend constexpr bool operator==(FamilySet, FamilySet) = default;

private:
    static constexpr std::uint16_t bit(MoveFamily f) { return static_cast<std::uint16_t>(1U << static_cast<unsigned>(f)); }
    std::uint16_t bits_ = 0;
};

/// Payload of a vertex created by an addition move.
struct AddedVertex {
    std::string name;
    int framing = 0;
    int sign = 1;
    bool looped = false;

    friend bool operator==(const AddedVertex&, const AddedVertex&) = default;
};

/// One move, naming vertices by token so that it survives serialisation.
///
/// vertices: Og1/O1 removal {v}; Og2/O2 removal {a,b}; Og3 {u,v,w}; Og4 {u,v}; Og4' {v}; O3 {u,v,w}.
/// Additions carry the new vertices in `added`, the pair adjacency in
/// `pair_adjacent` and the shared attachment set in `neighbors`.
struct MoveDescriptor {
    MoveFamily family = MoveFamily::Og1;
    Direction direction = Direction::forward;
    std::vector<std::string> vertices;
    std::vector<AddedVertex> added;
    bool pair_adjacent = false;
    std::vector<std::string> neighbors;

    [[nodiscard]] bool is_addition() const noexcept;

    friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
};

[[nodiscard]] std::string_view family_token(MoveFamily f) noexcept;
[[nodiscard]] std::optional<MoveFamily> family_from_token(std::string_view token) noexcept;
[[nodiscard]] bool is_graph_family(MoveFamily f) noexcept;

// Convenience constructors.
[[nodiscard]] MoveDescriptor og1_remove(std::string v);
[[nodiscard]] MoveDescriptor og1_add(std::string v, int sign);
[[nodiscard]] MoveDescriptor og2_remove(std::string a, std::string b);
[[nodiscard]] MoveDescriptor og2_add(std::string a, std::string b, bool adjacent, int sign_a,
                                     std::vector<std::string> neighbors);
[[nodiscard]] MoveDescriptor og3(std::string u, std::string v, std::string w, Direction d);
[[nodiscard]] MoveDescriptor og4(std::string u, std::string v);
[[nodiscard]] MoveDescriptor og4p(std::string v);
[[nodiscard]] MoveDescriptor o1_remove(std::string v);
[[nodiscard]] MoveDescriptor o1_add(std::string v, bool looped);
[[nodiscard]] MoveDescriptor o2_remove(std::string a, std::string b);
[[nodiscard]] MoveDescriptor o2_add(std::string looped_vertex, std::string unlooped_vertex, bool adjacent,
                                    std::vector<std::string> neighbors);
[[nodiscard]] MoveDescriptor o3(std::string u, std::string v, std::string w);

/// Reason the move cannot be applied to g, or nothing when it can.
[[nodiscard]] std::optional<std::string> graph_move_violation(const LabeledGraph& g, const MoveDescriptor& m);
[[nodiscard]] std::optional<std::string> loop_move_violation(const LoopedGraph& g, const MoveDescriptor& m);

/// Every applicable removal / in-place descriptor of the requested families.
[[nodiscard]] std::vector<MoveDescriptor> list_graph_moves(const LabeledGraph& g,
                                                           FamilySet families = FamilySet::graph_moves());
[[nodiscard]] std::vector<MoveDescriptor> list_loop_moves(const LoopedGraph& l,
                                                          FamilySet families = FamilySet::loop_moves());

/// Throws MoveNotApplicable naming the violated precondition.
[[nodiscard]] LabeledGraph apply_graph_move(const LabeledGraph& g, const MoveDescriptor& m);
[[nodiscard]] LoopedGraph apply_loop_move(const LoopedGraph& l, const MoveDescriptor& m);

/// Descriptor undoing m, built against the graph m is applied to (removals need
/// the removed payload and attachment set).
[[nodiscard]] MoveDescriptor inverse_graph_move(const LabeledGraph& before, const MoveDescriptor& m);
[[nodiscard]] MoveDescriptor inverse_loop_move(const LoopedGraph& before, const MoveDescriptor& m);

/// All addition descriptors for a graph that stays within `max_vertices`, new
/// vertices named with fresh tokens.
[[nodiscard]] std::vector<MoveDescriptor> list_graph_additions(const LabeledGraph& g, FamilySet families,
                                                               std::size_t max_vertices);
[[nodiscard]] std::vector<MoveDescriptor> list_loop_additions(const LoopedGraph& l, FamilySet families,
                                                              std::size_t max_vertices);

}  // namespace graphlink
