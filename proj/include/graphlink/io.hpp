#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "graphlink/chord.hpp"
#include "graphlink/graph.hpp"
#include "graphlink/moves.hpp"

namespace graphlink {

enum class DocumentKind { LabeledGraph, LoopedGraph, ChordDiagram };

/// One parsed input file.
///
/// Formats (one datum per line, `#` starts a comment):
///   lg <n>      then  v <name> <0|1> <+|->   and  e <name> <name>
///   ug <n>      then  v <name>,  loop <name>, e <name> <name>
///   cd <tokens> then  label <name> <0|1> <+|->
struct Document {
    std::variant<LabeledGraph, LoopedGraph, ChordDiagram> value;
    std::string source;

    [[nodiscard]] DocumentKind kind() const noexcept { return static_cast<DocumentKind>(value.index()); }
};

[[nodiscard]] std::string_view to_string(DocumentKind k) noexcept;

/// Throws ParseError (kinds ParseError, DuplicateName, BadLabel) with a 1-based line and column.
[[nodiscard]] Document parse_document(std::string_view text, std::string source = "<input>");

/// Normalised text: vertices in order, edges sorted by vertex index pair.
[[nodiscard]] std::string serialize(const LabeledGraph& g);
[[nodiscard]] std::string serialize(const LoopedGraph& l);
/// Labels are written for explicitly labelled chords, in first-occurrence order.
[[nodiscard]] std::string serialize(const ChordDiagram& d);
[[nodiscard]] std::string serialize(const Document& d);

/// One move per line:
///   Og1 rm v | Og1 add v:(0,+)
///   Og2 rm a b | Og2 add a:(f,s) b:(f,s) adj=0|1 nbrs=c,d
///   Og3 fwd|inv u v w | Og4 u v | Og4p v
///   O1 rm x | O1 add x:looped|unlooped
///   O2 rm a b | O2 add a:looped b:unlooped adj=0|1 nbrs=c,d
///   O3 u v w
[[nodiscard]] std::string format_move(const MoveDescriptor& m);
/// Throws ParseError (line 1, column of the offending token).
[[nodiscard]] MoveDescriptor parse_move(std::string_view line);

}  // namespace graphlink
