#pragma once

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hamgraph/corner.hpp"
#include "hamgraph/graph.hpp"
#include "hamgraph/level_maps.hpp"
#include "hamgraph/moves.hpp"

namespace hamgraph {

// Versioned JSON documents. Parsing is strict: unknown fields, wrong types,
// and inexact rationals (decimal notation) are errors naming the offending
// path. Rendering is canonical (sorted keys, two-space indent, trailing
// newline), so saving a loaded canonical file reproduces it byte for byte.

enum class DocKind { Dull, Decorated, OrientationK, Polytope, Script, Report };

std::string doc_kind_name(DocKind kind);

// Standalone orientation payload; edges are referenced by endpoint pair and
// bound to a concrete graph on use.
struct OrientationDoc {
  std::string min;
  std::string max;
  std::vector<std::pair<std::array<std::string, 2>, std::string>> directions;  // (edge, head)
};

struct Document {
  int format_version = 1;
  DocKind kind = DocKind::Dull;
  std::variant<DullGraph, OrientationDoc, CornerPolytope, MoveScript, nlohmann::json> payload;

  const DullGraph& graph() const;            // Dull or Decorated
  const OrientationDoc& orientation() const;
  const CornerPolytope& polytope() const;
  const MoveScript& script() const;
};

Document load_document(const std::string& path);
void save_document(const Document& doc, const std::string& path);
std::string render_document(const Document& doc);
Document document_from_json_text(const std::string& text, const std::string& where = "input");

Document make_document(DullGraph graph, bool decorated);
Document make_document(CornerPolytope polytope);
Document make_document(MoveScript script);
Document make_report_document(nlohmann::json report);

// Aligns an orientation document with a graph's edge list (throws on
// unknown vertices or edges, or on undirected/doubly-directed edges).
Orientation bind_orientation(const DullGraph& g, const OrientationDoc& doc);
OrientationDoc orientation_doc(const DullGraph& g, const Orientation& o);
Document make_document(const DullGraph& g, const Orientation& o);

nlohmann::json validation_report_json(const ValidationReport& report);
nlohmann::json verification_report_json(const VerificationReport& report);
nlohmann::json move_script_json(const MoveScript& script);

}  // namespace hamgraph
