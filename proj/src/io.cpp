#include "hamgraph/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hamgraph {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(path + ": " + message);
}

const json& require_field(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + std::string(key) + "'");
  return *it;
}

void reject_unknown_fields(const json& obj, const std::set<std::string>& allowed,
                           const std::string& path) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      fail(path, "unknown field '" + item.key() + "'");
    }
  }
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

long long get_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

Rat get_rational(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\" or \"n\"");
  try {
    return rat_from_string(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

ExtremalMark mark_from_string(const std::string& s, const std::string& path) {
  if (s == "none") return ExtremalMark::None;
  if (s == "min") return ExtremalMark::Min;
  if (s == "max") return ExtremalMark::Max;
  if (s == "extremal") return ExtremalMark::Extremal;
  fail(path, "extremal must be one of none/min/max/extremal");
}

std::string mark_to_string(ExtremalMark m) {
  switch (m) {
    case ExtremalMark::None: return "none";
    case ExtremalMark::Min: return "min";
    case ExtremalMark::Max: return "max";
    case ExtremalMark::Extremal: return "extremal";
  }
  return "none";
}

DullGraph graph_from_json(const json& j, const std::string& path, bool decorated) {
  if (!j.is_object()) fail(path, "expected an object");
  reject_unknown_fields(j, {"vertices", "edges"}, path);
  const json& vertices = require_field(j, "vertices", path);
  const json& edges = require_field(j, "edges", path);
  if (!vertices.is_array()) fail(path + "/vertices", "expected an array");
  if (!edges.is_array()) fail(path + "/edges", "expected an array");

  DullGraph g;
  std::size_t i = 0;
  for (const auto& vj : vertices) {
    const std::string vp = path + "/vertices/" + std::to_string(i++);
    if (!vj.is_object()) fail(vp, "expected an object");
    std::set<std::string> allowed{"id", "kind", "extremal"};
    Vertex v;
    v.id = get_string(require_field(vj, "id", vp), vp + "/id");
    const std::string kind = get_string(require_field(vj, "kind", vp), vp + "/kind");
    if (kind == "thin") {
      v.kind = VertexKind::Thin;
    } else if (kind == "fat") {
      v.kind = VertexKind::Fat;
      allowed.insert({"genus", "e", "area"});
    } else {
      fail(vp + "/kind", "kind must be 'thin' or 'fat'");
    }
    if (decorated) allowed.insert("moment");
    reject_unknown_fields(vj, allowed, vp);
    v.extremal = mark_from_string(get_string(require_field(vj, "extremal", vp), vp + "/extremal"),
                                  vp + "/extremal");
    if (v.kind == VertexKind::Fat) {
      v.genus = get_integer(require_field(vj, "genus", vp), vp + "/genus");
      v.self_intersection = get_integer(require_field(vj, "e", vp), vp + "/e");
      if (vj.contains("area")) v.area = get_rational(vj["area"], vp + "/area");
      if (decorated && !v.area) fail(vp, "decorated fat vertex needs an area");
    }
    if (decorated) {
      v.moment = get_rational(require_field(vj, "moment", vp), vp + "/moment");
    }
    g.vertices.push_back(std::move(v));
  }

  i = 0;
  for (const auto& ej : edges) {
    const std::string ep = path + "/edges/" + std::to_string(i++);
    if (!ej.is_object()) fail(ep, "expected an object");
    reject_unknown_fields(ej, {"a", "b", "k"}, ep);
    GraphEdge e;
    e.a = get_string(require_field(ej, "a", ep), ep + "/a");
    e.b = get_string(require_field(ej, "b", ep), ep + "/b");
    e.k = get_integer(require_field(ej, "k", ep), ep + "/k");
    g.edges.push_back(std::move(e));
  }
  return g;
}

json graph_to_json(const DullGraph& g, bool decorated) {
  json vertices = json::array();
  for (const auto& v : g.vertices) {
    json vj;
    vj["id"] = v.id;
    vj["kind"] = v.kind == VertexKind::Fat ? "fat" : "thin";
    vj["extremal"] = mark_to_string(v.extremal);
    if (v.kind == VertexKind::Fat) {
      vj["genus"] = v.genus;
      vj["e"] = v.self_intersection;
      if (v.area) vj["area"] = rat_to_string(*v.area);
    }
    if (decorated) {
      if (!v.moment) throw Error("vertex '" + v.id + "' has no moment value to serialize");
      vj["moment"] = rat_to_string(*v.moment);
    }
    vertices.push_back(std::move(vj));
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"k", e.k}});
  }
  return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

OrientationDoc orientation_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  reject_unknown_fields(j, {"min", "max", "directions"}, path);
  OrientationDoc doc;
  doc.min = get_string(require_field(j, "min", path), path + "/min");
  doc.max = get_string(require_field(j, "max", path), path + "/max");
  const json& dirs = require_field(j, "directions", path);
  if (!dirs.is_array()) fail(path + "/directions", "expected an array");
  std::size_t i = 0;
  for (const auto& dj : dirs) {
    const std::string dp = path + "/directions/" + std::to_string(i++);
    if (!dj.is_object()) fail(dp, "expected an object");
    reject_unknown_fields(dj, {"edge", "head"}, dp);
    const json& edge = require_field(dj, "edge", dp);
    if (!edge.is_array() || edge.size() != 2) fail(dp + "/edge", "expected [a, b]");
    doc.directions.push_back({{get_string(edge[0], dp + "/edge/0"),
                               get_string(edge[1], dp + "/edge/1")},
                              get_string(require_field(dj, "head", dp), dp + "/head")});
  }
  return doc;
}

json orientation_to_json(const OrientationDoc& doc) {
  json dirs = json::array();
  for (const auto& [edge, head] : doc.directions) {
    dirs.push_back({{"edge", {edge[0], edge[1]}}, {"head", head}});
  }
  return json{{"min", doc.min}, {"max", doc.max}, {"directions", std::move(dirs)}};
}

CornerPolytope polytope_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  reject_unknown_fields(j, {"normals", "constants"}, path);
  const json& normals = require_field(j, "normals", path);
  const json& constants = require_field(j, "constants", path);
  if (!normals.is_array()) fail(path + "/normals", "expected an array");
  if (!constants.is_array()) fail(path + "/constants", "expected an array");

  CornerPolytope p;
  std::size_t i = 0;
  for (const auto& nj : normals) {
    const std::string np = path + "/normals/" + std::to_string(i++);
    if (!nj.is_array() || nj.size() != 2) fail(np, "expected [alpha, beta]");
    p.normals.push_back({get_integer(nj[0], np + "/0"), get_integer(nj[1], np + "/1")});
  }
  i = 0;
  for (const auto& cj : constants) {
    p.constants.push_back(get_rational(cj, path + "/constants/" + std::to_string(i++)));
  }
  return p;
}

json polytope_to_json(const CornerPolytope& p) {
  json normals = json::array();
  for (const auto& v : p.normals) normals.push_back({v[0], v[1]});
  json constants = json::array();
  for (const auto& a : p.constants) constants.push_back(rat_to_string(a));
  return json{{"normals", std::move(normals)}, {"constants", std::move(constants)}};
}

MoveScript script_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "move script payload must be an array");
  MoveScript script;
  std::size_t i = 0;
  for (const auto& mj : j) {
    const std::string mp = path + "/" + std::to_string(i++);
    if (!mj.is_object()) fail(mp, "expected an object");
    const std::string op = get_string(require_field(mj, "op", mp), mp + "/op");
    Move move;
    if (op == "opposite") {
      reject_unknown_fields(mj, {"op"}, mp);
      move.kind = MoveKind::Opposite;
    } else if (op == "partial_flip") {
      reject_unknown_fields(mj, {"op", "chain"}, mp);
      move.kind = MoveKind::PartialFlip;
      const json& chain = require_field(mj, "chain", mp);
      if (!chain.is_array()) fail(mp + "/chain", "expected an array of vertex ids");
      for (const auto& id : chain) move.chain.push_back(get_string(id, mp + "/chain"));
    } else if (op == "blowup") {
      reject_unknown_fields(mj, {"op", "vertex", "size"}, mp);
      move.kind = MoveKind::Blowup;
      move.vertex = get_string(require_field(mj, "vertex", mp), mp + "/vertex");
      if (mj.contains("size")) move.size = get_rational(mj["size"], mp + "/size");
    } else if (op == "blowdown") {
      reject_unknown_fields(mj, {"op", "edge"}, mp);
      move.kind = MoveKind::Blowdown;
      const json& edge = require_field(mj, "edge", mp);
      if (!edge.is_array() || edge.size() != 2) fail(mp + "/edge", "expected [a, b]");
      move.edge = {get_string(edge[0], mp + "/edge/0"), get_string(edge[1], mp + "/edge/1")};
    } else {
      fail(mp + "/op", "unknown move '" + op + "'");
    }
    script.push_back(std::move(move));
  }
  return script;
}

}  // namespace

json move_script_json(const MoveScript& script) {
  json out = json::array();
  for (const auto& move : script) {
    json mj;
    switch (move.kind) {
      case MoveKind::Opposite:
        mj["op"] = "opposite";
        break;
      case MoveKind::PartialFlip:
        mj["op"] = "partial_flip";
        mj["chain"] = move.chain;
        break;
      case MoveKind::Blowup:
        mj["op"] = "blowup";
        mj["vertex"] = move.vertex;
        if (move.size) mj["size"] = rat_to_string(*move.size);
        break;
      case MoveKind::Blowdown:
        mj["op"] = "blowdown";
        mj["edge"] = {move.edge[0], move.edge[1]};
        break;
    }
    out.push_back(std::move(mj));
  }
  return out;
}

std::string doc_kind_name(DocKind kind) {
  switch (kind) {
    case DocKind::Dull: return "dull_graph";
    case DocKind::Decorated: return "decorated_graph";
    case DocKind::OrientationK: return "orientation";
    case DocKind::Polytope: return "polytope";
    case DocKind::Script: return "move_script";
    case DocKind::Report: return "report";
  }
  return "dull_graph";
}

const DullGraph& Document::graph() const {
  if (kind != DocKind::Dull && kind != DocKind::Decorated) {
    throw Error("document is a " + doc_kind_name(kind) + ", expected a graph");
  }
  return std::get<DullGraph>(payload);
}

const OrientationDoc& Document::orientation() const {
  if (kind != DocKind::OrientationK) {
    throw Error("document is a " + doc_kind_name(kind) + ", expected an orientation");
  }
  return std::get<OrientationDoc>(payload);
}

const CornerPolytope& Document::polytope() const {
  if (kind != DocKind::Polytope) {
    throw Error("document is a " + doc_kind_name(kind) + ", expected a polytope");
  }
  return std::get<CornerPolytope>(payload);
}

const MoveScript& Document::script() const {
  if (kind != DocKind::Script) {
    throw Error("document is a " + doc_kind_name(kind) + ", expected a move script");
  }
  return std::get<MoveScript>(payload);
}

Document document_from_json_text(const std::string& text, const std::string& where) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(where + ": " + e.what());
  }
  if (!j.is_object()) fail(where, "expected a document object");
  reject_unknown_fields(j, {"format_version", "kind", "payload"}, where);
  Document doc;
  doc.format_version =
      static_cast<int>(get_integer(require_field(j, "format_version", where), where + "/format_version"));
  if (doc.format_version != 1) fail(where + "/format_version", "unsupported format_version");
  const std::string kind = get_string(require_field(j, "kind", where), where + "/kind");
  const json& payload = require_field(j, "payload", where);
  const std::string pp = where + "/payload";
  if (kind == "dull_graph") {
    doc.kind = DocKind::Dull;
    doc.payload = graph_from_json(payload, pp, false);
  } else if (kind == "decorated_graph") {
    doc.kind = DocKind::Decorated;
    doc.payload = graph_from_json(payload, pp, true);
  } else if (kind == "orientation") {
    doc.kind = DocKind::OrientationK;
    doc.payload = orientation_from_json(payload, pp);
  } else if (kind == "polytope") {
    doc.kind = DocKind::Polytope;
    doc.payload = polytope_from_json(payload, pp);
  } else if (kind == "move_script") {
    doc.kind = DocKind::Script;
    doc.payload = script_from_json(payload, pp);
  } else if (kind == "report") {
    doc.kind = DocKind::Report;
    if (!payload.is_object()) fail(pp, "report payload must be an object");
    doc.payload = payload;
  } else {
    fail(where + "/kind", "unknown document kind '" + kind + "'");
  }
  return doc;
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return document_from_json_text(buffer.str(), path);
}

std::string render_document(const Document& doc) {
  json j;
  j["format_version"] = doc.format_version;
  j["kind"] = doc_kind_name(doc.kind);
  switch (doc.kind) {
    case DocKind::Dull:
      j["payload"] = graph_to_json(std::get<DullGraph>(doc.payload), false);
      break;
    case DocKind::Decorated:
      j["payload"] = graph_to_json(std::get<DullGraph>(doc.payload), true);
      break;
    case DocKind::OrientationK:
      j["payload"] = orientation_to_json(std::get<OrientationDoc>(doc.payload));
      break;
    case DocKind::Polytope:
      j["payload"] = polytope_to_json(std::get<CornerPolytope>(doc.payload));
      break;
    case DocKind::Script:
      j["payload"] = move_script_json(std::get<MoveScript>(doc.payload));
      break;
    case DocKind::Report:
      j["payload"] = std::get<json>(doc.payload);
      break;
  }
  return j.dump(2) + "\n";
}

void save_document(const Document& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << render_document(doc);
}

Document make_document(DullGraph graph, bool decorated) {
  Document doc;
  doc.kind = decorated ? DocKind::Decorated : DocKind::Dull;
  doc.payload = std::move(graph);
  return doc;
}

Document make_document(CornerPolytope polytope) {
  Document doc;
  doc.kind = DocKind::Polytope;
  doc.payload = std::move(polytope);
  return doc;
}

Document make_document(MoveScript script) {
  Document doc;
  doc.kind = DocKind::Script;
  doc.payload = std::move(script);
  return doc;
}

Document make_report_document(json report) {
  Document doc;
  doc.kind = DocKind::Report;
  doc.payload = std::move(report);
  return doc;
}

Orientation bind_orientation(const DullGraph& g, const OrientationDoc& doc) {
  Orientation o;
  o.min_vertex = doc.min;
  o.max_vertex = doc.max;
  o.head.assign(g.edges.size(), std::string());
  std::vector<bool> directed(g.edges.size(), false);
  for (const auto& [edge, head] : doc.directions) {
    const auto idx = g.edge_between(edge[0], edge[1]);
    if (!idx) throw Error("orientation directs unknown edge " + edge[0] + "-" + edge[1]);
    if (directed[*idx]) throw Error("edge " + edge[0] + "-" + edge[1] + " directed twice");
    directed[*idx] = true;
    o.head[*idx] = head;
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!directed[e]) {
      throw Error("edge " + g.edges[e].a + "-" + g.edges[e].b + " has no direction");
    }
  }
  return o;
}

OrientationDoc orientation_doc(const DullGraph& g, const Orientation& o) {
  OrientationDoc doc;
  doc.min = o.min_vertex;
  doc.max = o.max_vertex;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    doc.directions.push_back({{g.edges[e].a, g.edges[e].b}, o.head[e]});
  }
  return doc;
}

Document make_document(const DullGraph& g, const Orientation& o) {
  Document doc;
  doc.kind = DocKind::OrientationK;
  doc.payload = orientation_doc(g, o);
  return doc;
}

json validation_report_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"code", v.code}, {"detail", v.detail}});
  }
  return json{{"valid", report.ok()}, {"violations", std::move(violations)}};
}

json verification_report_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"samples", c.samples},
                      {"max_defect", c.max_defect},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  return json{{"pass", report.all_pass()}, {"identities", std::move(checks)}};
}

}  // namespace hamgraph
