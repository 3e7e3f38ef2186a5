// Command-line front end: validation, canonical forms, isomorphism,
// orientation moves, chain surgery, corner-polytope operations, map
// verification, and localization, over the JSON document formats.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict, 2 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "hamgraph/corner.hpp"
#include "hamgraph/graph.hpp"
#include "hamgraph/io.hpp"
#include "hamgraph/level_maps.hpp"
#include "hamgraph/localization.hpp"
#include "hamgraph/moves.hpp"

using namespace hamgraph;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct Options {
  bool json_output = false;
  std::optional<std::string> out_path;
  std::uint64_t seed = 1;
  double tol = 1e-9;
};

void emit(const Options& opt, const json& report, const std::string& text) {
  if (opt.json_output) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

void maybe_save(const Options& opt, const Document& doc) {
  if (opt.out_path) save_document(doc, *opt.out_path);
}

DullGraph load_graph(const std::string& path) {
  return load_document(path).graph();
}

Orientation load_bound_orientation(const DullGraph& g, const std::string& path) {
  return bind_orientation(g, load_document(path).orientation());
}

// Orientation to use when the caller did not supply one.
Orientation default_orientation(const DullGraph& g) {
  require_valid_dull(g);
  return enumerate_orientations(g).front();
}

std::string verdict_name(DiffeoVerdict v) {
  switch (v) {
    case DiffeoVerdict::No: return "no";
    case DiffeoVerdict::YesOrientationPreserving: return "yes-orientation-preserving";
    case DiffeoVerdict::YesBothOrientations: return "yes-both-orientations";
  }
  return "no";
}

json surgery_json(const DullGraph& g, const SurgeryResult& res) {
  json out;
  out["graph"] = json::parse(render_document(make_document(res.graph, false)));
  out["orientation"] = json::parse(render_document(make_document(res.graph, res.orientation)));
  out["new_vertices"] = res.new_vertices;
  json map = json::object();
  for (const auto& v : g.vertices) {
    if (res.graph.vertex_index(v.id)) map[v.id] = v.id;
  }
  out["vertex_map"] = std::move(map);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Combinatorial invariants and surgeries of Hamiltonian circle actions on "
               "compact symplectic four-manifolds"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_output, "machine-readable output");
  app.add_option("--out", opt.out_path, "write the primary output document to this path");
  app.add_option("--seed", opt.seed, "RNG seed for sampled verification");
  app.add_option("--tol", opt.tol, "identity tolerance for sampled verification");

  std::string path1, path2, vertex_id, edge_spec, chain_vertex;
  std::vector<std::string> size_args;

  auto* c_validate = app.add_subcommand("validate", "validate any document");
  c_validate->add_option("file", path1)->required();

  auto* c_dull = app.add_subcommand("dull", "strip a decorated graph to its dull graph");
  c_dull->add_option("file", path1)->required();

  auto* c_canon = app.add_subcommand("canon", "print the canonical key of a graph");
  c_canon->add_option("file", path1)->required();

  auto* c_iso = app.add_subcommand("iso", "find a labeled-graph isomorphism");
  c_iso->add_option("file1", path1)->required();
  c_iso->add_option("file2", path2)->required();

  auto* c_chains = app.add_subcommand("chains", "list the free chains of a graph");
  c_chains->add_option("file", path1)->required();

  auto* c_orient = app.add_subcommand("orient-list", "enumerate all valid orientations");
  c_orient->add_option("file", path1)->required();

  auto* c_flip = app.add_subcommand("flip", "partial flip along a free chain");
  c_flip->add_option("graph", path1)->required();
  c_flip->add_option("orientation", path2)->required();
  c_flip->add_option("--chain", chain_vertex, "a vertex on the chain to flip")->required();

  auto* c_opposite = app.add_subcommand("opposite", "opposite orientation");
  c_opposite->add_option("graph", path1)->required();
  c_opposite->add_option("orientation", path2)->required();

  auto* c_blowup = app.add_subcommand("blowup", "chain blowup at a vertex");
  c_blowup->add_option("graph", path1)->required();
  c_blowup->add_option("orientation", path2)->required();
  c_blowup->add_option("--vertex", vertex_id)->required();

  auto* c_blowdown = app.add_subcommand("blowdown", "blow down an exceptional sphere");
  c_blowdown->add_option("graph", path1)->required();
  c_blowdown->add_option("orientation", path2)->required();
  c_blowdown->add_option("--edge", edge_spec, "endpoints as a,b")->required();

  auto* c_invert = app.add_subcommand("invert-chain", "rebuild a free chain upside down");
  c_invert->add_option("graph", path1)->required();
  c_invert->add_option("orientation", path2)->required();
  c_invert->add_option("--chain", chain_vertex, "a vertex on the chain")->required();

  auto* c_realize = app.add_subcommand("realize", "corner polytope realizing a free chain");
  c_realize->add_option("graph", path1)->required();
  c_realize->add_option("orientation", path2)->required();
  c_realize->add_option("--chain", chain_vertex, "a vertex on the chain")->required();
  c_realize->add_option("--sizes", size_args, "blowup sizes p/q, one per chain edge");

  auto* c_mirror = app.add_subcommand("mirror", "reflect a polytope across the diagonal");
  c_mirror->add_option("file", path1)->required();

  auto* c_labels = app.add_subcommand("labels", "stabilizer labels of a polytope, bottom to top");
  c_labels->add_option("file", path1)->required();

  auto* c_verify = app.add_subcommand("verify-maps", "verify the map identities on a polytope");
  c_verify->add_option("file", path1)->required();

  auto* c_localize = app.add_subcommand("localize", "check the localization residue identities");
  c_localize->add_option("file", path1)->required();

  auto* c_betti = app.add_subcommand("betti", "Betti numbers of a graph");
  c_betti->add_option("file", path1)->required();

  auto* c_classify = app.add_subcommand("classify", "diffeotype of a graph");
  c_classify->add_option("file", path1)->required();

  auto* c_decide = app.add_subcommand("diffeo-decide", "decide equivariant diffeomorphism");
  c_decide->add_option("file1", path1)->required();
  c_decide->add_option("file2", path2)->required();

  CLI11_PARSE(app, argc, argv);

  if (c_validate->parsed()) {
    const Document doc = load_document(path1);
    ValidationReport report;
    switch (doc.kind) {
      case DocKind::Dull:
        report = validate_dull(doc.graph());
        break;
      case DocKind::Decorated:
        report = validate_decorated(doc.graph());
        break;
      case DocKind::Polytope:
        report = validate_polytope(doc.polytope());
        break;
      default:
        break;  // schema-checked on load
    }
    emit(opt, validation_report_json(report), report.summary() + "\n");
    return report.ok() ? kExitOk : kExitNegative;
  }

  if (c_dull->parsed()) {
    const Document doc = load_document(path1);
    if (doc.kind != DocKind::Decorated) throw Error("dull expects a decorated graph document");
    const Document out = make_document(dull_of(doc.graph()), false);
    maybe_save(opt, out);
    std::cout << render_document(out);
    return kExitOk;
  }

  if (c_canon->parsed()) {
    const DullGraph g = load_graph(path1);
    require_valid_dull(g);
    const auto key = canonical_key(g);
    emit(opt, json{{"key", key.to_string()}}, key.to_string() + "\n");
    return kExitOk;
  }

  if (c_iso->parsed()) {
    const auto iso = find_isomorphism(load_graph(path1), load_graph(path2));
    if (!iso) {
      emit(opt, json{{"isomorphic", false}}, "not isomorphic\n");
      return kExitNegative;
    }
    json map = json::object();
    std::string text;
    for (const auto& [from, to] : iso->vertex_map) {
      map[from] = to;
      text += from + " -> " + to + "\n";
    }
    emit(opt, json{{"isomorphic", true}, {"vertex_map", std::move(map)}}, text);
    return kExitOk;
  }

  if (c_chains->parsed()) {
    const DullGraph g = load_graph(path1);
    require_valid_dull(g);
    json chains = json::array();
    std::string text;
    for (const auto& chain : free_chains(g)) {
      json cj;
      cj["vertices"] = chain.vertex_ids(g);
      cj["labels"] = chain.labels(g);
      chains.push_back(std::move(cj));
      text += "chain:";
      for (const auto& id : chain.vertex_ids(g)) text += " " + id;
      text += " | labels:";
      for (const long long k : chain.labels(g)) text += " " + std::to_string(k);
      text += "\n";
    }
    if (text.empty()) text = "no free chains\n";
    emit(opt, json{{"chains", std::move(chains)}}, text);
    return kExitOk;
  }

  if (c_orient->parsed()) {
    const DullGraph g = load_graph(path1);
    json list = json::array();
    const auto all = enumerate_orientations(g);
    for (const auto& o : all) {
      list.push_back(json::parse(render_document(make_document(g, o)))["payload"]);
    }
    emit(opt, json{{"count", all.size()}, {"orientations", std::move(list)}},
         std::to_string(all.size()) + " orientations\n");
    return kExitOk;
  }

  if (c_opposite->parsed() || c_flip->parsed()) {
    const DullGraph g = load_graph(path1);
    const Orientation o = load_bound_orientation(g, path2);
    Orientation result;
    if (c_opposite->parsed()) {
      result = opposite(g, o);
    } else {
      result = partial_flip(g, o, free_chain_containing(g, chain_vertex));
    }
    const Document out = make_document(g, result);
    maybe_save(opt, out);
    std::cout << render_document(out);
    return kExitOk;
  }

  if (c_blowup->parsed() || c_blowdown->parsed()) {
    const DullGraph g = load_graph(path1);
    const Orientation o = load_bound_orientation(g, path2);
    SurgeryResult res;
    if (c_blowup->parsed()) {
      res = chain_blowup(g, o, vertex_id);
    } else {
      const auto comma = edge_spec.find(',');
      if (comma == std::string::npos) throw Error("--edge expects endpoints as a,b");
      res = chain_blowdown(g, o, edge_spec.substr(0, comma), edge_spec.substr(comma + 1));
    }
    maybe_save(opt, make_document(res.graph, false));
    std::cout << surgery_json(g, res).dump(2) << "\n";
    return kExitOk;
  }

  if (c_invert->parsed()) {
    const DullGraph g = load_graph(path1);
    const Orientation o = load_bound_orientation(g, path2);
    const auto res = invert_chain(g, o, free_chain_containing(g, chain_vertex));
    json out;
    out["graph"] = json::parse(render_document(make_document(res.graph, false)));
    out["orientation"] = json::parse(render_document(make_document(res.graph, res.orientation)));
    out["script"] = move_script_json(res.script);
    out["chain"] = res.chain;
    maybe_save(opt, make_document(res.graph, false));
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  if (c_realize->parsed()) {
    const DullGraph g = load_graph(path1);
    const Orientation o = load_bound_orientation(g, path2);
    const auto chain = chain_bottom_to_top(g, o, free_chain_containing(g, chain_vertex));
    std::optional<std::vector<Rat>> sizes;
    if (!size_args.empty()) {
      sizes.emplace();
      for (const auto& s : size_args) sizes->push_back(rat_from_string(s));
    }
    const auto realization = realize_chain(chain.labels(g), sizes ? &*sizes : nullptr);
    const Document out = make_document(realization.polytope);
    maybe_save(opt, out);
    json report = json::parse(render_document(out));
    report["script"] = move_script_json(realization.script);
    std::cout << report.dump(2) << "\n";
    return kExitOk;
  }

  if (c_mirror->parsed()) {
    const Document out = make_document(mirror(load_document(path1).polytope()));
    maybe_save(opt, out);
    std::cout << render_document(out);
    return kExitOk;
  }

  if (c_labels->parsed()) {
    const auto labels = stabilizer_labels(load_document(path1).polytope());
    std::string text;
    for (const long long k : labels) text += (text.empty() ? "" : " ") + std::to_string(k);
    emit(opt, json{{"labels", labels}}, text + "\n");
    return kExitOk;
  }

  if (c_verify->parsed()) {
    ToleranceConfig cfg;
    cfg.rng_seed = opt.seed;
    cfg.tol_identity = opt.tol;
    const auto report = run_verification_suite(load_document(path1).polytope(), cfg);
    std::string text;
    for (const auto& c : report.checks) {
      text += (c.pass ? "pass " : "FAIL ") + c.name + " (max defect " +
              std::to_string(c.max_defect) + ", tol " + std::to_string(c.tolerance) + ")\n";
    }
    const json rj = verification_report_json(report);
    maybe_save(opt, make_report_document(rj));
    emit(opt, rj, text);
    return report.all_pass() ? kExitOk : kExitNegative;
  }

  if (c_localize->parsed()) {
    const DullGraph g = load_graph(path1);
    const Orientation o = default_orientation(g);
    const auto report = localization_consistency(g, o);
    const auto fd = fixed_data_of(g, o);
    json rj = validation_report_json(report);
    rj["integral_of_1"] = integrate_abbv(fd, unit_class(fd)).to_string();
    maybe_save(opt, make_report_document(rj));
    emit(opt, rj, report.summary() + "\n");
    return report.ok() ? kExitOk : kExitNegative;
  }

  if (c_betti->parsed()) {
    const auto b = betti(load_graph(path1));
    json bj = json::array();
    std::string text;
    for (const long long v : b) {
      bj.push_back(v);
      text += (text.empty() ? "" : " ") + std::to_string(v);
    }
    emit(opt, json{{"betti", std::move(bj)}}, text + "\n");
    return kExitOk;
  }

  if (c_classify->parsed()) {
    const DullGraph g = load_graph(path1);
    const auto b = betti(g);
    const std::string description = diffeotype(b[1], b[2], parity_from_graph(g));
    emit(opt,
         json{{"diffeotype", description},
              {"b1", b[1]},
              {"b2", b[2]},
              {"orientation_reversing", orientation_reversing_exists(g)}},
         description + "\n");
    return kExitOk;
  }

  if (c_decide->parsed()) {
    const auto decision = decide_equivariant_diffeo(load_graph(path1), load_graph(path2));
    json out{{"verdict", verdict_name(decision.verdict)}, {"b2", decision.b2}};
    if (decision.isomorphism) {
      json map = json::object();
      for (const auto& [from, to] : decision.isomorphism->vertex_map) map[from] = to;
      out["vertex_map"] = std::move(map);
    }
    emit(opt, out, verdict_name(decision.verdict) + "\n");
    return decision.verdict == DiffeoVerdict::No ? kExitNegative : kExitOk;
  }

  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
