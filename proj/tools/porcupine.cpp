// porcupine: construct porcupine graphs of admissible pairs and verify the
// graded *-isomorphism of the corresponding graded ideal at truncation depth.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpa/element.hpp"
#include "lpa/graph.hpp"
#include "lpa/ideal.hpp"
#include "lpa/porcupine.hpp"

namespace {

constexpr const char* kToeplitzJson =
    R"({"vertices":["w","v"],"bundles":[)"
    R"({"name":"e","src":"w","dst":"w","count":1},)"
    R"({"name":"g","src":"w","dst":"v","count":1}]})";

constexpr const char* kInfiniteEmitterJson =
    R"({"vertices":["u","w","v","b","c"],"bundles":[)"
    R"({"name":"e1","src":"u","dst":"w","count":1},)"
    R"({"name":"q","src":"w","dst":"v","count":"inf"},)"
    R"({"name":"e2","src":"w","dst":"b","count":1},)"
    R"({"name":"e3","src":"b","dst":"v","count":1},)"
    R"({"name":"e4","src":"b","dst":"c","count":1}]})";

struct Args {
  std::string graph_file;
  std::string h_list;
  std::string s_list;
  std::string dot_file;
  std::string path_text;
  std::string example_name;
  int depth = 4;
  std::int64_t index_bound = 0;  // 0 -> depth
  int samples = 100;
  std::uint64_t seed = 0;
  bool json = false;
};

lpa::GraphPtr load_graph(const Args& args) {
  std::ifstream in(args.graph_file);
  if (!in) throw std::invalid_argument("cannot open graph file '" + args.graph_file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return lpa::parse_graph(buf.str());
}

lpa::AdmissiblePair load_pair(const Args& args) {
  lpa::GraphPtr g = load_graph(args);
  return lpa::make_admissible_pair(g, lpa::parse_vertex_set(*g, args.h_list),
                                   lpa::parse_vertex_set(*g, args.s_list));
}

void write_file(const std::string& file, const std::string& content) {
  std::ofstream out(file);
  if (!out) throw std::invalid_argument("cannot write file '" + file + "'");
  out << content;
}

nlohmann::json json_names(const lpa::Graph& g, const lpa::VertexSet& x) {
  return lpa::vertex_set_names(g, x);
}

std::map<std::string, std::string> provenance_labels(
    const lpa::Graph& g, const std::map<lpa::VertexId, lpa::Path>& origins,
    const lpa::Graph& base) {
  std::map<std::string, std::string> labels;
  for (const auto& [v, p] : origins) labels.emplace(g.vertex_name(v), p.to_string(base));
  return labels;
}

template <class Built>
int emit_built_graph(const Args& args, const lpa::Graph& base, const Built& built) {
  std::map<std::string, std::string> labels =
      provenance_labels(*built.graph, built.spine_vertex_origin, base);
  if (!args.dot_file.empty()) write_file(args.dot_file, lpa::to_dot(*built.graph, labels));
  if (args.json) {
    nlohmann::json doc;
    doc["graph"] = nlohmann::json::parse(lpa::to_json_string(*built.graph));
    doc["depth"] = built.depth;
    doc["index_bound"] = built.index_bound;
    doc["complete"] = built.complete;
    nlohmann::json vp = nlohmann::json::object();
    for (const auto& [v, p] : built.spine_vertex_origin) {
      vp[built.graph->vertex_name(v)] = p.to_string(base);
    }
    nlohmann::json ep = nlohmann::json::object();
    for (const auto& [b, p] : built.spine_bundle_origin) {
      ep[built.graph->bundle(b).name] = p.to_string(base);
    }
    doc["provenance"] = {{"vertices", std::move(vp)}, {"edges", std::move(ep)}};
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << built.graph->vertex_count() << " vertices, "
              << built.graph->bundle_count() << " bundles, depth " << built.depth
              << ", complete: " << (built.complete ? "yes" : "no") << "\n";
    for (const std::string& name : built.graph->vertex_names()) {
      std::cout << "  " << name << "\n";
    }
    for (const lpa::Bundle& b : built.graph->bundles()) {
      std::cout << "  " << b.name << ": " << built.graph->vertex_name(b.src) << " -> "
                << built.graph->vertex_name(b.dst)
                << (b.infinite() ? " (x inf)"
                                 : b.count == 1 ? "" : " (x" + std::to_string(b.count) + ")")
                << "\n";
    }
  }
  return 0;
}

int run_closure(const Args& args) {
  lpa::GraphPtr g = load_graph(args);
  lpa::VertexSet x = lpa::parse_vertex_set(*g, args.h_list);
  std::cout << json_names(*g, lpa::hereditary_saturated_closure(*g, x)).dump() << "\n";
  return 0;
}

int run_breaking(const Args& args) {
  lpa::GraphPtr g = load_graph(args);
  lpa::VertexSet h = lpa::parse_vertex_set(*g, args.h_list);
  std::cout << json_names(*g, lpa::breaking_vertices(*g, h)).dump() << "\n";
  return 0;
}

int run_pair_check(const Args& args) {
  lpa::GraphPtr g = load_graph(args);
  std::string error;
  try {
    lpa::make_admissible_pair(g, lpa::parse_vertex_set(*g, args.h_list),
                              lpa::parse_vertex_set(*g, args.s_list));
  } catch (const std::invalid_argument& e) {
    error = e.what();
  }
  if (args.json) {
    nlohmann::json doc;
    doc["valid"] = error.empty();
    if (!error.empty()) doc["error"] = error;
    std::cout << doc.dump() << "\n";
  } else if (error.empty()) {
    std::cout << "admissible pair: ok\n";
  } else {
    std::cout << "not admissible: " << error << "\n";
  }
  return error.empty() ? 0 : 1;
}

int run_spines(const Args& args) {
  lpa::AdmissiblePair pair = load_pair(args);
  std::int64_t bound = args.index_bound > 0 ? args.index_bound : args.depth;
  lpa::SpineSets ss = lpa::spine_sets(pair, args.depth, bound);
  nlohmann::json doc;
  doc["F1"] = nlohmann::json::array();
  doc["F2"] = nlohmann::json::array();
  for (const lpa::Path& p : ss.f1) doc["F1"].push_back(p.to_string(*pair.graph));
  for (const lpa::Path& p : ss.f2) doc["F2"].push_back(p.to_string(*pair.graph));
  std::cout << doc.dump() << "\n";
  return 0;
}

int run_porcupine(const Args& args) {
  lpa::AdmissiblePair pair = load_pair(args);
  lpa::PorcupineGraph p = lpa::build_porcupine(pair, args.depth, args.index_bound);
  return emit_built_graph(args, *pair.graph, p);
}

int run_hedgehog(const Args& args) {
  lpa::AdmissiblePair pair = load_pair(args);
  lpa::HedgehogGraph h = lpa::build_hedgehog(pair, args.depth, args.index_bound);
  return emit_built_graph(args, *pair.graph, h);
}

int run_phi(const Args& args) {
  lpa::AdmissiblePair pair = load_pair(args);
  std::int64_t bound = args.index_bound > 0 ? args.index_bound : args.depth;
  lpa::PorcupineGraph p = lpa::build_porcupine(pair, args.depth, bound);
  nlohmann::json vertices = nlohmann::json::object();
  nlohmann::json edges = nlohmann::json::object();
  for (lpa::VertexId v = 0; v < p.graph->vertex_count(); ++v) {
    vertices[p.graph->vertex_name(v)] = lpa::phi_vertex(pair, p, v).to_string();
  }
  for (lpa::EdgeId e : p.graph->all_edges_bounded(bound)) {
    edges[p.graph->edge_name(e)] = lpa::phi_edge(pair, p, e).to_string();
  }
  if (args.json) {
    nlohmann::json doc{{"vertices", vertices}, {"edges", edges}};
    std::cout << doc.dump() << "\n";
  } else {
    for (const auto& [name, img] : vertices.items()) {
      std::cout << "phi(" << name << ") = " << img.get<std::string>() << "\n";
    }
    for (const auto& [name, img] : edges.items()) {
      std::cout << "phi(" << name << ") = " << img.get<std::string>() << "\n";
    }
  }
  return 0;
}

int run_factorize(const Args& args) {
  lpa::AdmissiblePair pair = load_pair(args);
  std::int64_t bound = args.index_bound > 0 ? args.index_bound : args.depth;
  lpa::PorcupineGraph p = lpa::build_porcupine(pair, args.depth, bound);
  lpa::Path path = lpa::parse_path(*pair.graph, args.path_text);
  lpa::Factorization f;
  std::string image;
  if (pair.h.count(path.range())) {
    f = lpa::factorize_into_h(pair, p, path);
  } else if (pair.s.count(path.range())) {
    if (path.trivial()) throw std::invalid_argument("paths into S must have length > 0");
    f = lpa::factorize_into_s(pair, p, path);
  } else {
    throw std::invalid_argument("the range of '" + args.path_text +
                                "' lies in neither H nor S");
  }
  if (!f.ok()) {
    if (args.json) {
      nlohmann::json doc{{"status", "depth-insufficient"}, {"missing", f.missing}};
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << "depth insufficient: needs " << f.missing << "\n";
    }
    return 1;
  }
  image = lpa::phi_element(pair, p, lpa::LpaElement::path(p.graph, f.path)).to_string();
  if (args.json) {
    nlohmann::json doc{{"status", "ok"},
                       {"path", f.path.to_string(*p.graph)},
                       {"length", f.path.length()},
                       {"phi", image}};
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << f.path.to_string(*p.graph) << "  (length " << f.path.length()
              << ", phi = " << image << ")\n";
  }
  return 0;
}

int run_verify(const Args& args) {
  lpa::AdmissiblePair pair = load_pair(args);
  lpa::VerifyOptions opts;
  opts.depth = args.depth;
  opts.index_bound = args.index_bound;
  opts.samples = args.samples;
  opts.seed = args.seed;
  lpa::IsoReport report = lpa::verify_graded_star_iso(pair, opts);
  if (args.json) {
    std::cout << report.to_json_string() << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.pass() ? 0 : 1;
}

int run_degrees(const Args& args) {
  lpa::AdmissiblePair pair = load_pair(args);
  auto degrees = lpa::hedgehog_map_degrees(pair, args.depth, args.index_bound);
  if (args.json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& [edge, deg] : degrees) {
      doc.push_back({{"edge", edge}, {"degree", deg}});
    }
    std::cout << doc.dump() << "\n";
  } else {
    for (const auto& [edge, deg] : degrees) {
      std::cout << edge << " -> degree " << deg << "\n";
    }
  }
  return 0;
}

int run_example(const Args& args) {
  std::string doc;
  if (args.example_name == "toeplitz") {
    doc = kToeplitzJson;
  } else if (args.example_name == "infinite-emitter") {
    doc = kInfiniteEmitterJson;
  } else {
    throw std::invalid_argument("unknown example '" + args.example_name +
                                "' (expected toeplitz or infinite-emitter)");
  }
  lpa::GraphPtr g = lpa::parse_graph(doc);
  if (!args.dot_file.empty()) write_file(args.dot_file, lpa::to_dot(*g));
  std::cout << lpa::to_json_string(*g) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"porcupine graphs and graded ideals of Leavitt path algebras"};
  app.require_subcommand(1);
  Args args;

  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("--graph", args.graph_file, "graph JSON document")->required();
  };
  auto add_sets = [&](CLI::App* cmd, bool with_s) {
    cmd->add_option("--H", args.h_list, "comma-separated vertex names of H");
    if (with_s) cmd->add_option("--S", args.s_list, "comma-separated vertex names of S");
  };
  auto add_depth = [&](CLI::App* cmd) {
    cmd->add_option("--depth", args.depth, "truncation depth")->check(CLI::PositiveNumber);
    cmd->add_option("--index-bound", args.index_bound,
                    "omega edge index bound (default: depth)");
  };
  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", args.json, "JSON output"); };

  CLI::App* closure = app.add_subcommand("closure", "hereditary saturated closure of a vertex set");
  add_graph(closure);
  add_sets(closure, false);

  CLI::App* breaking = app.add_subcommand("breaking", "breaking vertices B_H");
  add_graph(breaking);
  add_sets(breaking, false);

  CLI::App* pair_check = app.add_subcommand("pair-check", "validate an admissible pair");
  add_graph(pair_check);
  add_sets(pair_check, true);
  add_json(pair_check);

  CLI::App* spines = app.add_subcommand("spines", "the spine path sets F1 and F2");
  add_graph(spines);
  add_sets(spines, true);
  add_depth(spines);

  CLI::App* porcupine = app.add_subcommand("porcupine", "build the truncated porcupine graph");
  add_graph(porcupine);
  add_sets(porcupine, true);
  add_depth(porcupine);
  add_json(porcupine);
  porcupine->add_option("--dot", args.dot_file, "write DOT to this file");

  CLI::App* hedgehog = app.add_subcommand("hedgehog", "build the generalized hedgehog graph");
  add_graph(hedgehog);
  add_sets(hedgehog, true);
  add_depth(hedgehog);
  add_json(hedgehog);
  hedgehog->add_option("--dot", args.dot_file, "write DOT to this file");

  CLI::App* phi = app.add_subcommand("phi", "the isomorphism on generators");
  add_graph(phi);
  add_sets(phi, true);
  add_depth(phi);
  add_json(phi);

  CLI::App* factorize = app.add_subcommand("factorize", "preimage of a path into H or S");
  add_graph(factorize);
  add_sets(factorize, true);
  add_depth(factorize);
  add_json(factorize);
  factorize->add_option("path", args.path_text, "path over the graph")->required();

  CLI::App* verify = app.add_subcommand("verify", "verify the graded *-isomorphism");
  add_graph(verify);
  add_sets(verify, true);
  add_depth(verify);
  add_json(verify);
  verify->add_option("--samples", args.samples, "random spot checks per section");
  verify->add_option("--seed", args.seed, "sampling seed");

  CLI::App* degrees = app.add_subcommand("degrees", "hedgehog spine image degrees");
  add_graph(degrees);
  add_sets(degrees, true);
  add_depth(degrees);
  add_json(degrees);

  CLI::App* example = app.add_subcommand("example", "print a built-in example graph");
  example->add_option("name", args.example_name, "toeplitz | infinite-emitter")->required();
  example->add_option("--dot", args.dot_file, "write DOT to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(closure)) return run_closure(args);
    if (app.got_subcommand(breaking)) return run_breaking(args);
    if (app.got_subcommand(pair_check)) return run_pair_check(args);
    if (app.got_subcommand(spines)) return run_spines(args);
    if (app.got_subcommand(porcupine)) return run_porcupine(args);
    if (app.got_subcommand(hedgehog)) return run_hedgehog(args);
    if (app.got_subcommand(phi)) return run_phi(args);
    if (app.got_subcommand(factorize)) return run_factorize(args);
    if (app.got_subcommand(verify)) return run_verify(args);
    if (app.got_subcommand(degrees)) return run_degrees(args);
    if (app.got_subcommand(example)) return run_example(args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
