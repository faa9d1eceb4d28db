#include "lpa/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lpa {

namespace {

const std::string kNameChars =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_^{}~[]";

void check_name(const std::string& name, const char* what) {
  if (name.empty()) {
    throw std::invalid_argument(std::string(what) + " name is empty");
  }
  if (name.find_first_not_of(kNameChars) != std::string::npos) {
    throw std::invalid_argument(std::string(what) + " name '" + name +
                                "' contains a reserved character");
  }
}

}  // namespace

Graph Graph::from_spec(const std::vector<std::string>& vertices,
                       const std::vector<BundleSpec>& bundles) {
  Graph g;
  for (const auto& name : vertices) {
    check_name(name, "vertex");
    auto [it, fresh] = g.vertex_index_.emplace(name, g.vertex_count());
    if (!fresh) throw std::invalid_argument("duplicate vertex name '" + name + "'");
    g.vertex_names_.push_back(name);
  }
  g.out_bundles_.resize(vertices.size());
  g.in_bundles_.resize(vertices.size());
  for (const auto& spec : bundles) {
    check_name(spec.name, "bundle");
    if (g.vertex_index_.count(spec.name)) {
      throw std::invalid_argument("duplicate name '" + spec.name +
                                  "' used for both a vertex and a bundle");
    }
    auto [it, fresh] = g.bundle_index_.emplace(spec.name, g.bundle_count());
    if (!fresh) throw std::invalid_argument("duplicate bundle name '" + spec.name + "'");
    auto src = g.find_vertex(spec.src);
    auto dst = g.find_vertex(spec.dst);
    if (!src) throw std::invalid_argument("bundle '" + spec.name + "' has unknown source '" + spec.src + "'");
    if (!dst) throw std::invalid_argument("bundle '" + spec.name + "' has unknown range '" + spec.dst + "'");
    if (spec.count != kOmega && spec.count < 1) {
      throw std::invalid_argument("bundle '" + spec.name + "' multiplicity must be a positive integer or \"inf\"");
    }
    std::int32_t b = g.bundle_count();
    g.bundles_.push_back(Bundle{spec.name, *src, *dst, spec.count});
    g.out_bundles_[*src].push_back(b);
    g.in_bundles_[*dst].push_back(b);
  }
  return g;
}

GraphPtr make_graph(const std::vector<std::string>& vertices,
                    const std::vector<BundleSpec>& bundles) {
  return std::make_shared<const Graph>(Graph::from_spec(vertices, bundles));
}

const std::string& Graph::vertex_name(VertexId v) const {
  if (!has_vertex(v)) throw std::invalid_argument("vertex id out of range");
  return vertex_names_[v];
}

VertexId Graph::vertex(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw std::invalid_argument("unknown vertex '" + name + "'");
  return *v;
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::set<VertexId> Graph::all_vertices() const {
  std::set<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v) out.insert(v);
  return out;
}

const Bundle& Graph::bundle(std::int32_t b) const {
  if (b < 0 || b >= bundle_count()) throw std::invalid_argument("bundle id out of range");
  return bundles_[b];
}

std::optional<std::int32_t> Graph::find_bundle(const std::string& name) const {
  auto it = bundle_index_.find(name);
  if (it == bundle_index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::valid_edge(EdgeId e) const {
  if (e.bundle < 0 || e.bundle >= bundle_count() || e.index < 0) return false;
  const Bundle& b = bundles_[e.bundle];
  return b.infinite() || e.index < b.count;
}

std::string Graph::edge_name(EdgeId e) const {
  const Bundle& b = bundle(e.bundle);
  if (b.count == 1) return b.name;
  return b.name + "[" + std::to_string(e.index) + "]";
}

const std::vector<std::int32_t>& Graph::out_bundles(VertexId v) const {
  if (!has_vertex(v)) throw std::invalid_argument("vertex id out of range");
  return out_bundles_[v];
}

const std::vector<std::int32_t>& Graph::in_bundles(VertexId v) const {
  if (!has_vertex(v)) throw std::invalid_argument("vertex id out of range");
  return in_bundles_[v];
}

VertexKind Graph::kind(VertexId v) const {
  const auto& out = out_bundles(v);
  if (out.empty()) return VertexKind::Sink;
  for (std::int32_t b : out) {
    if (bundles_[b].infinite()) return VertexKind::InfiniteEmitter;
  }
  return VertexKind::Regular;
}

std::vector<EdgeId> Graph::out_edges_finite(VertexId v) const {
  if (kind(v) == VertexKind::InfiniteEmitter) {
    throw std::invalid_argument("vertex '" + vertex_name(v) + "' is an infinite emitter");
  }
  std::vector<EdgeId> out;
  for (std::int32_t b : out_bundles(v)) {
    for (std::int64_t i = 0; i < bundles_[b].count; ++i) out.push_back(EdgeId{b, i});
  }
  return out;
}

EdgeId Graph::max_out_edge(VertexId v) const {
  if (kind(v) != VertexKind::Regular) {
    throw std::invalid_argument("vertex '" + vertex_name(v) + "' is not regular");
  }
  std::int32_t b = out_bundles(v).back();
  return EdgeId{b, bundles_[b].count - 1};
}

std::vector<EdgeId> Graph::out_edges_bounded(VertexId v, std::int64_t index_bound) const {
  std::vector<EdgeId> out;
  for (std::int32_t b : out_bundles(v)) {
    std::int64_t n = bundles_[b].infinite() ? index_bound : bundles_[b].count;
    for (std::int64_t i = 0; i < n; ++i) out.push_back(EdgeId{b, i});
  }
  return out;
}

std::vector<EdgeId> Graph::in_edges_bounded(VertexId v, std::int64_t index_bound) const {
  std::vector<EdgeId> out;
  for (std::int32_t b : in_bundles(v)) {
    std::int64_t n = bundles_[b].infinite() ? index_bound : bundles_[b].count;
    for (std::int64_t i = 0; i < n; ++i) out.push_back(EdgeId{b, i});
  }
  return out;
}

std::vector<EdgeId> Graph::all_edges_bounded(std::int64_t index_bound) const {
  std::vector<EdgeId> out;
  for (std::int32_t b = 0; b < bundle_count(); ++b) {
    std::int64_t n = bundles_[b].infinite() ? index_bound : bundles_[b].count;
    for (std::int64_t i = 0; i < n; ++i) out.push_back(EdgeId{b, i});
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (vertex_names_ != other.vertex_names_) return false;
  if (bundles_.size() != other.bundles_.size()) return false;
  for (std::size_t i = 0; i < bundles_.size(); ++i) {
    const Bundle& a = bundles_[i];
    const Bundle& b = other.bundles_[i];
    if (a.name != b.name || a.src != b.src || a.dst != b.dst || a.count != b.count) return false;
  }
  return true;
}

// ---- Path -----------------------------------------------------------------

Path Path::at_vertex(VertexId v) {
  Path p;
  p.source_ = v;
  p.range_ = v;
  return p;
}

Path Path::of_edges(const Graph& g, std::vector<EdgeId> edges) {
  if (edges.empty()) throw std::invalid_argument("edge path must be nonempty");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!g.valid_edge(edges[i])) throw std::invalid_argument("invalid edge identifier in path");
    if (i > 0 && g.range(edges[i - 1]) != g.source(edges[i])) {
      throw std::invalid_argument("path edges are not composable");
    }
  }
  Path p;
  p.source_ = g.source(edges.front());
  p.range_ = g.range(edges.back());
  p.edges_ = std::move(edges);
  return p;
}

Path Path::suffix(const Graph& g, int count) const {
  if (count < 0 || count > length()) throw std::invalid_argument("suffix count out of range");
  if (count == 0) return *this;
  if (count == length()) return Path::at_vertex(range_);
  return Path::of_edges(g, std::vector<EdgeId>(edges_.begin() + count, edges_.end()));
}

Path Path::prefix(const Graph& g, int count) const {
  if (count < 0 || count > length()) throw std::invalid_argument("prefix count out of range");
  if (count == 0) return Path::at_vertex(source_);
  return Path::of_edges(g, std::vector<EdgeId>(edges_.begin(), edges_.begin() + count));
}

std::string Path::to_string(const Graph& g) const {
  if (trivial()) return g.vertex_name(source_);
  std::string out;
  for (const EdgeId& e : edges_) out += g.edge_name(e);
  return out;
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = edges_.size() <=> other.edges_.size(); c != 0) return c;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (auto c = edges_[i] <=> other.edges_[i]; c != 0) return c;
  }
  return source_ <=> other.source_;
}

bool Path::operator==(const Path& other) const {
  return (*this <=> other) == 0;
}

bool composable(const Path& a, const Path& b) { return a.range() == b.source(); }

Path concat(const Path& a, const Path& b) {
  if (!composable(a, b)) throw std::invalid_argument("paths are not composable");
  if (a.trivial()) return b;
  if (b.trivial()) return a;
  Path p;
  p.source_ = a.source_;
  p.range_ = b.range_;
  p.edges_ = a.edges_;
  p.edges_.insert(p.edges_.end(), b.edges_.begin(), b.edges_.end());
  return p;
}

// ---- parse / serialize ------------------------------------------------------

GraphPtr parse_graph(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("graph document is not valid JSON: ") + err.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("graph document must be a JSON object");

  std::vector<std::string> vertices;
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) throw std::invalid_argument("\"vertices\" must be an array");
    for (const auto& v : doc["vertices"]) {
      if (!v.is_string()) throw std::invalid_argument("vertex names must be strings");
      vertices.push_back(v.get<std::string>());
    }
  }
  std::vector<BundleSpec> bundles;
  if (doc.contains("bundles")) {
    if (!doc["bundles"].is_array()) throw std::invalid_argument("\"bundles\" must be an array");
    for (const auto& b : doc["bundles"]) {
      if (!b.is_object()) throw std::invalid_argument("each bundle must be an object");
      BundleSpec spec;
      for (const char* key : {"name", "src", "dst"}) {
        if (!b.contains(key) || !b[key].is_string()) {
          throw std::invalid_argument(std::string("bundle is missing string field \"") + key + "\"");
        }
      }
      spec.name = b["name"].get<std::string>();
      spec.src = b["src"].get<std::string>();
      spec.dst = b["dst"].get<std::string>();
      if (!b.contains("count")) {
        spec.count = 1;
      } else if (b["count"].is_string()) {
        if (b["count"].get<std::string>() != "inf") {
          throw std::invalid_argument("bundle '" + spec.name +
                                      "' multiplicity must be a positive integer or \"inf\"");
        }
        spec.count = kOmega;
      } else if (b["count"].is_number_integer() && b["count"].get<std::int64_t>() >= 1) {
        spec.count = b["count"].get<std::int64_t>();
      } else {
        throw std::invalid_argument("bundle '" + spec.name +
                                    "' multiplicity must be a positive integer or \"inf\"");
      }
      bundles.push_back(std::move(spec));
    }
  }
  return make_graph(vertices, bundles);
}

std::string to_json_string(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertex_names();
  doc["bundles"] = nlohmann::ordered_json::array();
  for (const Bundle& b : g.bundles()) {
    nlohmann::ordered_json jb;
    jb["name"] = b.name;
    jb["src"] = g.vertex_name(b.src);
    jb["dst"] = g.vertex_name(b.dst);
    if (b.infinite()) {
      jb["count"] = "inf";
    } else {
      jb["count"] = b.count;
    }
    doc["bundles"].push_back(std::move(jb));
  }
  return doc.dump();
}

VertexKind vertex_kind(const Graph& g, VertexId v) { return g.kind(v); }

VertexKind vertex_kind(const Graph& g, const std::string& name) {
  return g.kind(g.vertex(name));
}

std::vector<Path> paths_into(const Graph& g, const std::set<VertexId>& targets,
                             int max_len, std::int64_t index_bound) {
  for (VertexId v : targets) {
    if (!g.has_vertex(v)) throw std::invalid_argument("paths_into: target vertex out of range");
  }
  std::vector<Path> result;
  std::vector<Path> level;
  // Length 1: all edges ranging in a target, in global edge order.
  for (EdgeId e : g.all_edges_bounded(index_bound)) {
    if (targets.count(g.range(e))) level.push_back(Path::of_edges(g, {e}));
  }
  for (int len = 1; len <= max_len && !level.empty(); ++len) {
    result.insert(result.end(), level.begin(), level.end());
    if (len == max_len) break;
    std::vector<Path> next;
    // Prepending in global edge order keeps each level lexicographically sorted.
    for (EdgeId e : g.all_edges_bounded(index_bound)) {
      Path head = Path::of_edges(g, {e});
      for (const Path& q : level) {
        if (composable(head, q)) next.push_back(concat(head, q));
      }
    }
    level = std::move(next);
  }
  return result;
}

std::string to_dot(const Graph& g, const std::map<std::string, std::string>& labels) {
  std::ostringstream out;
  out << "digraph {\n";
  for (const std::string& name : g.vertex_names()) {
    auto it = labels.find(name);
    if (it != labels.end()) {
      out << "  \"" << name << "\" [label=\"" << name << "\\n" << it->second << "\"];\n";
    } else {
      out << "  \"" << name << "\";\n";
    }
  }
  for (const Bundle& b : g.bundles()) {
    out << "  \"" << g.vertex_name(b.src) << "\" -> \"" << g.vertex_name(b.dst)
        << "\" [label=\"" << b.name;
    if (b.infinite()) {
      out << " \xC3\x97\xE2\x88\x9E";  // ×∞
    } else if (b.count != 1) {
      out << " \xC3\x97" << b.count;  // ×k
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

// ---- path parsing -----------------------------------------------------------

namespace {

// Tokenizes text[pos..] into edges, longest bundle-name match first with
// backtracking; `from` constrains the source of the next edge (-1 = free).
bool tokenize_edges(const Graph& g, const std::string& text, std::size_t pos,
                    VertexId from, std::vector<EdgeId>& edges) {
  if (pos == text.size()) return !edges.empty();
  // Candidate bundles whose name is a prefix of the remaining text, longest first.
  std::vector<std::int32_t> candidates;
  for (std::int32_t b = 0; b < g.bundle_count(); ++b) {
    const std::string& name = g.bundle(b).name;
    if (text.compare(pos, name.size(), name) == 0) candidates.push_back(b);
  }
  std::sort(candidates.begin(), candidates.end(), [&](std::int32_t a, std::int32_t b) {
    return g.bundle(a).name.size() > g.bundle(b).name.size();
  });
  for (std::int32_t b : candidates) {
    const Bundle& bundle = g.bundle(b);
    if (from >= 0 && bundle.src != from) continue;
    std::size_t next = pos + bundle.name.size();
    std::int64_t index = 0;
    bool has_index = false;
    if (next < text.size() && text[next] == '[') {
      std::size_t close = text.find(']', next);
      if (close == std::string::npos) continue;
      const std::string digits = text.substr(next + 1, close - next - 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) continue;
      index = std::stoll(digits);
      has_index = true;
      next = close + 1;
    }
    if (bundle.count != 1 && !has_index) continue;  // index required when ambiguous
    if (!bundle.infinite() && index >= bundle.count) continue;
    edges.push_back(EdgeId{b, index});
    if (tokenize_edges(g, text, next, bundle.dst, edges)) return true;
    edges.pop_back();
  }
  return false;
}

}  // namespace

Path parse_path(const Graph& g, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty path");
  if (auto v = g.find_vertex(text)) return Path::at_vertex(*v);
  std::vector<EdgeId> edges;
  if (tokenize_edges(g, text, 0, -1, edges)) return Path::of_edges(g, std::move(edges));
  throw std::invalid_argument("cannot parse '" + text + "' as a vertex or edge path");
}

}  // namespace lpa
