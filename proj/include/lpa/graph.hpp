#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lpa {

using VertexId = std::int32_t;

// Multiplicity marker for countably infinite bundles.
constexpr std::int64_t kOmega = -1;

// A bundle groups parallel edges src -> dst. Individual edges are addressed
// as (bundle, index) with index < count; any index is valid for omega bundles.
struct Bundle {
  std::string name;
  VertexId src = 0;
  VertexId dst = 0;
  std::int64_t count = 1;

  bool infinite() const { return count == kOmega; }
};

struct BundleSpec {
  std::string name;
  std::string src;
  std::string dst;
  std::int64_t count = 1;  // kOmega for "inf"
};

struct EdgeId {
  std::int32_t bundle = 0;
  std::int64_t index = 0;

  auto operator<=>(const EdgeId&) const = default;
};

enum class VertexKind { Regular, Sink, InfiniteEmitter };

// Immutable directed graph with named vertices and edge bundles of finite or
// countably infinite multiplicity. Safe to share for concurrent reads.
class Graph {
 public:
  Graph() = default;

  // Validates names, endpoints and multiplicities; throws std::invalid_argument.
  static Graph from_spec(const std::vector<std::string>& vertices,
                         const std::vector<BundleSpec>& bundles);

  std::int32_t vertex_count() const { return static_cast<std::int32_t>(vertex_names_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::string& vertex_name(VertexId v) const;
  VertexId vertex(const std::string& name) const;  // throws on unknown name
  std::optional<VertexId> find_vertex(const std::string& name) const;
  bool has_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }
  std::set<VertexId> all_vertices() const;

  std::int32_t bundle_count() const { return static_cast<std::int32_t>(bundles_.size()); }
  const Bundle& bundle(std::int32_t b) const;
  const std::vector<Bundle>& bundles() const { return bundles_; }
  std::optional<std::int32_t> find_bundle(const std::string& name) const;

  bool valid_edge(EdgeId e) const;
  VertexId source(EdgeId e) const { return bundle(e.bundle).src; }
  VertexId range(EdgeId e) const { return bundle(e.bundle).dst; }
  // "e" for count-1 bundles, "e[3]" otherwise.
  std::string edge_name(EdgeId e) const;

  const std::vector<std::int32_t>& out_bundles(VertexId v) const;
  const std::vector<std::int32_t>& in_bundles(VertexId v) const;

  VertexKind kind(VertexId v) const;

  // All edges emitted by a non-infinite-emitter, in global edge order
  // (bundle declaration order, then index). Throws at infinite emitters.
  std::vector<EdgeId> out_edges_finite(VertexId v) const;
  // Order-maximal edge at a regular vertex (the CK2-reducible one).
  EdgeId max_out_edge(VertexId v) const;

  // Edge enumerations with omega bundles truncated to index < index_bound.
  std::vector<EdgeId> out_edges_bounded(VertexId v, std::int64_t index_bound) const;
  std::vector<EdgeId> in_edges_bounded(VertexId v, std::int64_t index_bound) const;
  std::vector<EdgeId> all_edges_bounded(std::int64_t index_bound) const;

  bool operator==(const Graph& other) const;

 private:
  std::vector<std::string> vertex_names_;
  std::map<std::string, VertexId> vertex_index_;
  std::vector<Bundle> bundles_;
  std::map<std::string, std::int32_t> bundle_index_;
  std::vector<std::vector<std::int32_t>> out_bundles_;
  std::vector<std::vector<std::int32_t>> in_bundles_;
};

using GraphPtr = std::shared_ptr<const Graph>;

GraphPtr make_graph(const std::vector<std::string>& vertices,
                    const std::vector<BundleSpec>& bundles);

// A path is a single vertex (length 0) or a composable edge sequence.
class Path {
 public:
  Path() = default;

  static Path at_vertex(VertexId v);
  // Validates edges and composability against g; throws std::invalid_argument.
  static Path of_edges(const Graph& g, std::vector<EdgeId> edges);

  bool trivial() const { return edges_.empty(); }
  int length() const { return static_cast<int>(edges_.size()); }
  const std::vector<EdgeId>& edges() const { return edges_; }
  VertexId source() const { return source_; }
  VertexId range() const { return range_; }

  // Drops the first `count` edges; the empty remainder is the vertex r(p).
  Path suffix(const Graph& g, int count) const;
  // Leading subpath of `count` edges.
  Path prefix(const Graph& g, int count) const;

  std::string to_string(const Graph& g) const;

  // Ordered by (length, edge sequence, source); total and deterministic.
  std::strong_ordering operator<=>(const Path& other) const;
  bool operator==(const Path& other) const;

 private:
  friend Path concat(const Path& a, const Path& b);

  VertexId source_ = -1;
  VertexId range_ = -1;
  std::vector<EdgeId> edges_;
};

// Concatenation; defined iff r(a) = s(b). |ab| = |a| + |b|.
Path concat(const Path& a, const Path& b);
bool composable(const Path& a, const Path& b);

// ---- operations -----------------------------------------------------------

// Parses the JSON graph document format; throws std::invalid_argument with a
// description of the first problem found.
GraphPtr parse_graph(const std::string& json_text);
std::string to_json_string(const Graph& g);

VertexKind vertex_kind(const Graph& g, VertexId v);
VertexKind vertex_kind(const Graph& g, const std::string& name);

// All paths p with 1 <= |p| <= max_len, r(p) in targets, and every
// omega-bundle index < index_bound. Ordered by length, then lexicographically
// by (bundle, index).
std::vector<Path> paths_into(const Graph& g, const std::set<VertexId>& targets,
                             int max_len, std::int64_t index_bound);

// DOT export; one edge per bundle, annotated with its multiplicity when not 1.
// Entries of `labels` (vertex name -> annotation) become second label lines.
std::string to_dot(const Graph& g,
                   const std::map<std::string, std::string>& labels = {});

// Parses a path over g: a vertex name, or a sequence of edge tokens
// ("eg", "e1e2e3", "q[0]e"). Throws std::invalid_argument.
Path parse_path(const Graph& g, const std::string& text);

}  // namespace lpa
