#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"
#include "lpa/ideal.hpp"

namespace lpa {

// The spine paths of an admissible pair, within enumeration bounds:
//   F1: paths e1...en with r(en) in H and s(en) outside H and S,
//   F2: paths p with r(p) in S and |p| > 0.
// Disjoint; ordered by (length, edge sequence).
struct SpineSets {
  std::vector<Path> f1;
  std::vector<Path> f2;
  int max_len = 0;
  std::int64_t index_bound = 0;
};

SpineSets spine_sets(const AdmissiblePair& pair, int max_len,
                     std::int64_t index_bound);

// The porcupine graph truncated at `depth`: vertices H, S and w^p for spine
// paths p with |p| <= depth; edges are the E-edges retained from H and S plus
// one edge f^p per spine vertex, with s(f^p) = w^p and r(f^p) the spine
// vertex of the tail of p (or r(p) itself when |p| = 1). Every w^p emits
// exactly one edge. Provenance maps tie the new vertices and edges to their
// source paths in E.
struct PorcupineGraph {
  GraphPtr graph;
  int depth = 0;
  std::int64_t index_bound = 0;
  bool complete = false;  // true iff F1 and F2 have no member longer than depth

  std::map<VertexId, Path> spine_vertex_origin;         // w^p -> p
  std::map<std::int32_t, Path> spine_bundle_origin;     // f^p -> p
  std::map<VertexId, VertexId> base_vertex;             // P vertex -> E vertex
  std::map<VertexId, VertexId> vertex_embedding;        // E vertex in H or S -> P vertex
  std::map<std::int32_t, std::int32_t> base_bundle;     // P bundle -> E bundle
  std::map<std::int32_t, std::int32_t> bundle_embedding;  // retained E bundle -> P bundle
  std::map<Path, VertexId> spine_vertex;                // p -> w^p
  std::map<Path, std::int32_t> spine_bundle;            // p -> f^p
};

// index_bound of 0 defaults to depth. Requires depth >= 1.
PorcupineGraph build_porcupine(const AdmissiblePair& pair, int depth,
                               std::int64_t index_bound = 0);

// The generalized hedgehog graph at the same truncation: one vertex per spine
// path p and one length-1 edge from it to r(p).
struct HedgehogGraph {
  GraphPtr graph;
  int depth = 0;
  std::int64_t index_bound = 0;
  bool complete = false;

  std::map<VertexId, Path> spine_vertex_origin;
  std::map<std::int32_t, Path> spine_bundle_origin;
  std::map<VertexId, VertexId> base_vertex;
  std::map<VertexId, VertexId> vertex_embedding;
  std::map<std::int32_t, std::int32_t> base_bundle;
  std::map<std::int32_t, std::int32_t> bundle_embedding;
};

HedgehogGraph build_hedgehog(const AdmissiblePair& pair, int depth,
                             std::int64_t index_bound = 0);

// The vertex map of the graded isomorphism:
//   v in H -> v,  v in S -> v^H,
//   w^p -> pp* for p in F1,  w^p -> p r(p)^H p* for p in F2.
LpaElement phi_vertex(const AdmissiblePair& pair, const PorcupineGraph& porcupine,
                      VertexId v);

// The edge map:
//   retained e -> e,   f^e -> e (F1) or e r(e)^H (F2),
//   f^{ep} -> e pp* (p in F1) or e p r(p)^H p* (p in F2).
// Every image is homogeneous of degree 1.
LpaElement phi_edge(const AdmissiblePair& pair, const PorcupineGraph& porcupine,
                    EdgeId edge);

// Linear, multiplicative, star-compatible extension to arbitrary elements
// over the porcupine graph.
LpaElement phi_element(const AdmissiblePair& pair, const PorcupineGraph& porcupine,
                       const LpaElement& x);

// ---- surjectivity factorizations ---------------------------------------------

struct Factorization {
  enum class Status { Ok, DepthInsufficient };

  Status status = Status::Ok;
  Path path;            // over the porcupine graph, valid when Ok
  std::string missing;  // the spine vertex beyond the truncation, when not Ok

  bool ok() const { return status == Status::Ok; }
};

// A path m in the porcupine graph with phi(m) = p and |m| = |p|; requires
// r(p) in H. Depth-insufficiency is a distinguished outcome, not an error.
Factorization factorize_into_h(const AdmissiblePair& pair,
                               const PorcupineGraph& porcupine, const Path& p);

// A path m with phi(m) = p r(p)^H and |m| = |p|; requires r(p) in S, |p| >= 1.
Factorization factorize_into_s(const AdmissiblePair& pair,
                               const PorcupineGraph& porcupine, const Path& p);

// ---- verification --------------------------------------------------------------

struct VerifyOptions {
  int depth = 4;
  std::int64_t index_bound = 0;  // 0 -> depth
  int samples = 100;
  std::uint64_t seed = 0;
};

struct CheckFailure {
  std::string instance;
  std::string detail;
};

struct CheckSection {
  std::string name;
  long checked = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct IsoReport {
  int depth = 0;
  std::int64_t index_bound = 0;
  std::uint64_t seed = 0;
  bool porcupine_complete = false;

  CheckSection axioms;          // (V), (E1), (E2), (CK1), (CK2) on the phi family
  CheckSection degrees;         // degree preservation on generators and samples
  CheckSection stars;           // phi(x*) = phi(x)*
  CheckSection vertices;        // phi(v) != 0 for every porcupine vertex
  CheckSection surjectivity;    // every spanning monomial within depth witnessed
  CheckSection products;        // phi(ab) = phi(a)phi(b) spot checks

  long spanning_attempted = 0;
  long spanning_witnessed = 0;

  bool pass() const;
  std::string to_text() const;
  std::string to_json_string() const;
};

// The phi generator images over E, with omega bundles of the porcupine graph
// enumerated up to index_bound. Exposed so tests can corrupt an assignment.
GeneratorImages build_phi_assignment(const AdmissiblePair& pair,
                                     const PorcupineGraph& porcupine,
                                     std::int64_t index_bound);

IsoReport verify_with_assignment(const AdmissiblePair& pair,
                                 const PorcupineGraph& porcupine,
                                 const GeneratorImages& images,
                                 const VerifyOptions& options);

// Builds the porcupine graph and the phi assignment, then runs every check.
IsoReport verify_graded_star_iso(const AdmissiblePair& pair,
                                 const VerifyOptions& options = {});

// Degrees of the classical images of the hedgehog spine edges (namely |p|),
// exhibiting why the hedgehog isomorphism need not be graded.
std::vector<std::pair<std::string, int>> hedgehog_map_degrees(
    const AdmissiblePair& pair, int depth, std::int64_t index_bound = 0);

}  // namespace lpa
