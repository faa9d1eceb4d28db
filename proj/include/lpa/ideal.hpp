#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"

namespace lpa {

using VertexSet = std::set<VertexId>;

// X is hereditary iff every bundle with source in X has range in X.
bool is_hereditary(const Graph& g, const VertexSet& x);

// X is saturated iff every regular vertex whose edge ranges all lie in X is in X.
bool is_saturated(const Graph& g, const VertexSet& x);

// Least hereditary saturated superset, by alternating fixpoint.
VertexSet hereditary_saturated_closure(const Graph& g, VertexSet x);

// Breaking vertices of a hereditary saturated H: infinite emitters outside H
// whose set of edges into the complement of H is nonempty and finite, i.e.
// every omega bundle lands in H and at least one finite-bundle edge exits.
// Throws if H is not hereditary and saturated.
VertexSet breaking_vertices(const Graph& g, const VertexSet& h);

// A hereditary saturated H together with S contained in B_H, both validated.
struct AdmissiblePair {
  GraphPtr graph;
  VertexSet h;
  VertexSet s;
};

AdmissiblePair make_admissible_pair(GraphPtr g, VertexSet h, VertexSet s);

// The gap projection v^H = v - sum of ee* over the edges from v exiting H.
// Requires v in B_H.
LpaElement gap_projection(const AdmissiblePair& pair, VertexId v);

// A spanning monomial of the ideal I(H,S): pq* with r(p) = r(q) in H, or
// p v^H q* with r(p) = r(q) = v in S.
struct SpanningMonomial {
  enum class Kind { IntoH, GapAtS };

  Kind kind = Kind::IntoH;
  Path p;
  Path q;

  std::string to_string(const Graph& g) const;
};

// All spanning monomials with |p|, |q| <= max_len and omega indices below
// index_bound, in deterministic order (IntoH first, then GapAtS, each sorted
// by (p, q)).
std::vector<SpanningMonomial> ideal_spanning_monomials(const AdmissiblePair& pair,
                                                       int max_len,
                                                       std::int64_t index_bound);

// The element of L_K(E) a spanning monomial denotes.
LpaElement spanning_monomial_element(const AdmissiblePair& pair,
                                     const SpanningMonomial& m);

// Whether the monomial pq* lies in I(H,S); requires r(p) = r(q).
bool monomial_in_ideal(const AdmissiblePair& pair, const Path& p, const Path& q);

// Name-based vertex set helpers used by the CLI and tests.
VertexSet parse_vertex_set(const Graph& g, const std::string& comma_separated);
std::vector<std::string> vertex_set_names(const Graph& g, const VertexSet& x);

}  // namespace lpa
