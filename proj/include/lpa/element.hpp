#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

// Exact scalar field. The involution on coefficients is the identity.
using Coefficient = boost::multiprecision::cpp_rational;

// Denotes p q* with r(p) = r(q). A trivial q gives the path p itself; both
// trivial gives a vertex idempotent.
struct Monomial {
  Path p;
  Path q;

  int degree() const { return p.length() - q.length(); }
  std::string to_string(const Graph& g) const;

  auto operator<=>(const Monomial&) const = default;
};

// Z-degree of an element: a single integer when homogeneous, a marker for the
// zero element (homogeneous of every degree), or inhomogeneous.
struct Degree {
  enum class Kind { ZeroElement, Homogeneous, Inhomogeneous };

  Kind kind = Kind::ZeroElement;
  int value = 0;

  static Degree zero_element() { return {Kind::ZeroElement, 0}; }
  static Degree homogeneous(int n) { return {Kind::Homogeneous, n}; }
  static Degree inhomogeneous() { return {Kind::Inhomogeneous, 0}; }

  bool matches(int n) const {
    return kind == Kind::ZeroElement || (kind == Kind::Homogeneous && value == n);
  }
  std::string to_string() const;

  bool operator==(const Degree&) const = default;
};

// An element of the Leavitt path algebra in normal form: a finite linear
// combination of monomials pq*, none of which ends with the CK2-reducible
// junction pair (the order-maximal edge e at a regular vertex, in both p and
// q). Elements are immutable values; all operations are pure.
class LpaElement {
 public:
  LpaElement() = default;  // zero over no particular graph

  static LpaElement zero(GraphPtr g);
  static LpaElement vertex(GraphPtr g, VertexId v);
  static LpaElement path(GraphPtr g, const Path& p);        // p itself, q trivial
  static LpaElement ghost_path(GraphPtr g, const Path& q);  // q*, p trivial
  // c * pq*, CK2-reduced to normal form. Throws if r(p) != r(q).
  static LpaElement monomial(GraphPtr g, const Path& p, const Path& q,
                             const Coefficient& c = 1);

  GraphPtr graph() const { return graph_; }
  const std::map<Monomial, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LpaElement star() const;
  Degree degree() const;
  std::map<int, LpaElement> homogeneous_components() const;

  std::string to_string() const;

  bool operator==(const LpaElement& other) const;

 private:
  friend LpaElement operator+(const LpaElement&, const LpaElement&);
  friend LpaElement operator-(const LpaElement&, const LpaElement&);
  friend LpaElement operator*(const LpaElement&, const LpaElement&);
  friend LpaElement operator*(const Coefficient&, const LpaElement&);

  void add_reduced(const Graph& g, const Coefficient& c, const Path& p, const Path& q);

  GraphPtr graph_;
  std::map<Monomial, Coefficient> terms_;
};

LpaElement operator+(const LpaElement& a, const LpaElement& b);
LpaElement operator-(const LpaElement& a, const LpaElement& b);
LpaElement operator*(const LpaElement& a, const LpaElement& b);
LpaElement operator*(const Coefficient& c, const LpaElement& a);
LpaElement operator-(const LpaElement& a);

// ---- formal generator expressions ------------------------------------------

struct Generator {
  enum class Kind { Vertex, Edge, Ghost };

  Kind kind = Kind::Vertex;
  VertexId v = 0;
  EdgeId e;

  static Generator vertex(VertexId v) { return {Kind::Vertex, v, {}}; }
  static Generator edge(EdgeId e) { return {Kind::Edge, 0, e}; }
  static Generator ghost(EdgeId e) { return {Kind::Ghost, 0, e}; }
};

using GeneratorWord = std::vector<Generator>;
using RawExpression = std::vector<std::pair<Coefficient, GeneratorWord>>;

// Normal form of a formal sum of generator words. Incomposable juxtapositions
// give zero; invalid generators throw.
LpaElement normal_form(GraphPtr g, const RawExpression& raw);

// ---- Cuntz-Krieger family check ---------------------------------------------

// Images of the generators of a domain graph inside an algebra over another
// graph. Keys of edge_image define which edges participate in pairwise checks;
// omega bundles are expected to be enumerated up to an index bound.
struct GeneratorImages {
  std::map<VertexId, LpaElement> vertex_image;
  std::map<EdgeId, LpaElement> edge_image;
};

struct CkCheck {
  std::string axiom;     // "V", "E1", "E2", "CK1", "CK2"
  std::string instance;  // generators involved
  bool passed = true;
  std::string difference;  // computed difference when failed
};

struct CkReport {
  std::vector<CkCheck> checks;
  long ck2_skipped = 0;  // regular vertices whose edge set was incomplete

  long checked() const { return static_cast<long>(checks.size()); }
  long failure_count() const;
  bool passed() const { return failure_count() == 0; }
  std::vector<const CkCheck*> failures() const;
};

// Verifies (V), (E1), (E2), (CK1) on all listed generators and (CK2) at every
// regular vertex of `domain` whose full edge set is listed. Ghost images are
// the stars of the edge images.
CkReport check_ck_family(const Graph& domain, const GeneratorImages& images);

// ---- element text syntax ------------------------------------------------------
//
//   element  := "0" | term (("+" | "-") term)*
//   term     := (rational "*")? monomial
//   monomial := path | path "'" | path "." path "'"
//   rational := ("-")? digits ("/" digits)?
//
// A path is a vertex name or a tokenized edge sequence such as "eg" or
// "q[0]e". "p.q'" denotes pq*; a bare "q'" denotes the ghost path q*.

LpaElement parse_element(GraphPtr g, const std::string& text);

}  // namespace lpa
