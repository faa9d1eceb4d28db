#include "lpa/element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lpa {

namespace {

bool is_prefix(const Path& a, const Path& b) {
  if (a.trivial()) return b.source() == a.source();
  if (a.length() > b.length()) return false;
  return std::equal(a.edges().begin(), a.edges().end(), b.edges().begin());
}

void require_same_graph(const GraphPtr& a, const GraphPtr& b) {
  if (a && b && a != b) {
    throw std::invalid_argument("elements belong to different graphs");
  }
}

void validate_path(const Graph& g, const Path& p) {
  if (p.trivial()) {
    if (!g.has_vertex(p.source())) throw std::invalid_argument("path vertex not in graph");
    return;
  }
  for (const EdgeId& e : p.edges()) {
    if (!g.valid_edge(e)) throw std::invalid_argument("path edge not in graph");
  }
}

}  // namespace

std::string Monomial::to_string(const Graph& g) const {
  if (q.trivial()) return p.to_string(g);  // covers the vertex case as well
  if (p.trivial()) return q.to_string(g) + "'";
  return p.to_string(g) + "." + q.to_string(g) + "'";
}

std::string Degree::to_string() const {
  switch (kind) {
    case Kind::ZeroElement: return "zero";
    case Kind::Homogeneous: return std::to_string(value);
    case Kind::Inhomogeneous: return "inhomogeneous";
  }
  return {};
}

// ---- LpaElement --------------------------------------------------------------

LpaElement LpaElement::zero(GraphPtr g) {
  LpaElement x;
  x.graph_ = std::move(g);
  return x;
}

LpaElement LpaElement::vertex(GraphPtr g, VertexId v) {
  Path p = Path::at_vertex(v);
  return monomial(std::move(g), p, p);
}

LpaElement LpaElement::path(GraphPtr g, const Path& p) {
  return monomial(std::move(g), p, Path::at_vertex(p.range()));
}

LpaElement LpaElement::ghost_path(GraphPtr g, const Path& q) {
  return monomial(std::move(g), Path::at_vertex(q.range()), q);
}

LpaElement LpaElement::monomial(GraphPtr g, const Path& p, const Path& q,
                                const Coefficient& c) {
  if (!g) throw std::invalid_argument("monomial needs a graph");
  if (p.range() != q.range()) {
    throw std::invalid_argument("monomial requires r(p) = r(q)");
  }
  validate_path(*g, p);
  validate_path(*g, q);
  LpaElement x;
  x.graph_ = std::move(g);
  x.add_reduced(*x.graph_, c, p, q);
  return x;
}

// Directed CK2 rewriting at the junction: when p and q both end with the
// order-maximal edge e of a regular vertex v, p0(ee*)q0* becomes
// p0 q0* - sum over f < e of (p0 f)(q0 f)*. The first branch may reduce
// further; the subtracted monomials are junction-normal already.
void LpaElement::add_reduced(const Graph& g, const Coefficient& c, const Path& p,
                             const Path& q) {
  if (c == 0) return;
  if (!p.trivial() && !q.trivial() && p.edges().back() == q.edges().back()) {
    EdgeId e = p.edges().back();
    VertexId v = g.source(e);
    if (g.kind(v) == VertexKind::Regular && e == g.max_out_edge(v)) {
      Path p0 = p.prefix(g, p.length() - 1);
      Path q0 = q.prefix(g, q.length() - 1);
      add_reduced(g, c, p0, q0);
      for (EdgeId f : g.out_edges_finite(v)) {
        if (f == e) continue;
        Path single = Path::of_edges(g, {f});
        add_reduced(g, -c, concat(p0, single), concat(q0, single));
      }
      return;
    }
  }
  auto [it, fresh] = terms_.try_emplace(Monomial{p, q}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LpaElement LpaElement::star() const {
  LpaElement out;
  out.graph_ = graph_;
  // The junction-normal condition is symmetric in p and q, so swapping
  // monomial sides needs no rewriting.
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace(Monomial{m.q, m.p}, c);
  }
  return out;
}

Degree LpaElement::degree() const {
  if (terms_.empty()) return Degree::zero_element();
  int n = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != n) return Degree::inhomogeneous();
  }
  return Degree::homogeneous(n);
}

std::map<int, LpaElement> LpaElement::homogeneous_components() const {
  std::map<int, LpaElement> out;
  for (const auto& [m, c] : terms_) {
    auto [it, fresh] = out.try_emplace(m.degree(), LpaElement::zero(graph_));
    it->second.terms_.emplace(m, c);
  }
  return out;
}

std::string LpaElement::to_string() const {
  if (terms_.empty() || !graph_) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c < 0;
    Coefficient mag = negative ? Coefficient(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += mag.str() + "*";
    out += m.to_string(*graph_);
  }
  return out;
}

bool LpaElement::operator==(const LpaElement& other) const {
  if (terms_ != other.terms_) return false;
  return terms_.empty() || graph_ == other.graph_;
}

LpaElement operator+(const LpaElement& a, const LpaElement& b) {
  require_same_graph(a.graph_, b.graph_);
  LpaElement out;
  out.graph_ = a.graph_ ? a.graph_ : b.graph_;
  out.terms_ = a.terms_;
  for (const auto& [m, c] : b.terms_) {
    auto [it, fresh] = out.terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

LpaElement operator-(const LpaElement& a) { return Coefficient(-1) * a; }

LpaElement operator-(const LpaElement& a, const LpaElement& b) { return a + (-b); }

LpaElement operator*(const Coefficient& c, const LpaElement& a) {
  LpaElement out;
  out.graph_ = a.graph();
  if (c == 0) return out;
  for (const auto& [m, k] : a.terms()) {
    // scaling never merges or cancels distinct monomials
    out.terms_.emplace(m, Coefficient(c * k));
  }
  return out;
}

// Monomial product (p1 q1*)(p2 q2*): if p2 = q1 t the result is (p1 t) q2*,
// if q1 = p2 t it is p1 (q2 t)*, and zero otherwise; CK2 rewriting restores
// the normal form afterwards.
LpaElement operator*(const LpaElement& a, const LpaElement& b) {
  require_same_graph(a.graph_, b.graph_);
  LpaElement out;
  out.graph_ = a.graph_ ? a.graph_ : b.graph_;
  if (a.is_zero() || b.is_zero()) return out;
  const Graph& g = *out.graph_;
  for (const auto& [m1, c1] : a.terms_) {
    for (const auto& [m2, c2] : b.terms_) {
      Coefficient c = c1 * c2;
      if (is_prefix(m1.q, m2.p)) {
        Path t = m2.p.suffix(g, m1.q.length());
        out.add_reduced(g, c, concat(m1.p, t), m2.q);
      } else if (is_prefix(m2.p, m1.q)) {
        Path t = m1.q.suffix(g, m2.p.length());
        out.add_reduced(g, c, m1.p, concat(m2.q, t));
      }
    }
  }
  return out;
}

// ---- formal generator expressions ------------------------------------------

LpaElement normal_form(GraphPtr g, const RawExpression& raw) {
  if (!g) throw std::invalid_argument("normal_form needs a graph");
  LpaElement sum = LpaElement::zero(g);
  for (const auto& [c, word] : raw) {
    if (word.empty()) throw std::invalid_argument("empty generator word");
    LpaElement prod;
    bool first = true;
    for (const Generator& gen : word) {
      LpaElement atom;
      switch (gen.kind) {
        case Generator::Kind::Vertex:
          if (!g->has_vertex(gen.v)) throw std::invalid_argument("generator vertex not in graph");
          atom = LpaElement::vertex(g, gen.v);
          break;
        case Generator::Kind::Edge:
          if (!g->valid_edge(gen.e)) throw std::invalid_argument("generator edge not in graph");
          atom = LpaElement::path(g, Path::of_edges(*g, {gen.e}));
          break;
        case Generator::Kind::Ghost:
          if (!g->valid_edge(gen.e)) throw std::invalid_argument("generator edge not in graph");
          atom = LpaElement::ghost_path(g, Path::of_edges(*g, {gen.e}));
          break;
      }
      prod = first ? atom : prod * atom;
      first = false;
    }
    sum = sum + c * prod;
  }
  return sum;
}

// ---- Cuntz-Krieger family check ---------------------------------------------

long CkReport::failure_count() const {
  long n = 0;
  for (const CkCheck& c : checks) {
    if (!c.passed) ++n;
  }
  return n;
}

std::vector<const CkCheck*> CkReport::failures() const {
  std::vector<const CkCheck*> out;
  for (const CkCheck& c : checks) {
    if (!c.passed) out.push_back(&c);
  }
  return out;
}

namespace {

const LpaElement& image_of_vertex(const GeneratorImages& images, const Graph& domain,
                                  VertexId v) {
  auto it = images.vertex_image.find(v);
  if (it == images.vertex_image.end()) {
    throw std::invalid_argument("assignment is missing vertex '" + domain.vertex_name(v) + "'");
  }
  return it->second;
}

void record(CkReport& report, const std::string& axiom, const std::string& instance,
            const LpaElement& difference) {
  CkCheck check{axiom, instance, difference.is_zero(), {}};
  if (!check.passed) check.difference = difference.to_string();
  report.checks.push_back(std::move(check));
}

}  // namespace

CkReport check_ck_family(const Graph& domain, const GeneratorImages& images) {
  CkReport report;
  for (VertexId v = 0; v < domain.vertex_count(); ++v) image_of_vertex(images, domain, v);

  GraphPtr target;
  for (const auto& [v, img] : images.vertex_image) {
    if (img.graph()) {
      target = img.graph();
      break;
    }
  }

  // (V) vw = 0 for v != w, vv = v
  for (const auto& [v, av] : images.vertex_image) {
    for (const auto& [w, aw] : images.vertex_image) {
      LpaElement expect = (v == w) ? av : LpaElement::zero(target);
      record(report, "V",
             domain.vertex_name(v) + "\xC2\xB7" + domain.vertex_name(w),
             av * aw - expect);
    }
  }

  for (const auto& [e, ae] : images.edge_image) {
    const std::string name = domain.edge_name(e);
    const LpaElement& src = image_of_vertex(images, domain, domain.source(e));
    const LpaElement& rng = image_of_vertex(images, domain, domain.range(e));
    LpaElement ghost = ae.star();
    // (E1) s(e)e = e r(e) = e
    record(report, "E1", "s(" + name + ")\xC2\xB7" + name, src * ae - ae);
    record(report, "E1", name + "\xC2\xB7r(" + name + ")", ae * rng - ae);
    // (E2) r(e)e* = e* s(e) = e*
    record(report, "E2", "r(" + name + ")\xC2\xB7" + name + "*", rng * ghost - ghost);
    record(report, "E2", name + "*\xC2\xB7s(" + name + ")", ghost * src - ghost);
  }

  // (CK1) e* f = 0 for e != f, e* e = r(e)
  for (const auto& [e, ae] : images.edge_image) {
    for (const auto& [f, af] : images.edge_image) {
      LpaElement expect = (e == f) ? image_of_vertex(images, domain, domain.range(e))
                                   : LpaElement::zero(target);
      record(report, "CK1", domain.edge_name(e) + "*\xC2\xB7" + domain.edge_name(f),
             ae.star() * af - expect);
    }
  }

  // (CK2) v = sum over s^{-1}(v) of ee*, at regular vertices with all edges present
  for (VertexId v = 0; v < domain.vertex_count(); ++v) {
    if (domain.kind(v) != VertexKind::Regular) continue;
    std::vector<EdgeId> out = domain.out_edges_finite(v);
    bool complete = std::all_of(out.begin(), out.end(), [&](EdgeId e) {
      return images.edge_image.count(e) > 0;
    });
    if (!complete) {
      ++report.ck2_skipped;
      continue;
    }
    LpaElement sum = LpaElement::zero(target);
    for (EdgeId e : out) {
      const LpaElement& ae = images.edge_image.at(e);
      sum = sum + ae * ae.star();
    }
    record(report, "CK2", domain.vertex_name(v), sum - image_of_vertex(images, domain, v));
  }
  return report;
}

// ---- element text parsing -----------------------------------------------------

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

LpaElement parse_term(const GraphPtr& g, std::string body, bool negative) {
  Coefficient coeff = negative ? -1 : 1;
  std::size_t starpos = body.find('*');
  if (starpos != std::string::npos) {
    std::string num = strip(body.substr(0, starpos));
    try {
      coeff *= Coefficient(num);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient '" + num + "'");
    }
    body = strip(body.substr(starpos + 1));
  }
  if (body.empty()) throw std::invalid_argument("term is missing a monomial");
  bool starred = body.back() == '\'';
  if (starred) body = strip(body.substr(0, body.size() - 1));
  std::size_t dot = body.find('.');
  Path p, q;
  if (dot != std::string::npos) {
    if (!starred) throw std::invalid_argument("'p.q' must end with ' (star)");
    p = parse_path(*g, strip(body.substr(0, dot)));
    q = parse_path(*g, strip(body.substr(dot + 1)));
  } else if (starred) {
    q = parse_path(*g, body);
    p = Path::at_vertex(q.range());
  } else {
    p = parse_path(*g, body);
    q = Path::at_vertex(p.range());
  }
  return LpaElement::monomial(g, p, q, coeff);
}

}  // namespace

LpaElement parse_element(GraphPtr g, const std::string& text) {
  if (!g) throw std::invalid_argument("parse_element needs a graph");
  std::string src = strip(text);
  if (src.empty()) throw std::invalid_argument("empty element");
  if (src == "0") return LpaElement::zero(g);
  LpaElement sum = LpaElement::zero(g);
  std::size_t pos = 0;
  bool negative = false;
  if (src[0] == '-') {
    negative = true;
    pos = 1;
  } else if (src[0] == '+') {
    pos = 1;
  }
  while (pos < src.size()) {
    std::size_t next = src.find_first_of("+-", pos);
    std::string body = strip(src.substr(pos, next == std::string::npos ? next : next - pos));
    if (body.empty()) throw std::invalid_argument("empty term in element");
    sum = sum + parse_term(g, body, negative);
    if (next == std::string::npos) break;
    negative = src[next] == '-';
    pos = next + 1;
  }
  return sum;
}

}  // namespace lpa
