#include "lpa/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lpa {

namespace {

void check_subset(const Graph& g, const VertexSet& x, const char* what) {
  for (VertexId v : x) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument(std::string(what) + " contains a vertex not in the graph");
    }
  }
}

// Edges from v leaving H, as bundles. Infinite when an omega bundle exits.
struct ExitSet {
  std::vector<std::int32_t> finite_bundles;
  bool has_omega_exit = false;
  bool empty() const { return finite_bundles.empty() && !has_omega_exit; }
};

ExitSet exit_set(const Graph& g, const VertexSet& h, VertexId v) {
  ExitSet out;
  for (std::int32_t b : g.out_bundles(v)) {
    if (h.count(g.bundle(b).dst)) continue;
    if (g.bundle(b).infinite()) {
      out.has_omega_exit = true;
    } else {
      out.finite_bundles.push_back(b);
    }
  }
  return out;
}

}  // namespace

bool is_hereditary(const Graph& g, const VertexSet& x) {
  check_subset(g, x, "vertex set");
  // Edge-level check; paths follow by induction on length.
  for (const Bundle& b : g.bundles()) {
    if (x.count(b.src) && !x.count(b.dst)) return false;
  }
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& x) {
  check_subset(g, x, "vertex set");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (x.count(v) || g.kind(v) != VertexKind::Regular) continue;
    bool all_in = true;
    for (std::int32_t b : g.out_bundles(v)) {
      if (!x.count(g.bundle(b).dst)) {
        all_in = false;
        break;
      }
    }
    if (all_in) return false;
  }
  return true;
}

VertexSet hereditary_saturated_closure(const Graph& g, VertexSet x) {
  check_subset(g, x, "vertex set");
  // Naive alternating fixpoint: hereditary pass, then saturation pass, repeat.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Bundle& b : g.bundles()) {
      if (x.count(b.src) && x.insert(b.dst).second) changed = true;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (x.count(v) || g.kind(v) != VertexKind::Regular) continue;
      bool all_in = true;
      for (std::int32_t b : g.out_bundles(v)) {
        if (!x.count(g.bundle(b).dst)) {
          all_in = false;
          break;
        }
      }
      if (all_in) {
        x.insert(v);
        changed = true;
      }
    }
  }
  return x;
}

VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) throw std::invalid_argument("H is not hereditary");
  if (!is_saturated(g, h)) throw std::invalid_argument("H is not saturated");
  VertexSet out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.count(v) || g.kind(v) != VertexKind::InfiniteEmitter) continue;
    ExitSet exits = exit_set(g, h, v);
    if (!exits.has_omega_exit && !exits.finite_bundles.empty()) out.insert(v);
  }
  return out;
}

AdmissiblePair make_admissible_pair(GraphPtr g, VertexSet h, VertexSet s) {
  if (!g) throw std::invalid_argument("admissible pair needs a graph");
  if (!is_hereditary(*g, h)) throw std::invalid_argument("H is not hereditary");
  if (!is_saturated(*g, h)) throw std::invalid_argument("H is not saturated");
  VertexSet breaking = breaking_vertices(*g, h);
  for (VertexId v : s) {
    if (!breaking.count(v)) {
      throw std::invalid_argument("S contains '" + g->vertex_name(v) +
                                  "', which is not a breaking vertex of H");
    }
  }
  return AdmissiblePair{std::move(g), std::move(h), std::move(s)};
}

LpaElement gap_projection(const AdmissiblePair& pair, VertexId v) {
  const Graph& g = *pair.graph;
  if (!breaking_vertices(g, pair.h).count(v)) {
    throw std::invalid_argument("'" + g.vertex_name(v) + "' is not a breaking vertex of H");
  }
  LpaElement out = LpaElement::vertex(pair.graph, v);
  ExitSet exits = exit_set(g, pair.h, v);
  for (std::int32_t b : exits.finite_bundles) {
    for (std::int64_t i = 0; i < g.bundle(b).count; ++i) {
      Path e = Path::of_edges(g, {EdgeId{b, i}});
      out = out - LpaElement::monomial(pair.graph, e, e);
    }
  }
  return out;
}

std::string SpanningMonomial::to_string(const Graph& g) const {
  std::string v = g.vertex_name(p.range());
  std::string mid = kind == Kind::GapAtS ? "." + v + "^H" : "";
  return p.to_string(g) + mid + "." + q.to_string(g) + "'";
}

std::vector<SpanningMonomial> ideal_spanning_monomials(const AdmissiblePair& pair,
                                                       int max_len,
                                                       std::int64_t index_bound) {
  const Graph& g = *pair.graph;
  auto collect = [&](const VertexSet& targets) {
    std::vector<Path> paths;
    for (VertexId v : targets) paths.push_back(Path::at_vertex(v));
    auto longer = paths_into(g, targets, max_len, index_bound);
    paths.insert(paths.end(), longer.begin(), longer.end());
    std::sort(paths.begin(), paths.end());
    return paths;
  };
  std::vector<SpanningMonomial> out;
  for (auto [kind, targets] : {std::pair{SpanningMonomial::Kind::IntoH, pair.h},
                               std::pair{SpanningMonomial::Kind::GapAtS, pair.s}}) {
    std::vector<Path> paths = collect(targets);
    for (const Path& p : paths) {
      for (const Path& q : paths) {
        if (p.range() == q.range()) out.push_back(SpanningMonomial{kind, p, q});
      }
    }
  }
  return out;
}

LpaElement spanning_monomial_element(const AdmissiblePair& pair,
                                     const SpanningMonomial& m) {
  if (m.kind == SpanningMonomial::Kind::IntoH) {
    return LpaElement::monomial(pair.graph, m.p, m.q);
  }
  LpaElement left = LpaElement::path(pair.graph, m.p);
  LpaElement right = LpaElement::path(pair.graph, m.q);
  return left * gap_projection(pair, m.p.range()) * right.star();
}

bool monomial_in_ideal(const AdmissiblePair& pair, const Path& p, const Path& q) {
  if (p.range() != q.range()) {
    throw std::invalid_argument("monomial_in_ideal requires r(p) = r(q)");
  }
  return pair.h.count(p.range()) > 0;
}

VertexSet parse_vertex_set(const Graph& g, const std::string& comma_separated) {
  VertexSet out;
  std::string token;
  std::istringstream in(comma_separated);
  while (std::getline(in, token, ',')) {
    std::size_t a = token.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = token.find_last_not_of(" \t");
    out.insert(g.vertex(token.substr(a, b - a + 1)));
  }
  return out;
}

std::vector<std::string> vertex_set_names(const Graph& g, const VertexSet& x) {
  std::vector<std::string> names;
  for (VertexId v : x) names.push_back(g.vertex_name(v));
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace lpa
