#include "lpa/porcupine.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lpa {

SpineSets spine_sets(const AdmissiblePair& pair, int max_len,
                     std::int64_t index_bound) {
  const Graph& g = *pair.graph;
  SpineSets out;
  out.max_len = max_len;
  out.index_bound = index_bound;
  for (const Path& p : paths_into(g, pair.h, max_len, index_bound)) {
    VertexId tail_source = g.source(p.edges().back());
    if (!pair.h.count(tail_source) && !pair.s.count(tail_source)) {
      out.f1.push_back(p);
    }
  }
  out.f2 = paths_into(g, pair.s, max_len, index_bound);
  return out;
}

namespace {

std::string spine_vertex_name(const Graph& g, const Path& p) {
  return "w^{" + p.to_string(g) + "}";
}

std::string spine_bundle_name(const Graph& g, const Path& p) {
  return "f^{" + p.to_string(g) + "}";
}

std::vector<Path> merged_spines(const SpineSets& ss) {
  std::vector<Path> spines;
  std::merge(ss.f1.begin(), ss.f1.end(), ss.f2.begin(), ss.f2.end(),
             std::back_inserter(spines));
  return spines;
}

// A member of length exactly `depth` whose source receives an edge extends to
// a longer member, and conversely every longer member has such a suffix.
bool spines_complete(const Graph& g, const std::vector<Path>& spines, int depth) {
  for (const Path& p : spines) {
    if (p.length() == depth && !g.in_bundles(p.source()).empty()) return false;
  }
  return true;
}

}  // namespace

PorcupineGraph build_porcupine(const AdmissiblePair& pair, int depth,
                               std::int64_t index_bound) {
  if (depth < 1) throw std::invalid_argument("porcupine depth must be at least 1");
  if (index_bound <= 0) index_bound = depth;
  const Graph& g = *pair.graph;
  SpineSets ss = spine_sets(pair, depth, index_bound);
  std::vector<Path> spines = merged_spines(ss);

  std::vector<std::string> vertices;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (pair.h.count(v) || pair.s.count(v)) vertices.push_back(g.vertex_name(v));
  }
  for (const Path& p : spines) vertices.push_back(spine_vertex_name(g, p));

  std::vector<BundleSpec> bundles;
  std::vector<std::int32_t> retained;
  for (std::int32_t b = 0; b < g.bundle_count(); ++b) {
    const Bundle& bundle = g.bundle(b);
    bool keep = pair.h.count(bundle.src) ||
                (pair.s.count(bundle.src) && pair.h.count(bundle.dst));
    if (!keep) continue;
    retained.push_back(b);
    bundles.push_back(BundleSpec{bundle.name, g.vertex_name(bundle.src),
                                 g.vertex_name(bundle.dst), bundle.count});
  }
  for (const Path& p : spines) {
    std::string dst = p.length() == 1 ? g.vertex_name(p.range())
                                      : spine_vertex_name(g, p.suffix(g, 1));
    bundles.push_back(BundleSpec{spine_bundle_name(g, p), spine_vertex_name(g, p),
                                 dst, 1});
  }

  PorcupineGraph out;
  out.graph = make_graph(vertices, bundles);
  out.depth = depth;
  out.index_bound = index_bound;
  out.complete = spines_complete(g, spines, depth);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!pair.h.count(v) && !pair.s.count(v)) continue;
    VertexId pv = out.graph->vertex(g.vertex_name(v));
    out.base_vertex.emplace(pv, v);
    out.vertex_embedding.emplace(v, pv);
  }
  for (const Path& p : spines) {
    VertexId pv = out.graph->vertex(spine_vertex_name(g, p));
    out.spine_vertex_origin.emplace(pv, p);
    out.spine_vertex.emplace(p, pv);
    std::int32_t pb = *out.graph->find_bundle(spine_bundle_name(g, p));
    out.spine_bundle_origin.emplace(pb, p);
    out.spine_bundle.emplace(p, pb);
  }
  for (std::int32_t b : retained) {
    std::int32_t pb = *out.graph->find_bundle(g.bundle(b).name);
    out.base_bundle.emplace(pb, b);
    out.bundle_embedding.emplace(b, pb);
  }
  return out;
}

HedgehogGraph build_hedgehog(const AdmissiblePair& pair, int depth,
                             std::int64_t index_bound) {
  if (depth < 1) throw std::invalid_argument("hedgehog depth must be at least 1");
  if (index_bound <= 0) index_bound = depth;
  const Graph& g = *pair.graph;
  SpineSets ss = spine_sets(pair, depth, index_bound);
  std::vector<Path> spines = merged_spines(ss);

  std::vector<std::string> vertices;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (pair.h.count(v) || pair.s.count(v)) vertices.push_back(g.vertex_name(v));
  }
  for (const Path& p : spines) vertices.push_back(p.to_string(g));

  std::vector<BundleSpec> bundles;
  std::vector<std::int32_t> retained;
  for (std::int32_t b = 0; b < g.bundle_count(); ++b) {
    const Bundle& bundle = g.bundle(b);
    bool keep = pair.h.count(bundle.src) ||
                (pair.s.count(bundle.src) && pair.h.count(bundle.dst));
    if (!keep) continue;
    retained.push_back(b);
    bundles.push_back(BundleSpec{bundle.name, g.vertex_name(bundle.src),
                                 g.vertex_name(bundle.dst), bundle.count});
  }
  for (const Path& p : spines) {
    bundles.push_back(BundleSpec{"~" + p.to_string(g), p.to_string(g),
                                 g.vertex_name(p.range()), 1});
  }

  HedgehogGraph out;
  out.graph = make_graph(vertices, bundles);
  out.depth = depth;
  out.index_bound = index_bound;
  out.complete = spines_complete(g, spines, depth);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!pair.h.count(v) && !pair.s.count(v)) continue;
    VertexId hv = out.graph->vertex(g.vertex_name(v));
    out.base_vertex.emplace(hv, v);
    out.vertex_embedding.emplace(v, hv);
  }
  for (const Path& p : spines) {
    out.spine_vertex_origin.emplace(out.graph->vertex(p.to_string(g)), p);
    out.spine_bundle_origin.emplace(*out.graph->find_bundle("~" + p.to_string(g)), p);
  }
  for (std::int32_t b : retained) {
    std::int32_t hb = *out.graph->find_bundle(g.bundle(b).name);
    out.base_bundle.emplace(hb, b);
    out.bundle_embedding.emplace(b, hb);
  }
  return out;
}

// ---- the map phi ---------------------------------------------------------------

namespace {

// phi(w^p): pp* for p in F1, p r(p)^H p* for p in F2.
LpaElement spine_image(const AdmissiblePair& pair, const Path& p) {
  if (pair.h.count(p.range())) {
    return LpaElement::monomial(pair.graph, p, p);
  }
  LpaElement left = LpaElement::path(pair.graph, p);
  return left * gap_projection(pair, p.range()) * left.star();
}

}  // namespace

LpaElement phi_vertex(const AdmissiblePair& pair, const PorcupineGraph& porcupine,
                      VertexId v) {
  auto base = porcupine.base_vertex.find(v);
  if (base != porcupine.base_vertex.end()) {
    VertexId w = base->second;
    if (pair.h.count(w)) return LpaElement::vertex(pair.graph, w);
    return gap_projection(pair, w);
  }
  auto spine = porcupine.spine_vertex_origin.find(v);
  if (spine == porcupine.spine_vertex_origin.end()) {
    throw std::invalid_argument("unknown porcupine vertex");
  }
  return spine_image(pair, spine->second);
}

LpaElement phi_edge(const AdmissiblePair& pair, const PorcupineGraph& porcupine,
                    EdgeId edge) {
  if (!porcupine.graph->valid_edge(edge)) {
    throw std::invalid_argument("unknown porcupine edge");
  }
  const Graph& g = *pair.graph;
  auto base = porcupine.base_bundle.find(edge.bundle);
  if (base != porcupine.base_bundle.end()) {
    return LpaElement::path(pair.graph,
                            Path::of_edges(g, {EdgeId{base->second, edge.index}}));
  }
  const Path& p = porcupine.spine_bundle_origin.at(edge.bundle);
  LpaElement head = LpaElement::path(pair.graph, p.prefix(g, 1));
  if (p.length() == 1) {
    if (pair.h.count(p.range())) return head;                      // f^e, e in F1
    return head * gap_projection(pair, p.range());                 // f^e, e in F2
  }
  return head * spine_image(pair, p.suffix(g, 1));                 // f^{ep}
}

namespace {

LpaElement phi_path(const AdmissiblePair& pair, const PorcupineGraph& porcupine,
                    const Path& p) {
  if (p.trivial()) return phi_vertex(pair, porcupine, p.source());
  LpaElement out;
  bool first = true;
  for (EdgeId e : p.edges()) {
    LpaElement img = phi_edge(pair, porcupine, e);
    out = first ? img : out * img;
    first = false;
  }
  return out;
}

}  // namespace

LpaElement phi_element(const AdmissiblePair& pair, const PorcupineGraph& porcupine,
                       const LpaElement& x) {
  if (x.graph() && x.graph() != porcupine.graph) {
    throw std::invalid_argument("element is not over the porcupine graph");
  }
  LpaElement out = LpaElement::zero(pair.graph);
  for (const auto& [m, c] : x.terms()) {
    out = out + c * (phi_path(pair, porcupine, m.p) *
                     phi_path(pair, porcupine, m.q).star());
  }
  return out;
}

// ---- factorizations -------------------------------------------------------------

namespace {

// Appends the spine chain f^{e_1...e_k} f^{e_2...e_k} ... f^{e_k} for the
// given prefix path; reports the first missing spine vertex.
bool append_spine_chain(const Graph& g, const PorcupineGraph& porcupine,
                        const Path& prefix, std::vector<EdgeId>& edges,
                        std::string& missing) {
  for (int j = 0; j < prefix.length(); ++j) {
    Path sp = prefix.suffix(g, j);
    auto it = porcupine.spine_bundle.find(sp);
    if (it == porcupine.spine_bundle.end()) {
      missing = spine_vertex_name(g, sp);
      return false;
    }
    edges.push_back(EdgeId{it->second, 0});
  }
  return true;
}

// Maps the edges of p from position `from` (0-based) onward through the
// retained-bundle embedding.
void append_retained(const Graph& g, const PorcupineGraph& porcupine, const Path& p,
                     int from, std::vector<EdgeId>& edges) {
  for (int k = from; k < p.length(); ++k) {
    EdgeId e = p.edges()[k];
    auto it = porcupine.bundle_embedding.find(e.bundle);
    if (it == porcupine.bundle_embedding.end()) {
      throw std::logic_error("edge '" + g.edge_name(e) +
                             "' is not retained in the porcupine graph");
    }
    edges.push_back(EdgeId{it->second, e.index});
  }
}

Factorization ok_path(const PorcupineGraph& porcupine, std::vector<EdgeId> edges,
                      VertexId trivial_at) {
  Factorization out;
  out.path = edges.empty() ? Path::at_vertex(trivial_at)
                           : Path::of_edges(*porcupine.graph, std::move(edges));
  return out;
}

Factorization depth_insufficient(std::string missing) {
  Factorization out;
  out.status = Factorization::Status::DepthInsufficient;
  out.missing = std::move(missing);
  return out;
}

}  // namespace

Factorization factorize_into_h(const AdmissiblePair& pair,
                               const PorcupineGraph& porcupine, const Path& p) {
  const Graph& g = *pair.graph;
  if (!pair.h.count(p.range())) {
    throw std::invalid_argument("factorize_into_h requires r(p) in H");
  }
  std::vector<EdgeId> edges;
  if (p.trivial() || pair.h.count(p.source())) {
    // s(p) in H: every edge of p is retained and phi fixes it
    append_retained(g, porcupine, p, 0, edges);
    return ok_path(porcupine, std::move(edges), porcupine.vertex_embedding.at(p.range()));
  }
  int n = p.length();
  int i = n;
  while (pair.h.count(g.source(p.edges()[i - 1]))) --i;  // i >= 1 since s(p) not in H
  VertexId turn = g.source(p.edges()[i - 1]);
  std::string missing;
  if (!pair.s.count(turn)) {
    // case (i): spine chain through w^{e_1...e_i}, then E-edges from H
    if (!append_spine_chain(g, porcupine, p.prefix(g, i), edges, missing)) {
      return depth_insufficient(missing);
    }
    append_retained(g, porcupine, p, i, edges);
  } else if (i == 1) {
    // case (ii): the whole path is retained, phi(e_j) = e_j
    append_retained(g, porcupine, p, 0, edges);
  } else {
    // case (iii): spine chain through w^{e_1...e_{i-1}} into S, then E-edges
    if (!append_spine_chain(g, porcupine, p.prefix(g, i - 1), edges, missing)) {
      return depth_insufficient(missing);
    }
    append_retained(g, porcupine, p, i - 1, edges);
  }
  return ok_path(porcupine, std::move(edges), porcupine.vertex_embedding.at(p.range()));
}

Factorization factorize_into_s(const AdmissiblePair& pair,
                               const PorcupineGraph& porcupine, const Path& p) {
  const Graph& g = *pair.graph;
  if (!pair.s.count(p.range())) {
    throw std::invalid_argument("factorize_into_s requires r(p) in S");
  }
  if (p.trivial()) {
    throw std::invalid_argument("factorize_into_s requires |p| > 0");
  }
  std::vector<EdgeId> edges;
  std::string missing;
  if (!append_spine_chain(g, porcupine, p, edges, missing)) {
    return depth_insufficient(missing);
  }
  return ok_path(porcupine, std::move(edges), porcupine.vertex_embedding.at(p.range()));
}

// ---- verification ----------------------------------------------------------------

GeneratorImages build_phi_assignment(const AdmissiblePair& pair,
                                     const PorcupineGraph& porcupine,
                                     std::int64_t index_bound) {
  GeneratorImages images;
  const Graph& p = *porcupine.graph;
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    images.vertex_image.emplace(v, phi_vertex(pair, porcupine, v));
  }
  for (EdgeId e : p.all_edges_bounded(index_bound)) {
    images.edge_image.emplace(e, phi_edge(pair, porcupine, e));
  }
  return images;
}

namespace {

// Deterministic monomial sampler over the porcupine graph.
struct MonomialSampler {
  std::vector<std::vector<Path>> by_range;
  std::vector<VertexId> nonempty;

  MonomialSampler(const Graph& g, int max_len, std::int64_t index_bound)
      : by_range(g.vertex_count()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      by_range[v].push_back(Path::at_vertex(v));
    }
    for (const Path& p : paths_into(g, g.all_vertices(), max_len, index_bound)) {
      by_range[p.range()].push_back(p);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!by_range[v].empty()) nonempty.push_back(v);
    }
  }

  bool empty() const { return nonempty.empty(); }

  Monomial draw(std::mt19937_64& rng) const {
    VertexId v = nonempty[rng() % nonempty.size()];
    const auto& pool = by_range[v];
    return Monomial{pool[rng() % pool.size()], pool[rng() % pool.size()]};
  }
};

// phi taken through the (possibly corrupted) generator images.
LpaElement image_of_path(const GeneratorImages& images, const GraphPtr& target,
                         const Path& p) {
  if (p.trivial()) return images.vertex_image.at(p.source());
  LpaElement out = LpaElement::zero(target);
  bool first = true;
  for (EdgeId e : p.edges()) {
    const LpaElement& img = images.edge_image.at(e);
    out = first ? img : out * img;
    first = false;
  }
  return out;
}

LpaElement image_of_monomial(const GeneratorImages& images, const GraphPtr& target,
                             const Monomial& m) {
  return image_of_path(images, target, m.p) * image_of_path(images, target, m.q).star();
}

void fail(CheckSection& section, std::string instance, std::string detail) {
  section.failures.push_back(CheckFailure{std::move(instance), std::move(detail)});
}

}  // namespace

IsoReport verify_with_assignment(const AdmissiblePair& pair,
                                 const PorcupineGraph& porcupine,
                                 const GeneratorImages& images,
                                 const VerifyOptions& options) {
  const Graph& p = *porcupine.graph;
  const GraphPtr& target = pair.graph;
  std::int64_t index_bound =
      options.index_bound > 0 ? options.index_bound : options.depth;

  IsoReport report;
  report.depth = porcupine.depth;
  report.index_bound = index_bound;
  report.seed = options.seed;
  report.porcupine_complete = porcupine.complete;
  report.axioms.name = "axioms";
  report.degrees.name = "degrees";
  report.stars.name = "stars";
  report.vertices.name = "vertices";
  report.surjectivity.name = "surjectivity";
  report.products.name = "products";

  // (a) the images satisfy the five axioms
  CkReport ck = check_ck_family(p, images);
  report.axioms.checked = ck.checked();
  for (const CkCheck* f : ck.failures()) {
    fail(report.axioms, f->axiom + " " + f->instance, "difference " + f->difference);
  }

  std::mt19937_64 rng(options.seed);
  MonomialSampler sampler(p, std::min(3, porcupine.depth), index_bound);

  // (b) degree preservation: generators, then random homogeneous monomials
  for (const auto& [v, img] : images.vertex_image) {
    ++report.degrees.checked;
    if (!img.degree().matches(0)) {
      fail(report.degrees, "phi(" + p.vertex_name(v) + ")",
           "degree " + img.degree().to_string() + ", expected 0");
    }
  }
  for (const auto& [e, img] : images.edge_image) {
    ++report.degrees.checked;
    if (!img.degree().matches(1)) {
      fail(report.degrees, "phi(" + p.edge_name(e) + ")",
           "degree " + img.degree().to_string() + ", expected 1");
    }
    ++report.degrees.checked;
    if (!img.star().degree().matches(-1)) {
      fail(report.degrees, "phi(" + p.edge_name(e) + "*)",
           "degree " + img.star().degree().to_string() + ", expected -1");
    }
  }
  for (int i = 0; i < options.samples && !sampler.empty(); ++i) {
    Monomial m = sampler.draw(rng);
    LpaElement img = image_of_monomial(images, target, m);
    ++report.degrees.checked;
    if (img.is_zero()) {
      fail(report.degrees, "phi(" + m.to_string(p) + ")", "image is zero");
    } else if (img.degree() != Degree::homogeneous(m.degree())) {
      fail(report.degrees, "phi(" + m.to_string(p) + ")",
           "degree " + img.degree().to_string() + ", expected " +
               std::to_string(m.degree()));
    }
  }

  // (c) star compatibility on random elements
  for (int i = 0; i < options.samples && !sampler.empty(); ++i) {
    int terms = 1 + static_cast<int>(rng() % 3);
    LpaElement x = LpaElement::zero(porcupine.graph);
    LpaElement img = LpaElement::zero(target);
    LpaElement img_star = LpaElement::zero(target);
    for (int t = 0; t < terms; ++t) {
      Monomial m = sampler.draw(rng);
      Coefficient c(1 + static_cast<int>(rng() % 5));
      if (rng() % 2) c = -c;
      x = x + LpaElement::monomial(porcupine.graph, m.p, m.q, c);
      img = img + c * image_of_monomial(images, target, m);
      img_star = img_star + c * image_of_monomial(images, target, Monomial{m.q, m.p});
    }
    ++report.stars.checked;
    if (!(img_star == img.star())) {
      fail(report.stars, "phi((" + x.to_string() + ")*)",
           "phi(x*) = " + img_star.to_string() + " but phi(x)* = " +
               img.star().to_string());
    }
  }

  // (d) phi kills no vertex (Graded Uniqueness hypothesis)
  for (const auto& [v, img] : images.vertex_image) {
    ++report.vertices.checked;
    if (img.is_zero()) fail(report.vertices, "phi(" + p.vertex_name(v) + ")", "zero");
  }

  // (e) surjectivity: every spanning monomial within depth is witnessed.
  // The pairs (p, q) are enumerated lazily in ideal_spanning_monomials order;
  // factorizations, side images, and gap projections are cached per side path
  // since the pair count is quadratic in the number of paths.
  {
    struct Side {
      bool ok = false;
      std::string missing;
      int witness_length = 0;
      LpaElement image;      // phi of the factorization, through `images`
      LpaElement image_star;
      LpaElement expected;  // p (IntoH) or p v^H (GapAtS)
      LpaElement expected_star;
    };
    std::map<VertexId, LpaElement> gaps;
    for (VertexId v : pair.s) gaps.emplace(v, gap_projection(pair, v));
    auto make_side = [&](bool gap, const Path& side) {
      Side out;
      Factorization f;
      if (gap && side.trivial()) {
        f.path = Path::at_vertex(porcupine.vertex_embedding.at(side.source()));
      } else {
        f = gap ? factorize_into_s(pair, porcupine, side)
                : factorize_into_h(pair, porcupine, side);
      }
      out.ok = f.ok();
      if (!out.ok) {
        out.missing = f.missing;
        return out;
      }
      out.witness_length = f.path.length();
      out.image = image_of_path(images, target, f.path);
      out.image_star = out.image.star();
      out.expected = gap ? LpaElement::path(target, side) * gaps.at(side.range())
                         : LpaElement::path(target, side);
      out.expected_star = out.expected.star();
      return out;
    };
    for (auto [kind, targets] : {std::pair{SpanningMonomial::Kind::IntoH, pair.h},
                                 std::pair{SpanningMonomial::Kind::GapAtS, pair.s}}) {
      const bool gap = kind == SpanningMonomial::Kind::GapAtS;
      std::vector<Path> sides;
      for (VertexId v : targets) sides.push_back(Path::at_vertex(v));
      auto longer = paths_into(*target, targets, porcupine.depth, index_bound);
      sides.insert(sides.end(), longer.begin(), longer.end());
      std::sort(sides.begin(), sides.end());
      std::vector<Side> cache;
      cache.reserve(sides.size());
      for (const Path& side : sides) cache.push_back(make_side(gap, side));
      for (std::size_t i = 0; i < sides.size(); ++i) {
        for (std::size_t j = 0; j < sides.size(); ++j) {
          if (sides[i].range() != sides[j].range()) continue;
          ++report.spanning_attempted;
          ++report.surjectivity.checked;
          const SpanningMonomial m{kind, sides[i], sides[j]};
          const Side& left = cache[i];
          const Side& right = cache[j];
          if (!left.ok || !right.ok) {
            fail(report.surjectivity, m.to_string(*pair.graph),
                 "factorization needs " + (left.ok ? right.missing : left.missing) +
                     " beyond the truncation depth");
            continue;
          }
          if (left.witness_length != sides[i].length() ||
              right.witness_length != sides[j].length()) {
            fail(report.surjectivity, m.to_string(*pair.graph),
                 "witness length differs from the path length");
            continue;
          }
          LpaElement witness = left.image * right.image_star;
          LpaElement expected = left.expected * right.expected_star;
          if (!(witness == expected)) {
            fail(report.surjectivity, m.to_string(*pair.graph),
                 "phi(m1 m2*) = " + witness.to_string() + ", expected " +
                     expected.to_string());
            continue;
          }
          ++report.spanning_witnessed;
        }
      }
    }
  }

  // (f) multiplicativity spot checks
  for (int i = 0; i < options.samples && !sampler.empty(); ++i) {
    Monomial a = sampler.draw(rng);
    Monomial b = sampler.draw(rng);
    LpaElement product = LpaElement::monomial(porcupine.graph, a.p, a.q) *
                         LpaElement::monomial(porcupine.graph, b.p, b.q);
    LpaElement lhs = LpaElement::zero(target);
    for (const auto& [m, c] : product.terms()) {
      lhs = lhs + c * image_of_monomial(images, target, m);
    }
    LpaElement rhs = image_of_monomial(images, target, a) *
                     image_of_monomial(images, target, b);
    ++report.products.checked;
    if (!(lhs == rhs)) {
      fail(report.products,
           "phi(" + a.to_string(p) + " \xC2\xB7 " + b.to_string(p) + ")",
           "phi(ab) = " + lhs.to_string() + " but phi(a)phi(b) = " + rhs.to_string());
    }
  }
  return report;
}

IsoReport verify_graded_star_iso(const AdmissiblePair& pair,
                                 const VerifyOptions& options) {
  std::int64_t index_bound =
      options.index_bound > 0 ? options.index_bound : options.depth;
  PorcupineGraph porcupine = build_porcupine(pair, options.depth, index_bound);
  GeneratorImages images = build_phi_assignment(pair, porcupine, index_bound);
  return verify_with_assignment(pair, porcupine, images, options);
}

std::vector<std::pair<std::string, int>> hedgehog_map_degrees(
    const AdmissiblePair& pair, int depth, std::int64_t index_bound) {
  HedgehogGraph hedgehog = build_hedgehog(pair, depth, index_bound);
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [bundle, p] : hedgehog.spine_bundle_origin) {
    out.emplace_back(hedgehog.graph->bundle(bundle).name, p.length());
  }
  return out;
}

// ---- report rendering -------------------------------------------------------------

bool IsoReport::pass() const {
  return axioms.passed() && degrees.passed() && stars.passed() && vertices.passed() &&
         surjectivity.passed() && products.passed();
}

std::string IsoReport::to_text() const {
  std::ostringstream out;
  out << "graded *-isomorphism verification (depth " << depth << ", index bound "
      << index_bound << ", seed " << seed << ")\n";
  out << "porcupine complete at this depth: " << (porcupine_complete ? "yes" : "no")
      << "\n";
  auto line = [&](const CheckSection& s) {
    out << "  " << s.name << ": " << s.checked << " checked, " << s.failures.size()
        << " failed\n";
  };
  line(axioms);
  line(degrees);
  line(stars);
  line(vertices);
  out << "  surjectivity: " << spanning_witnessed << "/" << spanning_attempted
      << " spanning monomials witnessed, " << surjectivity.failures.size()
      << " failed\n";
  line(products);
  for (const CheckSection* s :
       {&axioms, &degrees, &stars, &vertices, &surjectivity, &products}) {
    for (const CheckFailure& f : s->failures) {
      out << "  [" << s->name << "] " << f.instance << ": " << f.detail << "\n";
    }
  }
  out << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string IsoReport::to_json_string() const {
  nlohmann::json doc;
  doc["pass"] = pass();
  doc["depth"] = depth;
  doc["index_bound"] = index_bound;
  doc["seed"] = seed;
  doc["porcupine_complete"] = porcupine_complete;
  doc["spanning"] = {{"attempted", spanning_attempted}, {"witnessed", spanning_witnessed}};
  for (const CheckSection* s :
       {&axioms, &degrees, &stars, &vertices, &surjectivity, &products}) {
    nlohmann::json section;
    section["checked"] = s->checked;
    section["failures"] = nlohmann::json::array();
    for (const CheckFailure& f : s->failures) {
      section["failures"].push_back({{"instance", f.instance}, {"detail", f.detail}});
    }
    doc["checks"][s->name] = std::move(section);
  }
  return doc.dump();
}

}  // namespace lpa
