#pragma once

// Deterministic samplers for paths, monomials and elements over a graph.

#include <random>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"
#include "support/randgraph.hpp"

namespace lpa::testing {

// Trivial paths at every vertex plus all edge paths up to max_len.
inline std::vector<lpa::Path> all_paths(const lpa::Graph& g, int max_len,
                                        std::int64_t index_bound) {
  std::vector<lpa::Path> out;
  for (lpa::VertexId v = 0; v < g.vertex_count(); ++v) {
    out.push_back(lpa::Path::at_vertex(v));
  }
  auto longer = lpa::paths_into(g, g.all_vertices(), max_len, index_bound);
  out.insert(out.end(), longer.begin(), longer.end());
  return out;
}

// Pools of (p, q) candidates grouped so that r(p) = r(q) can be drawn fast.
struct MonomialPool {
  std::vector<std::vector<lpa::Path>> by_range;

  MonomialPool(const lpa::Graph& g, int max_len, std::int64_t index_bound)
      : by_range(g.vertex_count()) {
    for (const lpa::Path& p : all_paths(g, max_len, index_bound)) {
      by_range[p.range()].push_back(p);
    }
  }

  lpa::Monomial draw(std::mt19937_64& rng) const {
    std::vector<lpa::VertexId> nonempty;
    for (lpa::VertexId v = 0; v < static_cast<lpa::VertexId>(by_range.size()); ++v) {
      if (!by_range[v].empty()) nonempty.push_back(v);
    }
    lpa::VertexId v = nonempty[pick(rng, nonempty.size())];
    const auto& pool = by_range[v];
    return lpa::Monomial{pool[pick(rng, pool.size())], pool[pick(rng, pool.size())]};
  }
};

inline lpa::LpaElement random_element(std::mt19937_64& rng, const lpa::GraphPtr& g,
                                      const MonomialPool& pool, int max_terms = 3) {
  static const int kNumerators[] = {1, -1, 2, -2, 3, -5, 7};
  static const int kDenominators[] = {1, 1, 1, 2, 3};
  lpa::LpaElement out = lpa::LpaElement::zero(g);
  int n = 1 + static_cast<int>(pick(rng, max_terms));
  for (int i = 0; i < n; ++i) {
    lpa::Monomial m = pool.draw(rng);
    lpa::Coefficient c(kNumerators[pick(rng, 7)], kDenominators[pick(rng, 5)]);
    out = out + lpa::LpaElement::monomial(g, m.p, m.q, c);
  }
  return out;
}

}  // namespace lpa::testing
