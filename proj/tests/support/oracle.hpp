#pragma once

// Independent rewriting oracle for Leavitt path algebra normal forms.
//
// Elements are kept as formal sums of words over the generator alphabet
// {v, e, e*}. The five axioms are applied as local rules at any position of
// any word until no rule applies:
//
//   (V)   vw -> 0 (v != w),  vv -> v
//   (E1)  s(e)e -> e,  e r(e) -> e     (and the annihilating mismatches -> 0)
//   (E2)  r(e)e* -> e*,  e* s(e) -> e*
//   (CK1) e*f -> 0 (e != f),  e*e -> r(e)
//   (CK2) e e* -> s(e) - sum_{f != e} f f*   (only for the order-maximal edge
//         e at a regular vertex, mirroring the library's orientation)
//
// This is deliberately naive and structurally unrelated to the prefix-based
// product in the library; agreement between the two is what the tests check.
// Every step is validated against the well-founded measure
// mu(word) = (length, sum of junction edge ranks): each replacement word must
// be strictly smaller, which both proves termination and pins the CK2 step
// bound asserted in the property tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"

namespace lpa::testing {

using Word = std::vector<lpa::Generator>;

inline std::tuple<int, lpa::VertexId, lpa::EdgeId> gen_key(const lpa::Generator& g) {
  return {static_cast<int>(g.kind), g.v, g.e};
}

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto ka = gen_key(a[i]);
      auto kb = gen_key(b[i]);
      if (ka != kb) return ka < kb;
    }
    return false;
  }
};

using WordSum = std::map<Word, lpa::Coefficient, WordLess>;

struct RewriteStats {
  long steps = 0;
  long ck2_steps = 0;
};

namespace detail {

inline int edge_rank(const lpa::Graph& g, lpa::EdgeId e) {
  auto edges = g.out_edges_finite(g.source(e));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] == e) return static_cast<int>(i);
  }
  throw std::logic_error("edge not found at its own source");
}

// (length, junction rank sum), compared lexicographically.
inline std::pair<std::size_t, long> measure(const lpa::Graph& g, const Word& w) {
  long ranks = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const auto& a = w[i];
    const auto& b = w[i + 1];
    if (a.kind == lpa::Generator::Kind::Edge && b.kind == lpa::Generator::Kind::Ghost &&
        a.e == b.e && g.kind(g.source(a.e)) == lpa::VertexKind::Regular) {
      ranks += edge_rank(g, a.e);
    }
  }
  return {w.size(), ranks};
}

// Replacement words (with coefficient multipliers) for a rule applied at
// position i, or nullopt when no rule applies there.
inline std::optional<std::vector<std::pair<lpa::Coefficient, Word>>> apply_rule(
    const lpa::Graph& g, const Word& w, std::size_t i, bool* was_ck2) {
  using Kind = lpa::Generator::Kind;
  const lpa::Generator& a = w[i];
  const lpa::Generator& b = w[i + 1];
  std::vector<std::pair<lpa::Coefficient, Word>> out;
  auto splice = [&](std::vector<lpa::Generator> middle) {
    Word next(w.begin(), w.begin() + i);
    next.insert(next.end(), middle.begin(), middle.end());
    next.insert(next.end(), w.begin() + i + 2, w.end());
    return next;
  };
  *was_ck2 = false;

  if (a.kind == Kind::Vertex && b.kind == Kind::Vertex) {
    if (a.v == b.v) out.emplace_back(1, splice({a}));
    return out;
  }
  if (a.kind == Kind::Vertex) {
    bool match = (b.kind == Kind::Edge) ? g.source(b.e) == a.v : g.range(b.e) == a.v;
    if (match) out.emplace_back(1, splice({b}));
    return out;
  }
  if (b.kind == Kind::Vertex) {
    bool match = (a.kind == Kind::Edge) ? g.range(a.e) == b.v : g.source(a.e) == b.v;
    if (match) out.emplace_back(1, splice({a}));
    return out;
  }
  if (a.kind == Kind::Ghost && b.kind == Kind::Edge) {
    // (CK1), including the annihilating case
    if (a.e == b.e) out.emplace_back(1, splice({lpa::Generator::vertex(g.range(a.e))}));
    return out;
  }
  if (a.kind == Kind::Edge && b.kind == Kind::Edge) {
    if (g.range(a.e) == g.source(b.e)) return std::nullopt;  // composable, irreducible
    return out;                                              // annihilates
  }
  if (a.kind == Kind::Ghost && b.kind == Kind::Ghost) {
    if (g.source(a.e) == g.range(b.e)) return std::nullopt;
    return out;
  }
  // edge then ghost
  if (g.range(a.e) != g.range(b.e)) return out;  // not composable through r
  lpa::VertexId v = g.source(a.e);
  if (a.e == b.e && g.kind(v) == lpa::VertexKind::Regular && a.e == g.max_out_edge(v)) {
    *was_ck2 = true;
    out.emplace_back(1, splice({lpa::Generator::vertex(v)}));
    for (lpa::EdgeId f : g.out_edges_finite(v)) {
      if (f == a.e) continue;
      out.emplace_back(-1, splice({lpa::Generator::edge(f), lpa::Generator::ghost(f)}));
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace detail

// Applies rules to exhaustion. When rng is given, the position among all
// applicable (word, position) redexes is chosen at random each step; the
// fixpoint should not depend on that choice.
inline WordSum rewrite_to_fixpoint(const lpa::Graph& g, WordSum sum,
                                   RewriteStats* stats = nullptr,
                                   std::mt19937_64* rng = nullptr) {
  long fuel = 200000;
  for (;;) {
    std::vector<std::pair<Word, std::size_t>> redexes;
    for (const auto& [word, coeff] : sum) {
      for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        bool ck2 = false;
        if (detail::apply_rule(g, word, i, &ck2)) {
          redexes.emplace_back(word, i);
          if (!rng) break;  // leftmost position of the first reducible word
        }
      }
      if (!rng && !redexes.empty()) break;
    }
    if (redexes.empty()) return sum;
    const auto& [word, pos] =
        rng ? redexes[(*rng)() % redexes.size()] : redexes.front();
    bool ck2 = false;
    auto replacement = detail::apply_rule(g, word, pos, &ck2);
    lpa::Coefficient coeff = sum.at(word);
    sum.erase(word);
    auto mu = detail::measure(g, word);
    for (const auto& [mult, next] : *replacement) {
      if (!(detail::measure(g, next) < mu)) {
        throw std::logic_error("rewrite step did not decrease the measure");
      }
      auto [it, fresh] = sum.try_emplace(next, Coefficient(coeff * mult));
      if (!fresh) {
        it->second += coeff * mult;
        if (it->second == 0) sum.erase(it);
      }
    }
    if (stats) {
      ++stats->steps;
      if (ck2) ++stats->ck2_steps;
    }
    if (--fuel == 0) throw std::logic_error("oracle rewriting did not terminate");
  }
}

inline Word word_of_monomial(const lpa::Monomial& m) {
  Word w;
  for (lpa::EdgeId e : m.p.edges()) w.push_back(lpa::Generator::edge(e));
  const auto& qe = m.q.edges();
  for (auto it = qe.rbegin(); it != qe.rend(); ++it) w.push_back(lpa::Generator::ghost(*it));
  if (w.empty()) w.push_back(lpa::Generator::vertex(m.p.source()));
  return w;
}

// A fixpoint word is a vertex or a (possibly one-sided) junction-normal p q*.
inline lpa::Monomial monomial_of_word(const lpa::Graph& g, const Word& w) {
  if (w.size() == 1 && w[0].kind == lpa::Generator::Kind::Vertex) {
    lpa::Path p = lpa::Path::at_vertex(w[0].v);
    return lpa::Monomial{p, p};
  }
  std::vector<lpa::EdgeId> p_edges, q_edges;
  bool in_ghosts = false;
  for (const auto& gen : w) {
    if (gen.kind == lpa::Generator::Kind::Edge) {
      if (in_ghosts) throw std::logic_error("oracle fixpoint word is not in pq* shape");
      p_edges.push_back(gen.e);
    } else if (gen.kind == lpa::Generator::Kind::Ghost) {
      in_ghosts = true;
      q_edges.push_back(gen.e);
    } else {
      throw std::logic_error("oracle fixpoint word contains an inner vertex");
    }
  }
  std::reverse(q_edges.begin(), q_edges.end());
  lpa::Path p = p_edges.empty() ? lpa::Path() : lpa::Path::of_edges(g, p_edges);
  lpa::Path q = q_edges.empty() ? lpa::Path() : lpa::Path::of_edges(g, q_edges);
  if (p_edges.empty()) p = lpa::Path::at_vertex(q.range());
  if (q_edges.empty()) q = lpa::Path::at_vertex(p.range());
  return lpa::Monomial{p, q};
}

// Full oracle: normal form of a raw expression as a monomial/coefficient map,
// directly comparable with LpaElement::terms().
inline std::map<lpa::Monomial, lpa::Coefficient> oracle_normal_form(
    const lpa::Graph& g, const lpa::RawExpression& raw,
    RewriteStats* stats = nullptr, std::mt19937_64* rng = nullptr) {
  WordSum sum;
  for (const auto& [c, word] : raw) {
    if (word.empty()) throw std::invalid_argument("empty word");
    auto [it, fresh] = sum.try_emplace(word, c);
    if (!fresh) it->second += c;
    if (it->second == 0) sum.erase(word);
  }
  WordSum done = rewrite_to_fixpoint(g, std::move(sum), stats, rng);
  std::map<lpa::Monomial, lpa::Coefficient> out;
  for (const auto& [word, coeff] : done) {
    out.emplace(monomial_of_word(g, word), coeff);
  }
  return out;
}

// Oracle product of two monomials.
inline std::map<lpa::Monomial, lpa::Coefficient> oracle_product(
    const lpa::Graph& g, const lpa::Monomial& m1, const lpa::Monomial& m2,
    RewriteStats* stats = nullptr) {
  Word w = word_of_monomial(m1);
  Word w2 = word_of_monomial(m2);
  w.insert(w.end(), w2.begin(), w2.end());
  return oracle_normal_form(g, {{1, w}}, stats);
}

}  // namespace lpa::testing
