// Test-only oracles and random generators. Nothing here calls into the code
// path it is used to check.
#ifndef MONKBENCH_TESTS_ORACLES_HPP
#define MONKBENCH_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "monkbench/ba/presentation.hpp"

namespace monkbench::testing {

using Rng = std::mt19937_64;

inline Term random_term(Rng& rng, std::span<const Label> labels, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 5);
  int k = pick(rng);
  if (labels.empty() && k == 2) k = 0;
  switch (k) {
    case 0: return std::bernoulli_distribution(0.5)(rng) ? Term::zero() : Term::one();
    case 1:
    case 2: {
      if (labels.empty()) return Term::one();
      std::uniform_int_distribution<std::size_t> idx(0, labels.size() - 1);
      return Term::gen(labels[idx(rng)]);
    }
    case 3: return ~random_term(rng, labels, depth - 1);
    case 4: return random_term(rng, labels, depth - 1) & random_term(rng, labels, depth - 1);
    default: return random_term(rng, labels, depth - 1) | random_term(rng, labels, depth - 1);
  }
}

/// Arbitrary presentation (not necessarily a valid forcing condition).
inline PresentationPtr random_presentation(Rng& rng, std::size_t max_width, std::size_t max_rows,
                                           bool allow_empty = false) {
  std::uniform_int_distribution<std::size_t> wdist(1, max_width);
  std::size_t width = wdist(rng);
  std::vector<Label> pool(40);
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<Label>(i);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Label> w(pool.begin(), pool.begin() + width);
  std::sort(w.begin(), w.end());
  std::uniform_int_distribution<std::size_t> rdist(allow_empty ? 0 : 1, max_rows);
  std::size_t target = rdist(rng);
  std::uniform_int_distribution<Row> rowdist(0, width_mask(width));
  std::set<Row> rows;
  for (std::size_t tries = 0; rows.size() < target && tries < 10 * target; ++tries) rows.insert(rowdist(rng));
  SizeCaps caps;
  caps.max_rows = std::max(caps.max_rows, max_rows);
  return make_presentation(w, std::vector<Row>(rows.begin(), rows.end()), caps);
}

/// Term rewriting: substitute a full 0/1 pattern and simplify bottom-up with
/// the constant rules (not 0 = 1, 0 and t = 0, 1 or t = 1, ...).
inline Term rewrite_under(const Term& t, std::span<const Label> w, Row pattern) {
  switch (t.kind()) {
    case Term::Kind::Zero:
    case Term::Kind::One: return t;
    case Term::Kind::Gen: {
      auto pos = std::lower_bound(w.begin(), w.end(), t.label()) - w.begin();
      return ((pattern >> pos) & 1U) ? Term::one() : Term::zero();
    }
    case Term::Kind::Not: {
      Term a = rewrite_under(t.lhs(), w, pattern);
      return a.kind() == Term::Kind::Zero ? Term::one() : Term::zero();
    }
    case Term::Kind::And: {
      Term a = rewrite_under(t.lhs(), w, pattern);
      if (a.kind() == Term::Kind::Zero) return a;
      return rewrite_under(t.rhs(), w, pattern);
    }
    case Term::Kind::Or: {
      Term a = rewrite_under(t.lhs(), w, pattern);
      if (a.kind() == Term::Kind::One) return a;
      return rewrite_under(t.rhs(), w, pattern);
    }
  }
  return t;
}

/// Zero test from the defining relations alone: t = 0 in BA[w,F] iff every
/// complete minterm of w on which t rewrites to 1 is killed by a relation,
/// i.e. no row of F matches that complete pattern.
inline bool zero_by_relations(const Term& t, const Presentation& p) {
  const auto& w = p.labels();
  for (Row pattern = 0; pattern <= width_mask(w.size()); ++pattern) {
    if (rewrite_under(t, w, pattern).kind() != Term::Kind::One) continue;
    bool matched = std::any_of(p.rows().begin(), p.rows().end(), [&](Row f) { return f == pattern; });
    if (matched) return false;
    if (pattern == width_mask(w.size())) break;
  }
  return true;
}

/// Naive closure: iterate meet/join/complement over the whole set until no
/// new support appears.
inline std::set<Support> naive_closure(const PresentationPtr& p, std::span<const Element> gens) {
  std::set<Support> s;
  s.insert(Element::zero(p).support());
  s.insert(Element::one(p).support());
  for (const Element& g : gens) s.insert(g.support());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Support> cur(s.begin(), s.end());
    for (const Support& a : cur) {
      grew |= s.insert(~a).second;
      for (const Support& b : cur) {
        grew |= s.insert(a & b).second;
        grew |= s.insert(a | b).second;
      }
    }
  }
  return s;
}

}  // namespace monkbench::testing

#endif  // MONKBENCH_TESTS_ORACLES_HPP
