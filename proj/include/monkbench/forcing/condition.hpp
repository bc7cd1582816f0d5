#ifndef MONKBENCH_FORCING_CONDITION_HPP
#define MONKBENCH_FORCING_CONDITION_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monkbench/ba/carrier.hpp"

namespace monkbench {

/// Desk-scale bounds for the poset. mu_bound caps |w| (further capped by the
/// row width) and |F|; labels must lie below lambda_bound.
struct PosetBounds {
  std::size_t mu_bound = 4096;
  Label lambda_bound = Label{1} << 20;

  SizeCaps caps() const;
  /// UsageError naming the first exceeded bound.
  void check(const Presentation& p) const;
};

/// Every violation of the two condition clauses. A condition is a
/// Presentation for which this report is empty.
struct ConditionReport {
  /// Labels hit by no row.
  std::vector<Label> alpha;
  /// (f, a) with f^[a] missing from F.
  std::vector<std::pair<Row, Label>> beta;

  bool ok() const { return alpha.empty() && beta.empty(); }
  std::string to_string(const Presentation& p) const;
};

ConditionReport validate_condition(const Presentation& p);
/// UsageError carrying the report when p is not a condition.
void require_condition(const Presentation& p, const char* what);

/// cl(F) over w. A finite w is its own finite subset, so cl(F) = F; the
/// result is F sorted and deduplicated.
std::vector<Row> closure_cl(std::span<const Row> rows, std::span<const Label> w);
/// g agrees with some member of F on every finite u inside w.
bool in_closure(Row g, std::span<const Row> rows, std::span<const Label> w);

/// The order clauses alone: w^p inside w^q, every row of q restricts into
/// cl(F^p), and every row of p extends into F^q. No validity check.
bool order_clauses_hold(const Presentation& p, const Presentation& q);
/// p <= q. UsageError when either side is not a condition.
bool cond_leq(const Presentation& p, const Presentation& q);

/// Upper bound of an ascending chain: w is the union, and each row f of each
/// member is replaced by its least extension (canonical order) that restricts
/// into cl(F) of every member. UsageError on an empty chain or a non-condition;
/// IntegrityError if some f has no extension or the result is not an upper bound.
PresentationPtr chain_upper_bound(std::span<const PresentationPtr> chain, const PosetBounds& bounds = {});

/// e lies in the subalgebra generated by {x_a : a in gens}. UsageError when
/// gens leaves w.
bool in_generated_subalgebra(const Element& e, std::span<const Label> gens);

struct NoveltyFlags {
  bool nonzero = false;
  bool not_generated = false;
  bool nothing_below = false;

  bool all() const { return nonzero && not_generated && nothing_below; }
};

/// x_a against the subalgebra generated by {x_b : b in w, b < a}. UsageError
/// when a is not in w.
NoveltyFlags check_generator_novelty(const PresentationPtr& p, Label a);

/// Minterms of w^p on every pattern in F^p or in the restriction of F^q are
/// zero in BA[p] exactly when zero in BA[q]. Those minterms are the atoms of
/// BA[p] together with the patterns q adds, so this decides whether the
/// generators of p span a copy of BA[p] inside BA[q]. Needs w^p inside w^q.
bool embeds_as_subalgebra(const PresentationPtr& p, const PresentationPtr& q);
/// As above, guarded by cond_leq(p, q) (UsageError otherwise).
bool baq_embedding_check(const PresentationPtr& p, const PresentationPtr& q);

}  // namespace monkbench

#endif  // MONKBENCH_FORCING_CONDITION_HPP
