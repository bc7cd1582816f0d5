#ifndef MONKBENCH_INTERVAL_FINITE_HPP
#define MONKBENCH_INTERVAL_FINITE_HPP

#include <vector>

#include "monkbench/ba/carrier.hpp"
#include "monkbench/interval/cut.hpp"

namespace monkbench {

/// The interval algebra of fin:n as a presented algebra: w = {1..n-1} with
/// x_j = [j, +inf); row i (the point i) is 1 exactly at j <= i. Canonical row
/// order is point order, so row i is the atom [i, i+1).
struct FiniteIntervalAlgebra {
  LinOrder order;
  PresentationPtr presentation;
  Carrier carrier;

  Element to_element(const IntervalElem& x) const;
  IntervalElem from_element(const Element& e) const;
};

/// UsageError unless 1 <= n <= 12.
FiniteIntervalAlgebra finite_interval_presentation(std::size_t n);

struct FiniteUltrafilter {
  std::vector<Element> members;
  /// The cut inducing it; of two cuts inducing the same filter, the one with
  /// nonempty lower side.
  Cut cut;
};

/// Every ultrafilter of the fin:n interval algebra, found by testing each
/// principal filter (every filter of a finite algebra is principal), each
/// matched against the cuts 0..n. IntegrityError if one matches no cut.
std::vector<FiniteUltrafilter> enumerate_ultrafilters_finite(const FiniteIntervalAlgebra& algebra);

}  // namespace monkbench

#endif  // MONKBENCH_INTERVAL_FINITE_HPP
