#ifndef MONKBENCH_INTERVAL_ELEM_HPP
#define MONKBENCH_INTERVAL_ELEM_HPP

#include <string>
#include <vector>

#include "monkbench/interval/order.hpp"

namespace monkbench {

/// Half-open [lo, hi): lo is -inf or a point, hi a point or +inf.
struct Interval {
  Endpoint lo;
  Endpoint hi;

  bool operator==(const Interval&) const = default;
};

/// An element of the interval algebra: a finite union of half-open intervals,
/// stored sorted, disjoint, non-adjacent and with no empty parts. In a finite
/// order -inf is written as point 0 and point n as +inf, so equal point sets
/// have one representation.
class IntervalElem {
 public:
  /// Normalizes arbitrary intervals (empty ones are dropped). UsageError for
  /// endpoints outside the order or an endpoint of the wrong kind.
  IntervalElem(LinOrder order, std::vector<Interval> parts);

  static IntervalElem zero(LinOrder order) { return IntervalElem(std::move(order), {}); }
  static IntervalElem one(LinOrder order);
  static IntervalElem interval(LinOrder order, Endpoint lo, Endpoint hi);

  const LinOrder& order() const { return order_; }
  const std::vector<Interval>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  bool contains(const Point& p) const;
  std::string to_string() const;

  bool operator==(const IntervalElem& o) const { return order_ == o.order_ && parts_ == o.parts_; }

 private:
  LinOrder order_;
  std::vector<Interval> parts_;
};

// Binary operations throw UsageError on mixed orders.
IntervalElem join(const IntervalElem& x, const IntervalElem& y);
IntervalElem meet(const IntervalElem& x, const IntervalElem& y);
IntervalElem complement(const IntervalElem& x);
bool leq(const IntervalElem& x, const IntervalElem& y);
inline bool is_zero(const IntervalElem& x) { return x.is_zero(); }

}  // namespace monkbench

#endif  // MONKBENCH_INTERVAL_ELEM_HPP
