#include "monkbench/interval/elem.hpp"

#include <algorithm>

#include "monkbench/errors.hpp"

namespace monkbench {

namespace {

using Tag = Endpoint::Tag;

bool finite(const LinOrder& o) { return o.kind() == LinOrder::Kind::Finite; }

Endpoint normalize_lo(const LinOrder& order, Endpoint e) {
  if (e.tag == Tag::PosInf) throw UsageError("+inf cannot open an interval");
  if (e.tag == Tag::At) check_point(order, e.point);
  if (finite(order) && e.tag == Tag::NegInf) return Endpoint::at(finite_point(0));
  return e;
}

Endpoint normalize_hi(const LinOrder& order, Endpoint e) {
  if (e.tag == Tag::NegInf) throw UsageError("-inf cannot close an interval");
  if (e.tag == Tag::At && finite(order) && e.point == finite_point(static_cast<std::int64_t>(order.size())))
    return Endpoint::pos_inf();
  if (e.tag == Tag::At) check_point(order, e.point);
  return e;
}

void require_same(const IntervalElem& x, const IntervalElem& y) {
  if (!(x.order() == y.order())) throw UsageError("interval elements over different orders");
}

std::string endpoint_string(const LinOrder& order, const Endpoint& e) {
  if (e.tag != Tag::At) return e.to_string();
  switch (order.kind()) {
    case LinOrder::Kind::Finite: return std::to_string(e.point.block);
    case LinOrder::Kind::Rationals: return rational_string(e.point.q);
    case LinOrder::Kind::LexQ: return "(" + std::to_string(e.point.block) + "," + rational_string(e.point.q) + ")";
  }
  return "?";
}

}  // namespace

IntervalElem::IntervalElem(LinOrder order, std::vector<Interval> parts) : order_(std::move(order)) {
  for (auto& p : parts) {
    p.lo = normalize_lo(order_, p.lo);
    p.hi = normalize_hi(order_, p.hi);
  }
  std::erase_if(parts, [](const Interval& p) { return !(p.lo < p.hi); });
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const auto& p : parts) {
    if (!parts_.empty() && p.lo <= parts_.back().hi) {
      parts_.back().hi = std::max(parts_.back().hi, p.hi);
    } else {
      parts_.push_back(p);
    }
  }
}

IntervalElem IntervalElem::one(LinOrder order) {
  return IntervalElem(std::move(order), {{Endpoint::neg_inf(), Endpoint::pos_inf()}});
}

IntervalElem IntervalElem::interval(LinOrder order, Endpoint lo, Endpoint hi) {
  return IntervalElem(std::move(order), {{lo, hi}});
}

bool IntervalElem::contains(const Point& p) const {
  Endpoint e = Endpoint::at(p);
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.lo <= e && e < i.hi; });
}

std::string IntervalElem::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& p : parts_) {
    if (!out.empty()) out += " u ";
    out += "[" + endpoint_string(order_, p.lo) + "," + endpoint_string(order_, p.hi) + ")";
  }
  return out;
}

IntervalElem join(const IntervalElem& x, const IntervalElem& y) {
  require_same(x, y);
  std::vector<Interval> parts = x.parts();
  parts.insert(parts.end(), y.parts().begin(), y.parts().end());
  return IntervalElem(x.order(), std::move(parts));
}

IntervalElem meet(const IntervalElem& x, const IntervalElem& y) {
  require_same(x, y);
  std::vector<Interval> parts;
  for (const auto& a : x.parts())
    for (const auto& b : y.parts()) parts.push_back({std::max(a.lo, b.lo), std::min(a.hi, b.hi)});
  return IntervalElem(x.order(), std::move(parts));
}

IntervalElem complement(const IntervalElem& x) {
  std::vector<Interval> gaps;
  Endpoint cursor = Endpoint::neg_inf();
  for (const auto& p : x.parts()) {
    gaps.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor.tag != Tag::PosInf) gaps.push_back({cursor, Endpoint::pos_inf()});
  // A gap may read [-inf, -inf) or [p, p); the constructor drops both.
  std::erase_if(gaps, [](const Interval& g) { return g.hi.tag == Tag::NegInf; });
  return IntervalElem(x.order(), std::move(gaps));
}

bool leq(const IntervalElem& x, const IntervalElem& y) {
  require_same(x, y);
  return meet(x, complement(y)).is_zero();
}

}  // namespace monkbench
