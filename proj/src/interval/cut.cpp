#include "monkbench/interval/cut.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "monkbench/errors.hpp"

namespace monkbench {

namespace {

using BigInt = boost::multiprecision::cpp_int;

bool is_perfect_square(std::int64_t d) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(d)));
  while (s * s > d) --s;
  while ((s + 1) * (s + 1) <= d) ++s;
  return s * s == d;
}

bool valid_line(const LineCut& c) {
  return c.kind != LineCut::Kind::Irrational || (c.d >= 2 && !is_perfect_square(c.d));
}

std::string line_string(const LineCut& c) {
  switch (c.kind) {
    case LineCut::Kind::NegInfinity: return "-inf";
    case LineCut::Kind::PosInfinity: return "+inf";
    case LineCut::Kind::RationalLeft: return "left(" + rational_string(c.q) + ")";
    case LineCut::Kind::RationalRight: return "right(" + rational_string(c.q) + ")";
    case LineCut::Kind::Irrational:
      return "sqrt(" + std::to_string(c.d) + ")" + (c.q == Rational(0) ? "" : "+" + rational_string(c.q));
  }
  return "?";
}

// Cofinalities of the two sides of a cut of one copy of Q.
SymCard line_lower_cf(const LineCut& c) {
  switch (c.kind) {
    case LineCut::Kind::NegInfinity: return SymCard::zero();
    case LineCut::Kind::RationalRight: return SymCard::one();
    default: return SymCard::aleph0();
  }
}

SymCard line_upper_cf(const LineCut& c) {
  switch (c.kind) {
    case LineCut::Kind::PosInfinity: return SymCard::zero();
    case LineCut::Kind::RationalLeft: return SymCard::one();
    default: return SymCard::aleph0();
  }
}

bool endpoint_in_lower(const Cut& c, const Endpoint& e) {
  if (e.tag == Endpoint::Tag::NegInf) return true;
  if (e.tag == Endpoint::Tag::PosInf) return false;
  return in_lower(c, e.point);
}

}  // namespace

LineCut LineCut::irrational(std::int64_t d, Rational r) {
  LineCut c{Kind::Irrational, r, d};
  if (!valid_line(c)) throw UsageError("irrational cut needs a non-square d >= 2");
  return c;
}

bool LineCut::below(const Rational& x) const {
  switch (kind) {
    case Kind::NegInfinity: return false;
    case Kind::PosInfinity: return true;
    case Kind::RationalLeft: return x < q;
    case Kind::RationalRight: return x <= q;
    case Kind::Irrational: break;
  }
  // x < q + sqrt(d)  iff  t = x - q < 0, or t^2 < d.
  BigInt num = BigInt(x.numerator()) * q.denominator() - BigInt(q.numerator()) * x.denominator();
  BigInt den = BigInt(x.denominator()) * q.denominator();
  if (num < 0) return true;
  return num * num < BigInt(d) * den * den;
}

std::string Cut::to_string() const {
  switch (kind) {
    case Kind::Position: return "position " + std::to_string(index);
    case Kind::Line: return line_string(line);
    case Kind::InBlock: return "block " + std::to_string(index) + " at " + line_string(line);
    case Kind::BetweenBlocks: return "after block " + std::to_string(index);
    case Kind::Top: return "top";
  }
  return "?";
}

void check_cut(const Cut& c, const LinOrder& order) {
  bool ok = false;
  switch (order.kind()) {
    case LinOrder::Kind::Finite:
      ok = c.kind == Cut::Kind::Position && c.index >= 0 && static_cast<std::size_t>(c.index) <= order.size();
      break;
    case LinOrder::Kind::Rationals: ok = c.kind == Cut::Kind::Line && valid_line(c.line); break;
    case LinOrder::Kind::LexQ:
      ok = (c.kind == Cut::Kind::InBlock && c.index >= 0 && valid_line(c.line)) ||
           (c.kind == Cut::Kind::BetweenBlocks && c.index >= 0) || c.kind == Cut::Kind::Top;
      break;
  }
  if (!ok) throw UsageError("'" + c.to_string() + "' is not a cut of " + order.to_string());
}

bool in_lower(const Cut& c, const Point& p) {
  switch (c.kind) {
    case Cut::Kind::Position: return p.block < c.index;
    case Cut::Kind::Line: return c.line.below(p.q);
    case Cut::Kind::InBlock: return p.block < c.index || (p.block == c.index && c.line.below(p.q));
    case Cut::Kind::BetweenBlocks: return p.block <= c.index;
    case Cut::Kind::Top: return true;
  }
  return false;
}

bool cut_member(const Cut& c, const IntervalElem& x) {
  check_cut(c, x.order());
  std::vector<Endpoint> lows{Endpoint::neg_inf()}, highs{Endpoint::pos_inf()};
  for (const auto& part : x.parts())
    for (const Endpoint& e : {part.lo, part.hi}) {
      if (e.tag != Endpoint::Tag::At) continue;
      (endpoint_in_lower(c, e) ? lows : highs).push_back(e);
    }
  for (const auto& a0 : lows)
    for (const auto& a1 : highs) {
      IntervalElem w = IntervalElem::interval(x.order(), a0, a1);
      if (!w.is_zero() && leq(w, x)) return true;
    }
  return false;
}

bool cut_member_interior(const Cut& c, const IntervalElem& x) {
  check_cut(c, x.order());
  const bool empty_lower_with_min = c.kind == Cut::Kind::Position && c.index == 0;
  for (const auto& part : x.parts()) {
    bool lo_ok = endpoint_in_lower(c, part.lo) || (empty_lower_with_min && part.lo == Endpoint::at(finite_point(0)));
    bool hi_ok = !endpoint_in_lower(c, part.hi);
    if (lo_ok && hi_ok) return true;
  }
  return false;
}

UltrafilterReport cut_ultrafilter_props(const Cut& c, std::span<const IntervalElem> samples) {
  UltrafilterReport r;
  r.samples = samples.size();
  if (samples.empty()) return r;
  const LinOrder& order = samples.front().order();
  r.one_member = cut_member(c, IntervalElem::one(order));
  r.zero_member = cut_member(c, IntervalElem::zero(order));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const IntervalElem& x = samples[i];
    const IntervalElem& y = samples[(i + 1) % samples.size()];
    bool in_x = cut_member(c, x);
    if (in_x != cut_member_interior(c, x)) ++r.formulation_mismatches;
    if (in_x == cut_member(c, complement(x))) ++r.dichotomy_failures;
    bool in_y = cut_member(c, y);
    if ((in_x && in_y) != cut_member(c, meet(x, y))) ++r.meet_failures;
    if (in_x && !cut_member(c, join(x, y))) ++r.upward_failures;
  }
  return r;
}

std::pair<SymCard, SymCard> cut_cofinalities(const Cut& c, const LinOrder& order) {
  check_cut(c, order);
  switch (c.kind) {
    case Cut::Kind::Position: {
      const auto n = static_cast<std::int64_t>(order.size());
      return {c.index == 0 ? SymCard::zero() : SymCard::one(), c.index == n ? SymCard::zero() : SymCard::one()};
    }
    case Cut::Kind::Line: return {line_lower_cf(c.line), line_upper_cf(c.line)};
    case Cut::Kind::InBlock: {
      // Block indices are successors here: block i-1 sits right below block i
      // and block i+1 right above, neither with an end point on that side.
      SymCard lower = line_lower_cf(c.line);
      if (lower == SymCard::zero() && c.index > 0) lower = SymCard::aleph0();
      SymCard upper = line_upper_cf(c.line);
      if (upper == SymCard::zero()) upper = SymCard::aleph0();
      return {lower, upper};
    }
    case Cut::Kind::BetweenBlocks: return {SymCard::aleph0(), SymCard::aleph0()};
    case Cut::Kind::Top: return {order.lambda(), SymCard::zero()};
  }
  throw UsageError("unknown cut kind");
}

SymCard pi_of_cut(const SymCard& lower, const SymCard& upper) {
  if (lower == SymCard::zero() && upper == SymCard::zero()) throw UsageError("a cut with both sides empty");
  for (const SymCard* s : {&lower, &upper})
    if (s->kind() == SymCard::Kind::Fin) throw UsageError("a cofinality is 0, 1 or infinite");
  SymCard lo = lower == SymCard::zero() ? SymCard::one() : lower;
  SymCard up = upper == SymCard::zero() ? SymCard::one() : upper;
  if (lo.is_infinite() && up.is_infinite()) return max(lo, up);
  if (up == SymCard::one()) return lo;
  return up;
}

SymCard pi_of_cut(const Cut& c, const LinOrder& order) {
  auto [lower, upper] = cut_cofinalities(c, order);
  return pi_of_cut(lower, upper);
}

std::vector<Cut> representative_cuts(const LinOrder& order) {
  const Rational zero(0);
  const std::vector<LineCut> line{LineCut::neg_infinity(), LineCut::left_of(zero), LineCut::right_of(zero),
                                  LineCut::irrational(2, zero), LineCut::pos_infinity()};
  std::vector<Cut> out;
  switch (order.kind()) {
    case LinOrder::Kind::Finite:
      for (std::size_t k = 0; k <= order.size(); ++k) out.push_back(Cut::position(static_cast<std::int64_t>(k)));
      break;
    case LinOrder::Kind::Rationals:
      for (const auto& l : line) out.push_back(Cut::on_line(l));
      break;
    case LinOrder::Kind::LexQ:
      for (const auto& l : line) out.push_back(Cut::in_block(0, l));
      out.push_back(Cut::in_block(1, LineCut::neg_infinity()));
      out.push_back(Cut::between_blocks(0));
      out.push_back(Cut::top());
      break;
  }
  return out;
}

SymCard pichi_order(const LinOrder& order) {
  SymCard best = SymCard::zero();
  for (const Cut& c : representative_cuts(order)) best = max(best, pi_of_cut(c, order));
  return best;
}

}  // namespace monkbench
