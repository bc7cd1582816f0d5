#include "monkbench/interval/generate.hpp"

#include <algorithm>

namespace monkbench {

Rational random_rational(Rng& rng) {
  return Rational(uniform<std::int64_t>(rng, -20, 20), uniform<std::int64_t>(rng, 1, 4));
}

Point random_point(Rng& rng, const LinOrder& order) {
  switch (order.kind()) {
    case LinOrder::Kind::Finite:
      return finite_point(uniform<std::int64_t>(rng, 0, static_cast<std::int64_t>(order.size()) - 1));
    case LinOrder::Kind::Rationals: return rational_point(random_rational(rng));
    case LinOrder::Kind::LexQ: return {uniform<std::int64_t>(rng, 0, 3), random_rational(rng)};
  }
  return {};
}

IntervalElem random_interval_elem(Rng& rng, const LinOrder& order, std::size_t max_parts) {
  std::vector<Interval> parts;
  for (std::size_t k = uniform<std::size_t>(rng, 0, max_parts); k > 0; --k) {
    Endpoint a = chance(rng, 0.1) ? Endpoint::neg_inf() : Endpoint::at(random_point(rng, order));
    Endpoint b = chance(rng, 0.1) ? Endpoint::pos_inf() : Endpoint::at(random_point(rng, order));
    if (b < a) std::swap(a, b);
    if (a.tag == Endpoint::Tag::PosInf || b.tag == Endpoint::Tag::NegInf) continue;
    parts.push_back({a, b});
  }
  return IntervalElem(order, std::move(parts));
}

Cut random_rational_cut(Rng& rng, std::size_t index) {
  static constexpr std::int64_t kNonSquares[] = {2, 3, 5, 6, 7, 8, 10, 11, 12, 13};
  Rational q = random_rational(rng);
  switch (index % 3) {
    case 0: return Cut::on_line(LineCut::left_of(q));
    case 1: return Cut::on_line(LineCut::right_of(q));
    default: return Cut::on_line(LineCut::irrational(kNonSquares[uniform<std::size_t>(rng, 0, 9)], q));
  }
}

std::vector<Point> deciding_points(const LinOrder& order, std::span<const IntervalElem> elems) {
  std::vector<Point> ends;
  for (const auto& x : elems)
    for (const auto& part : x.parts())
      for (const Endpoint& e : {part.lo, part.hi})
        if (e.tag == Endpoint::Tag::At) ends.push_back(e.point);
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

  if (order.kind() == LinOrder::Kind::Finite) {
    std::vector<Point> all;
    for (std::size_t i = 0; i < order.size(); ++i) all.push_back(finite_point(static_cast<std::int64_t>(i)));
    return all;
  }
  std::vector<Point> out;
  auto shifted = [](Point p, std::int64_t by) { return Point{p.block, p.q + Rational(by)}; };
  if (ends.empty()) return {Point{0, Rational(0)}};
  out.push_back(shifted(ends.front(), -1));
  for (std::size_t i = 0; i < ends.size(); ++i) {
    out.push_back(ends[i]);
    if (i + 1 < ends.size()) {
      const Point& a = ends[i];
      const Point& b = ends[i + 1];
      // Within one block the midpoint; across blocks a point just past a.
      out.push_back(a.block == b.block ? Point{a.block, (a.q + b.q) / Rational(2)} : shifted(a, 1));
    }
  }
  out.push_back(shifted(ends.back(), 1));
  return out;
}

}  // namespace monkbench
