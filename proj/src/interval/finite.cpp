#include "monkbench/interval/finite.hpp"

#include "monkbench/errors.hpp"

namespace monkbench {

Element FiniteIntervalAlgebra::to_element(const IntervalElem& x) const {
  if (!(x.order() == order)) throw UsageError("element over a different order");
  Support s(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) s[i] = x.contains(finite_point(static_cast<std::int64_t>(i)));
  return Element(presentation, s);
}

IntervalElem FiniteIntervalAlgebra::from_element(const Element& e) const {
  if (e.presentation_ptr() != presentation && !(e.presentation() == *presentation))
    throw UsageError("element over a different presentation");
  std::vector<Interval> parts;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (e.support().test(i))
      parts.push_back({Endpoint::at(finite_point(static_cast<std::int64_t>(i))),
                       Endpoint::at(finite_point(static_cast<std::int64_t>(i + 1)))});
  return IntervalElem(order, std::move(parts));
}

FiniteIntervalAlgebra finite_interval_presentation(std::size_t n) {
  if (n < 1 || n > 12) throw UsageError("finite interval algebras are limited to 1 <= n <= 12");
  std::vector<Label> w;
  for (Label j = 1; j < n; ++j) w.push_back(j);
  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(width_mask(i));
  auto p = make_presentation(std::move(w), std::move(rows));
  for (std::size_t i = 0; i < n; ++i)
    if (p->row(i) != width_mask(i)) throw IntegrityError("row order differs from point order");
  return {LinOrder::finite(n), p, full_algebra(p)};
}

std::vector<FiniteUltrafilter> enumerate_ultrafilters_finite(const FiniteIntervalAlgebra& alg) {
  const auto& all = alg.carrier.elements();
  std::vector<FiniteUltrafilter> out;
  for (const Element& gen : all) {
    std::vector<Element> up;
    for (const Element& e : all)
      if (leq(gen, e)) up.push_back(e);
    if (!is_ultrafilter(up, alg.carrier)) continue;

    std::optional<Cut> match;
    for (std::size_t k = 0; k <= alg.order.size(); ++k) {
      Cut c = Cut::position(static_cast<std::int64_t>(k));
      bool same = true;
      for (const Element& e : all) {
        bool in = std::any_of(up.begin(), up.end(), [&](const Element& u) { return u == e; });
        if (in != cut_member(c, alg.from_element(e))) {
          same = false;
          break;
        }
      }
      // Position 0 duplicates position 1; keep the one with a nonempty lower side.
      if (same && k > 0) match = c;
      if (same && k == 0 && !match) match = c;
    }
    if (!match) throw IntegrityError("ultrafilter matched by no cut");
    out.push_back({std::move(up), *match});
  }
  return out;
}

}  // namespace monkbench
