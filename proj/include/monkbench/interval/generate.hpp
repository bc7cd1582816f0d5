#ifndef MONKBENCH_INTERVAL_GENERATE_HPP
#define MONKBENCH_INTERVAL_GENERATE_HPP

#include <span>
#include <vector>

#include "monkbench/interval/cut.hpp"
#include "monkbench/random.hpp"

namespace monkbench {

/// A small random rational: numerator in [-20, 20], denominator in [1, 4].
Rational random_rational(Rng& rng);
Point random_point(Rng& rng, const LinOrder& order);

/// Up to max_parts random intervals (infinite ends included now and then).
IntervalElem random_interval_elem(Rng& rng, const LinOrder& order, std::size_t max_parts = 4);

/// Rational left, rational right or r + sqrt(d) cut of Q, in turn by index.
Cut random_rational_cut(Rng& rng, std::size_t index);

/// Points deciding every set built from the given elements: each endpoint,
/// a point strictly between consecutive endpoints, and points beyond both
/// ends. Membership is constant between consecutive endpoints, so agreement
/// on these points is agreement everywhere.
std::vector<Point> deciding_points(const LinOrder& order, std::span<const IntervalElem> elems);

}  // namespace monkbench

#endif  // MONKBENCH_INTERVAL_GENERATE_HPP
