#ifndef MONKBENCH_INTERVAL_CUT_HPP
#define MONKBENCH_INTERVAL_CUT_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monkbench/interval/elem.hpp"

namespace monkbench {

/// A cut of the rational line.
struct LineCut {
  enum class Kind { NegInfinity, RationalLeft, RationalRight, Irrational, PosInfinity };
  Kind kind = Kind::NegInfinity;
  /// The rational for Left/Right; the offset r for Irrational.
  Rational q{0};
  /// Irrational cuts sit at q + sqrt(d), d a non-square natural.
  std::int64_t d = 0;

  static LineCut neg_infinity() { return {Kind::NegInfinity, Rational(0), 0}; }
  static LineCut pos_infinity() { return {Kind::PosInfinity, Rational(0), 0}; }
  /// Lower side (-inf, q).
  static LineCut left_of(Rational q) { return {Kind::RationalLeft, q, 0}; }
  /// Lower side (-inf, q].
  static LineCut right_of(Rational q) { return {Kind::RationalRight, q, 0}; }
  /// UsageError unless d >= 2 is not a perfect square.
  static LineCut irrational(std::int64_t d, Rational r);

  /// x lies in the lower side. Exact, via integer sign tests.
  bool below(const Rational& x) const;
  bool operator==(const LineCut&) const = default;
};

/// A Dedekind cut (lower side, upper side) of a described order.
struct Cut {
  enum class Kind { Position, Line, InBlock, BetweenBlocks, Top };
  Kind kind = Kind::Top;
  /// Position k (lower side = first k points) or block index.
  std::int64_t index = 0;
  LineCut line;

  static Cut position(std::int64_t k) { return {Kind::Position, k, {}}; }
  static Cut on_line(LineCut c) { return {Kind::Line, 0, c}; }
  static Cut in_block(std::int64_t block, LineCut c) { return {Kind::InBlock, block, c}; }
  /// Lower side = blocks 0..block.
  static Cut between_blocks(std::int64_t block) { return {Kind::BetweenBlocks, block, {}}; }
  /// Lower side = everything.
  static Cut top() { return {Kind::Top, 0, {}}; }

  bool operator==(const Cut&) const = default;
  std::string to_string() const;
};

/// UsageError when c is not a cut of this order.
void check_cut(const Cut& c, const LinOrder& order);

/// p lies in the lower side of c.
bool in_lower(const Cut& c, const Point& p);

/// Membership of x in the ultrafilter of c: some [a0, a1) <= x with a0 in the
/// lower side or -inf and a1 in the upper side or +inf, [a0, a1) nonzero.
/// The infinite endpoints stand in for an empty side and add nothing when the
/// side is nonempty.
bool cut_member(const Cut& c, const IntervalElem& x);
/// Same set, decided as: the cut falls inside one of x's intervals, i.e. its
/// lower end is in the lower side (or -inf, or the order's least point when
/// the lower side is empty) and its upper end in the upper side (or +inf).
bool cut_member_interior(const Cut& c, const IntervalElem& x);

struct UltrafilterReport {
  std::size_t samples = 0;
  std::size_t formulation_mismatches = 0;
  std::size_t dichotomy_failures = 0;
  std::size_t meet_failures = 0;
  std::size_t upward_failures = 0;
  bool one_member = false;
  bool zero_member = true;

  bool ok() const {
    return formulation_mismatches == 0 && dichotomy_failures == 0 && meet_failures == 0 && upward_failures == 0 &&
           one_member && !zero_member;
  }
};

/// Ultrafilter laws of c's membership on the given elements: exactly one of x
/// and its complement is in; x, y in iff x meet y in (consecutive pairs);
/// x in implies x join y in; 1 in, 0 out; both formulations agree.
UltrafilterReport cut_ultrafilter_props(const Cut& c, std::span<const IntervalElem> samples);

/// (cf of the lower side, cf of the reversed upper side). An empty side is
/// Zero, a side with an end point is One.
std::pair<SymCard, SymCard> cut_cofinalities(const Cut& c, const LinOrder& order);

/// pi of the cut's ultrafilter from the two cofinalities; a Zero side counts
/// as One. UsageError when both are Zero or one is finite but above 1.
SymCard pi_of_cut(const SymCard& lower, const SymCard& upper);
SymCard pi_of_cut(const Cut& c, const LinOrder& order);

/// One cut per cofinality class of the order.
std::vector<Cut> representative_cuts(const LinOrder& order);

/// Maximum of pi_of_cut over representative_cuts.
SymCard pichi_order(const LinOrder& order);

}  // namespace monkbench

#endif  // MONKBENCH_INTERVAL_CUT_HPP
