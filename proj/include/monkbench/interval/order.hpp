#ifndef MONKBENCH_INTERVAL_ORDER_HPP
#define MONKBENCH_INTERVAL_ORDER_HPP

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "monkbench/interval/symcard.hpp"

namespace monkbench {

using Rational = boost::rational<std::int64_t>;

/// "n/d" or "n". ParseError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);
std::string rational_string(const Rational& q);

/// A described linear order: n points, the rationals, or lambda copies of the
/// rationals one after another.
class LinOrder {
 public:
  enum class Kind { Finite, Rationals, LexQ };

  /// UsageError when n = 0.
  static LinOrder finite(std::size_t n);
  static LinOrder rationals() { return LinOrder(Kind::Rationals, 0, SymCard::aleph0()); }
  /// UsageError unless lambda is aleph0 or a regular token.
  static LinOrder lex_q(SymCard lambda);
  /// "fin:n", "Q", "lexQ:<card>". ParseError otherwise.
  static LinOrder parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::size_t size() const { return n_; }
  const SymCard& lambda() const { return lambda_; }
  std::string to_string() const;

  bool operator==(const LinOrder& o) const { return kind_ == o.kind_ && n_ == o.n_ && lambda_ == o.lambda_; }

 private:
  LinOrder(Kind kind, std::size_t n, SymCard lambda) : kind_(kind), n_(n), lambda_(std::move(lambda)) {}

  Kind kind_;
  std::size_t n_;
  SymCard lambda_;
};

/// An element of an order, compared lexicographically. Finite orders use
/// (index, 0); the rationals use (0, q); the lexicographic sum uses (block, q).
struct Point {
  std::int64_t block = 0;
  Rational q{0};

  std::strong_ordering operator<=>(const Point& o) const;
  bool operator==(const Point& o) const = default;
};

Point finite_point(std::int64_t index);
Point rational_point(Rational q);

/// UsageError when p does not belong to the order.
void check_point(const LinOrder& order, const Point& p);

/// -inf < every point < +inf.
struct Endpoint {
  enum class Tag { NegInf, At, PosInf };
  Tag tag = Tag::NegInf;
  Point point;

  static Endpoint neg_inf() { return {Tag::NegInf, {}}; }
  static Endpoint pos_inf() { return {Tag::PosInf, {}}; }
  static Endpoint at(Point p) { return {Tag::At, p}; }

  std::strong_ordering operator<=>(const Endpoint& o) const;
  bool operator==(const Endpoint& o) const { return (*this <=> o) == 0; }
  std::string to_string() const;
};

}  // namespace monkbench

#endif  // MONKBENCH_INTERVAL_ORDER_HPP
