#include "monkbench/interval/order.hpp"

#include <charconv>
#include <optional>

#include "monkbench/errors.hpp"

namespace monkbench {

namespace {

std::optional<std::uint64_t> parse_natural(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::int64_t parse_integer(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

// --- SymCard -------------------------------------------------------------------

SymCard SymCard::fin(std::uint64_t k) {
  if (k == 0) return zero();
  if (k == 1) return one();
  return SymCard(Kind::Fin, k, {});
}

SymCard SymCard::reg(std::string token, std::uint64_t rank) {
  if (token.empty()) throw UsageError("regular cardinal token must be nonempty");
  return SymCard(Kind::Reg, rank, std::move(token));
}

SymCard SymCard::parse(std::string_view text) {
  if (text == "aleph0" || text == "ℵ0" || text == "ℵ₀") return aleph0();
  for (std::string_view prefix : {std::string_view("λ"), std::string_view("lambda")}) {
    if (text.substr(0, prefix.size()) == prefix) {
      auto rank = parse_natural(text.substr(prefix.size()));
      if (!rank) break;
      return reg("λ" + std::to_string(*rank), *rank);
    }
  }
  if (auto k = parse_natural(text)) return fin(*k);
  throw ParseError("unknown cardinal '" + std::string(text) + "'");
}

std::string SymCard::to_string() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Fin: return std::to_string(value_);
    case Kind::AlephZero: return "ℵ0";
    case Kind::Reg: return token_;
  }
  return "?";
}

std::strong_ordering SymCard::operator<=>(const SymCard& o) const {
  if (auto c = static_cast<int>(kind_) <=> static_cast<int>(o.kind_); c != 0) return c;
  if (auto c = value_ <=> o.value_; c != 0) return c;
  return token_ <=> o.token_;
}

// --- rationals and orders --------------------------------------------------------

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::int64_t num = parse_integer(text.substr(0, slash));
  std::int64_t den = slash == std::string_view::npos ? 1 : parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string rational_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

LinOrder LinOrder::finite(std::size_t n) {
  if (n == 0) throw UsageError("a finite order needs at least one point");
  return LinOrder(Kind::Finite, n, SymCard::fin(n));
}

LinOrder LinOrder::lex_q(SymCard lambda) {
  if (!lambda.is_infinite()) throw UsageError("lexQ needs aleph0 or a regular cardinal token");
  return LinOrder(Kind::LexQ, 0, std::move(lambda));
}

LinOrder LinOrder::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 4) == "fin:") {
    auto n = parse_natural(text.substr(4));
    if (!n || *n == 0) throw ParseError("fin:n needs a positive n");
    return finite(*n);
  }
  if (text.substr(0, 5) == "lexQ:") {
    SymCard lambda = SymCard::parse(text.substr(5));
    if (!lambda.is_infinite()) throw ParseError("lexQ needs an infinite cardinal");
    return lex_q(std::move(lambda));
  }
  throw ParseError("unknown order description '" + std::string(text) + "'");
}

std::string LinOrder::to_string() const {
  switch (kind_) {
    case Kind::Finite: return "fin:" + std::to_string(n_);
    case Kind::Rationals: return "Q";
    case Kind::LexQ: return "lexQ:" + lambda_.to_string();
  }
  return "?";
}

std::strong_ordering Point::operator<=>(const Point& o) const {
  if (auto c = block <=> o.block; c != 0) return c;
  if (q < o.q) return std::strong_ordering::less;
  if (o.q < q) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Point finite_point(std::int64_t index) { return {index, Rational(0)}; }
Point rational_point(Rational q) { return {0, q}; }

void check_point(const LinOrder& order, const Point& p) {
  switch (order.kind()) {
    case LinOrder::Kind::Finite:
      if (p.block < 0 || static_cast<std::size_t>(p.block) >= order.size() || p.q != Rational(0))
        throw UsageError("point outside fin:" + std::to_string(order.size()));
      return;
    case LinOrder::Kind::Rationals:
      if (p.block != 0) throw UsageError("points of Q carry block 0");
      return;
    case LinOrder::Kind::LexQ:
      if (p.block < 0) throw UsageError("lexQ blocks are naturals");
      return;
  }
}

std::strong_ordering Endpoint::operator<=>(const Endpoint& o) const {
  if (auto c = static_cast<int>(tag) <=> static_cast<int>(o.tag); c != 0) return c;
  if (tag != Tag::At) return std::strong_ordering::equal;
  return point <=> o.point;
}

std::string Endpoint::to_string() const {
  switch (tag) {
    case Tag::NegInf: return "-inf";
    case Tag::PosInf: return "+inf";
    case Tag::At: break;
  }
  if (point.block == 0) return rational_string(point.q);
  return "(" + std::to_string(point.block) + "," + rational_string(point.q) + ")";
}

}  // namespace monkbench
