#ifndef MONKBENCH_INTERVAL_SYMCARD_HPP
#define MONKBENCH_INTERVAL_SYMCARD_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace monkbench {

/// Symbolic cardinal: 0 < 1 < finite k >= 2 < aleph_0 < regular tokens,
/// the tokens ordered by rank.
class SymCard {
 public:
  enum class Kind { Zero, One, Fin, AlephZero, Reg };

  static SymCard zero() { return SymCard(Kind::Zero, 0, {}); }
  static SymCard one() { return SymCard(Kind::One, 1, {}); }
  /// k = 0 and k = 1 give zero() and one().
  static SymCard fin(std::uint64_t k);
  static SymCard aleph0() { return SymCard(Kind::AlephZero, 0, {}); }
  /// UsageError on an empty token.
  static SymCard reg(std::string token, std::uint64_t rank);
  /// "0", "1", a number, "aleph0"/"ℵ0", "λ<k>" or "lambda<k>". ParseError otherwise.
  static SymCard parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// k for Fin, rank for Reg.
  std::uint64_t value() const { return value_; }
  const std::string& token() const { return token_; }
  bool is_infinite() const { return kind_ == Kind::AlephZero || kind_ == Kind::Reg; }

  std::string to_string() const;

  std::strong_ordering operator<=>(const SymCard& o) const;
  bool operator==(const SymCard& o) const { return (*this <=> o) == 0; }

 private:
  SymCard(Kind kind, std::uint64_t value, std::string token)
      : kind_(kind), value_(value), token_(std::move(token)) {}

  Kind kind_;
  std::uint64_t value_;
  std::string token_;
};

inline const SymCard& max(const SymCard& a, const SymCard& b) { return a < b ? b : a; }

}  // namespace monkbench

#endif  // MONKBENCH_INTERVAL_SYMCARD_HPP
