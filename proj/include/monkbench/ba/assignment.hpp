#ifndef MONKBENCH_BA_ASSIGNMENT_HPP
#define MONKBENCH_BA_ASSIGNMENT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monkbench {

/// A generator label. Stands for an ordinal below the ambient cardinal at
/// desk scale; the distinguished point "infinity" lives in Cutoff instead.
using Label = std::uint32_t;

/// Bit i holds the value at the i-th smallest label of the ambient label set.
using Row = std::uint64_t;

inline constexpr std::size_t kMaxWidth = 64;

/// A label or infinity. Used as a truncation point and wherever a position
/// ranges over "w together with infinity". Infinity is above every label.
class Cutoff {
 public:
  static constexpr Cutoff at(Label label) { return Cutoff(label, false); }
  static constexpr Cutoff infinity() { return Cutoff(0, true); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr Label label() const { return label_; }

  constexpr std::strong_ordering operator<=>(const Cutoff& o) const {
    if (infinite_ != o.infinite_) return infinite_ ? std::strong_ordering::greater
                                                   : std::strong_ordering::less;
    return infinite_ ? std::strong_ordering::equal : label_ <=> o.label_;
  }
  constexpr bool operator==(const Cutoff& o) const = default;

  std::string to_string() const;

 private:
  constexpr Cutoff(Label label, bool infinite) : label_(label), infinite_(infinite) {}
  Label label_;
  bool infinite_;
};

// --- label sets: sorted, duplicate-free vectors -----------------------------

std::vector<Label> make_label_set(std::vector<Label> labels);
bool is_label_set(std::span<const Label> labels);
bool is_subset(std::span<const Label> sub, std::span<const Label> super);
std::vector<Label> label_union(std::span<const Label> a, std::span<const Label> b);
std::vector<Label> label_intersection(std::span<const Label> a, std::span<const Label> b);
std::optional<std::size_t> position_of(std::span<const Label> w, Label label);

// --- rows --------------------------------------------------------------------

constexpr Row width_mask(std::size_t width) {
  return width >= 64 ? ~Row{0} : (Row{1} << width) - 1;
}

/// Mask of the positions of w whose label lies strictly below `cut`.
Row below_mask(std::span<const Label> w, Cutoff cut);

/// f^[cut]: keep f below the cutoff, zero at and above it.
inline Row truncate_row(Row f, std::span<const Label> w, Cutoff cut) {
  return f & below_mask(w, cut);
}

/// Lexicographic order of the bit strings read in label order (0 < 1).
inline bool lex_less(Row a, Row b) {
  const Row d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (~d + 1))) == 0;
}

struct LexLess {
  bool operator()(Row a, Row b) const { return lex_less(a, b); }
};

/// Rows rendered as bit strings in label order ("1101").
std::string row_string(Row f, std::size_t width);
Row parse_row_string(std::string_view bits);

/// Positions of a sub label set inside a super label set, for restricting
/// and transporting rows.
class Projection {
 public:
  /// Throws UsageError unless sub is a subset of super.
  Projection(std::span<const Label> super, std::span<const Label> sub);

  Row restrict(Row f) const;
  /// Places a row over `sub` into the positions of `super` (other bits zero).
  Row embed(Row f) const;
  Row sub_mask_in_super() const { return mask_; }

 private:
  std::vector<std::uint8_t> positions_;
  Row mask_ = 0;
};

/// A finite 0/1 function on a label set.
class Assignment {
 public:
  Assignment() = default;
  /// Throws UsageError if the domain is not a label set or bits fall
  /// outside it.
  Assignment(std::vector<Label> domain, Row bits);

  const std::vector<Label>& domain() const { return domain_; }
  Row bits() const { return bits_; }
  std::size_t width() const { return domain_.size(); }

  /// Value at a label; DomainError if the label is outside the domain.
  bool at(Label label) const;
  std::optional<bool> find(Label label) const;

  std::string to_string() const { return row_string(bits_, domain_.size()); }

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<Label> domain_;
  Row bits_ = 0;
};

Assignment truncate(const Assignment& f, Cutoff cut);

}  // namespace monkbench

#endif  // MONKBENCH_BA_ASSIGNMENT_HPP
