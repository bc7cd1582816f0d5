#ifndef MONKBENCH_BA_TERM_HPP
#define MONKBENCH_BA_TERM_HPP

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "monkbench/ba/assignment.hpp"

namespace monkbench {

/// Boolean term over generators x_label. Immutable; copies share structure.
///
/// Textual form is an s-expression: `0`, `1`, `x7`, `(not t)`,
/// `(and t1 t2 ...)`, `(or t1 t2 ...)`, `(minus s t)`. n-ary and/or fold to
/// the left; `minus` is sugar for `(and s (not t))`.
class Term {
 public:
  enum class Kind { Zero, One, Gen, Not, And, Or };

  static Term zero();
  static Term one();
  static Term gen(Label label);

  friend Term operator~(const Term& t);
  friend Term operator&(const Term& a, const Term& b);
  friend Term operator|(const Term& a, const Term& b);
  /// a - b = a AND NOT b.
  friend Term operator-(const Term& a, const Term& b);

  Kind kind() const;
  /// Valid for Gen.
  Label label() const;
  /// Valid for Not (operand) and And/Or (left operand).
  const Term& lhs() const;
  /// Valid for And/Or.
  const Term& rhs() const;

  /// Sorted, duplicate-free generator labels occurring in the term.
  std::vector<Label> labels() const;
  std::size_t node_count() const;

  /// Renames every generator through `rename`.
  Term substitute(const std::function<Label(Label)>& rename) const;

  std::string to_string() const;
  static Term parse(std::string_view text);

  /// Structural equality.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Conjunction of all terms; `one()` for an empty list.
Term conjunction(const std::vector<Term>& terms);
/// Disjunction of all terms; `zero()` for an empty list.
Term disjunction(const std::vector<Term>& terms);

/// Two-valued evaluation under the homomorphism induced by `f`
/// (x_label -> f(label)). DomainError when a generator is outside f's domain.
bool eval_hom(const Term& t, const Assignment& f);

/// A term flattened to postfix form with generator labels resolved to row
/// positions, for evaluating one term against many rows of the same width.
class CompiledTerm {
 public:
  /// DomainError if a generator label is not in w.
  CompiledTerm(const Term& t, std::span<const Label> w);
  bool eval(Row f) const;

 private:
  struct Op {
    Term::Kind kind;
    std::uint8_t position;
  };
  static constexpr std::size_t kMaxStack = 256;
  std::vector<Op> program_;
};

}  // namespace monkbench

#endif  // MONKBENCH_BA_TERM_HPP
