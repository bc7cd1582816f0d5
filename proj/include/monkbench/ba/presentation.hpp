#ifndef MONKBENCH_BA_PRESENTATION_HPP
#define MONKBENCH_BA_PRESENTATION_HPP

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "monkbench/ba/assignment.hpp"
#include "monkbench/ba/term.hpp"

namespace monkbench {

/// Desk-scale stand-ins for the (infinite) cardinal bounds.
struct SizeCaps {
  std::size_t max_labels = 16;
  std::size_t max_rows = 24;
  std::size_t max_carrier = std::size_t{1} << 16;
};

/// A pair (w, F) presenting the Boolean algebra BA[w, F]: generators x_a for
/// a in w, with every meet-minus pattern matched by no row of F set to zero.
///
/// Rows are kept sorted lexicographically (bit strings read in label order)
/// and duplicate-free; that order is the canonical row index used by Element
/// supports and by every "first witness" search.
class Presentation {
 public:
  /// Throws UsageError if w is not strictly ascending or a row has bits
  /// outside w; CapacityError past the caps. Duplicate rows are merged.
  Presentation(std::vector<Label> w, std::vector<Row> rows, SizeCaps caps = {});

  const std::vector<Label>& labels() const { return w_; }
  std::span<const Row> rows() const { return rows_; }
  Row row(std::size_t i) const { return rows_[i]; }
  std::size_t width() const { return w_.size(); }
  std::size_t size() const { return rows_.size(); }
  const SizeCaps& caps() const { return caps_; }

  std::optional<std::size_t> find(Row f) const;
  bool contains(Row f) const { return find(f).has_value(); }
  std::optional<std::size_t> position(Label label) const { return position_of(w_, label); }
  Assignment assignment(std::size_t i) const { return Assignment(w_, rows_[i]); }

  /// F empty: the one-element algebra where 0 = 1. Allowed, but callers may
  /// want to flag it.
  bool is_degenerate() const { return rows_.empty(); }

  bool operator==(const Presentation& o) const { return w_ == o.w_ && rows_ == o.rows_; }

 private:
  std::vector<Label> w_;
  std::vector<Row> rows_;
  SizeCaps caps_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

PresentationPtr make_presentation(std::vector<Label> w, std::vector<Row> rows, SizeCaps caps = {});

/// Subset of F, bit i <-> i-th row in canonical order.
using Support = boost::dynamic_bitset<std::uint64_t>;

/// An element of BA[P], identified with the set of rows whose induced
/// homomorphism sends it to 1.
class Element {
 public:
  /// Throws UsageError when the support size differs from |F|.
  Element(PresentationPtr presentation, Support support);

  static Element zero(PresentationPtr presentation);
  static Element one(PresentationPtr presentation);
  /// Throws UsageError for an index outside F.
  static Element from_indices(PresentationPtr presentation, std::span<const std::size_t> indices);

  const Presentation& presentation() const { return *presentation_; }
  const PresentationPtr& presentation_ptr() const { return presentation_; }
  const Support& support() const { return support_; }
  bool is_zero() const { return support_.none(); }
  std::vector<std::size_t> indices() const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  PresentationPtr presentation_;
  Support support_;
};

/// True when both elements live over equal presentations.
bool same_presentation(const Element& a, const Element& b);

/// Canonical element order: by support read as a binary number (bit i has
/// weight 2^i).
bool canonical_less(const Element& a, const Element& b);

// All binary operations throw UsageError on mixed presentations.
Element meet(const Element& a, const Element& b);
Element join(const Element& a, const Element& b);
Element complement(const Element& a);
bool leq(const Element& a, const Element& b);
inline bool is_zero(const Element& a) { return a.is_zero(); }

/// Support = rows f with eval_hom(t, f) = 1. DomainError on a stray label.
Element denote(const Term& t, const PresentationPtr& p);

/// The generator x_label as an element. DomainError if label is not in w.
Element generator(const PresentationPtr& p, Label label);

/// The term (AND_{a in u} x_a) - (OR_{b in v} x_b).
Term meet_minus_term(std::span<const Label> u, std::span<const Label> v);

/// True iff no row has value 1 on all of u and 0 on all of v, i.e. the
/// presentation kills the pattern 1_u + 0_v. Throws UsageError when u and v
/// overlap or leave w.
bool free_relation_holds(std::span<const Label> u, std::span<const Label> v, const Presentation& p);

}  // namespace monkbench

#endif  // MONKBENCH_BA_PRESENTATION_HPP
