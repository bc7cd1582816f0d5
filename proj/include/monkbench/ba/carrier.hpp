#ifndef MONKBENCH_BA_CARRIER_HPP
#define MONKBENCH_BA_CARRIER_HPP

#include <optional>
#include <span>
#include <vector>

#include "monkbench/ba/presentation.hpp"

namespace monkbench {

/// A finite subalgebra of BA[P], stored by its atoms.
///
/// The full element list is materialized in canonical order when it fits the
/// presentation's carrier cap; membership and density questions only need the
/// atoms and work past the cap as well.
class Carrier {
 public:
  const PresentationPtr& presentation() const { return presentation_; }
  /// Atoms in canonical order. Empty for the degenerate algebra.
  const std::vector<Element>& atoms() const { return atoms_; }

  bool materialized() const { return materialized_; }
  /// All elements in canonical order. CapacityError when not materialized.
  const std::vector<Element>& elements() const;
  std::vector<Element> nonzero_elements() const;

  /// Number of elements, 2^|atoms|.
  std::uint64_t size() const { return std::uint64_t{1} << atoms_.size(); }

  /// Same presentation and a union of atoms.
  bool contains(const Element& e) const;

 private:
  friend Carrier subalgebra_closure(const PresentationPtr& p, std::span<const Element> generators);
  Carrier(PresentationPtr presentation, std::vector<Element> atoms);

  PresentationPtr presentation_;
  std::vector<Element> atoms_;
  std::vector<Element> elements_;
  bool materialized_ = false;
};

/// Least subalgebra containing the generators (and 0, 1). Atoms come from
/// refining {1} by each generator.
Carrier subalgebra_closure(const PresentationPtr& p, std::span<const Element> generators);

/// The subalgebra generated by {x_a : a in labels}.
Carrier generated_by_labels(const PresentationPtr& p, std::span<const Label> labels);

/// The whole of BA[P] (generated by all of w).
Carrier full_algebra(const PresentationPtr& p);

/// pi of a finite algebra: the atoms form its unique minimum dense set.
std::size_t pi_density(const Carrier& c);

/// Exhaustive minimum size of a dense X inside C+, by subset size with early
/// exit. CapacityError when |C+| > 15.
std::size_t min_dense_size_brute_force(const Carrier& c);

/// Every nonzero y in Y has some x in X with 0 < x <= y.
bool is_dense(std::span<const Element> x, std::span<const Element> y);

/// First b of B+ (canonical order) lying above no member of A+; none iff A+
/// is dense in B. UsageError on mixed presentations.
std::optional<Element> find_escape(const Carrier& b, const Carrier& a);

/// Ultrafilter test relative to a materialized carrier.
bool is_ultrafilter(std::span<const Element> u, const Carrier& c);

/// pi(U, C): least |X|, X inside C+, with every member of U above some x in
/// X (x need not belong to U). UsageError when U is not an ultrafilter of C.
std::size_t pi_ultrafilter(std::span<const Element> u, const Carrier& c);

}  // namespace monkbench

#endif  // MONKBENCH_BA_CARRIER_HPP
