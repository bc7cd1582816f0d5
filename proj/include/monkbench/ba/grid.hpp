#ifndef MONKBENCH_BA_GRID_HPP
#define MONKBENCH_BA_GRID_HPP

#include <span>
#include <vector>

#include "monkbench/ba/presentation.hpp"

namespace monkbench {

/// Pairwise disjoint nonzero elements joining to 1, in a fixed index order.
class OrderedPartition {
 public:
  /// UsageError unless the blocks share a presentation, are nonzero,
  /// pairwise disjoint and cover F.
  explicit OrderedPartition(std::vector<Element> blocks);

  const std::vector<Element>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  const Element& operator[](std::size_t i) const { return blocks_[i]; }

 private:
  std::vector<Element> blocks_;
};

/// 0 for x = 0, otherwise the block of least index that meets x.
Element first_hit_selector(const Element& x, const OrderedPartition& r);

/// Finite grid gadget: an algebra with n^n atoms a_h (h : n -> n) and n
/// partitions Q_k whose j-th block collects the atoms with h(k) = j. Any
/// choice of one block per Q_k meets in exactly one atom.
///
/// Generators are labelled k*n + j and read "h(k) = j", so block j of Q_k is
/// simply the generator x_{k*n+j}.
struct ProductGrid {
  std::size_t n = 0;
  PresentationPtr presentation;
  OrderedPartition atoms;
  std::vector<OrderedPartition> grids;

  /// The atom a_h; h has n entries below n.
  Element atom(std::span<const std::size_t> h) const;
  /// Meet of block choice[k] of Q_k over all k.
  Element selection_meet(std::span<const std::size_t> choice) const;
};

/// UsageError unless 2 <= n <= max_n.
ProductGrid product_grid(std::size_t n, std::size_t max_n = 4);

}  // namespace monkbench

#endif  // MONKBENCH_BA_GRID_HPP
