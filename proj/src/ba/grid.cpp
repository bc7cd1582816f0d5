#include "monkbench/ba/grid.hpp"

#include "monkbench/errors.hpp"

namespace monkbench {

OrderedPartition::OrderedPartition(std::vector<Element> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw UsageError("partition needs at least one block");
  Support covered(blocks_.front().presentation().size());
  for (const Element& b : blocks_) {
    if (!same_presentation(b, blocks_.front())) throw UsageError("partition blocks over different presentations");
    if (b.is_zero()) throw UsageError("partition block is zero");
    if (covered.intersects(b.support())) throw UsageError("partition blocks overlap");
    covered |= b.support();
  }
  if (!covered.all()) throw UsageError("partition blocks do not join to 1");
}

Element first_hit_selector(const Element& x, const OrderedPartition& r) {
  if (!same_presentation(x, r[0])) throw UsageError("selector input over a different presentation");
  if (x.is_zero()) return x;
  for (const Element& block : r.blocks())
    if (x.support().intersects(block.support())) return block;
  throw IntegrityError("nonzero element meets no block of a partition");
}

namespace {

std::vector<std::vector<std::size_t>> all_functions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> h(n, 0);
  for (;;) {
    out.push_back(h);
    std::size_t k = 0;
    while (k < n && ++h[k] == n) h[k++] = 0;
    if (k == n) break;
  }
  return out;
}

Row grid_row(std::span<const std::size_t> h, std::size_t n) {
  Row f = 0;
  for (std::size_t k = 0; k < n; ++k) f |= Row{1} << (k * n + h[k]);
  return f;
}

}  // namespace

Element ProductGrid::atom(std::span<const std::size_t> h) const {
  if (h.size() != n) throw UsageError("grid index needs n coordinates");
  for (std::size_t v : h)
    if (v >= n) throw UsageError("grid coordinate out of range");
  auto idx = presentation->find(grid_row(h, n));
  if (!idx) throw IntegrityError("grid atom missing from presentation");
  const std::size_t i = *idx;
  return Element::from_indices(presentation, std::span<const std::size_t>(&i, 1));
}

Element ProductGrid::selection_meet(std::span<const std::size_t> choice) const {
  if (choice.size() != n) throw UsageError("selection needs one block per grid");
  Element acc = Element::one(presentation);
  for (std::size_t k = 0; k < n; ++k) acc = meet(acc, grids[k][choice[k]]);
  return acc;
}

ProductGrid product_grid(std::size_t n, std::size_t max_n) {
  if (n < 2 || n > max_n) throw UsageError("product_grid needs 2 <= n <= " + std::to_string(max_n));
  std::vector<Label> w;
  for (std::size_t i = 0; i < n * n; ++i) w.push_back(static_cast<Label>(i));
  std::vector<Row> rows;
  for (const auto& h : all_functions(n)) rows.push_back(grid_row(h, n));
  SizeCaps caps;
  caps.max_labels = std::max<std::size_t>(caps.max_labels, n * n);
  caps.max_rows = rows.size();
  auto p = make_presentation(std::move(w), std::move(rows), caps);

  std::vector<Element> atoms;
  for (std::size_t i = 0; i < p->size(); ++i) atoms.push_back(Element::from_indices(p, std::span<const std::size_t>(&i, 1)));

  std::vector<OrderedPartition> grids;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Element> blocks;
    for (std::size_t j = 0; j < n; ++j) blocks.push_back(generator(p, static_cast<Label>(k * n + j)));
    grids.emplace_back(std::move(blocks));
  }
  return ProductGrid{n, p, OrderedPartition(std::move(atoms)), std::move(grids)};
}

}  // namespace monkbench
