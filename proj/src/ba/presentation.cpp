#include "monkbench/ba/presentation.hpp"

#include <algorithm>

#include "monkbench/errors.hpp"

namespace monkbench {

Presentation::Presentation(std::vector<Label> w, std::vector<Row> rows, SizeCaps caps)
    : w_(std::move(w)), rows_(std::move(rows)), caps_(caps) {
  if (!is_label_set(w_)) throw UsageError("w must be strictly ascending");
  if (w_.size() > kMaxWidth) throw CapacityError("w wider than 64 labels");
  if (w_.size() > caps_.max_labels)
    throw CapacityError("|w| = " + std::to_string(w_.size()) + " exceeds cap " +
                        std::to_string(caps_.max_labels));
  const Row mask = width_mask(w_.size());
  for (Row f : rows_)
    if ((f & ~mask) != 0) throw UsageError("row has bits outside w");
  std::sort(rows_.begin(), rows_.end(), LexLess{});
  rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
  if (rows_.size() > caps_.max_rows)
    throw CapacityError("|F| = " + std::to_string(rows_.size()) + " exceeds cap " +
                        std::to_string(caps_.max_rows));
}

std::optional<std::size_t> Presentation::find(Row f) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), f, LexLess{});
  if (it == rows_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - rows_.begin());
}

PresentationPtr make_presentation(std::vector<Label> w, std::vector<Row> rows, SizeCaps caps) {
  return std::make_shared<const Presentation>(std::move(w), std::move(rows), caps);
}

Element::Element(PresentationPtr presentation, Support support)
    : presentation_(std::move(presentation)), support_(std::move(support)) {
  if (!presentation_) throw UsageError("element without a presentation");
  if (support_.size() != presentation_->size()) throw UsageError("support size differs from |F|");
}

Element Element::zero(PresentationPtr presentation) {
  Support s(presentation->size());
  return Element(std::move(presentation), std::move(s));
}

Element Element::one(PresentationPtr presentation) {
  Support s(presentation->size());
  s.set();
  return Element(std::move(presentation), std::move(s));
}

Element Element::from_indices(PresentationPtr presentation, std::span<const std::size_t> indices) {
  Support s(presentation->size());
  for (std::size_t i : indices) {
    if (i >= s.size()) throw UsageError("support index " + std::to_string(i) + " outside F");
    s.set(i);
  }
  return Element(std::move(presentation), std::move(s));
}

std::vector<std::size_t> Element::indices() const {
  std::vector<std::size_t> out;
  for (auto i = support_.find_first(); i != Support::npos; i = support_.find_next(i)) out.push_back(i);
  return out;
}

bool same_presentation(const Element& a, const Element& b) {
  return a.presentation_ptr() == b.presentation_ptr() || a.presentation() == b.presentation();
}

bool operator==(const Element& a, const Element& b) {
  return same_presentation(a, b) && a.support_ == b.support_;
}

bool canonical_less(const Element& a, const Element& b) { return a.support() < b.support(); }

namespace {

void require_same(const Element& a, const Element& b) {
  if (!same_presentation(a, b)) throw UsageError("elements over different presentations");
}

}  // namespace

Element meet(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.presentation_ptr(), a.support() & b.support());
}

Element join(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.presentation_ptr(), a.support() | b.support());
}

Element complement(const Element& a) { return Element(a.presentation_ptr(), ~a.support()); }

bool leq(const Element& a, const Element& b) {
  require_same(a, b);
  return a.support().is_subset_of(b.support());
}

Element denote(const Term& t, const PresentationPtr& p) {
  const CompiledTerm compiled(t, p->labels());
  Support s(p->size());
  for (std::size_t i = 0; i < p->size(); ++i)
    if (compiled.eval(p->row(i))) s.set(i);
  return Element(p, std::move(s));
}

Element generator(const PresentationPtr& p, Label label) { return denote(Term::gen(label), p); }

Term meet_minus_term(std::span<const Label> u, std::span<const Label> v) {
  std::vector<Term> pos;
  std::vector<Term> neg;
  for (Label a : u) pos.push_back(Term::gen(a));
  for (Label b : v) neg.push_back(Term::gen(b));
  if (neg.empty()) return conjunction(pos);
  return conjunction(pos) - disjunction(neg);
}

bool free_relation_holds(std::span<const Label> u, std::span<const Label> v, const Presentation& p) {
  Row ones = 0;
  Row zeros = 0;
  for (Label a : u) {
    auto pos = p.position(a);
    if (!pos) throw UsageError("label " + std::to_string(a) + " of u outside w");
    ones |= Row{1} << *pos;
  }
  for (Label b : v) {
    auto pos = p.position(b);
    if (!pos) throw UsageError("label " + std::to_string(b) + " of v outside w");
    zeros |= Row{1} << *pos;
  }
  if ((ones & zeros) != 0) throw UsageError("u and v must be disjoint");
  return std::none_of(p.rows().begin(), p.rows().end(),
                      [&](Row f) { return (f & ones) == ones && (f & zeros) == 0; });
}

}  // namespace monkbench
