#include "monkbench/ba/assignment.hpp"

#include <algorithm>
#include <iterator>

#include "monkbench/errors.hpp"

namespace monkbench {

std::string Cutoff::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(label_);
}

std::vector<Label> make_label_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

bool is_label_set(std::span<const Label> labels) {
  return std::adjacent_find(labels.begin(), labels.end(),
                            [](Label a, Label b) { return a >= b; }) == labels.end();
}

bool is_subset(std::span<const Label> sub, std::span<const Label> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::vector<Label> label_union(std::span<const Label> a, std::span<const Label> b) {
  std::vector<Label> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Label> label_intersection(std::span<const Label> a, std::span<const Label> b) {
  std::vector<Label> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<std::size_t> position_of(std::span<const Label> w, Label label) {
  auto it = std::lower_bound(w.begin(), w.end(), label);
  if (it == w.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - w.begin());
}

Row below_mask(std::span<const Label> w, Cutoff cut) {
  if (cut.is_infinite()) return width_mask(w.size());
  auto count = std::lower_bound(w.begin(), w.end(), cut.label()) - w.begin();
  return width_mask(static_cast<std::size_t>(count));
}

std::string row_string(Row f, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i)
    if ((f >> i) & 1U) s[i] = '1';
  return s;
}

Row parse_row_string(std::string_view bits) {
  if (bits.size() > kMaxWidth) throw ParseError("bit string longer than 64");
  Row f = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') f |= Row{1} << i;
    else if (bits[i] != '0') throw ParseError("bit string may only contain 0 and 1");
  }
  return f;
}

Projection::Projection(std::span<const Label> super, std::span<const Label> sub) {
  positions_.reserve(sub.size());
  for (Label l : sub) {
    auto pos = position_of(super, l);
    if (!pos) throw UsageError("label " + std::to_string(l) + " missing from projection target");
    positions_.push_back(static_cast<std::uint8_t>(*pos));
    mask_ |= Row{1} << *pos;
  }
}

Row Projection::restrict(Row f) const {
  Row out = 0;
  for (std::size_t i = 0; i < positions_.size(); ++i)
    out |= ((f >> positions_[i]) & 1U) << i;
  return out;
}

Row Projection::embed(Row f) const {
  Row out = 0;
  for (std::size_t i = 0; i < positions_.size(); ++i)
    out |= ((f >> i) & 1U) << positions_[i];
  return out;
}

Assignment::Assignment(std::vector<Label> domain, Row bits)
    : domain_(std::move(domain)), bits_(bits) {
  if (!is_label_set(domain_)) throw UsageError("assignment domain must be sorted and duplicate-free");
  if (domain_.size() > kMaxWidth) throw CapacityError("assignment domain wider than 64 labels");
  if ((bits_ & ~width_mask(domain_.size())) != 0)
    throw UsageError("assignment bits outside its domain");
}

bool Assignment::at(Label label) const {
  auto v = find(label);
  if (!v) throw DomainError("label " + std::to_string(label) + " outside assignment domain");
  return *v;
}

std::optional<bool> Assignment::find(Label label) const {
  auto pos = position_of(domain_, label);
  if (!pos) return std::nullopt;
  return ((bits_ >> *pos) & 1U) != 0;
}

Assignment truncate(const Assignment& f, Cutoff cut) {
  return Assignment(f.domain(), truncate_row(f.bits(), f.domain(), cut));
}

}  // namespace monkbench
