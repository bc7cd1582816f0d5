#include "monkbench/ba/carrier.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "monkbench/errors.hpp"

namespace monkbench {

Carrier::Carrier(PresentationPtr presentation, std::vector<Element> atoms)
    : presentation_(std::move(presentation)), atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end(), canonical_less);
  if (atoms_.size() >= 63 || size() > presentation_->caps().max_carrier) return;
  elements_.reserve(size());
  for (std::uint64_t mask = 0; mask < size(); ++mask) {
    Support s(presentation_->size());
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if ((mask >> i) & 1U) s |= atoms_[i].support();
    elements_.emplace_back(presentation_, std::move(s));
  }
  std::sort(elements_.begin(), elements_.end(), canonical_less);
  materialized_ = true;
}

const std::vector<Element>& Carrier::elements() const {
  if (!materialized_)
    throw CapacityError("carrier with " + std::to_string(atoms_.size()) +
                        " atoms exceeds the enumeration cap");
  return elements_;
}

std::vector<Element> Carrier::nonzero_elements() const {
  std::vector<Element> out;
  for (const Element& e : elements())
    if (!e.is_zero()) out.push_back(e);
  return out;
}

bool Carrier::contains(const Element& e) const {
  if (e.presentation_ptr() != presentation_ && !(e.presentation() == *presentation_)) return false;
  Support covered(presentation_->size());
  for (const Element& atom : atoms_) {
    Support part = atom.support() & e.support();
    if (part.any() && part != atom.support()) return false;
    covered |= part;
  }
  return covered == e.support();
}

Carrier subalgebra_closure(const PresentationPtr& p, std::span<const Element> generators) {
  std::vector<Support> blocks;
  if (!p->is_degenerate()) blocks.push_back(Element::one(p).support());
  for (const Element& g : generators) {
    if (g.presentation_ptr() != p && !(g.presentation() == *p))
      throw UsageError("generator over a different presentation");
    std::vector<Support> refined;
    refined.reserve(blocks.size() * 2);
    for (const Support& b : blocks) {
      Support in = b & g.support();
      Support out = b - g.support();
      if (in.any()) refined.push_back(std::move(in));
      if (out.any()) refined.push_back(std::move(out));
    }
    blocks = std::move(refined);
  }
  std::vector<Element> atoms;
  atoms.reserve(blocks.size());
  for (Support& b : blocks) atoms.emplace_back(p, std::move(b));
  return Carrier(p, std::move(atoms));
}

Carrier generated_by_labels(const PresentationPtr& p, std::span<const Label> labels) {
  std::vector<Element> gens;
  gens.reserve(labels.size());
  for (Label l : labels) gens.push_back(generator(p, l));
  return subalgebra_closure(p, gens);
}

Carrier full_algebra(const PresentationPtr& p) { return generated_by_labels(p, p->labels()); }

std::size_t pi_density(const Carrier& c) { return c.atoms().size(); }

namespace {

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order
// until it returns true.
template <class Visit>
bool any_k_subset(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (visit(std::span<const std::size_t>(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

constexpr std::size_t kBruteForceCap = 15;

}  // namespace

std::size_t min_dense_size_brute_force(const Carrier& c) {
  const std::vector<Element> plus = c.nonzero_elements();
  if (plus.size() > kBruteForceCap)
    throw CapacityError("brute-force density search limited to |C+| <= 15");
  for (std::size_t k = 0; k <= plus.size(); ++k) {
    std::vector<Element> chosen;
    bool found = any_k_subset(plus.size(), k, [&](std::span<const std::size_t> idx) {
      chosen.clear();
      for (std::size_t i : idx) chosen.push_back(plus[i]);
      return is_dense(chosen, plus);
    });
    if (found) return k;
  }
  throw IntegrityError("C+ is not dense in itself");
}

bool is_dense(std::span<const Element> x, std::span<const Element> y) {
  return std::all_of(y.begin(), y.end(), [&](const Element& target) {
    if (target.is_zero()) return true;
    return std::any_of(x.begin(), x.end(),
                       [&](const Element& cand) { return !cand.is_zero() && leq(cand, target); });
  });
}

std::optional<Element> find_escape(const Carrier& b, const Carrier& a) {
  if (b.presentation() != a.presentation() && !(*b.presentation() == *a.presentation()))
    throw UsageError("carriers over different presentations");
  // Some member of A+ lies below y iff some atom of A does.
  for (const Element& y : b.elements()) {
    if (y.is_zero()) continue;
    bool covered = std::any_of(a.atoms().begin(), a.atoms().end(),
                               [&](const Element& atom) { return leq(atom, y); });
    if (!covered) return y;
  }
  return std::nullopt;
}

bool is_ultrafilter(std::span<const Element> u, const Carrier& c) {
  std::set<Support> members;
  for (const Element& e : u) {
    if (!c.contains(e)) return false;
    members.insert(e.support());
  }
  const auto& all = c.elements();
  if (c.presentation()->is_degenerate()) return false;
  if (!members.contains(Element::one(c.presentation()).support())) return false;
  for (const Element& e : all) {
    bool in = members.contains(e.support());
    bool co = members.contains(complement(e).support());
    if (in == co) return false;
  }
  for (const Support& m : members) {
    for (const Support& n : members)
      if (!members.contains(m & n)) return false;
    for (const Element& e : all)
      if (m.is_subset_of(e.support()) && !members.contains(e.support())) return false;
  }
  return true;
}

std::size_t pi_ultrafilter(std::span<const Element> u, const Carrier& c) {
  if (!is_ultrafilter(u, c)) throw UsageError("not an ultrafilter of the carrier");
  const std::vector<Element> plus = c.nonzero_elements();
  auto dense_in_filter = [&](std::span<const std::size_t> idx) {
    return std::all_of(u.begin(), u.end(), [&](const Element& y) {
      return std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return leq(plus[i], y); });
    });
  };
  if (any_k_subset(plus.size(), 1, dense_in_filter)) return 1;
  if (plus.size() > kBruteForceCap)
    throw CapacityError("brute-force filter density search limited to |C+| <= 15");
  for (std::size_t k = 2; k <= plus.size(); ++k)
    if (any_k_subset(plus.size(), k, dense_in_filter)) return k;
  throw IntegrityError("ultrafilter without a dense subset of C+");
}

}  // namespace monkbench
