#include "monkbench/forcing/amalgam.hpp"

#include <algorithm>

#include "monkbench/errors.hpp"

namespace monkbench {

IsoMap::IsoMap(std::vector<Label> source, std::vector<Label> target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!is_label_set(source_) || !is_label_set(target_)) throw UsageError("iso map endpoints must be label sets");
  if (source_.size() != target_.size()) throw UsageError("iso map between label sets of different size");
}

Label IsoMap::operator()(Label a) const {
  auto pos = position_of(source_, a);
  if (!pos) throw DomainError("label " + std::to_string(a) + " outside the iso map source");
  return target_[*pos];
}

namespace {

void push_truncations(Row u, std::size_t width, std::vector<Row>& rows) {
  for (std::size_t k = 0; k <= width; ++k) rows.push_back(u & width_mask(k));
}

// Places `bits` at `proj`'s positions inside `acc`, failing on a clash with
// what is already placed.
bool place(Row& acc, Row& placed, const Projection& proj, Row bits) {
  Row mask = proj.sub_mask_in_super();
  Row val = proj.embed(bits);
  if (((acc ^ val) & placed & mask) != 0) return false;
  acc |= val;
  placed |= mask;
  return true;
}

}  // namespace

PresentationPtr pair_amalgam(const PresentationPtr& p0, const PresentationPtr& p1, const IsoMap& h,
                             const PosetBounds& bounds) {
  if (!validate_condition(*p0).ok() || !validate_condition(*p1).ok())
    throw PreconditionError("valid", "both inputs must be conditions");
  if (h.source() != p0->labels() || h.target() != p1->labels())
    throw PreconditionError("a", "map is not the order-preserving bijection from w^p0 onto w^p1");
  if (!std::equal(p0->rows().begin(), p0->rows().end(), p1->rows().begin(), p1->rows().end()))
    throw PreconditionError("b", "map does not carry F^p0 onto F^p1");
  for (Label a : p0->labels()) {
    if (a > h(a)) throw PreconditionError("c", "label " + std::to_string(a) + " moves down");
    if (p1->position(a).has_value() != (h(a) == a))
      throw PreconditionError("d", "label " + std::to_string(a) + ": fixed points differ from the intersection");
  }

  std::vector<Label> w = label_union(p0->labels(), p1->labels());
  if (w.size() > bounds.caps().max_labels) throw CapacityError("amalgam exceeds the label bound");
  Projection in0(w, p0->labels()), in1(w, p1->labels());
  std::vector<Row> rows;
  for (Row f : p1->rows()) {
    Row u = 0, placed = 0;
    // f o h carries the same bits over w^p0.
    if (!place(u, placed, in1, f) || !place(u, placed, in0, f))
      throw IntegrityError("f and f o h disagree on the intersection");
    push_truncations(u, w.size(), rows);
  }
  auto q = make_presentation(std::move(w), std::move(rows), bounds.caps());
  auto report = validate_condition(*q);
  if (!report.ok()) throw IntegrityError("pair amalgam invalid: " + report.to_string(*q));
  if (!order_clauses_hold(*p0, *q) || !order_clauses_hold(*p1, *q))
    throw IntegrityError("pair amalgam is not above both inputs");
  return q;
}

Term instantiate(const Term& tau, std::span<const Label> labels) {
  return tau.substitute([&](Label v) {
    if (v < 1 || v > labels.size()) throw DomainError("term variable x" + std::to_string(v) + " has no label");
    return labels[v - 1];
  });
}

Term AmalgamInstance::tau_at(std::size_t l) const {
  std::vector<Label> tuple;
  for (Label a : alpha0) tuple.push_back(family.maps.at(l)(a));
  return instantiate(tau, tuple);
}

void check_delta_family(const DeltaFamily& fam) {
  const std::size_t m = fam.m();
  if (m < 2) throw PreconditionError("a", "a family needs at least two conditions");
  for (std::size_t l = 0; l < m; ++l) {
    auto r = validate_condition(*fam.conditions[l]);
    if (!r.ok()) throw PreconditionError("a", "p" + std::to_string(l) + ": " + r.to_string(*fam.conditions[l]));
  }

  const auto& w0 = fam.conditions[0]->labels();
  if (fam.maps.size() != m) throw PreconditionError("b", "need one map per condition");
  for (std::size_t l = 0; l < m; ++l) {
    const auto& wl = fam.conditions[l]->labels();
    if (wl.size() != w0.size()) throw PreconditionError("b", "p" + std::to_string(l) + " has another order type");
    if (fam.maps[l].source() != w0 || fam.maps[l].target() != wl)
      throw PreconditionError("b", "map " + std::to_string(l) + " is not the order-preserving bijection onto p" +
                                       std::to_string(l));
  }

  for (std::size_t l = 1; l < m; ++l) {
    const auto& c = *fam.conditions[l];
    if (!std::equal(c.rows().begin(), c.rows().end(), fam.conditions[0]->rows().begin(),
                    fam.conditions[0]->rows().end()))
      throw PreconditionError("c", "map " + std::to_string(l) + " does not carry F^p0 onto F^p" + std::to_string(l));
  }

  std::vector<Label> root = label_intersection(w0, fam.conditions[1]->labels());
  if (fam.root != root) throw PreconditionError("d", "declared root differs from w^p0 and w^p1's intersection");
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t k = l + 1; k < m; ++k)
      if (label_intersection(fam.conditions[l]->labels(), fam.conditions[k]->labels()) != root)
        throw PreconditionError("d", "p" + std::to_string(l) + " and p" + std::to_string(k) +
                                         " meet outside the root");
  for (Label a : w0) {
    bool in_root = std::binary_search(root.begin(), root.end(), a);
    bool increasing = true;
    for (std::size_t l = 2; l < m; ++l) increasing &= fam.maps[l](a) > fam.maps[l - 1](a);
    if (in_root) {
      for (std::size_t l = 0; l < m; ++l)
        if (fam.maps[l](a) != a) throw PreconditionError("d", "map " + std::to_string(l) + " moves root label " +
                                                                  std::to_string(a));
    } else if (m > 2 && !increasing) {
      // Constant sequences are reserved for the root.
      throw PreconditionError("d", "images of " + std::to_string(a) + " are not strictly increasing");
    }
  }
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t k = 0; k < m; ++k)
      for (Label a : w0)
        for (Label b : w0)
          if (a != b && fam.maps[l](a) == fam.maps[k](b))
            throw PreconditionError("d", "distinct labels " + std::to_string(a) + " and " + std::to_string(b) +
                                             " share an image");
}

bool clause_f_holds(const PresentationPtr& p0, const Term& tau, std::span<const Label> alpha0,
                    std::span<const Label> root) {
  Element e = denote(instantiate(tau, alpha0), p0);
  return !e.is_zero() && !in_generated_subalgebra(e, root);
}

void check_amalgam_preconditions(const AmalgamInstance& inst) {
  check_delta_family(inst.family);
  const auto& p0 = inst.family.conditions[0];
  if (inst.alpha0.empty()) throw PreconditionError("e", "tau needs at least one variable");
  if (!is_label_set(inst.alpha0) || !is_subset(inst.alpha0, p0->labels()))
    throw PreconditionError("e", "alpha0 must be ascending labels of w^p0");
  for (Label v : inst.tau.labels())
    if (v < 1 || v > inst.n()) throw PreconditionError("e", "tau uses x" + std::to_string(v) + " beyond n");
  if (!clause_f_holds(p0, inst.tau, inst.alpha0, inst.family.root))
    throw PreconditionError("f", "tau(alpha0) is zero or generated by the root");
  if (!(inst.family.m() - 1 > inst.n() + 1))
    throw PreconditionError("g", "m-1 = " + std::to_string(inst.family.m() - 1) + " is not above n+1 = " +
                                     std::to_string(inst.n() + 1));
}

SeparatingPair find_separating_pair(const PresentationPtr& p0, const Term& tau, std::span<const Label> alpha0,
                                    std::span<const Label> root) {
  if (!clause_f_holds(p0, tau, alpha0, root))
    throw PreconditionError("f", "tau(alpha0) is zero or generated by the root; no separating pair");
  const auto& w = p0->labels();
  CompiledTerm t(instantiate(tau, alpha0), w);
  const Row root_mask = Projection(w, root).sub_mask_in_super();
  const auto candidates = closure_cl(p0->rows(), w);

  for (std::size_t k = 0; k <= w.size(); ++k) {
    const Row keep = width_mask(k);
    for (Row f0 : candidates) {
      if ((f0 & keep) != f0 || t.eval(f0)) continue;
      for (Row f1 : candidates) {
        if ((f1 & keep) != f1 || !t.eval(f1) || ((f0 ^ f1) & root_mask) != 0) continue;
        return {k == w.size() ? Cutoff::infinity() : Cutoff::at(w[k]), f0, f1};
      }
    }
  }
  throw IntegrityError("clause f holds but no separating pair exists");
}

Term tau_star(const Term& tau, const std::vector<std::vector<Label>>& tuples) {
  const std::size_t m = tuples.size();
  if (m < 2) throw UsageError("tau_star needs m >= 2");
  std::vector<Term> odd, even;
  for (std::size_t l = 1; l < m; ++l) (l % 2 ? odd : even).push_back(instantiate(tau, tuples[l]));
  Term head = conjunction(odd);
  return even.empty() ? head : head - disjunction(even);
}

bool Certificate::all_pass() const {
  return std::all_of(facts.begin(), facts.end(), [](const CertificateFact& f) { return f.pass; });
}

AmalgamResult m_amalgam(const AmalgamInstance& inst, const PosetBounds& bounds) {
  check_amalgam_preconditions(inst);
  const auto& fam = inst.family;
  const std::size_t m = fam.m();
  const auto& p0 = fam.conditions[0];

  AmalgamResult out;
  out.pair = find_separating_pair(p0, inst.tau, inst.alpha0, fam.root);

  std::vector<Label> w;
  for (const auto& c : fam.conditions) w = label_union(w, c->labels());
  if (w.size() > bounds.caps().max_labels) throw CapacityError("amalgam exceeds the label bound");
  std::vector<Projection> in;
  for (const auto& c : fam.conditions) in.emplace_back(w, c->labels());

  // f o H_{0,l} over w^{pl} has the bits of f, so each copy is placed as is.
  Row placed = 0;
  for (std::size_t l = 0; l < m; ++l) {
    Row src = (l == 0 || l % 2 == 1) ? out.pair.f1 : out.pair.f0;
    if (!place(out.g, placed, in[l], src)) throw IntegrityError("g is not well defined on the root");
  }

  std::vector<Row> rows;
  for (Row f : p0->rows()) {
    Row u = 0, mask = 0;
    for (std::size_t l = 0; l < m; ++l)
      if (!place(u, mask, in[l], f)) throw IntegrityError("copies of a row disagree on the root");
    push_truncations(u, w.size(), rows);
  }
  push_truncations(out.g, w.size(), rows);
  out.q = make_presentation(w, std::move(rows), bounds.caps());

  std::vector<std::vector<Label>> tuples;
  for (std::size_t l = 0; l < m; ++l) {
    std::vector<Label> t;
    for (Label a : inst.alpha0) t.push_back(fam.maps[l](a));
    tuples.push_back(std::move(t));
  }
  out.tau_star = tau_star(inst.tau, tuples);

  auto& facts = out.certificate.facts;
  auto report = validate_condition(*out.q);
  facts.push_back({"q is a condition", report.ok(), report.to_string(*out.q)});
  for (std::size_t l = 0; l < m; ++l)
    facts.push_back({"p" + std::to_string(l) + " <= q", order_clauses_hold(*fam.conditions[l], *out.q), ""});
  std::vector<Label> expected_w;
  for (const auto& c : fam.conditions) expected_w = label_union(expected_w, c->labels());
  facts.push_back({"w^q is the union", out.q->labels() == expected_w, ""});
  Element star = denote(out.tau_star, out.q);
  Element base = denote(inst.tau_at(0), out.q);
  facts.push_back({"tau* is nonzero", !star.is_zero(), std::to_string(star.support().count()) + " rows"});
  facts.push_back({"tau* <= tau(alpha0)", leq(star, base), ""});

  if (!out.certificate.all_pass()) {
    std::string failed;
    for (const auto& f : facts)
      if (!f.pass) failed += (failed.empty() ? "" : ", ") + f.name;
    throw IntegrityError("amalgam certificate failed: " + failed);
  }
  return out;
}

}  // namespace monkbench
