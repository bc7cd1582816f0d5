#include "monkbench/forcing/condition.hpp"

#include <algorithm>
#include <sstream>

#include "monkbench/errors.hpp"

namespace monkbench {

SizeCaps PosetBounds::caps() const {
  SizeCaps c;
  c.max_labels = std::min<std::size_t>(mu_bound, kMaxWidth);
  c.max_rows = mu_bound;
  return c;
}

void PosetBounds::check(const Presentation& p) const {
  if (p.width() > caps().max_labels) throw UsageError("|w| exceeds mu_bound");
  if (p.size() > mu_bound) throw UsageError("|F| exceeds mu_bound");
  if (!p.labels().empty() && p.labels().back() >= lambda_bound) throw UsageError("label exceeds lambda_bound");
}

std::string ConditionReport::to_string(const Presentation& p) const {
  std::ostringstream out;
  for (Label a : alpha) out << "(alpha) no row is 1 at " << a << "; ";
  for (const auto& [f, a] : beta)
    out << "(beta) truncation of " << row_string(f, p.width()) << " at " << a << " missing; ";
  std::string s = out.str();
  if (!s.empty()) s.resize(s.size() - 2);
  return s;
}

ConditionReport validate_condition(const Presentation& p) {
  ConditionReport r;
  const auto& w = p.labels();
  Row hit = 0;
  for (Row f : p.rows()) hit |= f;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!((hit >> i) & 1U)) r.alpha.push_back(w[i]);
  for (Row f : p.rows())
    for (std::size_t i = 0; i < w.size(); ++i) {
      Row t = f & width_mask(i);
      if (t != f && !p.contains(t)) r.beta.emplace_back(f, w[i]);
    }
  return r;
}

void require_condition(const Presentation& p, const char* what) {
  auto r = validate_condition(p);
  if (!r.ok()) throw UsageError(std::string(what) + " is not a condition: " + r.to_string(p));
}

std::vector<Row> closure_cl(std::span<const Row> rows, std::span<const Label> w) {
  std::vector<Row> out;
  for (Row g : rows)
    if (in_closure(g, rows, w)) out.push_back(g);
  std::sort(out.begin(), out.end(), LexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_closure(Row g, std::span<const Row> rows, std::span<const Label> w) {
  // Taking u = w covers every smaller finite u.
  const Row full = width_mask(w.size());
  return std::any_of(rows.begin(), rows.end(), [&](Row f) { return ((f ^ g) & full) == 0; });
}

bool order_clauses_hold(const Presentation& p, const Presentation& q) {
  if (!is_subset(p.labels(), q.labels())) return false;
  Projection proj(q.labels(), p.labels());
  for (Row g : q.rows())
    if (!in_closure(proj.restrict(g), p.rows(), p.labels())) return false;
  for (Row f : p.rows()) {
    bool extended = std::any_of(q.rows().begin(), q.rows().end(), [&](Row g) { return proj.restrict(g) == f; });
    if (!extended) return false;
  }
  return true;
}

bool cond_leq(const Presentation& p, const Presentation& q) {
  require_condition(p, "left side of <=");
  require_condition(q, "right side of <=");
  return order_clauses_hold(p, q);
}

namespace {

struct ChainMember {
  Projection proj;
  const Presentation* p;
};

// Least g over w (canonical order) with g|w_z in F_z for every member,
// extending `fixed_bits` on `fixed_mask`. Positions are decided lowest first,
// 0 before 1, and a branch dies once some member has no row agreeing with it.
std::optional<Row> least_extension(std::span<const ChainMember> members, std::size_t width, Row fixed_mask,
                                   Row fixed_bits) {
  auto viable = [&](Row g, Row known) {
    for (const auto& m : members) {
      Row mk = m.proj.restrict(known), mg = m.proj.restrict(g);
      bool any = std::any_of(m.p->rows().begin(), m.p->rows().end(), [&](Row f) { return ((f ^ mg) & mk) == 0; });
      if (!any) return false;
    }
    return true;
  };
  std::vector<Row> stack_g{fixed_bits};
  std::vector<std::size_t> stack_k{0};
  // Iterative DFS; pushing 1 before 0 pops 0 first.
  while (!stack_g.empty()) {
    Row g = stack_g.back();
    std::size_t k = stack_k.back();
    stack_g.pop_back();
    stack_k.pop_back();
    Row known = width_mask(k) | fixed_mask;
    if (!viable(g, known)) continue;
    while (k < width && ((fixed_mask >> k) & 1U)) ++k;
    if (k == width) return g;
    stack_g.push_back(g | (Row{1} << k));
    stack_k.push_back(k + 1);
    stack_g.push_back(g);
    stack_k.push_back(k + 1);
  }
  return std::nullopt;
}

}  // namespace

PresentationPtr chain_upper_bound(std::span<const PresentationPtr> chain, const PosetBounds& bounds) {
  if (chain.empty()) throw UsageError("chain_upper_bound needs a nonempty chain");
  for (const auto& c : chain) require_condition(*c, "chain member");
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!order_clauses_hold(*chain[i - 1], *chain[i])) throw UsageError("chain is not ascending");

  std::vector<Label> w;
  for (const auto& c : chain) w = label_union(w, c->labels());
  if (w.size() > bounds.caps().max_labels) throw CapacityError("chain union exceeds the label bound");

  std::vector<ChainMember> members;
  for (const auto& c : chain) members.push_back({Projection(w, c->labels()), c.get()});

  std::vector<Row> rows;
  for (const auto& m : members)
    for (Row f : m.p->rows()) {
      auto g = least_extension(members, w.size(), m.proj.sub_mask_in_super(), m.proj.embed(f));
      if (!g) throw IntegrityError("chain member row " + row_string(f, m.p->width()) + " has no extension");
      rows.push_back(*g);
    }
  auto top = make_presentation(w, std::move(rows), bounds.caps());
  auto report = validate_condition(*top);
  if (!report.ok()) throw IntegrityError("chain upper bound invalid: " + report.to_string(*top));
  for (const auto& c : chain)
    if (!order_clauses_hold(*c, *top)) throw IntegrityError("chain upper bound is not above a member");
  return top;
}

bool in_generated_subalgebra(const Element& e, std::span<const Label> gens) {
  if (!is_subset(gens, e.presentation().labels())) throw UsageError("generator labels leave w");
  return generated_by_labels(e.presentation_ptr(), gens).contains(e);
}

NoveltyFlags check_generator_novelty(const PresentationPtr& p, Label a) {
  auto pos = p->position(a);
  if (!pos) throw UsageError("label " + std::to_string(a) + " is not in w");
  std::span<const Label> below(p->labels().data(), *pos);
  Element x = generator(p, a);
  Carrier sub = generated_by_labels(p, below);
  NoveltyFlags flags;
  flags.nonzero = !x.is_zero();
  flags.not_generated = !sub.contains(x);
  flags.nothing_below = std::none_of(sub.atoms().begin(), sub.atoms().end(), [&](const Element& b) { return leq(b, x); });
  return flags;
}

bool embeds_as_subalgebra(const PresentationPtr& p, const PresentationPtr& q) {
  if (!is_subset(p->labels(), q->labels())) throw UsageError("embedding check needs w^p inside w^q");
  Projection proj(q->labels(), p->labels());
  std::vector<Row> patterns(p->rows().begin(), p->rows().end());
  for (Row g : q->rows()) patterns.push_back(proj.restrict(g));
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());

  const auto& w = p->labels();
  for (Row pat : patterns) {
    std::vector<Label> ones, zeros;
    for (std::size_t i = 0; i < w.size(); ++i) ((pat >> i) & 1U ? ones : zeros).push_back(w[i]);
    Term minterm = meet_minus_term(ones, zeros);
    if (denote(minterm, p).is_zero() != denote(minterm, q).is_zero()) return false;
  }
  return true;
}

bool baq_embedding_check(const PresentationPtr& p, const PresentationPtr& q) {
  if (!cond_leq(*p, *q)) throw UsageError("baq_embedding_check needs p <= q");
  return embeds_as_subalgebra(p, q);
}

}  // namespace monkbench
