#include "suites.hpp"

#include <array>
#include <set>

#include "monkbench/ba/carrier.hpp"
#include "monkbench/ba/grid.hpp"
#include "monkbench/errors.hpp"
#include "monkbench/forcing/amalgam.hpp"
#include "monkbench/forcing/generate.hpp"
#include "monkbench/forcing/json.hpp"
#include "monkbench/interval/finite.hpp"
#include "monkbench/interval/generate.hpp"
#include "monkbench/interval/json.hpp"
#include "monkbench/random.hpp"

namespace monkbench::detail {

namespace {

std::string labels_string(std::span<const Label> labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + std::to_string(labels[i]);
  return out + "}";
}

ConditionParams condition_params(const SuiteBounds& b) {
  ConditionParams params;
  params.max_width = b.max_width;
  params.max_rows = b.max_rows;
  return params;
}

Json chain_json(std::span<const PresentationPtr> chain) {
  Json out = Json::array();
  for (const auto& p : chain) out.push_back(presentation_to_json(*p));
  return out;
}

// Counts failures of a family of sub-checks, keeping the first for the record.
struct Tally {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string first;

  void add(bool pass, const std::function<std::string()>& describe) {
    ++total;
    if (pass) return;
    if (failed++ == 0) first = describe();
  }
  void report(CaseContext& c, std::string name) const {
    c.check(std::move(name), failed == 0,
            failed == 0 ? std::to_string(total) + " checked"
                        : std::to_string(failed) + " of " + std::to_string(total) + " failed, first: " + first);
  }
};

void freeness(CaseContext& c) {
  auto p = gen_random_condition(c.seed, condition_params(*c.bounds));
  c.instance = presentation_to_json(*p);
  c.check("instance is a condition", validate_condition(*p).ok());
  const auto& w = p->labels();
  std::size_t patterns = 1;
  for (std::size_t i = 0; i < w.size(); ++i) patterns *= 3;
  Tally tally;
  std::vector<Label> u, v;
  for (std::size_t code = 0; code < patterns; ++code) {
    u.clear();
    v.clear();
    for (std::size_t i = 0, t = code; i < w.size(); ++i, t /= 3) {
      if (t % 3 == 1) u.push_back(w[i]);
      if (t % 3 == 2) v.push_back(w[i]);
    }
    bool relation = free_relation_holds(u, v, *p);
    bool zero = denote(meet_minus_term(u, v), p).is_zero();
    tally.add(relation == zero, [&] { return "u=" + labels_string(u) + " v=" + labels_string(v); });
  }
  tally.report(c, "free relation holds iff the meet-minus term is zero");
}

void novelty(CaseContext& c) {
  auto p = gen_random_condition(c.seed, condition_params(*c.bounds));
  c.instance = presentation_to_json(*p);
  Tally tally;
  for (Label a : p->labels()) {
    NoveltyFlags f = check_generator_novelty(p, a);
    tally.add(f.all(), [&] {
      return "label " + std::to_string(a) + " nonzero=" + std::to_string(f.nonzero) +
             " not_generated=" + std::to_string(f.not_generated) + " nothing_below=" + std::to_string(f.nothing_below);
    });
  }
  tally.report(c, "every generator is new over the earlier ones");
}

void embedding(CaseContext& c) {
  const PosetBounds& poset = c.bounds->poset;
  Tally embeds;
  if (c.index % 2 == 0) {
    Rng rng(c.seed);
    std::size_t length = uniform<std::size_t>(rng, 2, 4);
    auto chain = gen_chain(derive_seed(c.seed, 1), length, condition_params(*c.bounds));
    c.instance = Json{{"kind", "chain"}, {"chain", chain_json(chain)}};
    auto q = chain_upper_bound(chain, poset);
    c.instance["upper_bound"] = presentation_to_json(*q);
    std::vector<PresentationPtr> all = chain;
    all.push_back(q);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        embeds.add(baq_embedding_check(all[i], all[j]),
                   [&] { return "pair " + std::to_string(i) + " <= " + std::to_string(j); });
    Tally transitive;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j)
        for (std::size_t k = 0; k < all.size(); ++k) {
          if (!cond_leq(*all[i], *all[j]) || !cond_leq(*all[j], *all[k])) continue;
          transitive.add(cond_leq(*all[i], *all[k]), [&] {
            return "triple " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
          });
        }
    transitive.report(c, "cond_leq is transitive on sampled triples");
  } else {
    DeltaParams params;
    params.m = 2;
    auto fam = gen_delta_family(c.seed, params);
    c.instance = Json{{"kind", "pair"}, {"family", delta_family_to_json(fam)}};
    auto q = pair_amalgam(fam.conditions[0], fam.conditions[1], fam.maps[1], poset);
    c.instance["amalgam"] = presentation_to_json(*q);
    for (std::size_t l = 0; l < 2; ++l)
      embeds.add(baq_embedding_check(fam.conditions[l], q), [&] { return "p" + std::to_string(l) + " <= q"; });
  }
  embeds.report(c, "BA[p] embeds in BA[q] for p <= q");
}

void chain(CaseContext& c) {
  std::size_t length = 1 + c.index % 6;
  auto members = gen_chain(c.seed, length, condition_params(*c.bounds));
  c.instance = Json{{"chain", chain_json(members)}};
  auto q = chain_upper_bound(members, c.bounds->poset);
  c.instance["upper_bound"] = presentation_to_json(*q);
  c.check("upper bound is a condition", validate_condition(*q).ok());
  std::vector<Label> w;
  Tally above;
  for (std::size_t i = 0; i < members.size(); ++i) {
    w = label_union(w, members[i]->labels());
    above.add(cond_leq(*members[i], *q), [&] { return "member " + std::to_string(i); });
  }
  above.report(c, "upper bound lies above every member");
  c.check("upper bound has the union of the label sets", q->labels() == w);
}

void pair_amalgam_suite(CaseContext& c) {
  DeltaParams params;
  params.m = 2;
  auto fam = gen_delta_family(c.seed, params);
  c.instance = delta_family_to_json(fam);
  auto q = pair_amalgam(fam.conditions[0], fam.conditions[1], fam.maps[1], c.bounds->poset);
  c.instance["amalgam"] = presentation_to_json(*q);
  c.check("amalgam is a condition", validate_condition(*q).ok());
  c.check("p0 <= q", cond_leq(*fam.conditions[0], *q));
  c.check("p1 <= q", cond_leq(*fam.conditions[1], *q));
  c.check("amalgam has the union of the label sets",
          q->labels() == label_union(fam.conditions[0]->labels(), fam.conditions[1]->labels()));
}

void amalgam(CaseContext& c) {
  std::size_t n = 1 + c.index % 3;
  auto inst = gen_amalgam_instance(c.seed, n, n + 3);
  c.instance = amalgam_instance_to_json(inst);
  auto result = m_amalgam(inst, c.bounds->poset);
  for (const auto& fact : result.certificate.facts) c.check(fact.name, fact.pass, fact.detail);
}

void amalgam_negative(CaseContext& c) {
  std::size_t n = 1 + c.index % 3;
  auto inst = gen_amalgam_instance(c.seed, n, n + 2);
  c.instance = amalgam_instance_to_json(inst);
  try {
    check_amalgam_preconditions(inst);
    c.check("rejected at clause g", false, "accepted");
  } catch (const PreconditionError& e) {
    c.check("rejected at clause g", e.clause() == "g", e.what());
  }
}

void pi_density_suite(CaseContext& c) {
  Rng rng(c.seed);
  auto width = uniform<std::size_t>(rng, 1, 5);
  std::vector<Label> w;
  for (std::size_t i = 0; i < width; ++i) w.push_back(static_cast<Label>(i));
  auto target = uniform<std::size_t>(rng, 1, std::min<std::size_t>(15, std::size_t{1} << width));
  std::set<Row> rows;
  while (rows.size() < target) rows.insert(uniform<Row>(rng, 0, width_mask(width)));
  auto p = make_presentation(w, {rows.begin(), rows.end()});
  c.instance = presentation_to_json(*p);
  Tally tally;
  for (Row mask = 0; mask <= width_mask(width); ++mask) {
    std::vector<Label> gens;
    for (std::size_t i = 0; i < width; ++i)
      if ((mask >> i) & 1U) gens.push_back(w[i]);
    Carrier carrier = generated_by_labels(p, gens);
    // |C+| <= 15 exactly when there are at most 4 atoms.
    if (carrier.atoms().size() > 4) continue;
    std::size_t pi = pi_density(carrier), brute = min_dense_size_brute_force(carrier);
    tally.add(pi == brute, [&] {
      return "gens " + labels_string(gens) + ": pi " + std::to_string(pi) + ", brute force " + std::to_string(brute);
    });
  }
  tally.report(c, "pi equals the brute-force least dense size");
}

void interval_laws(CaseContext& c) {
  Rng rng(c.seed);
  auto order = LinOrder::rationals();
  auto x = random_interval_elem(rng, order), y = random_interval_elem(rng, order);
  c.instance = Json{{"x", interval_elem_to_json(x)}, {"y", interval_elem_to_json(y)}};
  auto j = join(x, y), m = meet(x, y), cx = complement(x), cy = complement(y);
  auto one = IntervalElem::one(order);
  c.check("complement of a join", complement(j) == meet(cx, cy));
  c.check("complement of a meet", complement(m) == join(cx, cy));
  c.check("double complement", complement(cx) == x);
  c.check("x join its complement is 1", join(x, cx) == one);
  c.check("x meet its complement is 0", meet(x, cx).is_zero());
  c.check("absorption", meet(x, j) == x && join(x, m) == x);
  c.check("commutativity", j == join(y, x) && m == meet(y, x));
  c.check("normal form is stable", IntervalElem(order, x.parts()) == x);

  std::vector<IntervalElem> elems{x, y};
  Tally points;
  bool below = true;
  for (const Point& p : deciding_points(order, elems)) {
    bool in_x = x.contains(p), in_y = y.contains(p);
    bool ok = j.contains(p) == (in_x || in_y) && m.contains(p) == (in_x && in_y) && cx.contains(p) == !in_x;
    points.add(ok, [&] { return "at " + Endpoint::at(p).to_string(); });
    if (in_x && !in_y) below = false;
  }
  points.report(c, "operations agree with point membership");
  c.check("leq agrees with point membership", leq(x, y) == below);
}

constexpr std::size_t kFiniteCutCases = 7;

void cut_calculus(CaseContext& c) {
  if (c.index < kFiniteCutCases) {
    std::size_t n = c.index + 1;
    auto alg = finite_interval_presentation(n);
    c.instance = Json{{"order", alg.order.to_string()}};
    auto ultrafilters = enumerate_ultrafilters_finite(alg);
    c.check("ultrafilter count is n", ultrafilters.size() == n, std::to_string(ultrafilters.size()));
    c.check("atom count is n", alg.carrier.atoms().size() == n);
    std::vector<IntervalElem> all;
    for (const Element& e : alg.carrier.elements()) all.push_back(alg.from_element(e));
    Tally pis, props;
    for (const auto& u : ultrafilters) {
      std::size_t brute = pi_ultrafilter(u.members, alg.carrier);
      SymCard symbolic = pi_of_cut(u.cut, alg.order);
      pis.add(brute == 1 && symbolic == SymCard::one(), [&] {
        return u.cut.to_string() + ": brute force " + std::to_string(brute) + ", symbolic " + symbolic.to_string();
      });
      props.add(cut_ultrafilter_props(u.cut, all).ok(), [&] { return u.cut.to_string(); });
    }
    pis.report(c, "pi of each ultrafilter is 1 by brute force and by cofinality");
    props.report(c, "cut membership is an ultrafilter on every element");
    return;
  }
  Rng rng(c.seed);
  auto order = LinOrder::rationals();
  Cut cut = random_rational_cut(rng, c.index - kFiniteCutCases);
  c.instance = Json{{"order", order.to_string()}, {"cut", cut_to_json(cut)}, {"samples", 1000}};
  std::vector<IntervalElem> samples;
  for (int i = 0; i < 1000; ++i) samples.push_back(random_interval_elem(rng, order));
  UltrafilterReport r = cut_ultrafilter_props(cut, samples);
  c.check("both membership formulations agree", r.formulation_mismatches == 0,
          std::to_string(r.formulation_mismatches));
  c.check("exactly one of x and its complement", r.dichotomy_failures == 0, std::to_string(r.dichotomy_failures));
  c.check("closed under meets", r.meet_failures == 0, std::to_string(r.meet_failures));
  c.check("closed upward", r.upward_failures == 0, std::to_string(r.upward_failures));
  c.check("1 in, 0 out", r.one_member && !r.zero_member);
  c.check("pi of a cut of Q is aleph0", pi_of_cut(cut, order) == SymCard::aleph0());
}

struct PichiExpectation {
  const char* order;
  const char* pichi;
};

constexpr std::array<PichiExpectation, 11> kPichi{{{"fin:1", "1"},
                                                   {"fin:2", "1"},
                                                   {"fin:3", "1"},
                                                   {"fin:4", "1"},
                                                   {"fin:5", "1"},
                                                   {"fin:6", "1"},
                                                   {"fin:7", "1"},
                                                   {"Q", "aleph0"},
                                                   {"lexQ:λ1", "λ1"},
                                                   {"lexQ:λ2", "λ2"},
                                                   {"lexQ:aleph0", "aleph0"}}};

void symbolic_pichi(CaseContext& c) {
  const auto& e = kPichi[c.index % kPichi.size()];
  auto order = LinOrder::parse(e.order);
  SymCard expected = SymCard::parse(e.pichi);
  c.instance = Json{{"order", order.to_string()}};
  SymCard got = pichi_order(order);
  c.check("pichi_order", got == expected, got.to_string());
  Tally bounded;
  for (const Cut& cut : representative_cuts(order))
    bounded.add(pi_of_cut(cut, order) <= got, [&] { return cut.to_string(); });
  bounded.report(c, "no cut exceeds pichi_order");
  if (order.kind() == LinOrder::Kind::LexQ) {
    SymCard top = pi_of_cut(Cut::top(), order);
    c.check("pi of the top cut is lambda", top == order.lambda(), top.to_string());
  }
}

const ProductGrid& cached_grid(std::size_t n) {
  static const std::array<ProductGrid, 3> grids{product_grid(2), product_grid(3), product_grid(4)};
  return grids[n - 2];
}

constexpr std::size_t kGridShapes = 3;

void grid(CaseContext& c) {
  if (c.index < kGridShapes) {
    std::size_t n = c.index + 2;
    const ProductGrid& g = cached_grid(n);
    c.instance = Json{{"n", n}};
    Tally disjoint;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          disjoint.add(meet(g.grids[k][a], g.grids[k][b]).is_zero(), [&] {
            return "grid " + std::to_string(k) + " blocks " + std::to_string(a) + "," + std::to_string(b);
          });
    disjoint.report(c, "blocks within a grid are disjoint");
    Tally nonzero;
    std::vector<std::size_t> choice(n, 0);
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= n;
    for (std::size_t s = 0; s < total; ++s) {
      for (std::size_t k = 0, t = s; k < n; ++k, t /= n) choice[k] = t % n;
      Element e = g.selection_meet(choice);
      bool is_atom = std::any_of(g.atoms.blocks().begin(), g.atoms.blocks().end(),
                                 [&](const Element& a) { return a == e; });
      nonzero.add(!e.is_zero() && is_atom, [&] { return "selection " + std::to_string(s); });
    }
    nonzero.report(c, "every selection meets in exactly one atom");
    return;
  }
  Rng rng(c.seed);
  auto n = uniform<std::size_t>(rng, 2, 4);
  const ProductGrid& g = cached_grid(n);
  auto k = uniform<std::size_t>(rng, 0, n);
  const OrderedPartition& r = k < n ? g.grids[k] : g.atoms;
  static constexpr double kDensities[] = {0.0, 0.005, 0.02, 0.1, 0.5};
  double density = kDensities[uniform<std::size_t>(rng, 0, 4)];
  Support s(g.presentation->size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = chance(rng, density);
  Element x(g.presentation, s);
  c.instance = Json{{"n", n}, {"partition", k < n ? Json(k) : Json("atoms")}, {"x", element_to_json(x)}};
  Element sel = first_hit_selector(x, r);
  c.check("selector is zero iff the input is zero", sel.is_zero() == x.is_zero());
  if (!x.is_zero()) {
    std::size_t j = 0;
    while (meet(r[j], x).is_zero()) ++j;
    c.check("selector is the first block meeting the input", sel == r[j], "block " + std::to_string(j));
  }
}

}  // namespace

const std::vector<SuiteDef>& suite_registry() {
  static const std::vector<SuiteDef> registry{
      {"freeness", "conditions", 500, freeness},
      {"novelty", "conditions", 500, novelty},
      {"embedding", "embedding", 300, embedding},
      {"chain", "chain", 200, chain},
      {"pair-amalgam", "pair-amalgam", 200, pair_amalgam_suite},
      {"m-amalgam", "m-amalgam", 200, amalgam},
      {"m-amalgam-negative", "m-amalgam-negative", 200, amalgam_negative},
      {"pi-density", "pi-density", 100, pi_density_suite},
      {"interval-laws", "interval-laws", 10000, interval_laws},
      {"cut-calculus", "cut-calculus", kFiniteCutCases + 20, cut_calculus},
      {"symbolic-pichi", "symbolic-pichi", kPichi.size(), symbolic_pichi},
      {"grid", "grid", kGridShapes + 1000, grid},
  };
  return registry;
}

}  // namespace monkbench::detail
