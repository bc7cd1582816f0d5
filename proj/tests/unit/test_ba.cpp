#include <doctest.h>

#include <set>

#include "monkbench/ba/carrier.hpp"
#include "monkbench/ba/grid.hpp"
#include "monkbench/ba/json.hpp"
#include "monkbench/errors.hpp"
#include "support/oracles.hpp"

using namespace monkbench;
using monkbench::testing::Rng;

namespace {

// w = {0,1}; rows f_ab with f(0)=a, f(1)=b. Canonical order: f00, f01, f10.
PresentationPtr p2() { return make_presentation({0, 1}, {0b00, 0b01, 0b10}); }
constexpr std::size_t kF00 = 0, kF01 = 1, kF10 = 2;

PresentationPtr free2() { return make_presentation({0, 1}, {0b00, 0b01, 0b10, 0b11}); }

Element elem(const PresentationPtr& p, std::initializer_list<std::size_t> idx) {
  std::vector<std::size_t> v(idx);
  return Element::from_indices(p, v);
}

}  // namespace

TEST_CASE("canonical row order is lexicographic in label order") {
  auto p = p2();
  CHECK(row_string(p->row(kF00), 2) == "00");
  CHECK(row_string(p->row(kF01), 2) == "01");
  CHECK(row_string(p->row(kF10), 2) == "10");
}

TEST_CASE("truncation keeps the part below the cutoff") {
  Assignment f({0, 1, 2}, 0b111);
  CHECK(truncate(f, Cutoff::at(1)).to_string() == "100");
  CHECK(truncate(f, Cutoff::infinity()) == f);
  CHECK(truncate(truncate(f, Cutoff::at(2)), Cutoff::at(1)) == truncate(f, Cutoff::at(1)));
}

TEST_CASE("eval_hom") {
  CHECK(eval_hom(Term::gen(0), Assignment({0}, 1)));
  CHECK(eval_hom(~Term::gen(0) & Term::gen(1), Assignment({0, 1}, 0b10)));
  CHECK_FALSE(eval_hom(Term::zero(), Assignment({0, 1}, 0b11)));
  CHECK_THROWS_AS(eval_hom(Term::gen(5), Assignment({0}, 1)), DomainError);
}

TEST_CASE("term s-expressions parse and print") {
  Term t = Term::parse("(and (and x1 x3) (not x2))");
  CHECK(t.to_string() == "(and (and x1 x3) (not x2))");
  CHECK(Term::parse("(and x1 x3 (not x2))") == t);
  CHECK(Term::parse("(minus (and x1 x3) x2)") == t);
  CHECK(t.labels() == std::vector<Label>{1, 2, 3});
  CHECK_THROWS_AS(Term::parse("(and x1"), ParseError);
  CHECK_THROWS_AS(Term::parse("(xor x1 x2)"), ParseError);
  CHECK_THROWS_AS(Term::parse("y3"), ParseError);
}

TEST_CASE("denote on the P2 fixture") {
  auto p = p2();
  auto x0 = Term::gen(0), x1 = Term::gen(1);
  CHECK(denote(x0 & x1, p).is_zero());
  CHECK(denote(x0 | x1, p) == elem(p, {kF10, kF01}));
  CHECK(denote(~x0, p) == elem(p, {kF00, kF01}));
  CHECK_THROWS_AS(denote(Term::gen(7), p), DomainError);
}

TEST_CASE("element operations") {
  auto p = p2();
  CHECK(complement(Element::zero(p)) == Element::one(p));
  CHECK(leq(elem(p, {kF10}), elem(p, {kF10, kF01})));
  CHECK(meet(generator(p, 0), generator(p, 1)) == denote(Term::gen(0) & Term::gen(1), p));
  auto other = free2();
  CHECK_THROWS_AS(meet(generator(p, 0), generator(other, 0)), UsageError);
}

TEST_CASE("free relations on P2") {
  auto p = p2();
  std::vector<Label> none, zero{0}, both{0, 1};
  CHECK_FALSE(free_relation_holds(zero, none, *p));
  CHECK(free_relation_holds(both, none, *p));
  CHECK_FALSE(free_relation_holds(none, none, *p));
  CHECK_THROWS_AS(free_relation_holds(zero, zero, *p), UsageError);
}

TEST_CASE("subalgebra closure") {
  auto p = p2();
  CHECK(subalgebra_closure(p, {}).elements().size() == 2);

  std::vector<Element> gens{generator(p, 0), generator(p, 1)};
  Carrier c = subalgebra_closure(p, gens);
  CHECK(c.elements().size() == 8);
  REQUIRE(c.atoms().size() == 3);
  std::set<Support> atoms;
  for (const auto& a : c.atoms()) atoms.insert(a.support());
  CHECK(atoms == std::set<Support>{elem(p, {kF00}).support(), elem(p, {kF01}).support(),
                                   elem(p, {kF10}).support()});

  Element a = elem(p, {kF01});
  std::vector<Element> one_gen{a};
  Carrier four = subalgebra_closure(p, one_gen);
  CHECK(four.elements().size() == 4);
  CHECK(four.contains(complement(a)));
}

TEST_CASE("elements are listed in canonical order") {
  Carrier c = full_algebra(p2());
  const auto& els = c.elements();
  for (std::size_t i = 1; i < els.size(); ++i) CHECK(canonical_less(els[i - 1], els[i]));
}

TEST_CASE("pi density") {
  auto p = p2();
  Carrier c = full_algebra(p);
  CHECK(pi_density(c) == 3);
  CHECK(min_dense_size_brute_force(c) == 3);
  CHECK(pi_density(subalgebra_closure(p, {})) == 1);

  // n pairwise separated rows: singleton supports are the atoms.
  auto sep = make_presentation({0, 1, 2, 3}, {0b0001, 0b0010, 0b0100, 0b1000});
  CHECK(pi_density(full_algebra(sep)) == 4);
  CHECK(min_dense_size_brute_force(full_algebra(sep)) == 4);
}

TEST_CASE("is_dense") {
  auto p = free2();
  auto x0 = generator(p, 0), x1 = generator(p, 1);
  std::vector<Element> y{meet(x0, x1)};
  std::vector<Element> x{x0, complement(x0), Element::one(p)};
  CHECK_FALSE(is_dense(x, y));
  CHECK(is_dense(y, y));
  Carrier c = full_algebra(p);
  auto plus = c.nonzero_elements();
  CHECK(is_dense(c.atoms(), plus));
}

TEST_CASE("find_escape") {
  auto p = free2();
  Carrier b = full_algebra(p);
  std::vector<Label> only0{0};
  Carrier a = generated_by_labels(p, only0);
  // Exhaustive oracle: first nonzero b above no nonzero member of A.
  std::optional<Element> expected;
  for (const auto& y : b.elements()) {
    if (y.is_zero()) continue;
    bool above = false;
    for (const auto& x : a.elements()) above |= !x.is_zero() && leq(x, y);
    if (!above) {
      expected = y;
      break;
    }
  }
  REQUIRE(expected);
  auto got = find_escape(b, a);
  REQUIRE(got);
  CHECK(*got == *expected);
  // Canonical-first witness is the f00 singleton, i.e. (not x0) and (not x1).
  CHECK(*got == denote(~Term::gen(0) & ~Term::gen(1), p));
  CHECK_FALSE(find_escape(b, b));
  Carrier trivial = subalgebra_closure(p, {});
  CHECK_FALSE(find_escape(trivial, trivial));
}

TEST_CASE("pi of ultrafilters of finite carriers") {
  auto p = p2();
  Carrier c = full_algebra(p);
  Element atom = elem(p, {kF10});
  std::vector<Element> principal;
  for (const auto& e : c.elements())
    if (leq(atom, e)) principal.push_back(e);
  CHECK(pi_ultrafilter(principal, c) == 1);

  Carrier two = subalgebra_closure(p, {});
  std::vector<Element> top{Element::one(p)};
  CHECK(pi_ultrafilter(top, two) == 1);

  std::vector<Element> not_uf{Element::one(p), generator(p, 0)};
  CHECK_THROWS_AS(pi_ultrafilter(not_uf, c), UsageError);

  // Enumerate every subset of the 8-element carrier, keep the ultrafilters,
  // and compute pi by an independent exhaustive search.
  const auto& els = c.elements();
  std::size_t found = 0;
  for (std::uint32_t mask = 0; mask < (1U << els.size()); ++mask) {
    std::vector<Element> u;
    for (std::size_t i = 0; i < els.size(); ++i)
      if ((mask >> i) & 1U) u.push_back(els[i]);
    if (!is_ultrafilter(u, c)) continue;
    ++found;
    std::size_t best = 99;
    for (std::uint32_t xs = 1; xs < (1U << els.size()); ++xs) {
      bool ok = (xs & 1U) == 0;  // index 0 is the zero element
      for (std::size_t yi = 0; ok && yi < u.size(); ++yi) {
        bool hit = false;
        for (std::size_t i = 0; i < els.size(); ++i)
          if ((xs >> i) & 1U) hit |= leq(els[i], u[yi]);
        ok = hit;
      }
      if (ok) best = std::min<std::size_t>(best, std::popcount(xs));
    }
    CHECK(best == 1);
    CHECK(pi_ultrafilter(u, c) == best);
  }
  CHECK(found == 3);
}

TEST_CASE("first-hit selector") {
  auto g = product_grid(2);
  const auto& r = g.atoms;
  Element zero = Element::zero(g.presentation);
  CHECK(first_hit_selector(zero, r).is_zero());
  CHECK(first_hit_selector(r[1], r) == r[1]);
  CHECK(first_hit_selector(join(r[2], r[3]), r) == r[2]);
}

TEST_CASE("ordered partitions reject bad blocks") {
  auto p = p2();
  CHECK_THROWS_AS(OrderedPartition({elem(p, {kF00}), elem(p, {kF00, kF01})}), UsageError);
  CHECK_THROWS_AS(OrderedPartition({elem(p, {kF00})}), UsageError);
  CHECK_THROWS_AS(OrderedPartition({Element::zero(p), Element::one(p)}), UsageError);
}

TEST_CASE("product grid n=2") {
  auto g = product_grid(2);
  CHECK(g.atoms.size() == 4);
  std::vector<std::size_t> h00{0, 0}, h01{0, 1}, h10{1, 0}, h11{1, 1};
  CHECK(g.grids[0][0] == join(g.atom(h00), g.atom(h01)));
  CHECK(g.grids[0][1] == join(g.atom(h10), g.atom(h11)));
  CHECK(g.grids[1][0] == join(g.atom(h00), g.atom(h10)));
  CHECK(g.grids[1][1] == join(g.atom(h01), g.atom(h11)));
  for (auto h : {h00, h01, h10, h11}) CHECK(g.selection_meet(h) == g.atom(h));
  CHECK(g.selection_meet(h10) == g.atom(h10));
  CHECK_FALSE(g.selection_meet(h10).is_zero());
  CHECK_THROWS_AS(product_grid(1), UsageError);
  CHECK_THROWS_AS(product_grid(5), UsageError);
}

TEST_CASE("product grid n=3 and n=4: every selection meets in one atom") {
  for (std::size_t n : {3u, 4u}) {
    auto g = product_grid(n);
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= n;
    CHECK(g.atoms.size() == total);
    std::size_t nonzero = 0;
    std::vector<std::size_t> h(n, 0);
    for (std::size_t s = 0; s < total; ++s) {
      Element m = g.selection_meet(h);
      CHECK(m.support().count() == 1);
      CHECK(m == g.atom(h));
      nonzero += m.is_zero() ? 0 : 1;
      for (std::size_t k = 0; k < n && ++h[k] == n; ++k) h[k] = 0;
    }
    CHECK(nonzero == total);
  }
}

TEST_CASE("presentation JSON") {
  auto p = p2();
  Json j = presentation_to_json(*p);
  CHECK(j.dump() == R"({"w":[0,1],"F":[[0,0],[0,1],[1,0]]})");
  auto back = presentation_from_json(j);
  CHECK(*back == *p);
  Element e = elem(p, {kF01, kF10});
  CHECK(element_to_json(e).dump() == R"({"support":[1,2]})");
  CHECK(element_from_json(element_to_json(e), p) == e);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"w":[1,0],"F":[]})")), ParseError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"w":[0],"F":[[2]]})")), ParseError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"support":[5]})"), p), ParseError);
}

TEST_CASE("caps") {
  std::vector<Label> wide(17);
  for (std::size_t i = 0; i < wide.size(); ++i) wide[i] = static_cast<Label>(i);
  CHECK_THROWS_AS(make_presentation(wide, {}), CapacityError);
  std::vector<Row> many;
  for (Row f = 0; f < 32; ++f) many.push_back(f);
  CHECK_THROWS_AS(make_presentation({0, 1, 2, 3, 4}, many), CapacityError);
}

TEST_CASE("degenerate presentation") {
  auto p = make_presentation({0}, {});
  CHECK(p->is_degenerate());
  CHECK(Element::zero(p) == Element::one(p));
  CHECK(full_algebra(p).elements().size() == 1);
}

// --- properties ---------------------------------------------------------------

TEST_CASE("property: denote is a homomorphism") {
  Rng rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    auto p = testing::random_presentation(rng, 6, 20);
    auto s = testing::random_term(rng, p->labels(), 3);
    auto t = testing::random_term(rng, p->labels(), 3);
    CHECK(denote(s & t, p) == meet(denote(s, p), denote(t, p)));
    CHECK(denote(s | t, p) == join(denote(s, p), denote(t, p)));
    CHECK(denote(~s, p) == complement(denote(s, p)));
    // Per-row agreement with eval_hom on explicit assignments.
    Element d = denote(s, p);
    for (std::size_t i = 0; i < p->size(); ++i) CHECK(d.support().test(i) == eval_hom(s, p->assignment(i)));
  }
  auto p = p2();
  CHECK(denote(Term::zero(), p).is_zero());
  CHECK(denote(Term::one(), p) == Element::one(p));
}

TEST_CASE("property: zero criterion agrees with a rewriting normalizer") {
  Rng rng(12);
  for (int iter = 0; iter < 400; ++iter) {
    auto p = testing::random_presentation(rng, 5, 12, true);
    auto t = testing::random_term(rng, p->labels(), 4);
    CHECK(denote(t, p).is_zero() == testing::zero_by_relations(t, *p));
  }
}

TEST_CASE("property: free relations match zero denotations") {
  Rng rng(13);
  for (int iter = 0; iter < 40; ++iter) {
    auto p = testing::random_presentation(rng, 7, 24);
    const auto& w = p->labels();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < w.size(); ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<Label> u, v;
      std::size_t c = code;
      for (Label l : w) {
        if (c % 3 == 1) u.push_back(l);
        if (c % 3 == 2) v.push_back(l);
        c /= 3;
      }
      CHECK(free_relation_holds(u, v, *p) == denote(meet_minus_term(u, v), p).is_zero());
    }
  }
}

TEST_CASE("property: closure agrees with the naive fixpoint") {
  Rng rng(14);
  for (int iter = 0; iter < 60; ++iter) {
    auto p = testing::random_presentation(rng, 4, 8);
    std::vector<Element> gens;
    std::uniform_int_distribution<int> count(0, 3);
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << p->size()) - 1);
    for (int k = count(rng); k > 0; --k) gens.emplace_back(p, Support(p->size(), bits(rng)));
    Carrier c = subalgebra_closure(p, gens);
    auto naive = testing::naive_closure(p, gens);
    std::set<Support> ours;
    for (const auto& e : c.elements()) ours.insert(e.support());
    CHECK(ours == naive);
    for (const auto& e : c.elements()) CHECK(c.contains(e));
  }
}

TEST_CASE("property: pi equals the brute-force minimum dense size") {
  Rng rng(15);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    auto p = testing::random_presentation(rng, 5, 10);
    std::vector<Element> gens;
    std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << p->size()) - 1);
    for (int k = 0; k < 2; ++k) gens.emplace_back(p, Support(p->size(), bits(rng)));
    Carrier c = subalgebra_closure(p, gens);
    if (c.size() - 1 > 15) continue;
    CHECK(pi_density(c) == min_dense_size_brute_force(c));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("property: density is transitive; escape is dual to density") {
  Rng rng(16);
  for (int iter = 0; iter < 100; ++iter) {
    auto p = testing::random_presentation(rng, 4, 6);
    Carrier b = full_algebra(p);
    const auto& els = b.elements();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    auto sample = [&] {
      std::vector<Element> s;
      for (int k = 0; k < 3; ++k) s.push_back(els[pick(rng)]);
      return s;
    };
    auto x = sample(), z = sample(), y = sample();
    if (is_dense(x, z) && is_dense(z, y)) CHECK(is_dense(x, y));

    std::vector<Element> gens{els[pick(rng)]};
    Carrier a = subalgebra_closure(p, gens);
    auto a_plus = a.nonzero_elements();
    auto b_plus = b.nonzero_elements();
    CHECK(!find_escape(b, a).has_value() == is_dense(a_plus, b_plus));
  }
}

TEST_CASE("property: selector is zero exactly on zero") {
  Rng rng(17);
  auto g = product_grid(3);
  std::uniform_int_distribution<std::size_t> bit(0, g.presentation->size() - 1);
  for (int iter = 0; iter < 500; ++iter) {
    Support s(g.presentation->size());
    std::uniform_int_distribution<int> count(0, 4);
    for (int k = count(rng); k > 0; --k) s.set(bit(rng));
    Element x(g.presentation, s);
    Element y = first_hit_selector(x, g.grids[iter % 3]);
    CHECK(y.is_zero() == x.is_zero());
    if (!x.is_zero()) {
      bool is_block = false;
      for (const auto& b : g.grids[iter % 3].blocks()) is_block |= (b == y);
      CHECK(is_block);
    }
  }
}
