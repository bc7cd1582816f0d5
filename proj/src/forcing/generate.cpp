#include "monkbench/forcing/generate.hpp"

#include <algorithm>
#include <set>

#include "monkbench/errors.hpp"
#include "monkbench/random.hpp"

namespace monkbench {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

constexpr int kMaxAttempts = 200;

std::vector<Label> sample_labels(Rng& rng, std::size_t count, Label limit, std::span<const Label> avoid = {}) {
  std::set<Label> out;
  std::set<Label> banned(avoid.begin(), avoid.end());
  if (limit < count + banned.size()) throw UsageError("label range too small for the requested width");
  while (out.size() < count) {
    Label l = uniform<Label>(rng, 0, limit - 1);
    if (!banned.count(l)) out.insert(l);
  }
  return {out.begin(), out.end()};
}

void close_under_truncation(std::vector<Row>& rows, std::size_t width) {
  std::vector<Row> seeds = rows;
  for (Row f : seeds)
    for (std::size_t k = 0; k < width; ++k) rows.push_back(f & width_mask(k));
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

Term random_term(Rng& rng, std::size_t variables, int depth) {
  int k = uniform<int>(rng, 0, depth <= 0 ? 1 : 4);
  switch (k) {
    case 0:
    case 1: return Term::gen(uniform<Label>(rng, 1, static_cast<Label>(variables)));
    case 2: return ~random_term(rng, variables, depth - 1);
    case 3: return random_term(rng, variables, depth - 1) & random_term(rng, variables, depth - 1);
    default: return random_term(rng, variables, depth - 1) | random_term(rng, variables, depth - 1);
  }
}

}  // namespace

PresentationPtr gen_random_condition(std::uint64_t seed, const ConditionParams& params) {
  if (params.max_width == 0 || params.max_width > kMaxWidth || params.max_rows == 0 || params.max_seed_rows == 0)
    throw UsageError("condition parameters out of range");
  Rng rng(seed);
  SizeCaps caps;
  caps.max_labels = std::max(caps.max_labels, params.max_width);
  caps.max_rows = std::max(caps.max_rows, params.max_rows);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::size_t width = uniform<std::size_t>(rng, 1, params.max_width);
    std::vector<Label> w = sample_labels(rng, width, params.label_limit);
    std::vector<Row> rows;
    for (std::size_t s = uniform<std::size_t>(rng, 1, params.max_seed_rows); s > 0; --s)
      rows.push_back(uniform<Row>(rng, 0, width_mask(width)));
    close_under_truncation(rows, width);

    Row hit = 0;
    for (Row f : rows) hit |= f;
    std::vector<Label> kept;
    for (std::size_t i = 0; i < width; ++i)
      if ((hit >> i) & 1U) kept.push_back(w[i]);
    if (kept.empty()) continue;
    // Restriction commutes with truncation, so closure survives the pruning.
    Projection proj(w, kept);
    for (Row& f : rows) f = proj.restrict(f);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    if (rows.size() > params.max_rows) continue;
    return make_presentation(std::move(kept), std::move(rows), caps);
  }
  throw GenerationError("no condition within bounds after " + std::to_string(kMaxAttempts) + " draws");
}

PresentationPtr gen_extension(std::uint64_t seed, const PresentationPtr& p, const ExtensionParams& params) {
  Rng rng(seed);
  SizeCaps caps;
  caps.max_labels = std::max(caps.max_labels, params.max_width);
  caps.max_rows = std::max(caps.max_rows, params.max_rows);
  if (p->is_degenerate()) throw UsageError("cannot extend a presentation without rows");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::size_t room = params.max_width > p->width() ? params.max_width - p->width() : 0;
    std::size_t added = uniform<std::size_t>(rng, 0, std::min(room, params.max_new_labels));
    std::vector<Label> fresh = sample_labels(rng, added, params.label_limit, p->labels());
    std::vector<Label> w = label_union(p->labels(), fresh);
    Projection old_in(w, p->labels());
    Projection new_in(w, fresh);

    std::vector<Row> rows;
    auto extend = [&](Row f) { return old_in.embed(f) | new_in.embed(uniform<Row>(rng, 0, width_mask(added))); };
    for (Row f : p->rows()) rows.push_back(extend(f));
    for (std::size_t e = uniform<std::size_t>(rng, 0, params.max_extra_rows); e > 0; --e)
      rows.push_back(extend(p->row(uniform<std::size_t>(rng, 0, p->size() - 1))));
    for (Label l : fresh) {
      Row bit = Row{1} << *position_of(w, l);
      if (std::none_of(rows.begin(), rows.end(), [&](Row f) { return f & bit; }))
        rows[uniform<std::size_t>(rng, 0, rows.size() - 1)] |= bit;
    }
    close_under_truncation(rows, w.size());
    if (rows.size() > params.max_rows) continue;
    return make_presentation(std::move(w), std::move(rows), caps);
  }
  throw GenerationError("no extension within bounds after " + std::to_string(kMaxAttempts) + " draws");
}

std::vector<PresentationPtr> gen_chain(std::uint64_t seed, std::size_t length, const ConditionParams& base,
                                       const ExtensionParams& step) {
  if (length == 0) throw UsageError("chain length must be positive");
  std::vector<PresentationPtr> chain{gen_random_condition(derive_seed(seed, 0), base)};
  for (std::size_t i = 1; i < length; ++i) chain.push_back(gen_extension(derive_seed(seed, i), chain.back(), step));
  return chain;
}

DeltaFamily gen_delta_family(std::uint64_t seed, const DeltaParams& params) {
  if (params.m < 2) throw UsageError("a Delta-family needs m >= 2");
  Rng rng(seed);
  auto tmpl = gen_random_condition(derive_seed(seed, 0), params.shape);
  const std::size_t k = tmpl->width();
  std::vector<bool> in_root(k);
  for (std::size_t i = 0; i < k; ++i) in_root[i] = chance(rng, params.root_chance);
  std::vector<Label> start(k);
  Label s = uniform<Label>(rng, 0, 3);
  for (std::size_t i = 0; i < k; ++i) {
    start[i] = s;
    s += static_cast<Label>(params.m) + uniform<Label>(rng, 0, 2);
  }

  SizeCaps caps = tmpl->caps();
  DeltaFamily fam;
  for (std::size_t i = 0; i < k; ++i)
    if (in_root[i]) fam.root.push_back(start[i]);
  for (std::size_t l = 0; l < params.m; ++l) {
    std::vector<Label> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = in_root[i] ? start[i] : start[i] + static_cast<Label>(l);
    std::vector<Row> rows(tmpl->rows().begin(), tmpl->rows().end());
    fam.conditions.push_back(make_presentation(w, std::move(rows), caps));
  }
  for (std::size_t l = 0; l < params.m; ++l)
    fam.maps.emplace_back(fam.conditions[0]->labels(), fam.conditions[l]->labels());
  return fam;
}

AmalgamInstance gen_amalgam_instance(std::uint64_t seed, std::size_t n, std::size_t m) {
  if (n == 0) throw UsageError("tau needs at least one variable");
  Rng rng(seed);
  DeltaParams params;
  params.m = m;
  params.shape.max_width = n + 2;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    DeltaFamily fam = gen_delta_family(derive_seed(seed, static_cast<std::uint64_t>(attempt)), params);
    const auto& w0 = fam.conditions[0]->labels();
    if (w0.size() < n) continue;
    std::vector<Label> pool(w0.begin(), w0.end());
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[uniform<std::size_t>(rng, 0, i - 1)]);
    std::vector<Label> alpha0(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
    std::sort(alpha0.begin(), alpha0.end());
    for (int t = 0; t < 20; ++t) {
      Term tau = random_term(rng, n, 3);
      if (clause_f_holds(fam.conditions[0], tau, alpha0, fam.root))
        return AmalgamInstance{std::move(fam), std::move(tau), std::move(alpha0)};
    }
  }
  throw GenerationError("no instance satisfying clause f after " + std::to_string(kMaxAttempts) + " families");
}

}  // namespace monkbench
