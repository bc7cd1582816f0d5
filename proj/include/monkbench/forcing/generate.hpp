#ifndef MONKBENCH_FORCING_GENERATE_HPP
#define MONKBENCH_FORCING_GENERATE_HPP

#include <cstdint>
#include <vector>

#include "monkbench/forcing/amalgam.hpp"

namespace monkbench {

/// splitmix64 finalizer; the counter-based split used for every derived seed.
std::uint64_t splitmix64(std::uint64_t x);
/// Seed of sub-stream `stream` under `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) { return splitmix64(seed ^ splitmix64(stream)); }

struct ConditionParams {
  std::size_t max_width = 8;
  std::size_t max_rows = 24;
  /// Labels are drawn from [0, label_limit).
  Label label_limit = 64;
  std::size_t max_seed_rows = 3;
};

/// Random rows over a random w, closed under truncation, then restricted to
/// the labels some row hits. GenerationError after 200 rejected draws.
PresentationPtr gen_random_condition(std::uint64_t seed, const ConditionParams& params = {});

struct ExtensionParams {
  std::size_t max_new_labels = 3;
  std::size_t max_extra_rows = 3;
  std::size_t max_width = 24;
  std::size_t max_rows = 256;
  Label label_limit = 64;
};

/// A condition q >= p: every row of p gets a random extension over the new
/// labels, a few more random extensions are added, and the result is closed
/// under truncation.
PresentationPtr gen_extension(std::uint64_t seed, const PresentationPtr& p, const ExtensionParams& params = {});

/// p, then repeated extensions: an ascending chain of the given length.
std::vector<PresentationPtr> gen_chain(std::uint64_t seed, std::size_t length, const ConditionParams& base = {},
                                       const ExtensionParams& step = {});

struct DeltaParams {
  std::size_t m = 2;
  ConditionParams shape{4, 12, 64, 3};
  /// Chance that a template position is a root position.
  double root_chance = 0.3;
};

/// m copies of one random template. Position i owns the label block
/// [s_i, s_i + m) with s_{i+1} >= s_i + m; a root position sits at s_i in
/// every copy, any other position sits at s_i + l in copy l.
DeltaFamily gen_delta_family(std::uint64_t seed, const DeltaParams& params);

/// A Delta-family of m copies plus alpha0 and a random tau in n variables,
/// redrawn until clause f holds. Clause g is left to the caller, so m <= n+2
/// yields instances that fail exactly there.
AmalgamInstance gen_amalgam_instance(std::uint64_t seed, std::size_t n, std::size_t m);

}  // namespace monkbench

#endif  // MONKBENCH_FORCING_GENERATE_HPP
