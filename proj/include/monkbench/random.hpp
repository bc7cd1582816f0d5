#ifndef MONKBENCH_RANDOM_HPP
#define MONKBENCH_RANDOM_HPP

#include <boost/random/bernoulli_distribution.hpp>
#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <cstdint>

namespace monkbench {

// Boost distributions give the same stream on every platform, unlike <random>.
using Rng = boost::random::mt19937_64;

template <class T>
T uniform(Rng& rng, T lo, T hi) {
  return boost::random::uniform_int_distribution<T>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) { return boost::random::bernoulli_distribution<double>(p)(rng); }

}  // namespace monkbench

#endif  // MONKBENCH_RANDOM_HPP
