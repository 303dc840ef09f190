#ifndef BIQO_RNG_HPP
#define BIQO_RNG_HPP

#include <cstdint>
#include <random>

namespace biqo {

// Deterministic random source. Every stochastic routine in the library takes
// one of these (or a raw 64-bit seed) so that identical seeds give
// bit-identical runs.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1). Derived from the top 53 bits of the generator output
  // rather than std::uniform_real_distribution, whose stream is
  // implementation-defined.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int bit() { return uniform01() < 0.5 ? 0 : 1; }

private:
  std::mt19937_64 gen_;
};

} // namespace biqo

#endif
