#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace twistpos {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic source of small positive rationals. split() derives an
/// independent stream per task so results do not depend on scheduling.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }
  SeededRng split(std::uint64_t task) const { return SeededRng(splitmix64(seed_ ^ splitmix64(task + 1))); }

  std::uint64_t next() { return engine_(); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

  /// p/q with 1 <= p, q <= bound.
  mpq_class positive_rational(unsigned bound = 10) {
    std::uniform_int_distribution<unsigned> d(1, bound);
    mpq_class q(d(engine_), d(engine_));
    q.canonicalize();
    return q;
  }

  std::vector<mpq_class> positive_rationals(std::size_t k, unsigned bound = 10) {
    std::vector<mpq_class> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(positive_rational(bound));
    return out;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace twistpos
