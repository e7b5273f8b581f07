#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kmatch/types.hpp"

namespace kmatch::oracle {

/// Parameters for reproducible instance generation. Identical seeds produce
/// identical instances on every platform.
struct InstanceSeed {
  std::uint64_t seed = 0;
  std::uint32_t max_denominator = 60;
  int max_m = 3;
  int max_n = 3;
  int max_k = 3;
  int max_t = 3;
};

/// SplitMix64. Fixed and portable; bounded draws use the multiply-shift
/// reduction, so sequences are identical across platforms and compilers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from {0, ..., bound-1}; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  int range_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

/// Derives an independent per-case stream from a suite seed.
inline SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (0xA0761D6478BD642Full * (index + 1)));
  return SplitMix64(mixer.next());
}

/// All k-matchings of g in lexicographic order. Guard: at most 24 edges.
std::vector<Matching> enumerate_k_matchings(const BipartiteGraph& g, int k);

/// All integer matrices supported on g with row/column sums <= t and total
/// t*k, in lexicographic order. Guard on (t+1)^|E|.
std::vector<IntegerPoint> enumerate_integer_points(const BipartiteGraph& g, int k,
                                                   unsigned long t);

/// Exhaustive search for a multiset of t k-matchings of g summing to `point`.
std::optional<Decomposition> brute_decompose(const IntegerPoint& point,
                                             const BipartiteGraph& g, unsigned long t,
                                             int k);

/// A random convex combination of 2..6 distinct random k-matchings of g with
/// weights c_i/d, d <= max_denominator. Passes membership by construction.
/// Throws NoKMatching when g has no k-matching.
RationalPoint random_member(const BipartiteGraph& g, int k, const InstanceSeed& seed);

// Instance-generation helpers shared by the verification harness.

/// A uniform-ish random k-matching covering a_req and b_req, sampled edge by
/// edge among the choices that keep completion feasible.
Matching random_k_matching(SplitMix64& rng, const BipartiteGraph& g, int k,
                           const std::vector<int>& a_req = {},
                           const std::vector<int>& b_req = {});

/// A random graph with 1..max_m + 1..max_n vertices, each edge present with
/// probability 1/2.
BipartiteGraph random_graph(SplitMix64& rng, int max_m, int max_n);

}  // namespace kmatch::oracle
