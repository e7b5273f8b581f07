#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kmatch/types.hpp"

namespace kmatch::verify {

// The verification harness runs many independent cases per suite. Each case
// is pure and owns its data, so suites run either serially or under an
// OpenMP parallel-for; both modes produce identical results. The serial
// runner is the reference the parallel one is tested against.

enum class RunMode { Serial, Parallel };

struct CaseOutcome {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string message;  // description of the first failure in this case
};

struct SuiteResult {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;  // up to 8, in case-index order
};

using CaseFn = std::function<CaseOutcome(std::size_t)>;

SuiteResult run_indexed(const std::string& name, std::size_t case_count,
                        const CaseFn& fn, RunMode mode);

// --- exhaustive suites (iterate all edge subsets of K_{m,n}) ---

/// 0/1 members of FM_k equal the k-matching indicators, k = 0..max_k.
SuiteResult theorem31_01_points(int m, int n, int max_k, RunMode mode);

/// normality_decompose succeeds on every integer point of t·FM_k(G) and its
/// terms are k-matchings of G summing back to the point.
SuiteResult normality_exhaustive(int m, int n, int max_k, int max_t, RunMode mode);

/// brute_decompose agrees on every enumerated point, and both decomposers
/// reject `rejection_trials` randomly perturbed non-members.
SuiteResult oracle_agreement(int m, int n, int max_k, int max_t,
                             std::uint64_t rejection_trials, std::uint64_t seed,
                             RunMode mode);

/// max_matching and hall_violator against exhaustive enumeration.
SuiteResult matching_exhaustive(int max_m, int max_n, RunMode mode);

/// matching_to_matrix / support_graph round trips over all graphs.
SuiteResult roundtrip_exhaustive(int max_m, int max_n, RunMode mode);

// --- randomized suites (seeded, reproducible) ---

/// k_extract postcondition on sums of t random k-matchings of K_{n,n}.
SuiteResult k_extract_random(int n, const std::vector<int>& ks, const std::vector<int>& ts,
                             std::uint64_t trials_per_combo, std::uint64_t seed,
                             RunMode mode);

/// birkhoff_decompose reconstructs random sums of t permutation matrices.
SuiteResult birkhoff_random(int max_n, int max_t, std::uint64_t trials_per_combo,
                            std::uint64_t seed, RunMode mode);

/// fractional_decompose reconstructs random members exactly.
SuiteResult fractional_random(int max_m, int max_n, std::uint64_t trials,
                              std::uint32_t max_denominator, std::uint64_t seed,
                              RunMode mode);

/// Midpoint certificates on random non-integral members, including the
/// fractional-entry-count descent of the recursion witness.
SuiteResult midpoint_random(int max_m, int max_n, std::uint64_t trials,
                            std::uint32_t max_denominator, std::uint64_t seed,
                            RunMode mode);

/// union_cover and triple_combine postconditions against brute-force
/// enumeration of sub-matchings of the union.
SuiteResult combination_random(int max_m, int max_n, std::uint64_t trials,
                               std::uint64_t seed, RunMode mode);

/// (a+b)-b == a bit-exactly for random rationals.
SuiteResult rational_exactness(std::uint64_t trials, std::uint64_t seed, RunMode mode);

/// parse(print(x)) == x for random documents.
SuiteResult json_roundtrip(std::uint64_t trials, std::uint64_t seed, RunMode mode);

// --- uniform-bounds harness used by the CLI ---

struct VerifyOptions {
  int max_m = 3;
  int max_n = 3;
  int max_k = 3;
  int max_t = 3;
  std::uint64_t trials = 100;
  std::uint32_t max_denominator = 60;
  std::uint64_t seed = 1;
  RunMode mode = RunMode::Parallel;
};

/// Throws TooLarge when the bounds exceed the oracle guards.
std::vector<SuiteResult> run_all(const VerifyOptions& options);

}  // namespace kmatch::verify
