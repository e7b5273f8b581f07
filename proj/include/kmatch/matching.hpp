#pragma once

#include <optional>
#include <vector>

#include "kmatch/types.hpp"

namespace kmatch {

/// No matching satisfying the requested size/coverage exists. Carries a Hall
/// violator when the failure is a one-sided coverage failure.
struct NoSuchMatching : Error {
  std::optional<HallViolator> violator;
  explicit NoSuchMatching(std::string what, std::optional<HallViolator> v = std::nullopt)
      : Error(std::move(what)), violator(std::move(v)) {}
};

/// Maximum-cardinality matching via shortest augmenting paths. Deterministic:
/// roots are taken in ascending order and BFS scans adjacency ascending.
Matching max_matching(const BipartiteGraph& g);

/// A subset S of `a_sub` with |Γ(S)| < |S|, present exactly when no matching
/// of g covers `a_sub`.
std::optional<HallViolator> hall_violator(const BipartiteGraph& g,
                                          const std::vector<int>& a_sub);

/// A matching of size exactly k covering every vertex of `a_req` and `b_req`.
/// One-sided requests run the augmenting construction directly; two-sided
/// requests reduce to one-sided covers combined through union_cover /
/// triple_combine. Throws NoSuchMatching when infeasible.
Matching covering_matching(const BipartiteGraph& g, std::vector<int> a_req,
                           std::vector<int> b_req, int k);

/// A matching inside m1 ∪ m2 covering v1 ∪ v2, where m1 covers v1 (A-side)
/// and m2 covers v2 (B-side). Orients m1 edges A→B and m2 edges B→A; the
/// union splits into directed paths and even cycles and each component keeps
/// one of its two alternations.
Matching union_cover(const Matching& m1, const Matching& m2,
                     const std::vector<int>& v1, const std::vector<int>& v2);

/// Combines a k-matching m1 covering a_req, a k-matching m2 covering b_req
/// and an (r+c-k)-matching m3 inside a_req × b_req into a k-matching
/// inside m1 ∪ m2 ∪ m3 covering a_req ∪ b_req.
Matching triple_combine(const Matching& m1, const Matching& m2, const Matching& m3,
                        const std::vector<int>& a_req, const std::vector<int>& b_req,
                        int k);

}  // namespace kmatch
