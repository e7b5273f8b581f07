#pragma once

#include <optional>
#include <string>
#include <variant>

#include "kmatch/types.hpp"

namespace kmatch {

// ---------------------------------------------------------------------------
// Constraint violations. A point x lies in the t-dilate of the fractional
// k-matching polytope of G iff all of the following hold:
//   x >= 0 entrywise, x is supported on E(G), every row and column sums to
//   at most t, and the total equals t*k (or <=, >= in the relaxed modes).
// Violations are reported in that fixed order.
// ---------------------------------------------------------------------------

struct NegativeEntry {
  int i{};
  int j{};
  Rational value;
};
struct SupportViolation {
  int i{};
  int j{};
};
struct RowSumViolation {
  int index{};
  Rational sum;
  Integer bound;
};
struct ColSumViolation {
  int index{};
  Rational sum;
  Integer bound;
};
struct TotalSumViolation {
  Rational sum;
  Integer target;
};

using Violation =
    std::variant<NegativeEntry, SupportViolation, RowSumViolation, ColSumViolation,
                 TotalSumViolation>;

std::string describe(const Violation& violation);

struct MembershipVerdict {
  bool member = false;
  std::optional<Violation> violation;
};

enum class MembershipMode { Exact, AtMost, AtLeast };

struct NotAMember : Error {
  Violation violation;
  explicit NotAMember(Violation v);
};

struct NotInDilatedBirkhoff : Error {
  Violation violation;
  explicit NotInDilatedBirkhoff(Violation v);
};

struct NotInDilatedPolytope : Error {
  Violation violation;
  explicit NotInDilatedPolytope(Violation v);
};

/// Tests x against the H-representation of t·FM_k(G). Mode selects whether
/// the total-sum constraint is = t*k, <= t*k or >= t*k.
MembershipVerdict membership(const RationalPoint& x, const BipartiteGraph& g, int k,
                             MembershipMode mode = MembershipMode::Exact,
                             unsigned long t = 1);

/// True iff x is a vertex of FM_k(G), i.e. a member with 0/1 entries.
bool is_vertex(const RationalPoint& x, const BipartiteGraph& g, int k);

// ---------------------------------------------------------------------------
// Midpoint certificates. A non-integral member of FM_k(G) is never a vertex:
// it is the midpoint of two distinct members obtained by shifting an
// alternating ±ε pattern along a structure of the fractional support graph
// H = { e : 0 < x_e < 1 }. The structure used decides the case tag:
//   EvenCycle             a cycle of H (always even, G bipartite)
//   EvenMaximalPath       a maximal path of H with an even number of edges
//   OddPathInteriorSlack  H is a single odd path; the perturbation works on
//                         the even subpath at an interior vertex with slack
//   TwoOddPaths           H is a forest of odd paths; two paths in distinct
//                         components are perturbed simultaneously
// ---------------------------------------------------------------------------

enum class CertificateCase { EvenCycle, EvenMaximalPath, OddPathInteriorSlack, TwoOddPaths };

std::string to_string(CertificateCase c);

struct MidpointCertificate {
  RationalPoint x_prime;
  RationalPoint x_double_prime;
  Rational epsilon;
  CertificateCase case_tag = CertificateCase::EvenCycle;
};

/// Certifies that a non-integral member x of FM_k(G) is not a vertex:
/// returns x', x'' in FM_k(G), both distinct from x, with x = (x' + x'')/2.
/// Throws NotAMember or AlreadyIntegral.
MidpointCertificate midpoint_certificate(const RationalPoint& x, const BipartiteGraph& g,
                                         int k);

/// Number of entries of x that are not integers.
int fractional_entry_count(const RationalPoint& x);

}  // namespace kmatch
