#pragma once

#include <vector>

#include "kmatch/polytope.hpp"
#include "kmatch/types.hpp"

namespace kmatch {

/// Rows and columns of a dilate point whose sums reach the dilate factor t.
struct TightProfile {
  std::vector<int> tight_rows;
  std::vector<int> tight_cols;
  int r = 0;
  int c = 0;
};

TightProfile tight_profile(const IntegerPoint& point, unsigned long t);

/// Bookkeeping for the padding step of k_extract: `black` is the original
/// point, `red` the units added to reach a matrix with all line sums t.
struct PaddedMatrix {
  IntegerPoint black;
  IntegerPoint red;
  unsigned long t = 1;

  IntegerPoint total() const;
};

/// Adds t(n-k) units, one at a time, always at the cell crossing the
/// smallest-index deficient row with the smallest-index deficient column.
PaddedMatrix pad_to_birkhoff(const IntegerPoint& point, unsigned long t, int k);

/// For N in tB_n, a perfect matching M of the support graph of N with
/// N - matrix(M) in (t-1)B_n. Throws NotInDilatedBirkhoff.
Matching birkhoff_extract(const IntegerPoint& point, unsigned long t);

/// Writes N in tB_n as a sum of t permutation matrices.
Decomposition birkhoff_decompose(const IntegerPoint& point, unsigned long t);

/// For N in t·FM_k(K_{n,n}), a k-matching M of the support graph of N with
/// N - matrix(M) in (t-1)·FM_k(K_{n,n}). Throws NotInDilatedPolytope.
Matching k_extract(const IntegerPoint& point, unsigned long t, int k);

/// Writes N in t·FM_k(G) as a sum of t k-matchings of G.
/// Throws NotInDilatedPolytope or SupportOutsideGraph.
Decomposition normality_decompose(const IntegerPoint& point, const BipartiteGraph& g,
                                  unsigned long t, int k);

/// Writes a member x of FM_k(G) as an exact convex combination of k-matchings
/// of G (a generalized Birkhoff–von Neumann decomposition). Scales by the
/// least common multiple q of the entry denominators and decomposes q·x.
Decomposition fractional_decompose(const RationalPoint& x, const BipartiteGraph& g, int k);

}  // namespace kmatch
