#pragma once

#include <utility>

#include "kmatch/types.hpp"

namespace kmatch {

/// The graph whose edges are the nonzero cells of `point`. Throws
/// SupportOutsideGraph if a nonzero cell is not an edge of `g`.
BipartiteGraph support_graph(const IntegerPoint& point, const BipartiteGraph& g);
BipartiteGraph support_graph(const RationalPoint& point, const BipartiteGraph& g);

/// The 0/1 matrix of a matching inside an m-by-n ambient.
IntegerPoint matching_to_matrix(const Matching& matching, int m, int n);

/// Embeds g into the complete graph K_{n,n} with n = max(m, n of g); vertex
/// indices are preserved, missing vertices are isolated.
std::pair<BipartiteGraph, int> embed(const BipartiteGraph& g);

}  // namespace kmatch
