#include "kmatch/core.hpp"

#include <algorithm>

namespace kmatch {

namespace {

template <typename T>
BipartiteGraph support_graph_impl(const Grid<T>& point, const BipartiteGraph& g) {
  if (point.rows() != g.m() || point.cols() != g.n())
    throw DimensionMismatch("point dimensions do not match graph");
  std::vector<Edge> edges;
  for (int i = 0; i < point.rows(); ++i) {
    for (int j = 0; j < point.cols(); ++j) {
      if (point(i, j) == 0) continue;
      if (!g.has_edge(i, j)) throw SupportOutsideGraph(i, j);
      edges.push_back({i, j});
    }
  }
  return BipartiteGraph(g.m(), g.n(), std::move(edges));
}

}  // namespace

BipartiteGraph support_graph(const IntegerPoint& point, const BipartiteGraph& g) {
  return support_graph_impl(point, g);
}

BipartiteGraph support_graph(const RationalPoint& point, const BipartiteGraph& g) {
  return support_graph_impl(point, g);
}

IntegerPoint matching_to_matrix(const Matching& matching, int m, int n) {
  IntegerPoint out(m, n);
  for (const Edge& e : matching.edges()) {
    if (e.a < 0 || e.a >= m || e.b < 0 || e.b >= n)
      throw IndexOutOfRange("matching edge out of range");
    out(e.a, e.b) = 1;
  }
  return out;
}

std::pair<BipartiteGraph, int> embed(const BipartiteGraph& g) {
  int n = std::max(g.m(), g.n());
  return {BipartiteGraph::complete(n, n), n};
}

}  // namespace kmatch
