#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "kmatch/errors.hpp"
#include "kmatch/rational.hpp"

namespace kmatch {

/// An edge of a bipartite graph: `a` indexes the left part, `b` the right.
struct Edge {
  int a{};
  int b{};
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A bipartite graph on parts of size m and n with 0-based vertex indices.
/// Immutable after construction; edges are kept sorted and deduplicated.
class BipartiteGraph {
 public:
  BipartiteGraph(int m, int n, std::vector<Edge> edges);

  static BipartiteGraph complete(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int i, int j) const;
  const std::vector<int>& neighbors_of_a(int i) const;
  const std::vector<int>& neighbors_of_b(int j) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_a_;
  std::vector<std::vector<int>> adj_b_;
};

/// A set of pairwise vertex-disjoint edges, kept sorted. The size of the set
/// is the k of a k-matching.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> edges);

  int size() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool contains(const Edge& e) const;
  bool covers_a(int i) const;
  bool covers_b(int j) const;
  /// The matched edge at a given endpoint, if any.
  const Edge* edge_at_a(int i) const;
  const Edge* edge_at_b(int j) const;
  std::vector<int> covered_a() const;
  std::vector<int> covered_b() const;

  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Dense matrix with exact entries, indexed (row, column) = (A-vertex, B-vertex).
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols) : rows_(rows), cols_(cols), data_(checked_size(rows, cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }

  T row_sum(int i) const {
    T sum = 0;
    for (int j = 0; j < cols_; ++j) sum += (*this)(i, j);
    return sum;
  }
  T col_sum(int j) const {
    T sum = 0;
    for (int i = 0; i < rows_; ++i) sum += (*this)(i, j);
    return sum;
  }
  T total() const {
    T sum = 0;
    for (const T& v : data_) sum += v;
    return sum;
  }
  bool is_zero() const {
    for (const T& v : data_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  static std::size_t checked_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw IndexOutOfRange("negative matrix dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw IndexOutOfRange("matrix index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntegerPoint = Grid<Integer>;
using RationalPoint = Grid<Rational>;

RationalPoint to_rational(const IntegerPoint& n);
IntegerPoint add(const IntegerPoint& lhs, const IntegerPoint& rhs);
IntegerPoint subtract(const IntegerPoint& lhs, const IntegerPoint& rhs);

/// A weighted list of matchings. In dilate form all weights are 1 and the
/// matrices of the terms sum to an integer point; in convex form the weights
/// are positive rationals summing to 1.
struct Decomposition {
  enum class Form { Dilate, Convex };
  struct Term {
    Rational weight;
    Matching matching;
  };
  Form form = Form::Dilate;
  std::vector<Term> terms;

  IntegerPoint sum_matrix(int rows, int cols) const;
  RationalPoint weighted_sum(int rows, int cols) const;
};

/// A certificate that no matching covers `subset`: a set S on one side with
/// |Γ(S)| < |S| in the ambient graph.
struct HallViolator {
  enum class Side { A, B };
  Side side = Side::A;
  std::vector<int> subset;
  std::vector<int> neighborhood;
};

}  // namespace kmatch
