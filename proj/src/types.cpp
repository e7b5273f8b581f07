#include "kmatch/types.hpp"

#include <algorithm>

namespace kmatch {

// --- rational helpers ---

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw Error("zero denominator");
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw Error("zero denominator");
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  Rational value;
  if (value.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
  if (value.get_den() == 0) throw ParseError("zero denominator: " + text);
  Rational canonical = value;
  canonical.canonicalize();
  if (canonical.get_num() != value.get_num() || canonical.get_den() != value.get_den())
    throw ParseError("rational not in lowest terms: " + text);
  return canonical;
}

std::string rational_to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

// --- BipartiteGraph ---

BipartiteGraph::BipartiteGraph(int m, int n, std::vector<Edge> edges)
    : m_(m), n_(n), edges_(std::move(edges)) {
  if (m < 0 || n < 0) throw IndexOutOfRange("negative part size");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.a < 0 || e.a >= m_ || e.b < 0 || e.b >= n_)
      throw IndexOutOfRange("edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                            ") out of range");
    if (i > 0 && edges_[i - 1] == e)
      throw Error("duplicate edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                  ")");
  }
  adj_a_.resize(m_);
  adj_b_.resize(n_);
  for (const Edge& e : edges_) {
    adj_a_[e.a].push_back(e.b);
    adj_b_[e.b].push_back(e.a);
  }
}

BipartiteGraph BipartiteGraph::complete(int m, int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.push_back({i, j});
  return BipartiteGraph(m, n, std::move(edges));
}

bool BipartiteGraph::has_edge(int i, int j) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

const std::vector<int>& BipartiteGraph::neighbors_of_a(int i) const {
  if (i < 0 || i >= m_) throw IndexOutOfRange("A-vertex out of range");
  return adj_a_[i];
}

const std::vector<int>& BipartiteGraph::neighbors_of_b(int j) const {
  if (j < 0 || j >= n_) throw IndexOutOfRange("B-vertex out of range");
  return adj_b_[j];
}

// --- Matching ---

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (edges_[i].a == edges_[j].a || edges_[i].b == edges_[j].b)
        throw Error("edges share a vertex: (" + std::to_string(edges_[i].a) + ", " +
                    std::to_string(edges_[i].b) + ") and (" + std::to_string(edges_[j].a) +
                    ", " + std::to_string(edges_[j].b) + ")");
    }
  }
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Matching::covers_a(int i) const { return edge_at_a(i) != nullptr; }

bool Matching::covers_b(int j) const { return edge_at_b(j) != nullptr; }

const Edge* Matching::edge_at_a(int i) const {
  for (const Edge& e : edges_)
    if (e.a == i) return &e;
  return nullptr;
}

const Edge* Matching::edge_at_b(int j) const {
  for (const Edge& e : edges_)
    if (e.b == j) return &e;
  return nullptr;
}

std::vector<int> Matching::covered_a() const {
  std::vector<int> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Matching::covered_b() const {
  std::vector<int> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.b);
  std::sort(out.begin(), out.end());
  return out;
}

// --- points ---

RationalPoint to_rational(const IntegerPoint& n) {
  RationalPoint out(n.rows(), n.cols());
  for (int i = 0; i < n.rows(); ++i)
    for (int j = 0; j < n.cols(); ++j) out(i, j) = Rational(n(i, j));
  return out;
}

IntegerPoint add(const IntegerPoint& lhs, const IntegerPoint& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw DimensionMismatch("matrix addition dimension mismatch");
  IntegerPoint out(lhs.rows(), lhs.cols());
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j) out(i, j) = lhs(i, j) + rhs(i, j);
  return out;
}

IntegerPoint subtract(const IntegerPoint& lhs, const IntegerPoint& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw DimensionMismatch("matrix subtraction dimension mismatch");
  IntegerPoint out(lhs.rows(), lhs.cols());
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j) out(i, j) = lhs(i, j) - rhs(i, j);
  return out;
}

// --- Decomposition ---

IntegerPoint Decomposition::sum_matrix(int rows, int cols) const {
  IntegerPoint out(rows, cols);
  for (const Term& term : terms)
    for (const Edge& e : term.matching.edges()) out(e.a, e.b) += 1;
  return out;
}

RationalPoint Decomposition::weighted_sum(int rows, int cols) const {
  RationalPoint out(rows, cols);
  for (const Term& term : terms)
    for (const Edge& e : term.matching.edges()) out(e.a, e.b) += term.weight;
  return out;
}

}  // namespace kmatch
