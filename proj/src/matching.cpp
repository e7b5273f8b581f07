#include "kmatch/matching.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "kmatch/core.hpp"

namespace kmatch {

namespace {

std::vector<int> sorted_unique(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<int> without(const std::vector<int>& sorted, std::initializer_list<int> drop) {
  std::vector<int> out;
  out.reserve(sorted.size());
  for (int v : sorted)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  return out;
}

// Mutable matching state for the augmenting-path routines: mate_a[i] is the
// B-vertex matched to A-vertex i, -1 when unmatched (mate_b symmetric).
struct MatchState {
  std::vector<int> mate_a;
  std::vector<int> mate_b;

  MatchState(int m, int n) : mate_a(m, -1), mate_b(n, -1) {}

  explicit MatchState(const BipartiteGraph& g, const Matching& matching)
      : MatchState(g.m(), g.n()) {
    for (const Edge& e : matching.edges()) {
      mate_a[e.a] = e.b;
      mate_b[e.b] = e.a;
    }
  }

  int size() const {
    int count = 0;
    for (int b : mate_a)
      if (b >= 0) ++count;
    return count;
  }

  Matching to_matching() const {
    std::vector<Edge> edges;
    for (int i = 0; i < static_cast<int>(mate_a.size()); ++i)
      if (mate_a[i] >= 0) edges.push_back({i, mate_a[i]});
    return Matching(std::move(edges));
  }
};

// Shortest alternating path from the uncovered A-vertex `root` to an
// uncovered B-vertex, layered BFS with adjacency scanned in ascending order.
// Flips the path into the matching when found.
bool augment_from_a(const BipartiteGraph& g, MatchState& st, int root) {
  std::vector<int> pred_b(g.n(), -2);
  std::vector<char> seen_a(g.m(), 0);
  std::vector<int> queue{root};
  seen_a[root] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int a = queue[head];
    for (int b : g.neighbors_of_a(a)) {
      if (pred_b[b] != -2) continue;
      pred_b[b] = a;
      if (st.mate_b[b] < 0) {
        // Flip the alternating path ending at b.
        int cur_b = b;
        while (true) {
          int cur_a = pred_b[cur_b];
          int next_b = st.mate_a[cur_a];
          st.mate_a[cur_a] = cur_b;
          st.mate_b[cur_b] = cur_a;
          if (cur_a == root) break;
          cur_b = next_b;
        }
        return true;
      }
      int a2 = st.mate_b[b];
      if (!seen_a[a2]) {
        seen_a[a2] = 1;
        queue.push_back(a2);
      }
    }
  }
  return false;
}

// Alternating reachability from a set of uncovered A-roots under a fixed
// matching: S = reachable A-vertices, T = reachable B-vertices = Γ(S).
std::pair<std::vector<int>, std::vector<int>> alternating_reach(const BipartiteGraph& g,
                                                                const MatchState& st,
                                                                const std::vector<int>& roots) {
  std::vector<char> seen_a(g.m(), 0), seen_b(g.n(), 0);
  std::vector<int> queue;
  for (int r : roots) {
    if (!seen_a[r]) {
      seen_a[r] = 1;
      queue.push_back(r);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int a = queue[head];
    for (int b : g.neighbors_of_a(a)) {
      if (seen_b[b]) continue;
      seen_b[b] = 1;
      int a2 = st.mate_b[b];
      if (a2 >= 0 && !seen_a[a2]) {
        seen_a[a2] = 1;
        queue.push_back(a2);
      }
    }
  }
  std::vector<int> s, t;
  for (int i = 0; i < g.m(); ++i)
    if (seen_a[i]) s.push_back(i);
  for (int j = 0; j < g.n(); ++j)
    if (seen_b[j]) t.push_back(j);
  return {s, t};
}

BipartiteGraph transposed(const BipartiteGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.push_back({e.b, e.a});
  return BipartiteGraph(g.n(), g.m(), std::move(edges));
}

Matching transposed(const Matching& m) {
  std::vector<Edge> edges;
  edges.reserve(m.edges().size());
  for (const Edge& e : m.edges()) edges.push_back({e.b, e.a});
  return Matching(std::move(edges));
}

// One-sided covering matching: cover `a_req` by augmenting from the required
// roots in ascending order, then grow to size k from the remaining A-vertices.
Matching covering_one_sided(const BipartiteGraph& g, const std::vector<int>& a_req, int k,
                            HallViolator::Side side) {
  MatchState st(g.m(), g.n());
  for (int root : a_req) {
    if (st.mate_a[root] >= 0) continue;
    if (!augment_from_a(g, st, root)) {
      // The reachable set from the stuck roots is a Hall violator.
      std::vector<int> stuck;
      for (int r : a_req)
        if (st.mate_a[r] < 0) stuck.push_back(r);
      auto [s, t] = alternating_reach(g, st, stuck);
      HallViolator violator;
      violator.side = side;
      violator.subset = std::move(s);
      violator.neighborhood = std::move(t);
      throw NoSuchMatching("no matching covers the required vertices", violator);
    }
  }
  for (int a = 0; a < g.m() && st.size() < k; ++a) {
    if (st.mate_a[a] < 0) augment_from_a(g, st, a);
  }
  if (st.size() < k)
    throw NoSuchMatching("graph has no matching of size " + std::to_string(k));
  internal_check(st.size() == k, "one-sided covering phase overshot k");
  return st.to_matching();
}

// Grows `matching` to size k inside g by plain augmentation (which never
// uncovers a covered vertex). Throws when the maximum matching is below k.
Matching grow_to_size(const BipartiteGraph& g, const Matching& matching, int k) {
  MatchState st(g, matching);
  for (int a = 0; a < g.m() && st.size() < k; ++a) {
    if (st.mate_a[a] < 0) augment_from_a(g, st, a);
  }
  if (st.size() < k)
    throw NoSuchMatching("graph has no matching of size " + std::to_string(k));
  return st.to_matching();
}

bool is_valid_combination(const Matching& result, const Matching& m1, const Matching& m2,
                          const Matching& m3, const std::vector<int>& a_req,
                          const std::vector<int>& b_req, int k) {
  if (result.size() != k) return false;
  for (const Edge& e : result.edges())
    if (!m1.contains(e) && !m2.contains(e) && !m3.contains(e)) return false;
  for (int a : a_req)
    if (!result.covers_a(a)) return false;
  for (int b : b_req)
    if (!result.covers_b(b)) return false;
  return true;
}

// Exact search for a k-matching inside m1 ∪ m2 ∪ m3 covering the required
// vertices. Branches only at required vertices (at most three union edges
// each); the tail is filled from a maximum matching of the residual union.
class CombineSearch {
 public:
  CombineSearch(const Matching& m1, const Matching& m2, const Matching& m3,
                std::vector<int> a_req, std::vector<int> b_req, int k)
      : a_req_(std::move(a_req)), b_req_(std::move(b_req)), k_(k) {
    std::set<Edge> pool(m1.edges().begin(), m1.edges().end());
    pool.insert(m2.edges().begin(), m2.edges().end());
    pool.insert(m3.edges().begin(), m3.edges().end());
    union_edges_.assign(pool.begin(), pool.end());
  }

  std::optional<Matching> run() {
    partial_.clear();
    if (dfs()) return Matching(partial_);
    return std::nullopt;
  }

 private:
  bool used_a(int a) const {
    for (const Edge& e : partial_)
      if (e.a == a) return true;
    return false;
  }
  bool used_b(int b) const {
    for (const Edge& e : partial_)
      if (e.b == b) return true;
    return false;
  }

  bool dfs() {
    int need_a = -1, need_b = -1;
    for (int a : a_req_)
      if (!used_a(a)) {
        need_a = a;
        break;
      }
    if (need_a < 0) {
      for (int b : b_req_)
        if (!used_b(b)) {
          need_b = b;
          break;
        }
    }
    if (need_a < 0 && need_b < 0) return fill_to_k();
    for (const Edge& e : union_edges_) {
      if (need_a >= 0 ? e.a != need_a : e.b != need_b) continue;
      if (used_a(e.a) || used_b(e.b)) continue;
      partial_.push_back(e);
      if (dfs()) return true;
      partial_.pop_back();
    }
    return false;
  }

  bool fill_to_k() {
    int needed = k_ - static_cast<int>(partial_.size());
    if (needed < 0) return false;
    if (needed == 0) return true;
    // Residual union graph on compacted indices.
    std::vector<Edge> residual;
    int max_a = 0, max_b = 0;
    for (const Edge& e : union_edges_) {
      if (used_a(e.a) || used_b(e.b)) continue;
      residual.push_back(e);
      max_a = std::max(max_a, e.a + 1);
      max_b = std::max(max_b, e.b + 1);
    }
    BipartiteGraph rg(max_a, max_b, residual);
    Matching mm = max_matching(rg);
    if (mm.size() < needed) return false;
    for (int i = 0; i < needed; ++i) partial_.push_back(mm.edges()[i]);
    return true;
  }

  std::vector<Edge> union_edges_;
  std::vector<int> a_req_;
  std::vector<int> b_req_;
  int k_;
  std::vector<Edge> partial_;
};

std::vector<Edge> edges_without(const Matching& m, std::initializer_list<Edge> drop) {
  std::vector<Edge> out;
  out.reserve(m.edges().size());
  for (const Edge& e : m.edges())
    if (std::find(drop.begin(), drop.end(), e) == drop.end()) out.push_back(e);
  return out;
}

// The recursive construction behind triple_combine. The base case merges the
// two coverings through union_cover and trims; otherwise the first edge of
// m1 or m2 inside a_req × b_req is peeled off together with the touched m3
// edges and reinserted after the recursion.
Matching combine_recursive(const Matching& m1, const Matching& m2, const Matching& m3,
                           const std::vector<int>& a_req, const std::vector<int>& b_req,
                           int k) {
  int r = static_cast<int>(a_req.size());
  int c = static_cast<int>(b_req.size());
  if (r + c == k) {
    Matching merged = union_cover(m1, m2, m1.covered_a(), m2.covered_b());
    std::vector<Edge> edges = merged.edges();
    internal_check(static_cast<int>(edges.size()) >= k, "union cover smaller than k");
    while (static_cast<int>(edges.size()) > k) {
      int drop = -1;
      for (int idx = static_cast<int>(edges.size()) - 1; idx >= 0; --idx) {
        if (!contains(a_req, edges[idx].a) && !contains(b_req, edges[idx].b)) {
          drop = idx;
          break;
        }
      }
      internal_check(drop >= 0, "cannot trim union cover to size k");
      edges.erase(edges.begin() + drop);
    }
    return Matching(std::move(edges));
  }

  // Find the first required-to-required edge, scanning m1 then m2.
  const Edge* picked = nullptr;
  bool in_m1 = true;
  for (const Edge& e : m1.edges())
    if (contains(a_req, e.a) && contains(b_req, e.b)) {
      picked = &e;
      break;
    }
  if (picked == nullptr) {
    in_m1 = false;
    for (const Edge& e : m2.edges())
      if (contains(a_req, e.a) && contains(b_req, e.b)) {
        picked = &e;
        break;
      }
  }

  if (picked == nullptr) {
    // No required-to-required edge in either covering: the three pieces can
    // be assembled directly. m3 covers a2/b2; m1 contributes its edges at the
    // remaining required A-vertices, m2 symmetrically.
    std::vector<int> a_in_m3, b_in_m3;
    for (const Edge& e : m3.edges()) {
      a_in_m3.push_back(e.a);
      b_in_m3.push_back(e.b);
    }
    std::sort(a_in_m3.begin(), a_in_m3.end());
    std::sort(b_in_m3.begin(), b_in_m3.end());
    std::vector<Edge> assembled = m3.edges();
    for (const Edge& e : m1.edges())
      if (contains(a_req, e.a) && !contains(a_in_m3, e.a)) assembled.push_back(e);
    for (const Edge& e : m2.edges())
      if (contains(b_req, e.b) && !contains(b_in_m3, e.b)) assembled.push_back(e);
    try {
      Matching result(std::move(assembled));
      internal_check(result.size() == k, "direct assembly has wrong size");
      return result;
    } catch (const Error&) {
      throw InternalError("direct assembly of disjoint pieces collided");
    }
  }

  const Edge e = *picked;
  // Drop e from its matching and the partner edge at the other endpoint from
  // the other matching.
  std::vector<Edge> m1_edges, m2_edges;
  if (in_m1) {
    m1_edges = edges_without(m1, {e});
    const Edge* partner = m2.edge_at_b(e.b);
    internal_check(partner != nullptr, "m2 must cover the required column");
    m2_edges = edges_without(m2, {*partner});
  } else {
    m2_edges = edges_without(m2, {e});
    const Edge* partner = m1.edge_at_a(e.a);
    internal_check(partner != nullptr, "m1 must cover the required row");
    m1_edges = edges_without(m1, {*partner});
  }

  std::vector<Edge> touched;
  for (const Edge& f : m3.edges())
    if (f.a == e.a || f.b == e.b) touched.push_back(f);

  if (touched.size() <= 1) {
    std::vector<Edge> m3_edges =
        touched.empty() ? edges_without(m3, {m3.edges().front()})
                        : edges_without(m3, {touched.front()});
    Matching sub = combine_recursive(Matching(m1_edges), Matching(m2_edges),
                                     Matching(m3_edges), without(a_req, {e.a}),
                                     without(b_req, {e.b}), k - 1);
    std::vector<Edge> assembled = sub.edges();
    assembled.push_back(e);
    return Matching(std::move(assembled));
  }

  // Two m3 edges touch e: (e.a, b2) and (a2, e.b). Both are reinserted; the
  // coverings lose their edges at a2 and b2 as well.
  Edge at_a = touched[0].a == e.a ? touched[0] : touched[1];
  Edge at_b = touched[0].a == e.a ? touched[1] : touched[0];
  internal_check(at_a.a == e.a && at_b.b == e.b, "unexpected m3 incidence");
  int a2 = at_b.a;
  int b2 = at_a.b;
  auto m1_drop = std::find_if(m1_edges.begin(), m1_edges.end(),
                              [&](const Edge& f) { return f.a == a2; });
  internal_check(m1_drop != m1_edges.end(), "m1 must cover a2");
  m1_edges.erase(m1_drop);
  auto m2_drop = std::find_if(m2_edges.begin(), m2_edges.end(),
                              [&](const Edge& f) { return f.b == b2; });
  internal_check(m2_drop != m2_edges.end(), "m2 must cover b2");
  m2_edges.erase(m2_drop);
  Matching sub = combine_recursive(Matching(m1_edges), Matching(m2_edges),
                                   Matching(edges_without(m3, {at_a, at_b})),
                                   without(a_req, {e.a, a2}), without(b_req, {e.b, b2}),
                                   k - 2);
  std::vector<Edge> assembled = sub.edges();
  assembled.push_back(at_a);
  assembled.push_back(at_b);
  return Matching(std::move(assembled));
}

}  // namespace

Matching max_matching(const BipartiteGraph& g) {
  MatchState st(g.m(), g.n());
  for (int a = 0; a < g.m(); ++a) {
    if (st.mate_a[a] < 0) augment_from_a(g, st, a);
  }
  return st.to_matching();
}

std::optional<HallViolator> hall_violator(const BipartiteGraph& g,
                                          const std::vector<int>& a_sub) {
  std::vector<int> req = sorted_unique(a_sub);
  for (int a : req)
    if (a < 0 || a >= g.m()) throw IndexOutOfRange("A-vertex out of range");
  // Restrict to edges leaving a_sub; B is unrestricted, so neighborhoods in
  // the restriction agree with the ambient graph.
  std::vector<Edge> restricted;
  for (const Edge& e : g.edges())
    if (contains(req, e.a)) restricted.push_back(e);
  BipartiteGraph sub(g.m(), g.n(), std::move(restricted));
  MatchState st(sub.m(), sub.n());
  for (int a : req)
    if (st.mate_a[a] < 0) augment_from_a(sub, st, a);
  std::vector<int> stuck;
  for (int a : req)
    if (st.mate_a[a] < 0) stuck.push_back(a);
  if (stuck.empty()) return std::nullopt;
  auto [s, t] = alternating_reach(sub, st, stuck);
  HallViolator violator;
  violator.side = HallViolator::Side::A;
  violator.subset = std::move(s);
  violator.neighborhood = std::move(t);
  internal_check(violator.neighborhood.size() < violator.subset.size(),
                 "reachable set is not a Hall violator");
  return violator;
}

Matching covering_matching(const BipartiteGraph& g, std::vector<int> a_req,
                           std::vector<int> b_req, int k) {
  if (k < 0) throw PreconditionViolated("k must be nonnegative");
  a_req = sorted_unique(std::move(a_req));
  b_req = sorted_unique(std::move(b_req));
  for (int a : a_req)
    if (a < 0 || a >= g.m()) throw IndexOutOfRange("A-vertex out of range");
  for (int b : b_req)
    if (b < 0 || b >= g.n()) throw IndexOutOfRange("B-vertex out of range");
  int r = static_cast<int>(a_req.size());
  int c = static_cast<int>(b_req.size());
  if (r > k || c > k)
    throw NoSuchMatching("more required vertices on one side than k");

  if (b_req.empty()) return covering_one_sided(g, a_req, k, HallViolator::Side::A);
  if (a_req.empty())
    return transposed(covering_one_sided(transposed(g), b_req, k, HallViolator::Side::B));

  if (k >= r + c) {
    Matching ma = covering_matching(g, a_req, {}, r);
    Matching mb = covering_matching(g, {}, b_req, c);
    Matching merged = union_cover(ma, mb, a_req, b_req);
    return grow_to_size(g, merged, k);
  }

  // k < r + c: some required vertices must pair up; build the pairing from a
  // maximum matching inside a_req × b_req and combine.
  Matching m1 = covering_matching(g, a_req, {}, k);
  Matching m2 = covering_matching(g, {}, b_req, k);
  std::vector<Edge> inside;
  for (const Edge& e : g.edges())
    if (contains(a_req, e.a) && contains(b_req, e.b)) inside.push_back(e);
  Matching max_inside = max_matching(BipartiteGraph(g.m(), g.n(), std::move(inside)));
  int pairs = r + c - k;
  if (max_inside.size() < pairs)
    throw NoSuchMatching("required vertices cannot pair up enough for size k");
  std::vector<Edge> m3_edges(max_inside.edges().begin(),
                             max_inside.edges().begin() + pairs);
  return triple_combine(m1, m2, Matching(std::move(m3_edges)), a_req, b_req, k);
}

Matching union_cover(const Matching& m1, const Matching& m2, const std::vector<int>& v1,
                     const std::vector<int>& v2) {
  std::vector<int> req_a = sorted_unique(v1);
  std::vector<int> req_b = sorted_unique(v2);
  for (int a : req_a)
    if (!m1.covers_a(a)) throw PreconditionViolated("m1 does not cover v1");
  for (int b : req_b)
    if (!m2.covers_b(b)) throw PreconditionViolated("m2 does not cover v2");

  // Directed view: m1 edges run A→B, m2 edges run B→A. Every vertex has at
  // most one outgoing and one incoming edge, so components are paths and
  // even cycles.
  std::map<int, Edge> out_a, in_a;  // keyed by A-vertex
  std::map<int, Edge> out_b, in_b;  // keyed by B-vertex
  for (const Edge& e : m1.edges()) {
    out_a[e.a] = e;
    in_b[e.b] = e;
  }
  for (const Edge& e : m2.edges()) {
    out_b[e.b] = e;
    in_a[e.a] = e;
  }

  std::set<int> done_a, done_b;
  std::vector<Edge> kept;

  auto walk = [&](bool start_on_a, int start) {
    // Collect the component's edges in path order; edges at odd positions
    // (1st, 3rd, ...) form one alternation, even positions the other.
    std::vector<Edge> path;
    std::vector<bool> edge_from_m1;
    bool required_seen = false;
    bool on_a = start_on_a;
    int cur = start;
    while (true) {
      if (on_a) {
        if (done_a.count(cur)) break;
        done_a.insert(cur);
        required_seen |= contains(req_a, cur);
        auto it = out_a.find(cur);
        if (it == out_a.end()) break;
        path.push_back(it->second);
        edge_from_m1.push_back(true);
        cur = it->second.b;
        on_a = false;
      } else {
        if (done_b.count(cur)) break;
        done_b.insert(cur);
        required_seen |= contains(req_b, cur);
        auto it = out_b.find(cur);
        if (it == out_b.end()) break;
        path.push_back(it->second);
        edge_from_m1.push_back(false);
        cur = it->second.a;
        on_a = true;
      }
    }
    if (path.empty() || !required_seen) return;
    // The walk stops either at a vertex without an outgoing edge (path) or
    // back at its own start (cycle).
    bool cycle = (on_a == start_on_a && cur == start);
    bool start_required = start_on_a ? contains(req_a, start) : contains(req_b, start);
    if (cycle) {
      // Keep the m1 edges of the cycle; they cover every cycle vertex.
      for (std::size_t idx = 0; idx < path.size(); ++idx)
        if (edge_from_m1[idx]) kept.push_back(path[idx]);
    } else if (start_required) {
      for (std::size_t idx = 0; idx < path.size(); idx += 2) kept.push_back(path[idx]);
    } else {
      // Start vertex needs no cover: keep the m2 edges of the path.
      for (std::size_t idx = 0; idx < path.size(); ++idx)
        if (!edge_from_m1[idx]) kept.push_back(path[idx]);
    }
  };

  // Path starts first (no incoming edge), A-side then B-side ascending, then
  // the remaining components, which are cycles.
  for (const auto& [a, e] : out_a)
    if (!in_a.count(a)) walk(true, a);
  for (const auto& [b, e] : out_b)
    if (!in_b.count(b)) walk(false, b);
  for (const auto& [a, e] : out_a)
    if (!done_a.count(a)) walk(true, a);

  Matching result{std::vector<Edge>(kept)};
  return result;
}

Matching triple_combine(const Matching& m1, const Matching& m2, const Matching& m3,
                        const std::vector<int>& a_req, const std::vector<int>& b_req,
                        int k) {
  std::vector<int> ar = sorted_unique(a_req);
  std::vector<int> br = sorted_unique(b_req);
  int r = static_cast<int>(ar.size());
  int c = static_cast<int>(br.size());
  if (r > k) throw PreconditionViolated("|a_req| exceeds k");
  if (c > k) throw PreconditionViolated("|b_req| exceeds k");
  if (k > r + c) throw PreconditionViolated("k exceeds |a_req| + |b_req|");
  if (m1.size() != k) throw PreconditionViolated("m1 is not a k-matching");
  if (m2.size() != k) throw PreconditionViolated("m2 is not a k-matching");
  if (m3.size() != r + c - k) throw PreconditionViolated("m3 does not have r+c-k edges");
  for (int a : ar)
    if (!m1.covers_a(a)) throw PreconditionViolated("m1 does not cover a_req");
  for (int b : br)
    if (!m2.covers_b(b)) throw PreconditionViolated("m2 does not cover b_req");
  for (const Edge& e : m3.edges())
    if (!contains(ar, e.a) || !contains(br, e.b))
      throw PreconditionViolated("m3 has an edge outside a_req x b_req");

  Matching result = combine_recursive(m1, m2, m3, ar, br, k);
  if (!is_valid_combination(result, m1, m2, m3, ar, br, k)) {
    // The recursive assembly can collide at the reinserted vertices when one
    // covering has a stray edge there; complete the contract by exact search
    // over the union.
    CombineSearch search(m1, m2, m3, ar, br, k);
    std::optional<Matching> found = search.run();
    internal_check(found.has_value(), "no combined matching exists in the union");
    result = *found;
  }
  internal_check(is_valid_combination(result, m1, m2, m3, ar, br, k),
                 "triple_combine postcondition");
  return result;
}

}  // namespace kmatch
