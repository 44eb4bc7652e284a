#include "girthforge/digraph.hpp"

#include <algorithm>
#include <array>
#include <queue>

namespace girthforge {

Digraph::Digraph(int n) : n_(n), out_(n, 0), in_(n, 0) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("digraph order must be in [1, 64], got " + std::to_string(n));
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (contains(out_[u], v)) return;
  out_[u] |= bit(v);
  in_[v] |= bit(u);
  ++arcs_;
}

void Digraph::remove_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!contains(out_[u], v)) return;
  out_[u] &= ~bit(v);
  in_[v] &= ~bit(u);
  --arcs_;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(arcs_);
  for (int u = 0; u < n_; ++u)
    for (int v : vertices_of(out_[u])) result.emplace_back(u, v);
  return result;
}

DegreeProfile DegreeProfile::of(const Digraph& d) {
  DegreeProfile p;
  const int n = d.order();
  p.out_degree.resize(n);
  p.in_degree.resize(n);
  p.degree.resize(n);
  for (int v = 0; v < n; ++v) {
    p.out_degree[v] = d.out_degree(v);
    p.in_degree[v] = d.in_degree(v);
    p.degree[v] = d.degree(v);
  }
  auto minmax = [](const std::vector<int>& xs) {
    auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    return std::pair{*lo, *hi};
  };
  std::tie(p.min_out, p.max_out) = minmax(p.out_degree);
  std::tie(p.min_in, p.max_in) = minmax(p.in_degree);
  std::tie(p.min_degree, p.max_degree) = minmax(p.degree);
  return p;
}

std::vector<int> ComponentDecomposition::orders() const {
  std::vector<int> result(components.size());
  for (size_t i = 0; i < components.size(); ++i) result[i] = set_size(components[i]);
  return result;
}

void ClassSpec::validate() const {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("class order must be in [1, 64]");
  if (k < 2) throw std::invalid_argument("forbidden-cycle bound must be >= 2");
  if (min_out < 1 || min_in < 1) throw std::invalid_argument("degree minima must be >= 1");
}

namespace {

// Steps a breadth frontier along out-neighborhoods.
VertexSet expand(const Digraph& d, VertexSet frontier) {
  VertexSet next = 0;
  while (frontier) {
    int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    next |= d.out_set(v);
  }
  return next;
}

// Shortest length of a cycle through s, capped at `limit`; 0 when none.
int shortest_return(const Digraph& d, int s, int limit) {
  VertexSet seen = 0;
  VertexSet frontier = d.out_set(s);
  for (int dist = 1; dist <= limit && frontier; ++dist) {
    if (contains(frontier, s)) return dist;
    seen |= frontier;
    frontier = expand(d, frontier) & ~seen;
  }
  return 0;
}

}  // namespace

std::optional<int> girth(const Digraph& d) {
  const int n = d.order();
  int best = n + 1;
  for (int s = 0; s < n && best > 2; ++s) {
    int len = shortest_return(d, s, best - 1);
    if (len > 0) best = std::min(best, len);
  }
  if (best > n) return std::nullopt;
  return best;
}

bool is_cycle_free_up_to(const Digraph& d, int k) {
  if (k < 2) throw std::invalid_argument("cycle bound must be >= 2");
  const int n = d.order();
  const int limit = std::min(k, n);
  for (int s = 0; s < n; ++s)
    if (shortest_return(d, s, limit) != 0) return false;
  return true;
}

namespace {

VertexSet reachable_from(const Digraph& d, int s) {
  VertexSet seen = bit(s);
  VertexSet frontier = bit(s);
  while (frontier) {
    frontier = expand(d, frontier) & ~seen;
    seen |= frontier;
  }
  return seen;
}

VertexSet reaching_to(const Digraph& d, int s) {
  VertexSet seen = bit(s);
  VertexSet frontier = bit(s);
  while (frontier) {
    VertexSet next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= d.in_set(v);
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

ComponentDecomposition strong_components(const Digraph& d) {
  const int n = d.order();
  // Components as intersections of forward/backward reachability; at word
  // scale this beats a stack-based Tarjan on code size and is plenty fast.
  std::vector<VertexSet> comps;
  std::vector<int> comp_of(n, -1);
  for (int v = 0; v < n; ++v) {
    if (comp_of[v] >= 0) continue;
    VertexSet comp = reachable_from(d, v) & reaching_to(d, v);
    for (int u : vertices_of(comp)) comp_of[u] = static_cast<int>(comps.size());
    comps.push_back(comp);
  }

  // Topological order of the condensation, smallest contained vertex first
  // among the currently available components.
  const int h = static_cast<int>(comps.size());
  std::vector<int> indegree(h, 0);
  std::vector<VertexSet> succ(h, 0);
  for (int u = 0; u < n; ++u)
    for (int v : vertices_of(d.out_set(u))) {
      int a = comp_of[u], b = comp_of[v];
      if (a != b && !contains(succ[a], b)) {
        succ[a] |= bit(b);
        ++indegree[b];
      }
    }
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> ready;
  for (int c = 0; c < h; ++c)
    if (indegree[c] == 0) ready.emplace(first_vertex(comps[c]), c);

  ComponentDecomposition result;
  result.component_of.assign(n, -1);
  while (!ready.empty()) {
    auto [key, c] = ready.top();
    ready.pop();
    int index = result.count();
    result.components.push_back(comps[c]);
    for (int u : vertices_of(comps[c])) result.component_of[u] = index;
    for (int b : vertices_of(succ[c]))
      if (--indegree[b] == 0) ready.emplace(first_vertex(comps[b]), b);
  }
  return result;
}

bool is_strong(const Digraph& d) {
  if (d.order() == 1) return true;
  VertexSet all = d.vertex_set();
  return reachable_from(d, 0) == all && reaching_to(d, 0) == all;
}

int gamma(const Digraph& d) {
  const int n = d.order();
  int count = 0;
  for (int v = 0; v < n; ++v) {
    VertexSet later = d.vertex_set() & ~(bit(v) | (bit(v) - 1));
    count += set_size(later & ~d.adjacent_set(v));
  }
  return count;
}

int gamma_between(const Digraph& d, VertexSet p, VertexSet q) {
  if (p & q) throw std::invalid_argument("gamma_between requires disjoint vertex sets");
  if ((p | q) & ~d.vertex_set()) throw std::invalid_argument("vertex set out of range");
  int count = 0;
  for (int u : vertices_of(p)) count += set_size(q & ~d.adjacent_set(u));
  return count;
}

bool in_class(const Digraph& d, const ClassSpec& spec) {
  spec.validate();
  if (d.order() != spec.n)
    throw std::invalid_argument("digraph order " + std::to_string(d.order()) +
                                " does not match class order " + std::to_string(spec.n));
  DegreeProfile prof = DegreeProfile::of(d);
  if (prof.min_out < spec.min_out || prof.min_in < spec.min_in) return false;
  return is_cycle_free_up_to(d, spec.k) && is_strong(d);
}

Subdigraph induced(const Digraph& d, VertexSet w) {
  if (!w) throw std::invalid_argument("induced subdigraph of empty vertex set");
  if (w & ~d.vertex_set()) throw std::invalid_argument("vertex set out of range");
  Subdigraph sub;
  sub.source_vertex = vertices_of(w);
  const int m = static_cast<int>(sub.source_vertex.size());
  std::array<int, kMaxVertices> to_new{};
  for (int i = 0; i < m; ++i) to_new[sub.source_vertex[i]] = i;
  sub.graph = Digraph(m);
  for (int i = 0; i < m; ++i)
    for (int v : vertices_of(d.out_set(sub.source_vertex[i]) & w))
      sub.graph.add_arc(i, to_new[v]);
  return sub;
}

Subdigraph remove_vertex(const Digraph& d, int v) {
  if (v < 0 || v >= d.order()) throw std::invalid_argument("vertex out of range");
  if (d.order() == 1) throw std::invalid_argument("cannot remove the only vertex");
  return induced(d, d.vertex_set() & ~bit(v));
}

}  // namespace girthforge
