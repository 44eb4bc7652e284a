#include "girthforge/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace girthforge::oracle {

namespace {

// Depth-first search for a simple cycle back to `start`, never extending a
// path to the length of the best cycle already known.
void dfs_cycles(const Digraph& d, int start, int v, int length, VertexSet on_path, int& best) {
  if (length >= best) return;
  for (int w : vertices_of(d.out_set(v))) {
    if (w == start) {
      best = length + 1;
      return;
    }
    if (w < start || contains(on_path, w)) continue;  // cycles are rooted at their minimum
    dfs_cycles(d, start, w, length + 1, on_path | bit(w), best);
  }
}

}  // namespace

std::optional<int> girth_by_enumeration(const Digraph& d) {
  const int n = d.order();
  int best = n + 1;
  for (int start = 0; start < n && best > 2; ++start)
    dfs_cycles(d, start, start, 0, bit(start), best);
  if (best > n) return std::nullopt;
  return best;
}

std::vector<std::vector<bool>> reachability_closure(const Digraph& d) {
  const int n = d.order();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v : vertices_of(d.out_set(u))) reach[u][v] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[i][k])
        for (int j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

std::vector<VertexSet> mutual_reach_classes(const Digraph& d) {
  const int n = d.order();
  auto reach = reachability_closure(d);
  std::vector<VertexSet> classes;
  VertexSet assigned = 0;
  for (int v = 0; v < n; ++v) {
    if (contains(assigned, v)) continue;
    VertexSet cls = bit(v);
    for (int u = v + 1; u < n; ++u)
      if (reach[v][u] && reach[u][v]) cls |= bit(u);
    assigned |= cls;
    classes.push_back(cls);
  }
  return classes;
}

int gamma_by_pair_scan(const Digraph& d) {
  int count = 0;
  for (int u = 0; u < d.order(); ++u)
    for (int v = u + 1; v < d.order(); ++v)
      if (!d.has_arc(u, v) && !d.has_arc(v, u)) ++count;
  return count;
}

int gamma_between_by_pair_scan(const Digraph& d, VertexSet p, VertexSet q) {
  int count = 0;
  for (int u : vertices_of(p))
    for (int v : vertices_of(q))
      if (!d.has_arc(u, v) && !d.has_arc(v, u)) ++count;
  return count;
}

Digraph relabel(const Digraph& d, const std::vector<int>& image) {
  Digraph out(d.order());
  for (auto [u, v] : d.arcs()) out.add_arc(image[u], image[v]);
  return out;
}

bool isomorphic_by_permutations(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order()) return false;
  if (a.arc_count() != b.arc_count()) return false;
  const int n = a.order();
  if (n > 8) throw std::invalid_argument("permutation oracle is limited to n <= 8");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  do {
    bool match = true;
    for (int u = 0; u < n && match; ++u)
      for (int v : vertices_of(a.out_set(u)))
        if (!b.has_arc(image[u], image[v])) {
          match = false;
          break;
        }
    if (match) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

void for_each_pair_state_digraph(int n, const std::function<void(const Digraph&)>& visit) {
  if (n < 1 || n > 5) throw std::invalid_argument("pair-state enumeration is limited to n <= 5");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int m = static_cast<int>(pairs.size());
  long total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    Digraph d(n);
    long rest = code;
    for (auto [u, v] : pairs) {
      int state = static_cast<int>(rest % 3);
      rest /= 3;
      if (state == 1) d.add_arc(u, v);
      if (state == 2) d.add_arc(v, u);
    }
    visit(d);
  }
}

Digraph random_pair_state_digraph(int n, std::mt19937_64& rng, double arc_bias) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) >= arc_bias) continue;
      if (coin(rng) < 0.5)
        d.add_arc(u, v);
      else
        d.add_arc(v, u);
    }
  return d;
}

Digraph random_digraph(int n, std::mt19937_64& rng, double arc_probability) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng) < arc_probability) d.add_arc(u, v);
  return d;
}

Digraph random_strong_min_out2(int n, std::mt19937_64& rng) {
  if (n < 3) throw std::invalid_argument("need n >= 3 for out-degree 2");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Digraph d = random_pair_state_digraph(n, rng, 0.8);
    if (DegreeProfile::of(d).min_out >= 2 && is_strong(d)) return d;
  }
  throw std::runtime_error("rejection sampling failed to produce a strong digraph");
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return image;
}

}  // namespace girthforge::oracle
