#include "girthforge/canon.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace girthforge {

std::vector<std::uint8_t> adjacency_bytes(const Digraph& d) {
  const int n = d.order();
  const int row_bytes = (n + 7) / 8;
  std::vector<std::uint8_t> bytes(static_cast<size_t>(n) * row_bytes, 0);
  for (int i = 0; i < n; ++i)
    for (int j : vertices_of(d.out_set(i)))
      bytes[static_cast<size_t>(i) * row_bytes + j / 8] |=
          static_cast<std::uint8_t>(1u << (7 - j % 8));
  return bytes;
}

namespace {

// Canonical labeling by iterative partition refinement on in/out color
// multisets, then backtracking over the first non-singleton cell. The
// canonical labeling is the one whose row-major adjacency matrix is
// lexicographically smallest. Automorphisms discovered as equal-matrix leaves
// prune sibling candidates lying in a common orbit.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Digraph& d) : d_(d), n_(d.order()) {}

  CanonicalForm run() {
    std::vector<int> colors(n_, 0);
    refine(colors);
    search(colors, {});

    CanonicalForm form;
    form.bytes = std::move(best_bytes_);
    // An input already in canonical shape keeps the identity relabeling, so
    // canonicalizing twice is a fixed point.
    if (adjacency_bytes(d_) == form.bytes) {
      form.relabeling.resize(n_);
      std::iota(form.relabeling.begin(), form.relabeling.end(), 0);
    } else {
      form.relabeling = std::move(best_perm_);
    }
    return form;
  }

 private:
  // Splits color classes by (color, out-neighbor colors, in-neighbor colors)
  // until stable. Signatures start with the current color, so refinement only
  // ever subdivides existing cells and cell order is label-independent.
  void refine(std::vector<int>& colors) const {
    using Sig = std::pair<int, std::array<std::vector<int>, 2>>;
    int count = 0;
    for (;;) {
      std::vector<Sig> sig(n_);
      for (int v = 0; v < n_; ++v) {
        sig[v].first = colors[v];
        for (int u : vertices_of(d_.out_set(v))) sig[v].second[0].push_back(colors[u]);
        for (int u : vertices_of(d_.in_set(v))) sig[v].second[1].push_back(colors[u]);
        std::sort(sig[v].second[0].begin(), sig[v].second[0].end());
        std::sort(sig[v].second[1].begin(), sig[v].second[1].end());
      }
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int next = 0;
      std::vector<int> recolored(n_);
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
        recolored[order[i]] = next;
      }
      if (next + 1 == count) break;
      count = next + 1;
      colors = std::move(recolored);
      if (count == n_) break;
    }
  }

  // First color class with more than one vertex, or -1 when discrete.
  int target_cell(const std::vector<int>& colors) const {
    std::array<int, kMaxVertices> size{};
    for (int v = 0; v < n_; ++v) ++size[colors[v]];
    int best_color = -1;
    for (int v = 0; v < n_; ++v)
      if (size[colors[v]] > 1 && (best_color < 0 || colors[v] < best_color))
        best_color = colors[v];
    return best_color;
  }

  void search(const std::vector<int>& colors, std::vector<int> fixed) {
    int cell = target_cell(colors);
    if (cell < 0) {
      finish_leaf(colors);
      return;
    }
    std::vector<int> candidates;
    for (int v = 0; v < n_; ++v)
      if (colors[v] == cell) candidates.push_back(v);  // ascending original index

    std::vector<int> tried;
    for (int v : candidates) {
      if (in_orbit_of_tried(v, tried, fixed)) continue;
      tried.push_back(v);
      std::vector<int> split(colors);
      for (int u = 0; u < n_; ++u)
        if (split[u] > cell || (split[u] == cell && u != v)) ++split[u];
      refine(split);
      fixed.push_back(v);
      search(split, fixed);
      fixed.pop_back();
    }
  }

  void finish_leaf(const std::vector<int>& colors) {
    std::vector<std::uint8_t> bytes = bytes_for(colors);
    if (best_bytes_.empty() || bytes < best_bytes_) {
      best_bytes_ = std::move(bytes);
      best_perm_ = colors;
    } else if (bytes == best_bytes_) {
      // best_perm^{-1} . colors is an automorphism; remember it for pruning.
      std::vector<int> vertex_at(n_);
      for (int v = 0; v < n_; ++v) vertex_at[best_perm_[v]] = v;
      std::vector<int> automorphism(n_);
      for (int v = 0; v < n_; ++v) automorphism[v] = vertex_at[colors[v]];
      generators_.push_back(std::move(automorphism));
    }
  }

  std::vector<std::uint8_t> bytes_for(const std::vector<int>& perm) const {
    const int row_bytes = (n_ + 7) / 8;
    std::vector<std::uint8_t> bytes(static_cast<size_t>(n_) * row_bytes, 0);
    for (int u = 0; u < n_; ++u)
      for (int w : vertices_of(d_.out_set(u)))
        bytes[static_cast<size_t>(perm[u]) * row_bytes + perm[w] / 8] |=
            static_cast<std::uint8_t>(1u << (7 - perm[w] % 8));
    return bytes;
  }

  // True when v lies in one orbit with an already-tried candidate under the
  // subgroup generated by known automorphisms that fix `fixed` pointwise.
  bool in_orbit_of_tried(int v, const std::vector<int>& tried, const std::vector<int>& fixed) {
    if (tried.empty() || generators_.empty()) return false;
    std::array<int, kMaxVertices> parent;
    for (int i = 0; i < n_; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : generators_) {
      bool fixes = true;
      for (int f : fixed)
        if (g[f] != f) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int u = 0; u < n_; ++u) {
        int a = find(u), b = find(g[u]);
        if (a != b) parent[a] = b;
      }
    }
    for (int t : tried)
      if (find(t) == find(v)) return true;
    return false;
  }

  const Digraph& d_;
  const int n_;
  std::vector<std::uint8_t> best_bytes_;
  std::vector<int> best_perm_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Digraph& d) {
  if (d.order() < 1) throw std::invalid_argument("canonical form of an empty digraph");
  return Canonicalizer(d).run();
}

bool are_isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  return canonical_form(a).bytes == canonical_form(b).bytes;
}

std::vector<Digraph> dedup_isomorphic(const std::vector<Digraph>& list) {
  // Byte strings of different orders differ in length, so the bytes alone key
  // the isomorphism class.
  std::vector<Digraph> kept;
  std::vector<std::vector<std::uint8_t>> seen;
  for (const Digraph& d : list) {
    auto key = canonical_form(d).bytes;
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    kept.push_back(d);
  }
  return kept;
}

std::string canonical_string(const Digraph& d) {
  static const char* hex = "0123456789abcdef";
  CanonicalForm form = canonical_form(d);
  std::string out = std::to_string(d.order()) + ":";
  for (std::uint8_t b : form.bytes) {
    out += hex[b >> 4];
    out += hex[b & 0xf];
  }
  return out;
}

}  // namespace girthforge
