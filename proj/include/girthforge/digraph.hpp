#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "girthforge/common.hpp"

namespace girthforge {

/// Loop-free directed graph on at most 64 vertices.
///
/// Vertices are the dense range 0..n-1 and each out-neighborhood is a single
/// word, so set algebra on neighborhoods is branch-free. Both orientations of
/// a pair may be present (a 2-cycle); only the search layer restricts pair
/// states. Equality is labeled equality; isomorphism lives in canon.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

  int order() const { return n_; }
  int arc_count() const { return arcs_; }

  bool has_arc(int u, int v) const { return contains(out_[u], v); }
  void add_arc(int u, int v);
  void remove_arc(int u, int v);

  VertexSet out_set(int u) const { return out_[u]; }
  VertexSet in_set(int v) const { return in_[v]; }
  VertexSet adjacent_set(int v) const { return out_[v] | in_[v]; }
  VertexSet vertex_set() const { return full_set(n_); }

  int out_degree(int u) const { return set_size(out_[u]); }
  int in_degree(int v) const { return set_size(in_[v]); }
  int degree(int v) const { return set_size(adjacent_set(v)); }

  /// Arcs in lexicographic order.
  std::vector<std::pair<int, int>> arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int arcs_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Per-vertex degrees plus the extremes.
struct DegreeProfile {
  std::vector<int> out_degree;
  std::vector<int> in_degree;
  std::vector<int> degree;  // |N+(v) union N-(v)|
  int min_out = 0, min_in = 0, min_degree = 0;
  int max_out = 0, max_in = 0, max_degree = 0;

  static DegreeProfile of(const Digraph& d);
};

/// Strong components listed in an acyclic order: every arc between distinct
/// components goes from a lower-indexed component to a higher-indexed one.
/// Ties between incomparable components are broken by smallest contained
/// vertex, making the order deterministic.
struct ComponentDecomposition {
  std::vector<VertexSet> components;
  std::vector<int> component_of;  // vertex -> index into components

  int count() const { return static_cast<int>(components.size()); }
  std::vector<int> orders() const;
};

/// Parameters naming a digraph class: order n, forbidden-cycle bound k (the
/// class is cycle-free up to length k), and minimum out-/in-degrees.
struct ClassSpec {
  int n = 0;
  int k = 2;
  int min_out = 1;  // xi
  int min_in = 1;   // zeta

  void validate() const;
};

/// Length of a shortest directed cycle, or nullopt when acyclic.
std::optional<int> girth(const Digraph& d);

/// True when d has no directed cycle of length <= k (k >= 2).
bool is_cycle_free_up_to(const Digraph& d, int k);

ComponentDecomposition strong_components(const Digraph& d);

bool is_strong(const Digraph& d);

/// Number of unordered nonadjacent pairs of distinct vertices.
int gamma(const Digraph& d);

/// Nonadjacent pairs {u, v} with u in p and v in q; p and q must be disjoint.
int gamma_between(const Digraph& d, VertexSet p, VertexSet q);

/// Membership in the class: cycle-free up to spec.k, strong, and the two
/// degree minima. Requires d.order() == spec.n.
bool in_class(const Digraph& d, const ClassSpec& spec);

/// Induced subdigraph relabeled to 0..|W|-1 in ascending original order.
struct Subdigraph {
  Digraph graph;
  std::vector<int> source_vertex;  // source_vertex[new] = original label
};

Subdigraph induced(const Digraph& d, VertexSet w);
Subdigraph remove_vertex(const Digraph& d, int v);

}  // namespace girthforge
