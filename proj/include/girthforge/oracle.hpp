#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "girthforge/digraph.hpp"

namespace girthforge::oracle {

// Slow reference implementations used to cross-check the fast paths. Each one
// deliberately takes a different algorithmic route than the production code:
// depth-first cycle enumeration instead of breadth-first return search,
// Floyd-Warshall closure instead of frontier expansion, and plain permutation
// search instead of canonical labeling. Intended for small orders only.

/// Girth by depth-first enumeration of simple cycles (pruned at the best
/// length found so far). Practical for n <= 9.
std::optional<int> girth_by_enumeration(const Digraph& d);

/// Pairwise reachability (u reaches v by a nonempty path) via Floyd-Warshall.
std::vector<std::vector<bool>> reachability_closure(const Digraph& d);

/// Partition of vertices into classes of mutual reachability, each class a
/// vertex set, in the order of their smallest vertices.
std::vector<VertexSet> mutual_reach_classes(const Digraph& d);

/// Nonadjacent unordered pairs by a quadratic scan.
int gamma_by_pair_scan(const Digraph& d);
int gamma_between_by_pair_scan(const Digraph& d, VertexSet p, VertexSet q);

/// Isomorphism by trying all n! vertex bijections. Guarded to n <= 8.
bool isomorphic_by_permutations(const Digraph& a, const Digraph& b);

/// Applies a relabeling (image[v] = new label of v) to a digraph.
Digraph relabel(const Digraph& d, const std::vector<int>& image);

/// Visits every loop-free digraph on n vertices in which each unordered pair
/// carries at most one arc (3^(n choose 2) of them). Guarded to n <= 5.
void for_each_pair_state_digraph(int n, const std::function<void(const Digraph&)>& visit);

/// Uniformly random pair-state digraph: per unordered pair, one of
/// {no arc, u->v, v->u} with the arc states together taking `arc_bias`.
Digraph random_pair_state_digraph(int n, std::mt19937_64& rng, double arc_bias = 0.66);

/// Random digraph where each of the n(n-1) ordered arcs appears independently;
/// may contain 2-cycles.
Digraph random_digraph(int n, std::mt19937_64& rng, double arc_probability = 0.3);

/// Random member that is strong with all out-degrees >= 2, by rejection.
Digraph random_strong_min_out2(int n, std::mt19937_64& rng);

/// Random permutation of 0..n-1.
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

}  // namespace girthforge::oracle
