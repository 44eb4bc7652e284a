#pragma once

#include <memory>
#include <string>
#include <vector>

#include "girthforge/digraph.hpp"

namespace girthforge {

/// Circulant digraph: vertices 0..n-1, arcs v -> v+j (mod n) for every jump
/// j in `jumps`. Jumps must lie in 1..n-1.
Digraph circulant(int n, const std::vector<int>& jumps);

/// The 8-vertex, 20-arc digraph built from four blocks of five arcs
/// {(2i, 2i+1), (2i, 2i+2), (2i, 2i+3), (2i+1, 2i+2), (2i+1, 2i+3)} taken
/// modulo 8. Strong, free of cycles of length <= 3, even vertices have
/// out-degree 3 and in-degree 2, odd vertices the reverse.
Digraph f8();

/// A strong tournament: exactly one arc per unordered pair. Deterministic
/// shape: all forward arcs i -> j for i < j, with the pair {0, n-1} reversed
/// to close the cycle. Requires n >= 3.
Digraph strong_tournament(int n);

/// The five shapes of layered extremal digraphs for the class "free of cycles
/// of length <= 3, strong, minimum degrees one", distinguished by the block
/// pattern left after removing a hub vertex:
///   D1  two blocks, both of order >= 4
///   D2  first and last block of order >= 4, singletons between
///   D3  first block >= 4, all later blocks singletons
///   D4  first block a singleton, last block >= 4, singletons between
///   D5  every block a singleton
enum class Family { D1, D2, D3, D4, D5 };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Parameters of one layered extremal digraph on 1 + sum(orders) vertices.
///
/// `orders` are the block orders n_1..n_h of the decomposition after removing
/// the hub. Middle singleton blocks are laid out as y_size in-neighbors of the
/// hub, then x_size out-neighbors, then blocks not adjacent to the hub. Blocks
/// of order >= 4 are built from a nested layered structure of order n_i + 1
/// (the block plus the hub); `head_sub` / `tail_sub` override the default,
/// which is the all-singleton D5 member of that order.
struct FamilyParams {
  Family family = Family::D5;
  std::vector<int> orders;
  int x_size = 0;
  int y_size = 0;
  std::shared_ptr<const FamilyParams> head_sub;
  std::shared_ptr<const FamilyParams> tail_sub;

  int order() const;
  void validate() const;  // throws std::invalid_argument with the failed rule
};

/// All-singleton D5 parameters of the given order (>= 4), the default
/// building block for nested structures.
FamilyParams smallest_d5(int order);

/// Builds the layered extremal digraph described by `params`: hub vertex is
/// the last label, blocks occupy consecutive label ranges in block order.
/// The result is verified on the way out (class membership, arc count
/// pairs_of(n-1) + 1 and gamma = n - 2); a failure is an invariant_violation.
Digraph build_family(const FamilyParams& params);

/// Least arc count m such that every strong digraph on n vertices with at
/// least m arcs has a cycle of length <= k. Defined for n >= k+1, k >= 2:
/// (n^2 + (3-2k)n + k^2 - k) / 2.
long long cycle_forcing_size(int n, int k);

/// Maximum arc count of a strong digraph on n vertices free of cycles of
/// length <= k (degree minima one): cycle_forcing_size(n, k) - 1.
long long max_size_min_deg_one(int n, int k);

/// Maximum arc count for the class "free of cycles of length <= 3, strong,
/// out-degree >= 2, in-degree >= 1": 0 for n <= 6, pairs_of(n-1) - 1 for
/// n in {7, 8}, pairs_of(n-1) - 2 for n >= 9.
long long max_size_out2_in1(int n);

}  // namespace girthforge
