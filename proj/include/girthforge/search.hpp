#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girthforge/digraph.hpp"

namespace girthforge {

enum class SearchMode { exact, witness, emptiness };

enum class SearchStatus { proved, witness_found, empty, timeout };

std::string to_string(SearchMode m);
std::string to_string(SearchStatus s);

/// Reasons an assignment was cut off, indexed into SearchStats::prunes.
enum PruneReason : int {
  kPruneCycle = 0,     // arc would close a cycle of length <= k
  kPruneGamma,         // nonadjacent-pair budget exceeded
  kPruneDegree,        // a vertex can no longer reach its degree minimum
  kPruneStrong,        // a vertex can no longer get any in- or out-arc
  kPruneSymmetry,      // labeling violates the vertex-0 normalization
  kPruneLeafNotMember, // complete assignment failed the class check
  kPruneReasonCount
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t members_found = 0;
  std::array<std::uint64_t, kPruneReasonCount> prunes{};
  double elapsed_seconds = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
};

/// Performance and safety knobs. The four pruning rules and the symmetry
/// normalization are individually switchable so the regression suite can
/// verify that none of them changes results.
struct SearchTuning {
  bool prune_cycle = true;
  bool prune_gamma = true;
  bool prune_degree = true;
  bool prune_strong = true;
  bool normalize_vertex0 = true;
  int split_depth = 8;                       // pairs fixed per parallel subtree
  std::uint64_t witness_node_budget = 1 << 21;  // first-round per-subtree budget
  int checkpoint_period_seconds = 60;
};

struct SearchParams {
  ClassSpec spec;
  SearchMode mode = SearchMode::exact;
  std::optional<int> target_arcs;    // witness goal; exact mode manages its own targets
  std::optional<int> gamma_budget;   // optional cap on nonadjacent pairs
  double time_limit_seconds = 0;     // 0 = unlimited
  int workers = 1;
  std::string checkpoint_path;       // empty = no checkpointing
  std::uint64_t seed = 0;            // drives witness-mode branch shuffling
  SearchTuning tuning;

  void validate() const;
};

/// Result of a solve run.
///
/// exact:     status proved with phi and the complete isomorph-free list of
///            extremal members, or empty (phi 0) when the class has none.
/// witness:   witness_found with the first member reaching target_arcs, or
///            empty when the search space was exhausted below the target, or
///            timeout.
/// emptiness: empty, or witness_found with one member as evidence.
struct SearchOutcome {
  std::optional<int> phi;
  std::vector<Digraph> extremal;
  SearchStatus status = SearchStatus::empty;
  SearchStats stats;
  bool resumable = false;
};

SearchOutcome solve(const SearchParams& params);

/// A vertex whose removal keeps the digraph strong. Requires a strong input
/// with all out-degrees >= 2; under those preconditions such a vertex always
/// exists, and an exhaustive miss raises invariant_violation.
int removable_vertex(const Digraph& d);

/// Instance check of the minimum out-degree short-cycle conjecture: true iff
/// no strong digraph on n vertices with out-degree >= r and in-degree >= 1
/// avoids all cycles of length <= ceil(n/r). Requires 1 <= r < n, n <= 12.
bool caccetta_haggkvist_holds(int n, int r, int workers = 1);

/// Same with in-degree >= r as well (the regular-digraph variant).
bool behzad_chartrand_wall_holds(int n, int r, int workers = 1);

}  // namespace girthforge
