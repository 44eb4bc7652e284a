#pragma once

#include <string>
#include <utility>
#include <vector>

#include "girthforge/construct.hpp"
#include "girthforge/digraph.hpp"

namespace girthforge {

/// Structural classification of an extremal member of the class "free of
/// cycles of length <= 3, strong, degree minima one" with maximum arc count
/// pairs_of(n-1) + 1.
///
/// The classifier removes a hub vertex v of degree <= n-3 and checks the
/// remaining block structure against three rule groups (labels appear in
/// violation reports):
///   I    block orders: which of the five families the order pattern fits
///   II   end blocks: singleton ends wire v->x / y->v; ends of order >= 4
///        are extremal themselves, as is the block plus v, and v has degrees
///        (out 1, in n_1-2) into the head block and (out n_h-2, in 1) into
///        the tail block
///   III  hub neighbors among the middle singletons: every in-neighbor (Y)
///        precedes every out-neighbor (X), and forward arcs between blocks
///        are complete except (2.1) x->y, (2.2) x->Y, (2.3) X->y, where x/y
///        are the hub's head out-neighbor and tail in-neighbor
struct FamilyClassification {
  Family family = Family::D5;
  int hub = -1;
  std::vector<VertexSet> blocks;  // original labels, acyclic order
  VertexSet x_set = 0;            // hub out-neighbors among middle singletons
  VertexSet y_set = 0;            // hub in-neighbors among middle singletons
  std::vector<std::string> violations;  // empty on success

  /// Every hub candidate that classifies cleanly, with its family tag. The
  /// primary fields above describe the first of these; disagreeing tags
  /// across hubs are reported, not treated as errors.
  std::vector<std::pair<int, Family>> accepted_hubs;
  bool hub_tags_disagree = false;

  bool ok() const { return violations.empty(); }
};

/// Classifies d, trying hub candidates in ascending (degree, index) order
/// until one satisfies all rules. Preconditions (class membership, arc count,
/// n >= 5) are validated and raise std::invalid_argument.
FamilyClassification classify_family(const Digraph& d);

/// Two distinct vertices of out-degree one, which every extremal member must
/// contain. Also validates where they sit: inside the tail block (minus the
/// hub's tail in-neighbor y) when the tail has order >= 4; otherwise the pair
/// is {hub, y} when the last middle p dominates the hub, else {p, y}.
/// A miss raises invariant_violation.
std::pair<int, int> out_degree_one_pair(const Digraph& d);

/// For extremal members of the out-degree-2 class on n >= 7 vertices: checks
/// the minimum-degree bound delta(d) <= n - 3.
bool min_degree_bound_holds(const Digraph& d);

}  // namespace girthforge
