#include "girthforge/classify.hpp"

#include <algorithm>
#include <numeric>

#include "girthforge/canon.hpp"

namespace girthforge {

namespace {

bool is_extremal_min11(const Digraph& d) {
  return d.order() >= 4 && d.arc_count() == pairs_of(d.order() - 1) + 1 &&
         in_class(d, ClassSpec{d.order(), 3, 1, 1});
}

struct Attempt {
  Family family = Family::D5;
  std::vector<VertexSet> blocks;
  VertexSet x_set = 0, y_set = 0;
  std::vector<std::string> violations;

  void fail(const std::string& rule, const std::string& detail) {
    violations.push_back(rule + ": " + detail);
  }
  bool ok() const { return violations.empty(); }
};

// Extremal membership of a sub-digraph, recursing into the classifier while
// depth remains; at the cap only the arithmetic membership check runs.
bool subtree_extremal(const Digraph& d, int depth);

Attempt classify_via_hub(const Digraph& d, int hub, int depth) {
  Attempt attempt;

  Subdigraph rest = remove_vertex(d, hub);
  ComponentDecomposition dec = strong_components(rest.graph);
  const int h = dec.count();
  if (h < 2) {
    attempt.fail("I", "digraph minus the hub is still strong");
    return attempt;
  }
  // Blocks in original labels, acyclic order.
  attempt.blocks.assign(h, 0);
  for (int c = 0; c < h; ++c)
    for (int v : vertices_of(dec.components[c])) attempt.blocks[c] |= bit(rest.source_vertex[v]);

  std::vector<int> orders = dec.orders();
  const int head = orders.front(), tail = orders.back();
  bool middles_single = true;
  for (int i = 1; i + 1 < h; ++i)
    if (orders[i] != 1) middles_single = false;

  if (h == 2 && head >= 4 && tail >= 4) {
    attempt.family = Family::D1;
  } else if (h >= 3 && middles_single && head >= 4 && tail >= 4) {
    attempt.family = Family::D2;
  } else if (h >= 3 && middles_single && head >= 4 && tail == 1) {
    attempt.family = Family::D3;
  } else if (h >= 3 && middles_single && head == 1 && tail >= 4) {
    attempt.family = Family::D4;
  } else if (h >= 3 && middles_single && head == 1 && tail == 1) {
    attempt.family = Family::D5;
  } else {
    attempt.fail("I", "block order pattern " + [&] {
      std::string s;
      for (int o : orders) s += std::to_string(o) + ",";
      return s;
    }() + " fits no family");
    return attempt;
  }

  VertexSet head_block = attempt.blocks.front();
  VertexSet tail_block = attempt.blocks.back();

  // Rule group II: end blocks.
  auto check_end = [&](VertexSet block, bool is_head) {
    const char* side = is_head ? "head" : "tail";
    const int order = set_size(block);
    if (order == 1) {
      int x = first_vertex(block);
      bool wired = is_head ? d.has_arc(hub, x) : d.has_arc(x, hub);
      if (!wired)
        attempt.fail("II(1)", std::string("singleton ") + side + " block is not wired " +
                                  (is_head ? "hub->x" : "y->hub"));
      return;
    }
    int out_here = set_size(d.out_set(hub) & block);
    int in_here = set_size(d.in_set(hub) & block);
    int want_out = is_head ? 1 : order - 2;
    int want_in = is_head ? order - 2 : 1;
    if (out_here != want_out || in_here != want_in) {
      attempt.fail("II(2)", std::string("hub degrees into the ") + side + " block are (" +
                                std::to_string(out_here) + "," + std::to_string(in_here) +
                                "), expected (" + std::to_string(want_out) + "," +
                                std::to_string(want_in) + ")");
      return;
    }
    Digraph inner = induced(d, block).graph;
    if (inner.arc_count() != pairs_of(order - 1) + 1 || !subtree_extremal(inner, depth - 1)) {
      attempt.fail("II(2)", std::string(side) + " block is not an extremal member itself");
      return;
    }
    Digraph with_hub = induced(d, block | bit(hub)).graph;
    if (with_hub.arc_count() != pairs_of(order) + 1 || !subtree_extremal(with_hub, depth - 1))
      attempt.fail("II(2)", std::string(side) + " block plus the hub is not an extremal member");
  };
  check_end(head_block, true);
  if (!attempt.ok()) return attempt;
  check_end(tail_block, false);
  if (!attempt.ok()) return attempt;

  // Rule group III: hub neighbors among the middle singletons and the
  // completeness of forward arcs.
  VertexSet middles = 0;
  for (int i = 1; i + 1 < h; ++i) middles |= attempt.blocks[i];
  attempt.x_set = d.out_set(hub) & middles;
  attempt.y_set = d.in_set(hub) & middles;

  auto block_of = [&](int v) {
    for (int c = 0; c < h; ++c)
      if (contains(attempt.blocks[c], v)) return c;
    return -1;
  };
  for (int r : vertices_of(attempt.y_set))
    for (int s : vertices_of(attempt.x_set))
      if (block_of(r) > block_of(s)) {
        attempt.fail("III(1)", "hub in-neighbor " + std::to_string(r) +
                                   " comes after hub out-neighbor " + std::to_string(s));
        return attempt;
      }

  const int head_exit = first_vertex(d.out_set(hub) & head_block);
  const int tail_entry = first_vertex(d.in_set(hub) & tail_block);
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j)
      for (int a : vertices_of(attempt.blocks[i]))
        for (int b : vertices_of(attempt.blocks[j])) {
          bool exempt_21 = (a == head_exit && b == tail_entry);
          bool exempt_22 = (a == head_exit && contains(attempt.y_set, b));
          bool exempt_23 = (contains(attempt.x_set, a) && b == tail_entry);
          bool expected = !(exempt_21 || exempt_22 || exempt_23);
          if (d.has_arc(a, b) == expected) continue;
          if (expected) {
            attempt.fail("III(2)", "missing forward arc " + std::to_string(a) + "->" +
                                       std::to_string(b));
          } else {
            const char* rule = exempt_21 ? "III(2.1)" : exempt_22 ? "III(2.2)" : "III(2.3)";
            attempt.fail(rule, "arc " + std::to_string(a) + "->" + std::to_string(b) +
                                   " must be absent");
          }
          return attempt;
        }
  return attempt;
}

FamilyClassification classify_internal(const Digraph& d, int depth);

bool subtree_extremal(const Digraph& d, int depth) {
  if (!is_extremal_min11(d)) return false;
  if (d.order() == 4) return are_isomorphic(d, circulant(4, {1}));
  if (depth <= 0) return true;  // arithmetic check only at the recursion cap
  return classify_internal(d, depth).ok();
}

FamilyClassification classify_internal(const Digraph& d, int depth) {
  const int n = d.order();
  DegreeProfile prof = DegreeProfile::of(d);
  std::vector<int> candidates(n);
  std::iota(candidates.begin(), candidates.end(), 0);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int a, int b) { return prof.degree[a] < prof.degree[b]; });

  FamilyClassification result;
  bool have_primary = false;
  bool have_fallback = false;
  Attempt fallback;
  int fallback_hub = -1;

  for (int hub : candidates) {
    if (prof.degree[hub] > n - 3) continue;
    Attempt attempt = classify_via_hub(d, hub, depth);
    if (attempt.ok()) {
      result.accepted_hubs.emplace_back(hub, attempt.family);
      if (!have_primary) {
        have_primary = true;
        result.family = attempt.family;
        result.hub = hub;
        result.blocks = std::move(attempt.blocks);
        result.x_set = attempt.x_set;
        result.y_set = attempt.y_set;
      } else if (attempt.family != result.family) {
        result.hub_tags_disagree = true;
      }
    } else if (!have_fallback) {
      have_fallback = true;
      fallback = std::move(attempt);
      fallback_hub = hub;
    }
  }

  if (have_primary) return result;
  if (have_fallback) {
    result.hub = fallback_hub;
    result.family = fallback.family;
    result.blocks = std::move(fallback.blocks);
    result.x_set = fallback.x_set;
    result.y_set = fallback.y_set;
    result.violations = std::move(fallback.violations);
    return result;
  }
  result.violations.push_back("I: no vertex of degree <= n-3 disconnects the digraph");
  return result;
}

}  // namespace

FamilyClassification classify_family(const Digraph& d) {
  const int n = d.order();
  if (n < 5) throw std::invalid_argument("classification needs n >= 5");
  if (!is_extremal_min11(d))
    throw std::invalid_argument(
        "classification needs an extremal member: strong, no cycles of length <= 3, and " +
        std::to_string(pairs_of(n - 1) + 1) + " arcs");
  return classify_internal(d, n);
}

std::pair<int, int> out_degree_one_pair(const Digraph& d) {
  const int n = d.order();
  if (n < 5) throw std::invalid_argument("the out-degree-one pair needs n >= 5");
  if (!is_extremal_min11(d))
    throw std::invalid_argument("the out-degree-one pair is asserted for extremal members only");

  std::vector<int> ones;
  for (int v = 0; v < n; ++v)
    if (d.out_degree(v) == 1) ones.push_back(v);
  if (ones.size() < 2)
    throw invariant_violation("extremal member has fewer than two out-degree-one vertices");

  FamilyClassification cls = classify_family(d);
  if (!cls.ok())
    throw invariant_violation("extremal member failed classification: " + cls.violations.front());

  VertexSet tail_block = cls.blocks.back();
  if (set_size(tail_block) >= 4) {
    int y = first_vertex(d.in_set(cls.hub) & tail_block);
    std::vector<int> in_tail;
    for (int v : ones)
      if (contains(tail_block, v) && v != y) in_tail.push_back(v);
    if (in_tail.size() < 2)
      throw invariant_violation(
          "expected two out-degree-one vertices inside the tail block away from y");
    return {in_tail[0], in_tail[1]};
  }

  int y = first_vertex(tail_block);
  int p = first_vertex(cls.blocks[cls.blocks.size() - 2]);
  int first = d.has_arc(p, cls.hub) ? cls.hub : p;
  if (d.out_degree(first) != 1 || d.out_degree(y) != 1)
    throw invariant_violation("the predicted out-degree-one pair {" + std::to_string(first) +
                              ", " + std::to_string(y) + "} does not have out-degree one");
  return {first, y};
}

bool min_degree_bound_holds(const Digraph& d) {
  const int n = d.order();
  if (n < 7) throw std::invalid_argument("the minimum-degree bound is stated for n >= 7");
  ClassSpec spec{n, 3, 2, 1};
  if (!in_class(d, spec) || d.arc_count() != max_size_out2_in1(n))
    throw std::invalid_argument("expected an extremal member of the out-degree-2 class");
  return DegreeProfile::of(d).min_degree <= n - 3;
}

}  // namespace girthforge
