#include "girthforge/construct.hpp"

#include <algorithm>
#include <numeric>

namespace girthforge {

Digraph circulant(int n, const std::vector<int>& jumps) {
  if (n < 2) throw std::invalid_argument("circulant needs n >= 2");
  if (jumps.empty()) throw std::invalid_argument("circulant needs a nonempty jump set");
  std::vector<int> sorted(jumps);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != jumps.size()) throw std::invalid_argument("duplicate jump");
  Digraph d(n);
  for (int j : sorted) {
    if (j < 1 || j > n - 1)
      throw std::invalid_argument("jump " + std::to_string(j) + " outside 1.." +
                                  std::to_string(n - 1));
    for (int v = 0; v < n; ++v) d.add_arc(v, (v + j) % n);
  }
  return d;
}

Digraph f8() {
  Digraph d(8);
  for (int i = 0; i < 4; ++i) {
    int a = 2 * i;
    d.add_arc(a, (a + 1) % 8);
    d.add_arc(a, (a + 2) % 8);
    d.add_arc(a, (a + 3) % 8);
    d.add_arc((a + 1) % 8, (a + 2) % 8);
    d.add_arc((a + 1) % 8, (a + 3) % 8);
  }
  return d;
}

Digraph strong_tournament(int n) {
  if (n < 3) throw std::invalid_argument("strong tournament needs n >= 3");
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (u == 0 && v == n - 1)
        d.add_arc(v, u);
      else
        d.add_arc(u, v);
    }
  return d;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::D1: return "D1";
    case Family::D2: return "D2";
    case Family::D3: return "D3";
    case Family::D4: return "D4";
    case Family::D5: return "D5";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::D1, Family::D2, Family::D3, Family::D4, Family::D5})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family '" + name + "' (expected D1..D5)");
}

int FamilyParams::order() const {
  return 1 + std::accumulate(orders.begin(), orders.end(), 0);
}

void FamilyParams::validate() const {
  const int h = static_cast<int>(orders.size());
  if (h < 2) throw std::invalid_argument("family needs at least two blocks");
  for (int o : orders)
    if (o != 1 && o < 4)
      throw std::invalid_argument("block orders must be 1 or >= 4, got " + std::to_string(o));
  if (order() > kMaxVertices) throw std::invalid_argument("family order exceeds 64");

  const int head = orders.front(), tail = orders.back();
  const int middles = h - 2;
  auto demand = [&](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("family " + family_name(family) + ": " + what);
  };
  switch (family) {
    case Family::D1:
      demand(h == 2 && head >= 4 && tail >= 4, "needs exactly two blocks of order >= 4");
      break;
    case Family::D2:
      demand(h >= 3 && head >= 4 && tail >= 4, "needs blocks >=4, singletons, >=4");
      break;
    case Family::D3:
      demand(h >= 3 && head >= 4 && tail == 1, "needs a block >= 4 then singletons");
      break;
    case Family::D4:
      demand(h >= 3 && head == 1 && tail >= 4, "needs singletons then a block >= 4");
      break;
    case Family::D5:
      demand(h >= 3 && head == 1 && tail == 1, "needs all singleton blocks");
      break;
  }
  for (int i = 1; i + 1 < h; ++i)
    demand(orders[i] == 1, "middle blocks must be singletons");

  if (x_size < 0 || y_size < 0 || x_size + y_size > middles)
    throw std::invalid_argument("x/y split exceeds the middle section");
  const int z_size = middles - x_size - y_size;
  if (head == 1 && y_size > 0)
    throw std::invalid_argument(
        "a singleton head block leaves the leading hub in-neighbor without in-arcs");
  if (tail == 1 && x_size > 0 && z_size == 0)
    throw std::invalid_argument(
        "a singleton tail block leaves the trailing hub out-neighbor without out-arcs");

  if (head_sub) {
    if (head < 4) throw std::invalid_argument("head substructure given for a singleton block");
    head_sub->validate();
    if (head_sub->order() != head + 1)
      throw std::invalid_argument("head substructure must have order " + std::to_string(head + 1));
  }
  if (tail_sub) {
    if (tail < 4) throw std::invalid_argument("tail substructure given for a singleton block");
    tail_sub->validate();
    if (tail_sub->order() != tail + 1)
      throw std::invalid_argument("tail substructure must have order " + std::to_string(tail + 1));
  }
}

FamilyParams smallest_d5(int order) {
  if (order < 4) throw std::invalid_argument("layered structure needs order >= 4");
  FamilyParams p;
  p.family = Family::D5;
  p.orders.assign(order - 1, 1);
  return p;
}

namespace {

// Maps the nested structure M onto `block` plus the hub of the outer graph.
// `attach` is the vertex of M that takes over the hub role; it must have the
// given degrees inside M and leave M strong when removed.
void embed_end_structure(Digraph& d, const Digraph& m, int attach, const std::vector<int>& block,
                         int hub) {
  std::vector<int> image(m.order(), -1);
  int next = 0;
  for (int v = 0; v < m.order(); ++v) image[v] = (v == attach) ? hub : block[next++];
  for (auto [a, b] : m.arcs()) d.add_arc(image[a], image[b]);
}

int pick_attachment(const Digraph& m, int want_out, int want_in) {
  for (int w = 0; w < m.order(); ++w) {
    if (m.out_degree(w) != want_out || m.in_degree(w) != want_in) continue;
    Subdigraph rest = remove_vertex(m, w);
    if (!is_strong(rest.graph)) continue;
    if (rest.graph.arc_count() != pairs_of(m.order() - 2) + 1) continue;
    return w;
  }
  throw std::invalid_argument("substructure has no attachment vertex with degrees (" +
                              std::to_string(want_out) + ", " + std::to_string(want_in) + ")");
}

}  // namespace

Digraph build_family(const FamilyParams& params) {
  params.validate();
  const int h = static_cast<int>(params.orders.size());
  const int n = params.order();
  const int hub = n - 1;

  std::vector<std::vector<int>> block(h);
  int label = 0;
  for (int i = 0; i < h; ++i) {
    block[i].resize(params.orders[i]);
    std::iota(block[i].begin(), block[i].end(), label);
    label += params.orders[i];
  }

  Digraph d(n);

  // End blocks: singleton ends wire straight to the hub, larger ends embed a
  // nested layered structure of order n_i + 1 that contains the hub.
  if (params.orders.front() == 1) {
    d.add_arc(hub, block.front()[0]);
  } else {
    FamilyParams sub = params.head_sub ? *params.head_sub : smallest_d5(params.orders.front() + 1);
    Digraph m = build_family(sub);
    int attach = pick_attachment(m, 1, params.orders.front() - 2);
    embed_end_structure(d, m, attach, block.front(), hub);
  }
  if (params.orders.back() == 1) {
    d.add_arc(block.back()[0], hub);
  } else {
    FamilyParams sub = params.tail_sub ? *params.tail_sub : smallest_d5(params.orders.back() + 1);
    Digraph m = build_family(sub);
    int attach = pick_attachment(m, params.orders.back() - 2, 1);
    embed_end_structure(d, m, attach, block.back(), hub);
  }

  // Middle singletons: y_size hub in-neighbors, then x_size hub out-neighbors,
  // then blocks not adjacent to the hub.
  VertexSet x_set = 0, y_set = 0;
  for (int i = 1; i + 1 < h; ++i) {
    int v = block[i][0];
    int middle_index = i - 1;
    if (middle_index < params.y_size) {
      d.add_arc(v, hub);
      y_set |= bit(v);
    } else if (middle_index < params.y_size + params.x_size) {
      d.add_arc(hub, v);
      x_set |= bit(v);
    }
  }

  VertexSet head_mask = set_of(block.front());
  VertexSet tail_mask = set_of(block.back());
  std::vector<int> hub_out_head = vertices_of(d.out_set(hub) & head_mask);
  std::vector<int> hub_in_tail = vertices_of(d.in_set(hub) & tail_mask);
  if (hub_out_head.size() != 1 || hub_in_tail.size() != 1)
    throw invariant_violation("hub must have one out-neighbor in the head block and one "
                              "in-neighbor in the tail block");
  const int head_exit = hub_out_head[0];  // x: the hub's out-neighbor up front
  const int tail_entry = hub_in_tail[0];  // y: the hub's in-neighbor at the back

  // Forward arcs between distinct blocks, minus the three exception shapes
  // that would otherwise close a cycle of length <= 3 through the hub.
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j)
      for (int a : block[i])
        for (int b : block[j]) {
          if (a == head_exit && b == tail_entry) continue;
          if (a == head_exit && contains(y_set, b)) continue;
          if (contains(x_set, a) && b == tail_entry) continue;
          d.add_arc(a, b);
        }

  ClassSpec cls{n, 3, 1, 1};
  if (d.arc_count() != pairs_of(n - 1) + 1 || gamma(d) != n - 2 || !in_class(d, cls))
    throw invariant_violation("layered construction failed its self-check for family " +
                              family_name(params.family));
  return d;
}

long long cycle_forcing_size(int n, int k) {
  if (k < 2) throw std::invalid_argument("cycle bound must be >= 2");
  if (n < k + 1) throw std::invalid_argument("needs n >= k + 1");
  long long nn = n, kk = k;
  return (nn * nn + (3 - 2 * kk) * nn + kk * kk - kk) / 2;
}

long long max_size_min_deg_one(int n, int k) { return cycle_forcing_size(n, k) - 1; }

long long max_size_out2_in1(int n) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  if (n <= 6) return 0;
  if (n <= 8) return pairs_of(n - 1) - 1;
  return pairs_of(n - 1) - 2;
}

}  // namespace girthforge
