#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace girthforge {

/// Hard cap on the order of a digraph: a vertex set fits in one machine word.
inline constexpr int kMaxVertices = 64;

/// Thrown when a mathematically guaranteed property fails on concrete data.
/// Catching one of these means either the implementation or the guarantee
/// itself is broken, so callers should not swallow it.
class invariant_violation : public std::logic_error {
 public:
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

using VertexSet = std::uint64_t;

inline VertexSet bit(int v) { return VertexSet{1} << v; }

inline VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }

/// Lowest vertex in a nonempty set.
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

inline std::vector<int> vertices_of(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

inline VertexSet set_of(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

/// n choose 2 without overflow concerns for n <= 64.
inline int pairs_of(int n) { return n * (n - 1) / 2; }

}  // namespace girthforge
