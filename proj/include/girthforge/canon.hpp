#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "girthforge/digraph.hpp"

namespace girthforge {

/// A canonical relabeling of a digraph together with the byte string of the
/// relabeled adjacency matrix.
///
/// Layout of `bytes`: row-major, one row per vertex, each row padded to whole
/// bytes ((n + 7) / 8 of them), most-significant bit of a byte is the lowest
/// column it covers. Two digraphs have equal `bytes` if and only if they are
/// isomorphic, which is what makes the string usable as a dedup key and as a
/// portable fingerprint in checkpoints and reports.
struct CanonicalForm {
  std::vector<int> relabeling;        // relabeling[original vertex] = canonical position
  std::vector<std::uint8_t> bytes;
};

CanonicalForm canonical_form(const Digraph& d);

/// True iff some bijection of vertex sets maps arcs onto arcs.
bool are_isomorphic(const Digraph& a, const Digraph& b);

/// One representative per isomorphism class; first occurrence kept, input
/// order preserved.
std::vector<Digraph> dedup_isomorphic(const std::vector<Digraph>& list);

/// Rendering used in reports: the order, a colon, then lowercase hex of the
/// canonical bytes, e.g. "7:2c58...".
std::string canonical_string(const Digraph& d);

/// Serializes the adjacency matrix of d as-is (identity labeling) in the
/// canonical byte layout described above.
std::vector<std::uint8_t> adjacency_bytes(const Digraph& d);

}  // namespace girthforge
