#pragma once

#include <iosfwd>
#include <string>

#include "girthforge/digraph.hpp"

namespace girthforge {

// Textual digraph format "arclist v1": first line is the order n, every
// following line is one arc "u v" (0-based decimal, single space, LF).
// Writers emit arcs in lexicographic order; the parser accepts any order
// and rejects duplicates, self-loops and out-of-range vertices.

std::string to_arclist(const Digraph& d);
Digraph from_arclist(std::istream& in);
Digraph from_arclist(const std::string& text);

void write_arclist_file(const Digraph& d, const std::string& path);
Digraph read_arclist_file(const std::string& path);

}  // namespace girthforge
