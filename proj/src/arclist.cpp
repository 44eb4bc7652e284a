#include "girthforge/arclist.hpp"

#include <fstream>
#include <sstream>

namespace girthforge {

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw std::runtime_error("arclist line " + std::to_string(line) + ": " + what);
}

bool parse_int(const std::string& token, int& value) {
  if (token.empty()) return false;
  size_t pos = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == token.size();
}

}  // namespace

std::string to_arclist(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << '\n';
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

Digraph from_arclist(std::istream& in) {
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) throw std::runtime_error("arclist: empty input");
  ++lineno;
  int n = 0;
  if (!parse_int(line, n)) parse_error(lineno, "expected vertex count, got '" + line + "'");
  if (n < 1 || n > kMaxVertices) parse_error(lineno, "vertex count must be in [1, 64]");

  Digraph d(n);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() && in.peek() == EOF) break;  // tolerate one trailing newline
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra))
      parse_error(lineno, "expected 'u v', got '" + line + "'");
    int u = 0, v = 0;
    if (!parse_int(a, u) || !parse_int(b, v)) parse_error(lineno, "non-numeric vertex");
    if (u < 0 || u >= n || v < 0 || v >= n) parse_error(lineno, "vertex out of range");
    if (u == v) parse_error(lineno, "self-loop");
    if (d.has_arc(u, v)) parse_error(lineno, "duplicate arc");
    d.add_arc(u, v);
  }
  return d;
}

Digraph from_arclist(const std::string& text) {
  std::istringstream in(text);
  return from_arclist(in);
}

void write_arclist_file(const Digraph& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << to_arclist(d);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

Digraph read_arclist_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return from_arclist(in);
}

}  // namespace girthforge
