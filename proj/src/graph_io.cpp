#include "jdv/graph_io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "jdv/errors.hpp"

namespace jdv {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line_no) {
  int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw InputError("line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
  }
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto toks = tokens_of(line);
    if (!n) {
      if (toks.size() != 2 || toks[0] != "n") {
        throw InputError("line " + std::to_string(line_no) + ": expected header 'n <integer>', got '" +
                         line + "'");
      }
      n = parse_int(toks[1], line_no);
      if (*n < 1) {
        throw InputError("line " + std::to_string(line_no) + ": vertex count must be positive");
      }
      continue;
    }
    if (toks.size() != 2) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v', got '" + line + "'");
    }
    edges.push_back({parse_int(toks[0], line_no), parse_int(toks[1], line_no)});
  }
  if (!n) throw InputError("edge list is missing the 'n <integer>' header");
  return Graph(*n, edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace jdv
