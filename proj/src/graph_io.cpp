#include "bizon/app/graph_io.hpp"

#include "bizon/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace bizon::app {

namespace {

long long parse_int(const std::string& token, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + token + "'");
  return value;
}

} // namespace

MultiGraph parse_graph(std::istream& in) {
  std::string raw;
  int line = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    const auto where = "line " + std::to_string(line) + ": ";
    if (words[0] == "p") {
      if (n >= 0) throw ParseError(where + "duplicate header");
      if (words.size() != 3) throw ParseError(where + "header must be 'p <n> <m>'");
      n = parse_int(words[1], line);
      m = parse_int(words[2], line);
      if (n < 0 || m < 0) throw ParseError(where + "negative count in header");
      if (n > 32) throw ParseError(where + "at most 32 vertices are supported");
    } else if (words[0] == "e") {
      if (n < 0) throw ParseError(where + "edge before header");
      if (words.size() != 3) throw ParseError(where + "edge must be 'e <u> <v>'");
      const long long u = parse_int(words[1], line), v = parse_int(words[2], line);
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(where + "vertex out of range");
      edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
    } else {
      throw ParseError(where + "unknown record '" + words[0] + "'");
    }
  }
  if (n < 0) throw ParseError("missing 'p <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return MultiGraph(static_cast<int>(n), std::move(edges));
}

MultiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

MultiGraph parse_family_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  int n = 0;
  if (colon != std::string::npos) {
    const auto value = parse_int(spec.substr(colon + 1), 0);
    if (value < 0 || value > 32) throw ParseError("family size out of range in '" + spec + "'");
    n = static_cast<int>(value);
  } else if (name != "petersen") {
    throw ParseError("family spec must be NAME:N, got '" + spec + "'");
  }
  try {
    return generate_family(name, n);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

} // namespace bizon::app
