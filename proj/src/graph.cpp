#include "localcut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "localcut/errors.hpp"

namespace localcut {

std::vector<std::size_t> Graph::in_degrees() const {
  std::vector<std::size_t> deg(num_vertices(), 0);
  for (VertexId h : heads_)
    ++deg[h];
  return deg;
}

std::size_t Graph::max_out_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < num_vertices(); ++v)
    best = std::max(best, out_degree(v));
  return best;
}

void GraphBuilder::add_arc(VertexId u, VertexId v) {
  if (u >= n_ || v >= n_)
    throw RangeError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                     ") outside [0," + std::to_string(n_) + ")");
  arcs_.emplace_back(u, v);
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
  add_arc(u, v);
  if (!directed_)
    add_arc(v, u);
}

Graph GraphBuilder::build() const {
  Graph g;
  g.directed_ = directed_;
  g.offsets_.assign(n_ + 1, 0);
  for (const auto &[u, v] : arcs_)
    ++g.offsets_[u + 1];
  for (std::size_t i = 0; i < n_; ++i)
    g.offsets_[i + 1] += g.offsets_[i];
  g.heads_.resize(arcs_.size());
  g.tails_.resize(arcs_.size());
  std::vector<ArcId> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto &[u, v] : arcs_) {
    const ArcId pos = cursor[u]++;
    g.heads_[pos] = v;
    g.tails_[pos] = u;
  }
  return g;
}

Graph GraphBuilder::from_csr(std::vector<ArcId> offsets, std::vector<VertexId> heads,
                             bool directed) {
  Graph g;
  g.directed_ = directed;
  g.offsets_ = std::move(offsets);
  g.heads_ = std::move(heads);
  g.tails_.resize(g.heads_.size());
  for (std::size_t v = 0; v + 1 < g.offsets_.size(); ++v)
    std::fill(g.tails_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.tails_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              static_cast<VertexId>(v));
  return g;
}

namespace {

struct DataLine {
  std::size_t number;
  std::uint64_t first;
  std::uint64_t second;
};

bool skippable(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#' || line[pos] == '%';
}

DataLine parse_line(std::string_view line, std::size_t number) {
  std::uint64_t values[2];
  std::size_t count = 0;
  const char *p = line.data();
  const char *end = line.data() + line.size();
  while (true) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r'))
      ++p;
    if (p == end)
      break;
    if (count == 2)
      throw ParseError(number, "expected two integers, found more tokens");
    auto [next, ec] = std::from_chars(p, end, values[count]);
    if (ec != std::errc() ||
        (next < end && *next != ' ' && *next != '\t' && *next != '\r'))
      throw ParseError(number, "malformed integer in '" + std::string(line) + "'");
    ++count;
    p = next;
  }
  if (count != 2)
    throw ParseError(number, "expected two integers");
  return {number, values[0], values[1]};
}

} // namespace

Graph load_graph(std::string_view text, bool directed) {
  std::vector<DataLine> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos)
      stop = text.size();
    ++number;
    const auto line = text.substr(start, stop - start);
    if (!skippable(line))
      lines.push_back(parse_line(line, number));
    start = stop + 1;
  }

  const bool has_header = !lines.empty() && lines.front().second == lines.size() - 1;
  std::size_t n = 0;
  std::span<const DataLine> body(lines);
  if (has_header) {
    n = lines.front().first;
    body = body.subspan(1);
    for (const auto &l : body)
      if (l.first >= n || l.second >= n)
        throw RangeError("line " + std::to_string(l.number) + ": vertex id >= n=" +
                         std::to_string(n));
  } else {
    for (const auto &l : body)
      n = std::max<std::size_t>(n, std::max(l.first, l.second) + 1);
  }
  if (n > std::numeric_limits<VertexId>::max())
    throw RangeError("vertex count exceeds 32-bit ids");

  GraphBuilder builder(n, directed);
  for (const auto &l : body)
    builder.add_edge(static_cast<VertexId>(l.first), static_cast<VertexId>(l.second));
  return builder.build();
}

Graph load_graph_file(const std::string &path, bool directed) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_graph(buffer.str(), directed);
}

std::string to_edge_list(const Graph &g) {
  std::ostringstream out;
  std::vector<std::pair<VertexId, VertexId>> lines;
  if (g.directed()) {
    for (ArcId a = 0; a < g.num_arcs(); ++a)
      lines.emplace_back(g.tail(a), g.head(a));
  } else {
    // Each unordered pair {u,v} with multiplicity c appears 2c times as arcs
    // (loops: 2c arcs (v,v) as well); emit c lines.
    for (ArcId a = 0; a < g.num_arcs(); ++a)
      if (g.tail(a) < g.head(a))
        lines.emplace_back(g.tail(a), g.head(a));
    std::size_t loops = 0;
    for (ArcId a = 0; a < g.num_arcs(); ++a)
      if (g.tail(a) == g.head(a) && (loops++ % 2 == 0))
        lines.emplace_back(g.tail(a), g.head(a));
  }
  out << g.num_vertices() << ' ' << lines.size() << '\n';
  for (const auto &[u, v] : lines)
    out << u << ' ' << v << '\n';
  return out.str();
}

Graph reverse_graph(const Graph &g) {
  // A symmetric arc multiset is its own reverse.
  if (!g.directed())
    return g;
  GraphBuilder builder(g.num_vertices(), true);
  for (ArcId a = 0; a < g.num_arcs(); ++a)
    builder.add_arc(g.head(a), g.tail(a));
  return builder.build();
}

std::vector<char> membership(std::size_t n, std::span<const VertexId> s) {
  std::vector<char> in(n, 0);
  for (VertexId v : s) {
    if (v >= n)
      throw RangeError("vertex " + std::to_string(v) + " outside graph");
    in[v] = 1;
  }
  return in;
}

CutStats cut_stats(const Graph &g, std::span<const VertexId> s) {
  CutStats stats;
  if (s.empty())
    return stats;
  const auto in = membership(g.num_vertices(), s);
  std::vector<char> seen(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!in[v])
      continue;
    stats.vol_out += g.out_degree(v);
    for (VertexId h : g.out_neighbors(v)) {
      if (in[h])
        continue;
      ++stats.cut_size;
      if (!seen[h]) {
        seen[h] = 1;
        stats.n_out.push_back(h);
      }
    }
  }
  std::sort(stats.n_out.begin(), stats.n_out.end());
  return stats;
}

} // namespace localcut
