#include "rombond/graph.hpp"

#include <algorithm>
#include <sstream>

namespace rombond {

std::vector<int> set_vertices(VertexSet s) {
  std::vector<int> out;
  while (s) {
    int v = std::countr_zero(s);
    out.push_back(v);
    s &= s - 1;
  }
  return out;
}

std::string_view error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::self_loop: return "SelfLoop";
    case ErrorKind::duplicate_edge: return "DuplicateEdge";
    case ErrorKind::vertex_out_of_range: return "VertexOutOfRange";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::missing_edge: return "MissingEdge";
    case ErrorKind::overlapping_sets: return "OverlappingSets";
    case ErrorKind::empty_set: return "EmptySet";
    case ErrorKind::syntax: return "SyntaxError";
    case ErrorKind::length_mismatch: return "LengthMismatch";
    case ErrorKind::invalid_spec: return "InvalidSpec";
    case ErrorKind::empty_graph: return "EmptyGraph";
    case ErrorKind::no_bondage_set: return "NoBondageSet";
    case ErrorKind::budget_exhausted: return "BudgetExhausted";
    case ErrorKind::unsupported_family: return "UnsupportedFamily";
    case ErrorKind::inapplicable: return "Inapplicable";
  }
  return "Error";
}

Edge::Edge(int a, int b) {
  if (a == b)
    throw Error(ErrorKind::self_loop,
                "self-loop at vertex " + std::to_string(a));
  u = std::min(a, b);
  v = std::max(a, b);
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::string to_string(const EdgeSet& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ",";
    out += to_string(b[i]);
  }
  return out + "}";
}

Graph::Graph(int n) : n_(n), m_(0) {
  full_ = n == max_order ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 1 || n > max_order)
    throw Error(ErrorKind::too_large, "order " + std::to_string(n) +
                                          " outside supported range [1," +
                                          std::to_string(max_order) + "]");
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw Error(ErrorKind::vertex_out_of_range,
                  "edge " + to_string(e) + " has an endpoint outside 0.." +
                      std::to_string(n - 1));
    if (e.u == e.v)
      throw Error(ErrorKind::self_loop,
                  "self-loop at vertex " + std::to_string(e.u));
    if (g.adj_[e.u] & vertex_bit(e.v))
      throw Error(ErrorKind::duplicate_edge, "duplicate edge " + to_string(e));
    g.adj_[e.u] |= vertex_bit(e.v);
    g.adj_[e.v] |= vertex_bit(e.u);
    ++g.m_;
  }
  return g;
}

VertexSet Graph::neighbors(int x) const {
  if (x < 0 || x >= n_)
    throw Error(ErrorKind::vertex_out_of_range,
                "vertex " + std::to_string(x) + " outside 0.." +
                    std::to_string(n_ - 1));
  return adj_[x];
}

VertexSet Graph::closed_neighborhood(int x) const {
  return neighbors(x) | vertex_bit(x);
}

int Graph::degree(int x) const { return set_size(neighbors(x)); }

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, set_size(adj_[v]));
  return best;
}

bool Graph::has_edge(int u, int v) const {
  return u != v && (neighbors(u) & vertex_bit(v)) != 0;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    VertexSet higher = adj_[u] & ~((vertex_bit(u) << 1) - 1);
    for (int v : set_vertices(higher)) out.push_back(Edge(u, v));
  }
  return out;
}

EdgeSet Graph::incident_edges(int x) const {
  EdgeSet out;
  for (int y : set_vertices(neighbors(x))) out.push_back(Edge(x, y));
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet Graph::edges_between(VertexSet s, VertexSet t) const {
  if (!s || !t)
    throw Error(ErrorKind::empty_set, "edges_between requires nonempty sets");
  if (s & t)
    throw Error(ErrorKind::overlapping_sets,
                "edges_between requires disjoint sets");
  if ((s | t) & ~full_)
    throw Error(ErrorKind::vertex_out_of_range,
                "vertex set extends past order " + std::to_string(n_));
  EdgeSet out;
  for (int u : set_vertices(s))
    for (int v : set_vertices(adj_[u] & t)) out.push_back(Edge(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::remove_edges(const EdgeSet& b) const {
  Graph g = *this;
  for (const Edge& e : b) {
    if (!has_edge(e.u, e.v))
      throw Error(ErrorKind::missing_edge,
                  "edge " + to_string(e) + " not present");
    g.adj_[e.u] &= ~vertex_bit(e.v);
    g.adj_[e.v] &= ~vertex_bit(e.u);
    --g.m_;
  }
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int v = 0; v < n_; ++v) g.adj_[v] = full_ & ~adj_[v] & ~vertex_bit(v);
  int total = 0;
  for (int v = 0; v < n_; ++v) total += set_size(g.adj_[v]);
  g.m_ = total / 2;
  return g;
}

namespace {

// Next non-comment line, tracking 1-based line numbers. Blank lines are
// skipped like comments.
bool next_content_line(std::istringstream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

bool parse_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream ls(line);
  std::string extra;
  if (!(ls >> a >> b)) return false;
  if (ls >> extra) return false;
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  if (!next_content_line(in, line, lineno))
    throw Error(ErrorKind::syntax, "line 1: missing \"n m\" header");
  long long n = 0, m = 0;
  if (!parse_ints(line, n, m) || m < 0)
    throw Error(ErrorKind::syntax,
                "line " + std::to_string(lineno) + ": expected \"n m\"");
  if (n < 1 || n > Graph::max_order)
    throw Error(ErrorKind::too_large, "order " + std::to_string(n) +
                                          " outside supported range [1," +
                                          std::to_string(Graph::max_order) +
                                          "]");

  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno))
      throw Error(ErrorKind::syntax,
                  "line " + std::to_string(lineno + 1) + ": expected " +
                      std::to_string(m) + " edges, got " + std::to_string(i));
    long long u = 0, v = 0;
    if (!parse_ints(line, u, v))
      throw Error(ErrorKind::syntax,
                  "line " + std::to_string(lineno) + ": expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorKind::vertex_out_of_range,
                  "line " + std::to_string(lineno) + ": edge (" +
                      std::to_string(u) + "," + std::to_string(v) +
                      ") has an endpoint outside 0.." + std::to_string(n - 1));
    edges.push_back(Edge(static_cast<int>(u), static_cast<int>(v)));
  }
  if (next_content_line(in, line, lineno))
    throw Error(ErrorKind::syntax, "line " + std::to_string(lineno) +
                                       ": unexpected content after " +
                                       std::to_string(m) + " edges");
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out =
      std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace rombond
