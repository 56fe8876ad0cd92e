#include "maxcut/graph.hpp"

#include <zlib.h>

#include <cmath>
#include <fstream>
#include <sstream>

namespace maxcut {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n <= 0) throw std::invalid_argument("vertex count must be positive");
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.degree_w_.assign(n, 0.0);
  g.weight_map_.reserve(g.edges_.size() * 2);

  std::vector<int> degree(n, 0);
  for (const Edge& e : g.edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop rejected");
    if (e.w < 0.0) throw std::invalid_argument("negative edge weight rejected");
    if (!g.weight_map_.emplace(key(e.u, e.v), e.w).second)
      throw std::invalid_argument("duplicate edge rejected");
    degree[e.u]++;
    degree[e.v]++;
    g.degree_w_[e.u] += e.w;
    g.degree_w_[e.v] += e.w;
    g.total_weight_ += e.w;
    if (e.w != std::floor(e.w)) g.integer_weights_ = false;
  }

  g.offsets_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.adj_.resize(g.offsets_[n]);
  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adj_[cursor[e.u]++] = {e.v, e.w};
    g.adj_[cursor[e.v]++] = {e.u, e.w};
  }
  return g;
}

Graph parse_gset(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = 0;
  long m = 0;
  // header
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n <= 0 || m < 0)
      throw parse_error("expected header \"n m\" with positive integers", lineno);
    break;
  }
  if (n == 0) throw parse_error("empty input", lineno);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  long got = 0;
  while (got < m) {
    if (!std::getline(in, line))
      throw parse_error("unexpected end of input, expected " +
                            std::to_string(m) + " edge lines",
                        lineno);
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream es(line);
    int u, v;
    double w;
    if (!(es >> u >> v >> w))
      throw parse_error("malformed edge line \"" + line + "\"", lineno);
    if (u < 1 || u > n || v < 1 || v > n)
      throw parse_error("vertex id out of range", lineno);
    edges.push_back({u - 1, v - 1, w});
    ++got;
  }
  try {
    return Graph::from_edges(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), lineno);
  }
}

namespace {

bool looks_gzip(const std::string& path) {
  if (path.size() > 3 && path.substr(path.size() - 3) == ".gz") return true;
  std::ifstream f(path, std::ios::binary);
  unsigned char magic[2] = {0, 0};
  f.read(reinterpret_cast<char*>(magic), 2);
  return f.gcount() == 2 && magic[0] == 0x1f && magic[1] == 0x8b;
}

std::string gunzip_file(const std::string& path) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (!f) throw std::runtime_error("cannot open " + path);
  std::string out;
  char buf[1 << 16];
  int got;
  while ((got = gzread(f, buf, sizeof(buf))) > 0) out.append(buf, got);
  bool ok = got == 0;
  gzclose(f);
  if (!ok) throw std::runtime_error("gzip inflate failed for " + path);
  return out;
}

}  // namespace

Graph load_gset(const std::string& path) {
  if (looks_gzip(path)) {
    std::istringstream in(gunzip_file(path));
    return parse_gset(in);
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_gset(in);
}

double cut_value(const Graph& g, const SideVector& side) {
  if (side.size() != g.order())
    throw std::invalid_argument("side vector length mismatch");
  double total = 0.0;
  for (const Edge& e : g.edges())
    if (side[e.u] != side[e.v]) total += e.w;
  return total;
}

Vector laplacian_apply(const Graph& g, const Vector& x) {
  if (x.size() != g.order())
    throw std::invalid_argument("vector length mismatch");
  Vector y(g.order());
  for (int i = 0; i < g.order(); ++i) y[i] = g.weighted_degree(i) * x[i];
  for (const Edge& e : g.edges()) {
    y[e.u] -= e.w * x[e.v];
    y[e.v] -= e.w * x[e.u];
  }
  return y;
}

}  // namespace maxcut
