#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace maxcut {

using Vector = Eigen::VectorXd;
using SideVector = Eigen::VectorXi;  // entries in {+1, -1}

struct Edge {
  int u;
  int v;
  double w;
};

struct Neighbor {
  int v;
  double w;
};

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line(line) {}
  int line;
};

// Immutable weighted undirected graph. Vertices are 0-indexed internally;
// the G-set parser converts from the 1-indexed file convention.
class Graph {
 public:
  // Validates and builds adjacency. Throws std::invalid_argument on
  // self-loops, duplicate edges, negative weights or out-of-range ids.
  static Graph from_edges(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Neighbor> neighbors(int u) const {
    return {adj_.data() + offsets_[u],
            static_cast<std::size_t>(offsets_[u + 1] - offsets_[u])};
  }

  double weighted_degree(int u) const { return degree_w_[u]; }
  double total_weight() const { return total_weight_; }

  // Weight of edge {u, v}, or 0 if absent. O(1).
  double edge_weight(int u, int v) const {
    auto it = weight_map_.find(key(u, v));
    return it == weight_map_.end() ? 0.0 : it->second;
  }

  bool has_integer_weights() const { return integer_weights_; }

 private:
  Graph() = default;

  static std::int64_t key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::int64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<Neighbor> adj_;
  std::vector<double> degree_w_;
  std::unordered_map<std::int64_t, double> weight_map_;
  double total_weight_ = 0.0;
  bool integer_weights_ = true;
};

struct Cut {
  SideVector side;  // +1 for S, -1 for S'
  double value = 0.0;
};

// G-set text format: header "n m", then m lines "u v w" with 1-indexed ids.
Graph parse_gset(std::istream& in);

// Loads a G-set file from disk; transparently inflates gzip input
// (detected by the .gz extension or the gzip magic bytes).
Graph load_gset(const std::string& path);

double cut_value(const Graph& g, const SideVector& side);

// y = (D - W) x
Vector laplacian_apply(const Graph& g, const Vector& x);

}  // namespace maxcut
