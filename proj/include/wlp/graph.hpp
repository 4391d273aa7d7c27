#ifndef WLP_GRAPH_HPP
#define WLP_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wlp {

// Vertex subsets are one-word bit masks, so graphs are capped at 64 vertices.
// Raise the cap by widening VertexSet; everything else is written against it.
inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet full_set(int n) {
  return n == 0 ? 0 : (~VertexSet{0} >> (kMaxVertices - n));
}

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1; }

/// Members of a set in increasing order.
std::vector<int> set_vertices(VertexSet s);

// Finite simple graph on vertices 0..n-1. Immutable after construction;
// edges are stored normalized (u < v, sorted, deduplicated) and mirrored
// into per-vertex adjacency masks.
//
// Labeling convention for whiskered graphs: if H has n vertices then in
// w(H) the original vertex x_i keeps index i-1 and its whisker y_i gets
// index n+i-1. Vertex display names record this so printed matrices and
// reports use x1..xn, y1..yn.
class Graph {
public:
  Graph() = default;

  // Throws std::invalid_argument on loops or out-of-range endpoints.
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(int u, int v) const;
  VertexSet adjacency(int v) const { return adj_[v]; }

  /// True iff no edge of the graph has both endpoints in s.
  bool is_independent_set(VertexSet s) const;

  const std::vector<std::string>& vertex_names() const { return names_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  friend Graph whisker(const Graph&);

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<VertexSet> adj_;
  std::vector<std::string> names_;  // defaults to x1..xn
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Generators. All label vertices x1..xn as indices 0..n-1.
Graph gen_broom(int m);      // path x1-x2-x3 with m extra leaves on x3
Graph gen_complete(int n);
Graph gen_path(int n);
Graph gen_cycle(int n);      // n >= 3
Graph gen_edgeless(int n);

/// w(H): one pendant vertex per vertex of H, attached by a single edge.
Graph whisker(const Graph& h);

/// Edge set complemented within the same vertex set.
Graph complement(const Graph& g);

/// Vertex partition into connected components, each sorted, ordered by
/// smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

struct BipartiteResult {
  bool bipartite = true;
  // bipartite: a valid 2-coloring (entries 0/1).
  std::vector<int> coloring;
  // not bipartite: vertices of an odd cycle, in order.
  std::vector<int> odd_cycle;
};

/// Whole-graph bipartiteness with a checkable witness either way.
BipartiteResult is_bipartite(const Graph& g);

}  // namespace wlp

#endif  // WLP_GRAPH_HPP
