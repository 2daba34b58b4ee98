#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "starlex/matrix.hpp"
#include "starlex/partition.hpp"
#include "starlex/rational.hpp"

namespace starlex {

/// Undirected weighted graph, loops allowed, no multiedges. A pair carries a
/// weight exactly when the edge is present; absent pairs read as weight 0.
/// A loop of weight w contributes w (not 2w) to the adjacency diagonal and
/// nothing to the combinatorial degree.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(int order);

    int order() const { return order_; }

    /// Number of stored pairs, loops included.
    int edge_count() const { return static_cast<int>(weights_.size()); }

    /// Sets w(u,v); a zero weight removes the pair. Unordered: (u,v) == (v,u).
    void set_weight(int u, int v, const SqrtRat& w);

    /// w(u,v), zero when the pair is absent.
    SqrtRat weight(int u, int v) const;

    bool has_edge(int u, int v) const;
    bool has_loop(int u) const { return has_edge(u, u); }

    /// Combinatorial degree: count of incident non-loop edges.
    int degree(int u) const;

    /// All stored pairs as (u, v, w) with u <= v, sorted.
    std::vector<std::tuple<int, int, SqrtRat>> edges() const;

    /// Unit weights everywhere and no loops.
    bool is_simple() const;

    bool is_connected() const;

    void check_vertex(int u) const;

private:
    int order_ = 0;
    std::map<std::pair<int, int>, SqrtRat> weights_;  // keys normalized u <= v
};

/// A graph with a distinguished vertex.
struct RootedGraph {
    WeightedGraph graph;
    int root = 0;

    RootedGraph() = default;
    RootedGraph(WeightedGraph g, int r);
};

/// Unit-weight path on n >= 1 vertices (ids 0..n-1 in chain order).
WeightedGraph path_graph(int n);
/// Unit-weight cycle on n >= 3 vertices.
WeightedGraph cycle_graph(int n);
/// The one-vertex, zero-edge graph.
WeightedGraph trivial_graph();

/// Identifies the two roots into one vertex. The first graph's vertex ids are
/// kept (the merged vertex takes its root id); the second graph's vertices
/// are appended in id order with the root skipped. Loop weights at the two
/// roots add at the merged vertex.
RootedGraph coalesce(const RootedGraph& g1, const RootedGraph& g2);

/// Appends one fresh path per part at the root, parts in partition order.
/// The path for each part occupies a contiguous id block ordered by distance
/// from the root (1..part). Adds sum(parts) vertices and sum(parts) edges.
RootedGraph attach_paths(const RootedGraph& g, const Partition& parts);

/// Starlike tree: paths of the given lengths sharing one center vertex.
RootedGraph starlike_tree(const Partition& parts);

/// alpha * D + (1 - alpha) * A for a simple unit-weight graph, 0 <= alpha < 1.
/// Rejects weighted or loopy input.
RatMatrix alpha_matrix(const WeightedGraph& g, const Rat& alpha);

/// Weighted adjacency matrix; loop weights sit on the diagonal.
WeightMatrix adjacency_matrix(const WeightedGraph& g);

/// Diagonal matrix of combinatorial degrees.
RatMatrix degree_matrix(const WeightedGraph& g);

WeightedGraph delete_vertex(const WeightedGraph& g, int u);
WeightedGraph delete_edge(const WeightedGraph& g, int u, int v);

/// Structural test: simple, connected, all degrees <= 2 with exactly two
/// endpoints (one vertex counts as a degenerate path).
bool is_unit_path(const WeightedGraph& g);

/// Edge-list reader, one edge per line: "u v w" with 0-based ids and a
/// decimal or p/q weight; omitted w means 1; "u u w" declares a loop. Blank
/// lines and '#' comments are ignored. Throws std::runtime_error with the
/// line number on malformed input.
WeightedGraph read_edge_list(std::istream& in);
WeightedGraph read_edge_list_file(const std::string& path);

}  // namespace starlex
