#pragma once

#include <string>
#include <vector>

#include "starlex/matrix.hpp"
#include "starlex/rational.hpp"
#include "starlex/wgraph.hpp"

namespace starlex {

/// A partition of matrix indices into disjoint nonempty cells.
using Cells = std::vector<std::vector<int>>;

/// Result of an equitability test. When it fails, (row_cell, col_cell,
/// bad_row) witness the first block whose row sums are not constant.
struct EquitableCheck {
    bool equitable = true;
    int row_cell = -1;
    int col_cell = -1;
    int bad_row = -1;

    std::string describe() const;
};

/// True iff every block A[X_i : X_j] has constant row sums, checked over all
/// ordered cell pairs. Throws std::invalid_argument if the cells do not
/// partition the index set of A.
EquitableCheck check_equitable(const RatMatrix& a, const Cells& cells);

/// The characteristic matrix, cell sizes, and both quotients of an equitable
/// partition:
///   left      = Lambda^-1 S^T A S          (rational, row-stochastic-like)
///   symmetric = Lambda^-1/2 S^T A S Lambda^-1/2   (entries rational * sqrt)
/// The two are similar, so they share their spectrum.
struct QuotientPair {
    RatMatrix characteristic;     // n x m, one 1 per row
    std::vector<int> cell_sizes;  // Lambda diagonal
    RatMatrix left;
    WeightMatrix symmetric;
};

/// Builds the quotient pair. Throws std::invalid_argument (with the witness
/// coordinates) when the partition is not equitable for A.
QuotientPair quotients(const RatMatrix& a, const Cells& cells);

/// The canonical cell decomposition of a graph built by attaching s paths of
/// length a and one of length b at the root of a base graph: cell i (1..a)
/// collects the s vertices at distance i along the length-a paths, all other
/// vertices are singletons. Cell order: the a path cells by distance, then
/// the root, then the remaining vertices by id. Validates that the graph
/// really has this pendant structure and throws otherwise.
///
/// The input must come from attach_paths with the multiset {a x s, b}; the
/// designated b-path is the first attached part when b < a and the last when
/// b >= a (ties included), matching the sorted attachment order.
Cells pendant_path_cells(const RootedGraph& h, int a, int b, int s);

/// The weighted path on vertices {0..a+b} with unit weights except sqrt(s)
/// on the edge (a-1, a); the building block of the symmetrized quotient.
WeightedGraph quotient_path(int a, int b, int s);

/// alpha * D' + (1-alpha) * A for a simple rooted graph, where D' is the
/// degree diagonal with the root's entry raised to deg(root) + s - 1.
RatMatrix root_bumped_matrix(const RootedGraph& g, const Rat& alpha, int s);

/// The symmetrized quotient built directly as a weighted graph: the
/// root-bumped base graph coalesced with the loop-decorated quotient path at
/// (root, vertex a). Its adjacency matrix equals the symmetric quotient of
/// the full pendant graph up to the fixed vertex correspondence below, and
/// its spectral radius equals the alpha-spectral radius of the full graph.
RootedGraph build_quotient_graph(const RootedGraph& g, const Rat& alpha, int a, int b, int s);

/// Index map from the canonical cell order of pendant_path_cells to the
/// vertex ids of build_quotient_graph: entry k is the quotient-graph vertex
/// carrying cell k.
std::vector<int> quotient_vertex_map(int base_order, int root, int a, int b, int s);

}  // namespace starlex
