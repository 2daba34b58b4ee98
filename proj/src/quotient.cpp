#include "starlex/quotient.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace starlex {

namespace {

/// Validates that the cells partition {0..n-1}; returns the owning cell per
/// index.
std::vector<int> cell_owner(int n, const Cells& cells) {
    std::vector<int> owner(n, -1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].empty()) throw std::invalid_argument("quotient: empty cell");
        for (int v : cells[c]) {
            if (v < 0 || v >= n) throw std::invalid_argument("quotient: cell index out of range");
            if (owner[v] != -1) throw std::invalid_argument("quotient: index " + std::to_string(v) + " appears in two cells");
            owner[v] = static_cast<int>(c);
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) throw std::invalid_argument("quotient: index " + std::to_string(v) + " lies in no cell");
    return owner;
}

}  // namespace

std::string EquitableCheck::describe() const {
    if (equitable) return "equitable";
    std::ostringstream out;
    out << "block (" << row_cell << ", " << col_cell << ") has unequal row sums; first mismatch at row index "
        << bad_row;
    return out.str();
}

EquitableCheck check_equitable(const RatMatrix& a, const Cells& cells) {
    if (a.rows() != a.cols()) throw std::invalid_argument("check_equitable: matrix not square");
    cell_owner(a.rows(), cells);
    EquitableCheck result;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = 0; j < cells.size(); ++j) {
            Rat first = 0;
            for (std::size_t r = 0; r < cells[i].size(); ++r) {
                Rat sum = 0;
                for (int v : cells[j]) sum += a(cells[i][r], v);
                if (r == 0) {
                    first = sum;
                } else if (sum != first) {
                    result.equitable = false;
                    result.row_cell = static_cast<int>(i);
                    result.col_cell = static_cast<int>(j);
                    result.bad_row = cells[i][r];
                    return result;
                }
            }
        }
    }
    return result;
}

QuotientPair quotients(const RatMatrix& a, const Cells& cells) {
    const EquitableCheck check = check_equitable(a, cells);
    if (!check.equitable) throw std::invalid_argument("quotients: partition is not equitable: " + check.describe());

    const int n = a.rows();
    const int m = static_cast<int>(cells.size());
    QuotientPair out{RatMatrix(n, m), {}, RatMatrix(m, m), WeightMatrix(m, m)};
    out.cell_sizes.reserve(cells.size());
    for (int c = 0; c < m; ++c) {
        out.cell_sizes.push_back(static_cast<int>(cells[c].size()));
        for (int v : cells[c]) out.characteristic(v, c) = 1;
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            Rat block = 0;  // (S^T A S)_{ij}
            for (int u : cells[i])
                for (int v : cells[j]) block += a(u, v);
            const long ni = out.cell_sizes[i];
            const long nj = out.cell_sizes[j];
            out.left(i, j) = block / ni;
            // block / sqrt(ni nj) == (block / (ni nj)) * sqrt(ni nj); the
            // SqrtRat constructor folds the square part back out.
            out.symmetric(i, j) = SqrtRat(block / (ni * nj), ni * nj);
        }
    }
    return out;
}

Cells pendant_path_cells(const RootedGraph& h, int a, int b, int s) {
    if (a < 1 || s < 1 || b < 0) throw std::invalid_argument("pendant_path_cells: need a >= 1, s >= 1, b >= 0");
    const int order = h.graph.order();
    const int base_order = order - (s * a + b);
    if (base_order < 1) throw std::invalid_argument("pendant_path_cells: graph too small for the requested paths");
    if (h.root >= base_order)
        throw std::invalid_argument("pendant_path_cells: root does not lie in the base block");

    // Attachment spans in sorted-partition order; remember which one is the
    // b-path (first when b < a, last when b >= a).
    std::vector<int> parts;
    int b_span = -1;
    if (b == 0) {
        parts.assign(s, a);
    } else if (b < a) {
        parts.push_back(b);
        parts.insert(parts.end(), s, a);
        b_span = 0;
    } else {
        parts.assign(s, a);
        parts.push_back(b);
        b_span = s;
    }

    std::vector<int> span_start(parts.size());
    int next = base_order;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        span_start[k] = next;
        next += parts[k];
    }

    auto fail = [](const std::string& what) { throw std::invalid_argument("pendant_path_cells: " + what); };

    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (int t = 0; t < parts[k]; ++t) {
            const int v = span_start[k] + t;
            if (h.graph.has_loop(v)) fail("path vertex " + std::to_string(v) + " carries a loop");
            const int prev = (t == 0) ? h.root : v - 1;
            if (h.graph.weight(prev, v) != SqrtRat(1))
                fail("missing unit edge (" + std::to_string(prev) + ", " + std::to_string(v) + ")");
            const int expected = (t == parts[k] - 1) ? 1 : 2;
            if (h.graph.degree(v) != expected)
                fail("path vertex " + std::to_string(v) + " has unexpected degree");
        }
    }

    Cells cells;
    std::vector<bool> grouped(order, false);
    for (int i = 1; i <= a; ++i) {
        std::vector<int> cell;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (static_cast<int>(k) == b_span) continue;
            const int v = span_start[k] + i - 1;
            cell.push_back(v);
            grouped[v] = true;
        }
        cells.push_back(std::move(cell));
    }
    grouped[h.root] = true;
    cells.push_back({h.root});
    for (int v = 0; v < order; ++v)
        if (!grouped[v]) cells.push_back({v});
    return cells;
}

WeightedGraph quotient_path(int a, int b, int s) {
    if (a < 1 || b < 0 || s < 1) throw std::invalid_argument("quotient_path: need a >= 1, b >= 0, s >= 1");
    WeightedGraph p(a + b + 1);
    for (int j = 0; j < a + b; ++j) p.set_weight(j, j + 1, SqrtRat(1));
    p.set_weight(a - 1, a, SqrtRat::sqrt_of(s));
    return p;
}

RatMatrix root_bumped_matrix(const RootedGraph& g, const Rat& alpha, int s) {
    if (!g.graph.is_simple()) throw std::invalid_argument("root_bumped_matrix: base graph must be simple");
    if (alpha < 0 || alpha >= 1) throw std::invalid_argument("root_bumped_matrix: alpha must lie in [0, 1)");
    if (s < 1) throw std::invalid_argument("root_bumped_matrix: need s >= 1");
    const int n = g.graph.order();
    RatMatrix q(n, n);
    for (int u = 0; u < n; ++u) q(u, u) = alpha * Rat(g.graph.degree(u) + (u == g.root ? s - 1 : 0));
    for (const auto& [u, v, w] : g.graph.edges()) {
        (void)w;
        q(u, v) = 1 - alpha;
        q(v, u) = 1 - alpha;
    }
    return q;
}

RootedGraph build_quotient_graph(const RootedGraph& g, const Rat& alpha, int a, int b, int s) {
    if (a < 1 || b < 0 || s < 1)
        throw std::invalid_argument("build_quotient_graph: need a >= 1, b >= 0, s >= 1");
    const RatMatrix bumped = root_bumped_matrix(g, alpha, s);

    const int n = g.graph.order();
    WeightedGraph base(n);
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            if (bumped(u, v) != 0) base.set_weight(u, v, SqrtRat(bumped(u, v)));

    const WeightedGraph spine = quotient_path(a, b, s);
    WeightedGraph path_side(spine.order());
    for (const auto& [u, v, w] : spine.edges()) path_side.set_weight(u, v, (1 - alpha) * w);
    for (int u = 0; u < spine.order(); ++u) {
        const Rat loop = alpha * Rat(spine.degree(u));
        if (loop != 0) path_side.set_weight(u, u, SqrtRat(loop));
    }

    return coalesce(RootedGraph(base, g.root), RootedGraph(path_side, a));
}

std::vector<int> quotient_vertex_map(int base_order, int root, int a, int b, int s) {
    if (base_order < 1 || root < 0 || root >= base_order || a < 1 || b < 0 || s < 1)
        throw std::invalid_argument("quotient_vertex_map: bad parameters");
    std::vector<int> map;
    map.reserve(base_order + a + b);
    // Cell i sits at distance i along the shared paths; under the coalesce
    // numbering the quotient-path vertex a - i lands at id base_order + a - i.
    for (int i = 1; i <= a; ++i) map.push_back(base_order + a - i);
    map.push_back(root);
    for (int v = 0; v < base_order; ++v)
        if (v != root) map.push_back(v);
    for (int t = 1; t <= b; ++t) map.push_back(base_order + a + t - 1);
    return map;
}

}  // namespace starlex
