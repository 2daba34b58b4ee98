#include "starlex/wgraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace starlex {

WeightedGraph::WeightedGraph(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("graph order must be >= 1");
}

void WeightedGraph::check_vertex(int u) const {
    if (u < 0 || u >= order_)
        throw std::invalid_argument("vertex id " + std::to_string(u) + " out of range [0," +
                                    std::to_string(order_ - 1) + "]");
}

void WeightedGraph::set_weight(int u, int v, const SqrtRat& w) {
    check_vertex(u);
    check_vertex(v);
    auto key = std::minmax(u, v);
    if (w.is_zero())
        weights_.erase(key);
    else
        weights_[key] = w;
}

SqrtRat WeightedGraph::weight(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto it = weights_.find(std::minmax(u, v));
    return it == weights_.end() ? SqrtRat() : it->second;
}

bool WeightedGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return weights_.count(std::minmax(u, v)) > 0;
}

int WeightedGraph::degree(int u) const {
    check_vertex(u);
    int d = 0;
    for (const auto& [key, w] : weights_) {
        if (key.first == key.second) continue;
        if (key.first == u || key.second == u) ++d;
    }
    return d;
}

std::vector<std::tuple<int, int, SqrtRat>> WeightedGraph::edges() const {
    std::vector<std::tuple<int, int, SqrtRat>> out;
    out.reserve(weights_.size());
    for (const auto& [key, w] : weights_) out.emplace_back(key.first, key.second, w);
    return out;
}

bool WeightedGraph::is_simple() const {
    for (const auto& [key, w] : weights_) {
        if (key.first == key.second) return false;
        if (w != SqrtRat(1)) return false;
    }
    return true;
}

bool WeightedGraph::is_connected() const {
    if (order_ == 0) return false;
    std::vector<char> seen(order_, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [key, w] : weights_) {
            int other = -1;
            if (key.first == u)
                other = key.second;
            else if (key.second == u)
                other = key.first;
            if (other >= 0 && !seen[other]) {
                seen[other] = 1;
                ++count;
                stack.push_back(other);
            }
        }
    }
    return count == order_;
}

RootedGraph::RootedGraph(WeightedGraph g, int r) : graph(std::move(g)), root(r) {
    graph.check_vertex(root);
}

WeightedGraph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    WeightedGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.set_weight(i, i + 1, SqrtRat(1));
    return g;
}

WeightedGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    WeightedGraph g(n);
    for (int i = 0; i < n; ++i) g.set_weight(i, (i + 1) % n, SqrtRat(1));
    return g;
}

WeightedGraph trivial_graph() { return WeightedGraph(1); }

RootedGraph coalesce(const RootedGraph& g1, const RootedGraph& g2) {
    const WeightedGraph& a = g1.graph;
    const WeightedGraph& b = g2.graph;
    const int m = a.order();
    WeightedGraph out(m + b.order() - 1);

    for (const auto& [u, v, w] : a.edges()) out.set_weight(u, v, w);

    // second graph's ids shift past the first, with its root folded onto g1's
    auto remap = [&](int v) {
        if (v == g2.root) return g1.root;
        return m + (v < g2.root ? v : v - 1);
    };
    for (const auto& [u, v, w] : b.edges()) {
        if (u == g2.root && v == g2.root) continue;  // loop weights at the roots add below
        out.set_weight(remap(u), remap(v), w);
    }
    SqrtRat merged_loop = a.weight(g1.root, g1.root) + b.weight(g2.root, g2.root);
    out.set_weight(g1.root, g1.root, merged_loop);
    return RootedGraph(std::move(out), g1.root);
}

RootedGraph attach_paths(const RootedGraph& g, const Partition& parts) {
    const int m = g.graph.order();
    WeightedGraph out(m + parts.sum());
    for (const auto& [u, v, w] : g.graph.edges()) out.set_weight(u, v, w);
    int next = m;
    for (int part : parts.parts()) {
        int prev = g.root;
        for (int step = 0; step < part; ++step) {
            out.set_weight(prev, next, SqrtRat(1));
            prev = next;
            ++next;
        }
    }
    return RootedGraph(std::move(out), g.root);
}

RootedGraph starlike_tree(const Partition& parts) {
    return attach_paths(RootedGraph(trivial_graph(), 0), parts);
}

RatMatrix alpha_matrix(const WeightedGraph& g, const Rat& alpha) {
    if (!g.is_simple())
        throw std::invalid_argument("alpha matrix is defined for simple unit-weight graphs only");
    if (alpha < 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in [0,1)");
    const int n = g.order();
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = alpha * g.degree(i);
    Rat off = 1 - alpha;
    for (const auto& [u, v, w] : g.edges()) {
        m(u, v) = off;
        m(v, u) = off;
    }
    return m;
}

WeightMatrix adjacency_matrix(const WeightedGraph& g) {
    WeightMatrix m(g.order(), g.order());
    for (const auto& [u, v, w] : g.edges()) {
        m(u, v) = w;
        if (u != v) m(v, u) = w;
    }
    return m;
}

RatMatrix degree_matrix(const WeightedGraph& g) {
    RatMatrix m(g.order(), g.order());
    for (int i = 0; i < g.order(); ++i) m(i, i) = g.degree(i);
    return m;
}

WeightedGraph delete_vertex(const WeightedGraph& g, int u) {
    g.check_vertex(u);
    if (g.order() == 1) throw std::invalid_argument("cannot delete the last vertex");
    WeightedGraph out(g.order() - 1);
    auto remap = [&](int v) { return v < u ? v : v - 1; };
    for (const auto& [a, b, w] : g.edges()) {
        if (a == u || b == u) continue;
        out.set_weight(remap(a), remap(b), w);
    }
    return out;
}

WeightedGraph delete_edge(const WeightedGraph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
    WeightedGraph out = g;
    out.set_weight(u, v, SqrtRat());
    return out;
}

bool is_unit_path(const WeightedGraph& g) {
    if (!g.is_simple() || !g.is_connected()) return false;
    if (g.order() == 1) return true;
    int endpoints = 0;
    for (int i = 0; i < g.order(); ++i) {
        int d = g.degree(i);
        if (d > 2) return false;
        if (d == 1) ++endpoints;
    }
    return endpoints == 2;
}

WeightedGraph read_edge_list(std::istream& in) {
    struct Entry {
        int u, v;
        SqrtRat w;
    };
    std::vector<Entry> entries;
    int max_id = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string su, sv, sw, extra;
        if (!(ss >> su)) continue;  // blank
        if (!(ss >> sv))
            throw std::runtime_error("line " + std::to_string(lineno) + ": expected 'u v [w]'");
        if (ss >> extra) {
            sw = extra;
            if (ss >> extra)
                throw std::runtime_error("line " + std::to_string(lineno) + ": trailing tokens");
        }
        int u, v;
        try {
            std::size_t pos_u = 0, pos_v = 0;
            u = std::stoi(su, &pos_u);
            v = std::stoi(sv, &pos_v);
            if (pos_u != su.size() || pos_v != sv.size()) throw std::invalid_argument("junk");
        } catch (const std::exception&) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": bad vertex id");
        }
        if (u < 0 || v < 0)
            throw std::runtime_error("line " + std::to_string(lineno) + ": vertex ids must be >= 0");
        Rat w = 1;
        if (!sw.empty()) {
            try {
                w = parse_rational(sw);
            } catch (const std::exception& e) {
                throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
            }
            if (w <= 0)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": edge weights must be positive");
        }
        entries.push_back({u, v, SqrtRat(w)});
        max_id = std::max({max_id, u, v});
    }
    if (max_id < 0) throw std::runtime_error("edge list is empty");
    WeightedGraph g(max_id + 1);
    for (const auto& e : entries) {
        if (g.has_edge(e.u, e.v))
            throw std::runtime_error("duplicate edge " + std::to_string(e.u) + " " +
                                     std::to_string(e.v));
        g.set_weight(e.u, e.v, e.w);
    }
    return g;
}

WeightedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

}  // namespace starlex
