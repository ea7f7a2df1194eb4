#include "ladderlab/digraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

namespace ladderlab {

Digraph::Digraph(long long vertex_count, std::vector<std::pair<long long, long long>> edges)
    : v_(vertex_count), edges_(std::move(edges)) {
    std::set<std::pair<long long, long long>> seen;
    for (const auto& [u, v] : edges_) {
        if (u < 0 || u >= v_ || v < 0 || v >= v_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw LoopDetected("loop at vertex " + std::to_string(u));
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + "->" +
                                        std::to_string(v));
    }
}

Digraph distance_graph(const SortedWindow& window) {
    long long n = window.N();
    std::vector<std::pair<long long, long long>> edges;
    for (long long u = 1; u <= n; ++u)
        for (long long s : window.elements()) {
            long long v = u + s;
            if (v > n) break;
            edges.emplace_back(u - 1, v - 1);
        }
    return Digraph(n, std::move(edges));
}

std::pair<Digraph, Digraph> partition_acyclic(const Digraph& g,
                                              const std::vector<long long>& ordering) {
    if (static_cast<long long>(ordering.size()) != g.vertex_count())
        throw std::invalid_argument("ordering size disagrees with vertex count");
    std::vector<long long> rank(ordering.size(), -1);
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        long long v = ordering[i];
        if (v < 0 || v >= g.vertex_count() || rank[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        rank[static_cast<std::size_t>(v)] = static_cast<long long>(i);
    }
    std::vector<std::pair<long long, long long>> e1, e2;
    for (const auto& [u, v] : g.edges()) {
        if (u == v) throw LoopDetected("loop at vertex " + std::to_string(u));
        if (rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(v)])
            e1.emplace_back(u, v);
        else
            e2.emplace_back(u, v);
    }
    return {Digraph(g.vertex_count(), std::move(e1)), Digraph(g.vertex_count(), std::move(e2))};
}

namespace {

std::vector<std::vector<long long>> undirected_adjacency(const Digraph& g) {
    std::vector<std::vector<long long>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

} // namespace

Coloring greedy_proper_coloring(const Digraph& g) {
    auto adj = undirected_adjacency(g);
    long long n = g.vertex_count();
    Coloring col;
    col.N = n;
    col.colors.assign(static_cast<std::size_t>(n), -1);
    int used = 1;
    for (long long v = 0; v < n; ++v) {
        std::vector<bool> taken(static_cast<std::size_t>(used) + 1, false);
        for (long long u : adj[static_cast<std::size_t>(v)])
            if (u < v) {
                int c = col.colors[static_cast<std::size_t>(u)];
                if (c < static_cast<int>(taken.size())) taken[static_cast<std::size_t>(c)] = true;
            }
        int c = 0;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        col.colors[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c + 1);
    }
    col.r = used;
    return col;
}

Coloring product_proper(const Coloring& c1, const Coloring& c2) {
    return product_coloring(c1, c2);
}

bool is_proper(const Digraph& g, const Coloring& c) {
    for (const auto& [u, v] : g.edges())
        if (c.colors[static_cast<std::size_t>(u)] == c.colors[static_cast<std::size_t>(v)])
            return false;
    return true;
}

std::vector<long long> longest_path_dag(const Digraph& g) {
    long long n = g.vertex_count();
    std::vector<std::vector<long long>> succ(static_cast<std::size_t>(n));
    std::vector<long long> indeg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        succ[static_cast<std::size_t>(u)].push_back(v);
        ++indeg[static_cast<std::size_t>(v)];
    }
    for (auto& s : succ) std::sort(s.begin(), s.end());

    // Kahn's algorithm; any topological order works for the DP below.
    std::vector<long long> order;
    std::vector<long long> queue;
    for (long long v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    while (!queue.empty()) {
        long long v = queue.back();
        queue.pop_back();
        order.push_back(v);
        for (long long w : succ[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
    if (static_cast<long long>(order.size()) != n)
        throw CycleDetected("graph has a directed cycle");

    // longest path starting at v, in reverse topological order
    std::vector<long long> len(static_cast<std::size_t>(n), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (long long w : succ[static_cast<std::size_t>(*it)])
            len[static_cast<std::size_t>(*it)] =
                std::max(len[static_cast<std::size_t>(*it)],
                         len[static_cast<std::size_t>(w)] + 1);
    }
    if (n == 0) return {};
    long long best = *std::max_element(len.begin(), len.end());
    long long start = static_cast<long long>(
        std::find(len.begin(), len.end(), best) - len.begin());
    std::vector<long long> path{start};
    long long cur = start;
    while (len[static_cast<std::size_t>(cur)] > 1) {
        for (long long w : succ[static_cast<std::size_t>(cur)])
            if (len[static_cast<std::size_t>(w)] == len[static_cast<std::size_t>(cur)] - 1) {
                cur = w; // least successor: succ is sorted
                path.push_back(w);
                break;
            }
    }
    return path;
}

std::vector<GrowthRow> chromatic_growth(const SetExprPtr& expr,
                                        const std::vector<long long>& Ns, long long cap) {
    if (Ns.empty()) throw std::invalid_argument("no window bounds given");
    for (std::size_t i = 0; i + 1 < Ns.size(); ++i)
        if (Ns[i] >= Ns[i + 1])
            throw std::invalid_argument("window bounds must be increasing");
    std::vector<GrowthRow> rows;
    for (long long n : Ns) {
        Coloring c = greedy_proper_coloring(distance_graph(materialize(expr, n, cap)));
        rows.push_back({n, c.r});
    }
    return rows;
}

Digraph read_edge_list(std::istream& in) {
    long long v = 0, e = 0;
    if (!(in >> v >> e)) throw std::invalid_argument("edge list needs a 'V E' header");
    std::vector<std::pair<long long, long long>> edges;
    for (long long i = 0; i < e; ++i) {
        long long a, b;
        if (!(in >> a >> b))
            throw std::invalid_argument("edge list truncated at edge " + std::to_string(i));
        edges.emplace_back(a, b);
    }
    return Digraph(v, std::move(edges));
}

void write_edge_list(std::ostream& out, const Digraph& g) {
    out << g.vertex_count() << ' ' << g.edges().size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace ladderlab
