#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "ladderlab/core.hpp"
#include "ladderlab/setlang.hpp"

namespace ladderlab {

// Loop-free directed graph on vertices 0..V-1, no duplicate edges.
class Digraph {
public:
    Digraph() = default;
    Digraph(long long vertex_count, std::vector<std::pair<long long, long long>> edges);

    long long vertex_count() const { return v_; }
    const std::vector<std::pair<long long, long long>>& edges() const { return edges_; }

private:
    long long v_ = 0;
    std::vector<std::pair<long long, long long>> edges_;
};

// Forward orientation of the distance graph of the window's set:
// vertex i represents integer i+1, edge u->v for v-u a set member.
Digraph distance_graph(const SortedWindow& window);

// Split edges by the given vertex ordering; both halves are acyclic.
std::pair<Digraph, Digraph> partition_acyclic(const Digraph& g,
                                              const std::vector<long long>& ordering);

// Least-unused-color greedy over index order; edges treated undirected.
Coloring greedy_proper_coloring(const Digraph& g);

// Pair encoding c1*r2 + c2; proper for the union graph when c1, c2 are
// proper for the two parts.
Coloring product_proper(const Coloring& c1, const Coloring& c2);

bool is_proper(const Digraph& g, const Coloring& c);

// Maximum-vertex-count directed path; deterministic least-sequence tie-break.
std::vector<long long> longest_path_dag(const Digraph& g);

struct GrowthRow {
    long long N;
    int colors;
};

std::vector<GrowthRow> chromatic_growth(const SetExprPtr& expr,
                                        const std::vector<long long>& Ns,
                                        long long cap = kDefaultWindowCap);

// Edge-list text: first line "V E", then one "u v" line per edge, 0-based.
Digraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Digraph& g);

} // namespace ladderlab
