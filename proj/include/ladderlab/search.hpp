#pragma once

#include <optional>

#include "ladderlab/core.hpp"
#include "ladderlab/setlang.hpp"

namespace ladderlab {

// Lexicographically least monochromatic L-term AP with common difference in
// the window set, or nullopt.
std::optional<ApWitness> find_mono_ap(const Coloring& coloring, const SortedWindow& window,
                                      long long L);

// Maximum-element-count monochromatic walk (steps in the window set);
// ties broken by least start, then least successor.
WalkWitness longest_mono_walk(const Coloring& coloring, const SortedWindow& window);

struct CubeSearchResult {
    std::optional<CubeWitness> witness;
    bool exhausted = false;     // search space fully explored
    unsigned long long nodes = 0;
};

// Least multiset of `dim` window elements whose nonempty subset sums all lie
// in the window, bounded by a DFS node budget.
CubeSearchResult detect_cube(const SortedWindow& window, long long dim,
                             unsigned long long budget);

// Least x <= N/n with x, 2x, ..., nx all in the window.
std::optional<HomotheticWitness> find_homothetic(const SortedWindow& window, long long n);

// Least (a,d) with d in S and all L terms a, a+d, ..., a+(L-1)d in X.
std::optional<ApWitness> find_ap_in_subset(const SortedWindow& X, const SortedWindow& S,
                                           long long L);

} // namespace ladderlab
