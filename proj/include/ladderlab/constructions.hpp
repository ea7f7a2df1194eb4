#pragma once

#include <vector>

#include "ladderlab/core.hpp"
#include "ladderlab/setlang.hpp"

namespace ladderlab {

// Partition of [1,N] into consecutive intervals built from the k-gap rule,
// with one forbidden color per interval.
struct IntervalPartition {
    std::vector<PartitionInterval> intervals; // forbidden = t mod (k+2), t 1-based
    long long k = 1;
    bool trailing_partial = false; // last interval cut short by the window edge

    // Interval index (1-based) containing position x.
    std::size_t interval_of(long long x) const;
};

// H with H - H contained in the window's set.
struct DifferenceSet {
    std::vector<long long> elements;
    long long N = 0;
};

IntervalPartition interval_partition(const SortedWindow& window, long long k);

Coloring adversarial_coloring(const SortedWindow& window, long long k,
                              const IntervalPartition& partition);

DifferenceSet grow_difference_set(const SortedWindow& window, long long target);

SortedWindow sparse_ladder(const std::vector<long long>& floor_values, long long max_dim,
                           long long N);

// Longest monochromatic walk confinement: the maximal number of complete
// intervals spanned by any monochromatic walk over the window set, ignoring
// walks that touch the trailing partial interval.
long long max_walk_interval_span(const Coloring& coloring, const SortedWindow& window,
                                 const IntervalPartition& partition);

} // namespace ladderlab
