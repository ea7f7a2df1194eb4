#include "ladderlab/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace ladderlab {

std::size_t IntervalPartition::interval_of(long long x) const {
    // intervals are contiguous from 1, so binary search on starts
    std::size_t lo = 0, hi = intervals.size();
    while (lo + 1 < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (intervals[mid].start <= x) lo = mid;
        else hi = mid;
    }
    return lo + 1;
}

IntervalPartition interval_partition(const SortedWindow& window, long long k) {
    const auto& s = window.elements();
    long long m = static_cast<long long>(s.size());
    if (m < k + 1)
        throw WindowTooSmall("window holds " + std::to_string(m) +
                             " elements, need at least " + std::to_string(k + 1));

    // k-gaps g_i = s_{i+k} - s_i, i = 1..m-k (1-based)
    long long gap_count = m - k;
    std::vector<long long> gaps(static_cast<std::size_t>(gap_count));
    for (long long i = 0; i < gap_count; ++i) gaps[i] = s[i + k] - s[i];

    // suffix minima, the point from which the gaps are nondecreasing, and the
    // point from which they are strictly increasing
    std::vector<long long> suffix_min(gaps.size());
    long long mono_from = gap_count;   // gaps nondecreasing on [mono_from, end], 1-based
    long long strict_from = gap_count; // gaps strictly increasing on [strict_from, end]
    suffix_min.back() = gaps.back();
    for (long long i = gap_count - 2; i >= 0; --i) {
        suffix_min[i] = std::min(gaps[i], suffix_min[i + 1]);
        if (gaps[i] <= gaps[i + 1] && mono_from == i + 2) mono_from = i + 1;
        if (gaps[i] < gaps[i + 1] && strict_from == i + 2) strict_from = i + 1;
    }

    IntervalPartition part;
    part.k = k;
    long long modulus = k + 2;
    part.intervals.push_back({1, 1, static_cast<int>(1 % modulus)});
    long long pos = 2, prefix = 1;
    long long t = 2;
    while (pos <= window.N()) {
        // smallest index whose entire gap suffix exceeds the prefix sum
        long long idx = -1;
        long long lo = 0, hi = gap_count - 1;
        while (lo <= hi) {
            long long mid = (lo + hi) / 2;
            if (suffix_min[mid] > prefix) { idx = mid + 1; hi = mid - 1; }
            else lo = mid + 1;
        }
        if (idx < 0) {
            // The window cannot justify another complete interval. When it
            // still evidences unbounded k-gaps (a strictly increasing run
            // covering the tail half of the gap sequence), the remainder
            // becomes the flagged trailing partial interval; otherwise the
            // liminf hypothesis is uncertifiable and we refuse.
            if (strict_from > std::max<long long>(1, gap_count / 2))
                throw GapConditionUnverifiable(
                    "no index N has s_{n+" + std::to_string(k) + "} - s_n > " +
                    std::to_string(prefix) +
                    " for all representable n >= N, and the k-gap sequence shows no "
                    "strictly increasing tail");
            part.intervals.push_back(
                {pos, window.N() - pos + 1, static_cast<int>(t % modulus)});
            part.trailing_partial = true;
            break;
        }
        if (idx < mono_from)
            throw GapConditionUnverifiable(
                "k-gap sequence is not nondecreasing beyond index " + std::to_string(idx) +
                "; the liminf hypothesis cannot be certified from this window");
        long long len = s[idx - 1]; // |I_t| = s_N
        PartitionInterval iv{pos, len, static_cast<int>(t % modulus)};
        if (pos + len - 1 > window.N()) {
            iv.len = window.N() - pos + 1;
            part.trailing_partial = true;
        }
        part.intervals.push_back(iv);
        prefix += iv.len;
        pos += iv.len;
        ++t;
    }
    return part;
}

Coloring adversarial_coloring(const SortedWindow& window, long long k,
                              const IntervalPartition& partition) {
    if (partition.k != k)
        throw std::invalid_argument("partition built with a different gap parameter");
    long long N = window.N();
    long long r = k + 2;
    Coloring col;
    col.N = N;
    col.r = static_cast<int>(r);
    col.colors.assign(static_cast<std::size_t>(N), -1);

    const auto& elems = window.elements();
    for (long long x = 1; x <= N; ++x) {
        std::size_t t = partition.interval_of(x);
        std::vector<bool> banned(static_cast<std::size_t>(r), false);
        banned[static_cast<std::size_t>(partition.intervals[t - 1].forbidden)] = true;
        if (t >= 3) {
            const auto& far = partition.intervals[t - 3]; // I_{t-2}
            long long far_end = far.start + far.len - 1;
            // neighbors y = x - s with y <= end(I_{t-2}), i.e. s >= x - far_end
            auto it = std::lower_bound(elems.begin(), elems.end(), x - far_end);
            long long neighbor_count = 0;
            for (; it != elems.end() && *it < x; ++it) {
                long long y = x - *it;
                if (y < 1) break;
                ++neighbor_count;
                if (neighbor_count > k)
                    throw NeighborBoundViolated(
                        "position " + std::to_string(x) + " has more than " +
                        std::to_string(k) + " neighbors two or more intervals back");
                banned[static_cast<std::size_t>(col.at(y))] = true;
            }
        }
        int chosen = -1;
        for (int c = 0; c < r; ++c)
            if (!banned[static_cast<std::size_t>(c)]) { chosen = c; break; }
        if (chosen < 0)
            throw NeighborBoundViolated("no legal color at position " + std::to_string(x));
        col.colors[static_cast<std::size_t>(x - 1)] = chosen;
    }
    return col;
}

DifferenceSet grow_difference_set(const SortedWindow& window, long long target) {
    if (window.empty()) throw WindowTooSmall("cannot grow a difference set in an empty window");
    DifferenceSet H;
    H.N = window.N();
    H.elements.push_back(window.elements().front());
    while (static_cast<long long>(H.elements.size()) < target) {
        long long n = H.elements.back() + 1;
        long long found = -1;
        for (long long t = 1; t * n <= window.N(); ++t) {
            long long v = t * n;
            bool ok = true;
            for (long long h : H.elements)
                if (!window.contains(v - h)) { ok = false; break; }
            if (ok) { found = v; break; }
        }
        if (found < 0)
            throw WindowExhausted("difference-set growth stalled at size " +
                                      std::to_string(H.elements.size()),
                                  H.elements);
        H.elements.push_back(found);
    }
    return H;
}

SortedWindow sparse_ladder(const std::vector<long long>& floor_values, long long max_dim,
                           long long N) {
    for (std::size_t i = 0; i + 1 < floor_values.size(); ++i)
        if (floor_values[i] > floor_values[i + 1])
            throw std::invalid_argument("floor values must be nondecreasing");
    auto floor_at = [&](long long idx) -> long long { // 1-based element index
        if (floor_values.empty()) return 0;
        std::size_t i = static_cast<std::size_t>(idx - 1);
        if (i >= floor_values.size()) i = floor_values.size() - 1;
        return floor_values[i];
    };

    std::vector<long long> elems;
    long long prev_max = 0;
    bool truncated = false;
    for (long long d = 1; d <= max_dim && !truncated; ++d) {
        // generators b, 2b, ..., 2^{d-1} b; subset sums are exactly {b, 2b, ..., (2^d - 1) b}
        long long count = (1LL << d) - 1;
        long long base = prev_max + 1;
        for (long long j = 1; j <= count; ++j) {
            long long f = floor_at(static_cast<long long>(elems.size()) + j);
            base = std::max(base, f / j + 1);
        }
        if (base > N) {
            if (elems.empty()) throw WindowTooSmall("no element fits below the window bound");
            break;
        }
        for (long long j = 1; j <= count; ++j) {
            long long v = j * base;
            if (v > N) { truncated = true; break; }
            elems.push_back(v);
            prev_max = v;
        }
    }
    if (elems.empty()) throw WindowTooSmall("no element fits below the window bound");
    return SortedWindow(N, std::move(elems));
}

long long max_walk_interval_span(const Coloring& coloring, const SortedWindow& window,
                                 const IntervalPartition& partition) {
    long long N = window.N();
    std::size_t complete = partition.intervals.size() - (partition.trailing_partial ? 1 : 0);
    std::vector<std::size_t> min_interval(static_cast<std::size_t>(N) + 1, 0);
    long long best = 0;
    for (long long x = 1; x <= N; ++x) {
        std::size_t t = partition.interval_of(x);
        if (t > complete) break; // partial interval at the window edge is excluded
        std::size_t lo = t;
        for (long long s : window.elements()) {
            if (s >= x) break;
            long long y = x - s;
            if (coloring.at(y) == coloring.at(x))
                lo = std::min(lo, min_interval[static_cast<std::size_t>(y)]);
        }
        min_interval[static_cast<std::size_t>(x)] = lo;
        best = std::max(best, static_cast<long long>(t - lo + 1));
    }
    return best;
}

} // namespace ladderlab
