#include "ladderlab/search.hpp"

#include <algorithm>

namespace ladderlab {

std::optional<ApWitness> find_mono_ap(const Coloring& coloring, const SortedWindow& window,
                                      long long L) {
    if (coloring.N != window.N())
        throw DimensionMismatch("coloring and window cover different ranges");
    long long N = coloring.N;
    for (long long a = 1; a <= N; ++a) {
        int c = coloring.at(a);
        for (long long d : window.elements()) {
            if (a + (L - 1) * d > N) break;
            bool mono = true;
            for (long long i = 1; i < L; ++i)
                if (coloring.at(a + i * d) != c) { mono = false; break; }
            if (mono) return ApWitness{a, d, L, c};
        }
    }
    return std::nullopt;
}

WalkWitness longest_mono_walk(const Coloring& coloring, const SortedWindow& window) {
    if (coloring.N != window.N())
        throw DimensionMismatch("coloring and window cover different ranges");
    long long N = coloring.N;
    // longest monochromatic chain starting at x, filled in decreasing x
    std::vector<long long> from(static_cast<std::size_t>(N) + 1, 1);
    long long best = N >= 1 ? 1 : 0;
    for (long long x = N; x >= 1; --x) {
        for (long long s : window.elements()) {
            long long y = x + s;
            if (y > N) break;
            if (coloring.at(y) == coloring.at(x))
                from[static_cast<std::size_t>(x)] =
                    std::max(from[static_cast<std::size_t>(x)],
                             from[static_cast<std::size_t>(y)] + 1);
        }
        best = std::max(best, from[static_cast<std::size_t>(x)]);
    }
    WalkWitness w;
    if (N < 1) return w;
    long long start = 1;
    for (long long x = 1; x <= N; ++x)
        if (from[static_cast<std::size_t>(x)] == best) { start = x; break; }
    w.color = coloring.at(start);
    long long x = start;
    w.vertices.push_back(x);
    while (from[static_cast<std::size_t>(x)] > 1) {
        for (long long s : window.elements()) {
            long long y = x + s;
            if (y > N) break;
            if (coloring.at(y) == w.color &&
                from[static_cast<std::size_t>(y)] == from[static_cast<std::size_t>(x)] - 1) {
                x = y;
                w.vertices.push_back(x);
                break;
            }
        }
    }
    return w;
}

namespace {

struct CubeSearch {
    const SortedWindow& window;
    long long dim;
    unsigned long long budget;
    unsigned long long nodes = 0;
    bool hit_budget = false;
    std::vector<long long> gens;
    std::vector<long long> sums;

    bool extend() {
        if (static_cast<long long>(gens.size()) == dim) return true;
        const auto& elems = window.elements();
        auto it = gens.empty() ? elems.begin()
                               : std::lower_bound(elems.begin(), elems.end(), gens.back());
        for (; it != elems.end(); ++it) {
            long long g = *it;
            if (!sums.empty() && g + sums.back() > window.N()) break; // sums only grow
            if (++nodes > budget) { hit_budget = true; return false; }
            bool ok = true;
            std::size_t old = sums.size();
            for (std::size_t i = 0; i < old && ok; ++i)
                if (!window.contains(sums[i] + g)) ok = false;
            if (!ok) continue;
            gens.push_back(g);
            for (std::size_t i = 0; i < old; ++i) sums.push_back(sums[i] + g);
            sums.push_back(g);
            std::sort(sums.begin(), sums.end());
            if (extend()) return true;
            gens.pop_back();
            sums.clear();
            rebuild_sums();
            if (hit_budget) return false;
        }
        return false;
    }

    void rebuild_sums() {
        sums.clear();
        for (long long g : gens) {
            std::size_t old = sums.size();
            for (std::size_t i = 0; i < old; ++i) sums.push_back(sums[i] + g);
            sums.push_back(g);
        }
        std::sort(sums.begin(), sums.end());
    }
};

} // namespace

CubeSearchResult detect_cube(const SortedWindow& window, long long dim,
                             unsigned long long budget) {
    CubeSearchResult result;
    CubeSearch search{window, dim, budget};
    if (search.extend()) {
        result.witness = CubeWitness{search.gens};
        result.exhausted = false;
    } else {
        result.exhausted = !search.hit_budget;
    }
    result.nodes = search.nodes;
    return result;
}

std::optional<HomotheticWitness> find_homothetic(const SortedWindow& window, long long n) {
    for (long long x = 1; x * n <= window.N(); ++x) {
        bool ok = true;
        for (long long i = 1; i <= n; ++i)
            if (!window.contains(i * x)) { ok = false; break; }
        if (ok) return HomotheticWitness{x, n};
    }
    return std::nullopt;
}

std::optional<ApWitness> find_ap_in_subset(const SortedWindow& X, const SortedWindow& S,
                                           long long L) {
    if (X.N() != S.N())
        throw DimensionMismatch("subset and difference-set windows cover different ranges");
    long long N = X.N();
    for (long long a : X.elements()) {
        for (long long d : S.elements()) {
            if (a + (L - 1) * d > N) break;
            bool ok = true;
            for (long long i = 1; i < L; ++i)
                if (!X.contains(a + i * d)) { ok = false; break; }
            if (ok) return ApWitness{a, d, L, 0};
        }
    }
    return std::nullopt;
}

} // namespace ladderlab
