// Acceptance suite: one pass/fail line per criterion, exit 0 only when all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ladderlab/constructions.hpp"
#include "ladderlab/core.hpp"
#include "ladderlab/digraph.hpp"
#include "ladderlab/ramsey.hpp"
#include "ladderlab/search.hpp"
#include "ladderlab/setlang.hpp"

using namespace ladderlab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
    int failures = 0;

    void report(int idx, const char* what, bool ok, const std::string& extra = "") {
        std::printf("criterion %d: %s  %s%s%s\n", idx, ok ? "PASS" : "FAIL", what,
                    extra.empty() ? "" : "  ", extra.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

Coloring random_coloring(std::mt19937& rng, long long N, int r) {
    Coloring c{N, r, {}};
    std::uniform_int_distribution<int> col(0, r - 1);
    for (long long i = 0; i < N; ++i) c.colors.push_back(col(rng));
    return c;
}

// iterate all r^N colorings; returns true if every one satisfies pred
template <typename Pred>
bool all_colorings(long long N, int r, Pred&& pred) {
    std::vector<int> colors(static_cast<std::size_t>(N), 0);
    for (;;) {
        if (!pred(Coloring{N, r, colors})) return false;
        std::size_t i = 0;
        while (i < colors.size() && ++colors[i] == r) colors[i++] = 0;
        if (i == colors.size()) return true;
    }
}

// delete `deletions` distinct random elements from [1, N]
SortedWindow punctured_window(std::mt19937& rng, long long N, long long deletions) {
    std::set<long long> dropped;
    std::uniform_int_distribution<long long> pos(1, N);
    while (static_cast<long long>(dropped.size()) < deletions) dropped.insert(pos(rng));
    std::vector<long long> elems;
    for (long long x = 1; x <= N; ++x)
        if (!dropped.count(x)) elems.push_back(x);
    return SortedWindow(N, std::move(elems));
}

// backtracking k-colorability oracle for the undirected support of g
bool colorable(const Digraph& g, int k) {
    long long v = g.vertex_count();
    std::vector<std::vector<long long>> adj(static_cast<std::size_t>(v));
    for (auto [a, b] : g.edges()) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> col(static_cast<std::size_t>(v), -1);
    std::function<bool(long long, int)> go = [&](long long x, int used) {
        if (x == v) return true;
        int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (long long y : adj[static_cast<std::size_t>(x)])
                if (y < x && col[static_cast<std::size_t>(y)] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            col[static_cast<std::size_t>(x)] = c;
            if (go(x + 1, std::max(used, c + 1))) return true;
        }
        col[static_cast<std::size_t>(x)] = -1;
        return false;
    };
    return go(0, 0);
}

int chromatic(const Digraph& g) {
    for (int k = 1;; ++k)
        if (colorable(g, k)) return k;
}

// ---------------------------------------------------------------------------

void criterion1(Tally& t) {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;

    ThresholdResult res = vdw_threshold(parse("all"), 3, 2, 20);
    ok &= res.outcome == ThresholdResult::Outcome::Found && res.N == 9;

    SortedWindow w8 = materialize(parse("all"), 8);
    ok &= res.coloring.N == 8 && !find_mono_ap(res.coloring, w8, 3).has_value();

    // independent oracle: enumerate all 2^8 colorings of [1,8] (an avoider
    // must exist) and all 2^9 colorings of [1,9] (none may avoid)
    bool avoider8 = !all_colorings(8, 2, [&](const Coloring& c) {
        return find_mono_ap(c, w8, 3).has_value();
    });
    SortedWindow w9 = materialize(parse("all"), 9);
    bool exhausted9 = all_colorings(9, 2, [&](const Coloring& c) {
        return find_mono_ap(c, w9, 3).has_value();
    });
    ok &= avoider8 && exhausted9;

    // the verifier must confirm the emitted certificate end to end
    Certificate cert = threshold_certificate(res);
    ok &= verify_certificate(cert).pass;

    double dt = seconds_since(t0);
    ok &= dt < 5.0;
    std::ostringstream extra;
    extra << "(N=" << res.N << ", " << dt << "s)";
    t.report(1, "AP threshold over all differences is exactly 9", ok, extra.str());
}

void criterion2(Tally& t) {
    auto t0 = Clock::now();
    const long long N = 10000;
    Coloring parity = modular_coloring(2, N);
    std::mt19937 rng(20260826);
    std::uniform_int_distribution<int> pick_r(1, 4);
    bool ok = true;

    for (int trial = 0; trial < 200 && ok; ++trial) {
        Coloring chi = random_coloring(rng, N, pick_r(rng));
        Coloring prod = product_coloring(chi, parity);
        // a monochromatic pair {x, y} with odd y-x needs opposite parities in
        // one product class; checking every class for mixed parity is an
        // exact, exhaustive restatement of the 2-term AP condition
        std::vector<int> parity_of_class(static_cast<std::size_t>(prod.r), -1);
        for (long long x = 1; x <= N; ++x) {
            int cls = prod.at(x);
            int par = static_cast<int>(x & 1);
            if (parity_of_class[static_cast<std::size_t>(cls)] == -1)
                parity_of_class[static_cast<std::size_t>(cls)] = par;
            else if (parity_of_class[static_cast<std::size_t>(cls)] != par)
                ok = false;
        }
    }

    // spot cross-check with the generic AP search on a smaller window
    SortedWindow odds_small = materialize(parse("odds"), 2000);
    Coloring parity_small = modular_coloring(2, 2000);
    for (int trial = 0; trial < 5 && ok; ++trial) {
        Coloring chi = random_coloring(rng, 2000, pick_r(rng));
        Coloring prod = product_coloring(chi, parity_small);
        if (find_mono_ap(prod, odds_small, 2).has_value()) ok = false;
    }

    std::ostringstream extra;
    extra << "(" << seconds_since(t0) << "s)";
    t.report(2, "parity product blocks all odd-difference mono pairs, 200/200", ok,
             extra.str());
}

void criterion3(Tally& t) {
    auto t0 = Clock::now();
    SortedWindow cubes = materialize(parse("cubes"), 1000000);
    CubeSearchResult res = detect_cube(cubes, 2, 1'000'000'000ULL);
    double dt = seconds_since(t0);
    bool ok = !res.witness.has_value() && res.exhausted && dt < 30.0;
    std::ostringstream extra;
    extra << "(" << cubes.size() << " cubes scanned, " << dt << "s)";
    t.report(3, "no dimension-2 cube among the integer cubes up to 1e6", ok, extra.str());
}

void criterion4(Tally& t) {
    auto t0 = Clock::now();
    std::mt19937 rng(4444);
    bool ok = true;
    for (long long n = 2; n <= 8 && ok; ++n) {
        long long N = 20 * n * n;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            std::uniform_int_distribution<long long> del(0, N / (n * n) - 1);
            SortedWindow w = punctured_window(rng, N, del(rng));
            auto h = find_homothetic(w, n);
            if (!h || h->x > N / n) {
                ok = false;
                break;
            }
            for (long long j = 1; j <= n; ++j)
                if (!w.contains(j * h->x)) ok = false;
        }
    }
    std::ostringstream extra;
    extra << "(" << seconds_since(t0) << "s)";
    t.report(4, "sparse deletions always leave a homothetic copy, 700/700", ok, extra.str());
}

void criterion5(Tally& t) {
    auto t0 = Clock::now();
    const long long N = 10000;
    SortedWindow w = materialize(parse("squares"), N);
    IntervalPartition p = interval_partition(w, 1);
    Coloring c = adversarial_coloring(w, 1, p);
    bool ok = c.r == 3;

    // (a) forbidden colors
    for (long long x = 1; x <= N && ok; ++x)
        if (c.at(x) == p.intervals[p.interval_of(x) - 1].forbidden) ok = false;

    // (b) no monochromatic distance-graph edge spanning >= 2 intervals
    for (long long x = 1; x <= N && ok; ++x)
        for (long long s : w.elements()) {
            long long y = x + s;
            if (y > N) break;
            if (c.at(x) == c.at(y) &&
                p.interval_of(y) >= p.interval_of(x) + 2) {
                ok = false;
                break;
            }
        }

    // (c) every monochromatic walk confined to <= 2 complete intervals
    if (max_walk_interval_span(c, w, p) > 2) ok = false;

    double dt = seconds_since(t0);
    ok &= dt < 10.0;
    std::ostringstream extra;
    extra << "(" << p.intervals.size() << " intervals, " << dt << "s)";
    t.report(5, "adversarial 3-coloring of squares confines walks to 2 intervals", ok,
             extra.str());
}

void criterion6(Tally& t) {
    auto t0 = Clock::now();
    std::mt19937 rng(6666);
    const long long N = 10000;
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        std::uniform_int_distribution<long long> del(0, N / 20); // density >= 0.95
        SortedWindow w = punctured_window(rng, N, del(rng));
        try {
            DifferenceSet h = grow_difference_set(w, 6);
            if (h.elements.size() != 6) ok = false;
            for (std::size_t i = 0; i < h.elements.size() && ok; ++i)
                for (std::size_t j = i + 1; j < h.elements.size(); ++j)
                    if (!w.contains(h.elements[j] - h.elements[i])) ok = false;
        } catch (const WindowExhausted&) {
            ok = false;
        }
    }

    DifferenceSet evens = grow_difference_set(materialize(parse("evens"), N), 6);
    ok &= evens.elements == std::vector<long long>{2, 6, 14, 30, 62, 126};

    std::ostringstream extra;
    extra << "(" << seconds_since(t0) << "s)";
    t.report(6, "difference sets of size 6 grow in every dense window, 100/100", ok,
             extra.str());
}

void criterion7(Tally& t) {
    auto t0 = Clock::now();
    std::mt19937 rng(7777);
    bool ok = true;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        std::uniform_int_distribution<long long> nv(2, 9);
        long long v = nv(rng);
        std::vector<std::pair<long long, long long>> edges;
        std::bernoulli_distribution flip(0.45), dir(0.5);
        for (long long a = 0; a < v; ++a)
            for (long long b = a + 1; b < v; ++b)
                if (flip(rng)) edges.emplace_back(dir(rng) ? std::pair{a, b} : std::pair{b, a});
        Digraph g(v, std::move(edges));

        std::vector<long long> ord(static_cast<std::size_t>(v));
        std::iota(ord.begin(), ord.end(), 0);
        std::shuffle(ord.begin(), ord.end(), rng);

        auto [g1, g2] = partition_acyclic(g, ord);
        if (g1.edges().size() + g2.edges().size() != g.edges().size()) ok = false;
        std::set<std::pair<long long, long long>> rest(g.edges().begin(), g.edges().end());
        for (auto e : g1.edges())
            if (rest.erase(e) != 1) ok = false;
        for (auto e : g2.edges())
            if (rest.erase(e) != 1) ok = false;
        if (!rest.empty()) ok = false;

        try {
            longest_path_dag(g1);
            longest_path_dag(g2);
        } catch (const CycleDetected&) {
            ok = false; // halves must be acyclic
        }

        Coloring c1 = greedy_proper_coloring(g1);
        Coloring c2 = greedy_proper_coloring(g2);
        Coloring prod = product_proper(c1, c2);
        if (!is_proper(g1, c1) || !is_proper(g2, c2) || !is_proper(g, prod)) ok = false;

        // greedy and product bounds must dominate the true chromatic number
        int chi = chromatic(g);
        if (greedy_proper_coloring(g).r < chi) ok = false;
        if (prod.r < chi) ok = false;
    }
    std::ostringstream extra;
    extra << "(" << seconds_since(t0) << "s)";
    t.report(7, "acyclic edge partitions and product colorings hold, 500/500", ok,
             extra.str());
}

void criterion8(Tally& t) {
    auto t0 = Clock::now();
    struct Case {
        const char* expr;
        TargetKind target;
        long long param;
        int r;
        long long N; // r^N <= 3^12
    };
    const std::vector<Case> matrix = {
        {"all", TargetKind::Ap, 3, 2, 12},     {"all", TargetKind::Ap, 4, 2, 12},
        {"odds", TargetKind::Ap, 3, 2, 12},    {"evens", TargetKind::Ap, 3, 2, 12},
        {"modset(2)", TargetKind::Ap, 3, 2, 12}, {"squares", TargetKind::Ap, 3, 2, 12},
        {"{1,2}", TargetKind::Ap, 3, 2, 12},   {"all", TargetKind::Ap, 2, 3, 7},
        {"all", TargetKind::Walk, 3, 2, 10},   {"odds", TargetKind::Walk, 3, 2, 10},
        {"{1,2}", TargetKind::Walk, 3, 2, 10}, {"evens", TargetKind::Walk, 4, 2, 10},
        {"all", TargetKind::Walk, 3, 3, 7},    {"modset(3)", TargetKind::Walk, 2, 2, 12},
    };

    bool ok = true;
    for (const Case& tc : matrix) {
        SetExprPtr e = parse(tc.expr);
        SortedWindow w = materialize(e, tc.N);
        bool every = all_colorings(tc.N, tc.r, [&](const Coloring& c) {
            if (tc.target == TargetKind::Ap)
                return find_mono_ap(c, w, tc.param).has_value();
            return static_cast<long long>(longest_mono_walk(c, w).vertices.size()) >=
                   tc.param;
        });
        ThresholdResult res = tc.target == TargetKind::Ap
                                  ? vdw_threshold(e, tc.param, tc.r, tc.N)
                                  : walk_threshold(e, tc.param, tc.r, tc.N);
        bool engine_every = res.outcome == ThresholdResult::Outcome::Found;
        if (engine_every != every) {
            ok = false;
            std::fprintf(stderr, "criterion 8 mismatch: %s param=%lld r=%d N=%lld\n",
                         tc.expr, tc.param, tc.r, tc.N);
        }
        // when both agree the target is forced, the engine's minimal N must be
        // minimal: some coloring of [1, N-1] avoids the target
        if (engine_every && every && res.N > 1) {
            SortedWindow wm = materialize(e, res.N - 1);
            bool forced_below = all_colorings(res.N - 1, tc.r, [&](const Coloring& c) {
                if (tc.target == TargetKind::Ap)
                    return find_mono_ap(c, wm, tc.param).has_value();
                return static_cast<long long>(longest_mono_walk(c, wm).vertices.size()) >=
                       tc.param;
            });
            if (forced_below) ok = false;
        }
    }
    std::ostringstream extra;
    extra << "(" << matrix.size() << " cases, " << seconds_since(t0) << "s)";
    t.report(8, "engine decisions equal full enumeration on the fixed matrix", ok,
             extra.str());
}

void criterion9(Tally& t) {
    auto t0 = Clock::now();
    const char* bin = std::getenv("LADDERLAB_BIN");
    if (!bin) {
        t.report(9, "determinism across worker counts (LADDERLAB_BIN not set)", false);
        return;
    }
    const std::vector<std::string> commands = {
        "vdw --expr 'modset(2)' --len 3 --colors 2 --nmax 40",
        "vdw --expr all --len 3 --colors 2 --nmax 20",
        "vdw --expr odds --len 3 --colors 2 --nmax 25",
        "walk-threshold --expr '{1,2}' --mlen 3 --colors 2 --nmax 20",
        "adversarial --expr squares --k 1 --N 500",
        "eval 'union(modset(3), squares)' --N 100",
    };
    bool ok = true;
    int idx = 0;
    for (const std::string& cmd : commands) {
        std::string base;
        for (int workers : {1, 2, 8}) {
            std::string path = "/tmp/acc9_" + std::to_string(idx) + "_" +
                               std::to_string(workers) + ".json";
            std::string full = std::string(bin) + " " + cmd + " --workers " +
                               std::to_string(workers) + " --out " + path + " 2>/dev/null";
            int rc = std::system(full.c_str());
            if (rc == -1 || !WIFEXITED(rc) || (WEXITSTATUS(rc) != 0 && WEXITSTATUS(rc) != 1)) {
                ok = false;
                continue;
            }
            std::ifstream in(path);
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            if (text.empty()) ok = false;
            if (workers == 1)
                base = text;
            else if (text != base)
                ok = false;
        }
        ++idx;
    }
    std::ostringstream extra;
    extra << "(" << commands.size() << " commands x 3 worker counts, "
          << seconds_since(t0) << "s)";
    t.report(9, "certificates byte-identical across workers 1, 2, 8", ok, extra.str());
}

} // namespace

int main() {
    Tally t;
    criterion1(t);
    criterion2(t);
    criterion3(t);
    criterion4(t);
    criterion5(t);
    criterion6(t);
    criterion7(t);
    criterion8(t);
    criterion9(t);
    if (t.failures == 0) {
        std::printf("all 9 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", t.failures);
    return 1;
}
