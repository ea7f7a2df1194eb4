#include <doctest.h>

#include <random>

#include "ladderlab/ramsey.hpp"
#include "ladderlab/search.hpp"

using namespace ladderlab;

namespace {

// oracle: smallest N such that all r^N colorings of [1,N] contain the target,
// by direct enumeration; nullopt if no such N <= Nmax
std::optional<long long> brute_threshold(const SetExprPtr& expr, long long param, int r,
                                         long long Nmax, TargetKind target) {
    for (long long N = 1; N <= Nmax; ++N) {
        SortedWindow w = materialize(expr, N);
        bool all_hit = true;
        std::vector<int> colors(static_cast<std::size_t>(N), 0);
        for (;;) {
            Coloring c{N, r, colors};
            bool hit;
            if (target == TargetKind::Ap) {
                hit = find_mono_ap(c, w, param).has_value();
            } else {
                hit = static_cast<long long>(longest_mono_walk(c, w).vertices.size()) >= param;
            }
            if (!hit) {
                all_hit = false;
                break;
            }
            // odometer
            std::size_t i = 0;
            while (i < colors.size() && ++colors[i] == r) colors[i++] = 0;
            if (i == colors.size()) break;
        }
        if (all_hit) return N;
    }
    return std::nullopt;
}

bool is_avoider(const Coloring& c, const SortedWindow& w, long long param, TargetKind target) {
    if (target == TargetKind::Ap) return !find_mono_ap(c, w, param).has_value();
    return static_cast<long long>(longest_mono_walk(c, w).vertices.size()) < param;
}

} // namespace

TEST_CASE("van der Waerden style threshold over all differences is 9") {
    ThresholdResult r = vdw_threshold(parse("all"), 3, 2, 40);
    CHECK(r.outcome == ThresholdResult::Outcome::Found);
    CHECK(r.N == 9);
    CHECK(r.coloring.N == 8);
    CHECK(is_avoider(r.coloring, materialize(parse("all"), 8), 3, TargetKind::Ap));
}

TEST_CASE("threshold over even differences is 17") {
    ThresholdResult r = vdw_threshold(parse("modset(2)"), 3, 2, 40);
    CHECK(r.outcome == ThresholdResult::Outcome::Found);
    CHECK(r.N == 17);
    CHECK(is_avoider(r.coloring, materialize(parse("modset(2)"), 16), 3, TargetKind::Ap));
}

TEST_CASE("odd differences admit a parity avoider forever") {
    ThresholdResult r = vdw_threshold(parse("odds"), 3, 2, 25);
    CHECK(r.outcome == ThresholdResult::Outcome::Exceeded);
    CHECK(r.N == 25);
    CHECK(is_avoider(r.coloring, materialize(parse("odds"), 25), 3, TargetKind::Ap));
}

TEST_CASE("AP thresholds match exhaustive enumeration on small instances") {
    struct Case {
        const char* expr;
        long long L;
        int r;
        long long nmax;
    };
    for (const Case& tc : {Case{"all", 3, 2, 10}, Case{"evens", 3, 2, 18},
                           Case{"{1,2}", 3, 2, 12}, Case{"all", 2, 3, 8}}) {
        CAPTURE(tc.expr);
        SetExprPtr e = parse(tc.expr);
        auto slow = brute_threshold(e, tc.L, tc.r, tc.nmax, TargetKind::Ap);
        ThresholdResult fast = vdw_threshold(e, tc.L, tc.r, tc.nmax);
        if (slow) {
            CHECK(fast.outcome == ThresholdResult::Outcome::Found);
            CHECK(fast.N == *slow);
        } else {
            CHECK(fast.outcome == ThresholdResult::Outcome::Exceeded);
        }
    }
}

TEST_CASE("walk threshold for m elements over all differences is m") {
    for (long long m : {2LL, 3LL, 5LL}) {
        ThresholdResult r = walk_threshold(parse("all"), m, 1, 20);
        CHECK(r.outcome == ThresholdResult::Outcome::Found);
        CHECK(r.N == m); // one color: [1,m] itself is an m-element walk
    }
}

TEST_CASE("walk thresholds match exhaustive enumeration") {
    struct Case {
        const char* expr;
        long long m;
        int r;
        long long nmax;
    };
    for (const Case& tc : {Case{"{1,2}", 3, 2, 12}, Case{"all", 3, 2, 8},
                           Case{"odds", 3, 2, 10}, Case{"evens", 2, 2, 10}}) {
        CAPTURE(tc.expr);
        CAPTURE(tc.m);
        SetExprPtr e = parse(tc.expr);
        auto slow = brute_threshold(e, tc.m, tc.r, tc.nmax, TargetKind::Walk);
        ThresholdResult fast = walk_threshold(e, tc.m, tc.r, tc.nmax);
        if (slow) {
            CHECK(fast.outcome == ThresholdResult::Outcome::Found);
            CHECK(fast.N == *slow);
        } else {
            CHECK(fast.outcome == ThresholdResult::Outcome::Exceeded);
        }
    }
}

TEST_CASE("extremal colorings really are extremal") {
    // Found case: engine's extremal coloring avoids the target on [1,N-1],
    // and no coloring of [1,N] avoids it (checked by enumeration).
    ThresholdResult r = vdw_threshold(parse("all"), 3, 2, 12);
    REQUIRE(r.outcome == ThresholdResult::Outcome::Found);
    SortedWindow w = materialize(parse("all"), r.N);
    std::vector<int> colors(static_cast<std::size_t>(r.N), 0);
    bool found_avoider = false;
    for (;;) {
        Coloring c{r.N, 2, colors};
        if (is_avoider(c, w, 3, TargetKind::Ap)) {
            found_avoider = true;
            break;
        }
        std::size_t i = 0;
        while (i < colors.size() && ++colors[i] == 2) colors[i++] = 0;
        if (i == colors.size()) break;
    }
    CHECK_FALSE(found_avoider);
}

TEST_CASE("worker counts do not change the result") {
    for (int workers : {1, 2, 8}) {
        EngineLimits limits;
        limits.workers = workers;
        ThresholdResult r = vdw_threshold(parse("modset(2)"), 3, 2, 40, limits);
        CHECK(r.N == 17);
        CHECK(r.outcome == ThresholdResult::Outcome::Found);
        ThresholdResult base = vdw_threshold(parse("modset(2)"), 3, 2, 40);
        CHECK(r.coloring.colors == base.coloring.colors);
    }
}

TEST_CASE("node budget interrupts with partial progress") {
    EngineLimits limits;
    limits.node_budget = 10;
    try {
        vdw_threshold(parse("all"), 4, 2, 40, limits);
        FAIL("expected Interrupted");
    } catch (const Interrupted& e) {
        CHECK(e.nodes() >= 10);
    }
}

TEST_CASE("threshold certificates verify through the independent replayer") {
    ThresholdResult found = vdw_threshold(parse("all"), 3, 2, 40);
    Certificate cf = threshold_certificate(found);
    CHECK(cf.claim == Claim::Threshold);
    CHECK(cf.outcome == "found");
    CHECK(verify_certificate(cf).pass);

    // tampering with N must break it
    Certificate bad = cf;
    bad.N = 8;
    CHECK_FALSE(verify_certificate(bad).pass);

    ThresholdResult exceeded = vdw_threshold(parse("odds"), 3, 2, 25);
    Certificate ce = threshold_certificate(exceeded);
    CHECK(ce.outcome == "exceeded");
    CHECK(verify_certificate(ce).pass);
}

TEST_CASE("walkability report for squares produces both sides") {
    WalkabilityReport rep = walkability_report(parse("squares"), 1, 18, 3, {}, 1'000'000);
    REQUIRE(rep.adversarial.has_value());
    CHECK(rep.refusal.empty());
    CHECK(rep.adversarial->claim == Claim::NoMonoWalk);
    CHECK(rep.adversarial->r == 3);
    CHECK_FALSE(rep.adversarial->partition.empty());
    CHECK(verify_certificate(*rep.adversarial).pass);
    // lower-bound side ran with k+1 = 2 colors
    CHECK(rep.threshold.r == 2);
    CHECK(rep.threshold_cert.claim == Claim::Threshold);
}

TEST_CASE("walkability report records a refusal for dense sets") {
    WalkabilityReport rep = walkability_report(parse("odds"), 1, 12, 3, {}, 1'000'000);
    CHECK_FALSE(rep.adversarial.has_value());
    CHECK_FALSE(rep.refusal.empty());
    // the threshold side still runs
    CHECK(rep.threshold.r == 2);
}
