#pragma once

#include <optional>
#include <string>

#include "ladderlab/constructions.hpp"
#include "ladderlab/core.hpp"
#include "ladderlab/setlang.hpp"

namespace ladderlab {

enum class TargetKind { Ap, Walk };

struct ThresholdResult {
    TargetKind target = TargetKind::Ap;
    std::string expr;
    int r = 1;
    long long param = 0; // L or walk element count m

    enum class Outcome { Found, Exceeded } outcome = Outcome::Exceeded;
    long long N = 0;     // minimal window if Found, Nmax if Exceeded
    Coloring coloring;   // extremal coloring of [1,N-1], or avoider of [1,Nmax]
    unsigned long long nodes = 0;
};

struct EngineLimits {
    unsigned long long node_budget = 100'000'000ULL;
    int workers = 1;
    long long time_limit_ms = 0; // 0 = none
};

// Minimal N <= Nmax such that every r-coloring of [1,N] has a monochromatic
// L-term AP with common difference in expr.
ThresholdResult vdw_threshold(const SetExprPtr& expr, long long L, int r, long long Nmax,
                              const EngineLimits& limits = {});

// Same engine for monochromatic walks of at least m elements.
ThresholdResult walk_threshold(const SetExprPtr& expr, long long m, int r, long long Nmax,
                               const EngineLimits& limits = {});

Certificate threshold_certificate(const ThresholdResult& result);

// Window-scale evidence about ord(expr): an adversarial (k+2)-coloring
// certificate (upper bound side) when the gap condition holds, plus a
// (k+1)-color walk threshold run (lower bound side).
struct WalkabilityReport {
    std::optional<Certificate> adversarial; // no-mono-walk certificate with partition
    std::string refusal;                    // why the construction side refused, if it did
    ThresholdResult threshold;
    Certificate threshold_cert;
};

WalkabilityReport walkability_report(const SetExprPtr& expr, long long k, long long Nmax,
                                     long long m, const EngineLimits& limits = {},
                                     long long window_cap = kDefaultWindowCap);

} // namespace ladderlab
