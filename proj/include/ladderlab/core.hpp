#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "ladderlab/errors.hpp"
#include "ladderlab/setlang.hpp"

namespace ladderlab {

using Rational = boost::rational<long long>;

// An r-coloring of [1,N], colors 0-based.
struct Coloring {
    long long N = 0;
    int r = 1;
    std::vector<int> colors; // colors[i] is the color of position i+1

    int at(long long x) const { return colors[static_cast<std::size_t>(x - 1)]; }
};

struct ApWitness {
    long long a = 0;
    long long d = 0;
    long long len = 0;
    int color = 0;
};

struct WalkWitness {
    std::vector<long long> vertices; // strictly increasing
    int color = 0;
};

struct CubeWitness {
    std::vector<long long> generators; // sorted multiset
};

struct HomotheticWitness {
    long long x = 0;
    long long n = 0;
};

using Witness = std::variant<ApWitness, WalkWitness, CubeWitness, HomotheticWitness>;

Coloring modular_coloring(long long n, long long N);
Coloring product_coloring(const Coloring& c1, const Coloring& c2);

Rational density(const SortedWindow& window);
Rational relative_density(const SetExpr& expr, long long n, long long k);
inline Rational relative_density(const SetExprPtr& expr, long long n, long long k) {
    return relative_density(*expr, n, k);
}

// True iff s_{i+1} >= (1+epsilon) s_i for all consecutive window elements.
bool check_growth(const SortedWindow& window, const Rational& epsilon);

// --------------------------------------------------------------------------
// Certificates

enum class Claim { NoMonoAp, NoMonoWalk, WitnessFound, Threshold };

std::string claim_name(Claim c);
Claim claim_from_name(const std::string& s);

struct PartitionInterval {
    long long start = 0;
    long long len = 0;
    int forbidden = 0;
};

struct Certificate {
    int version = 1;
    Claim claim = Claim::WitnessFound;
    std::string expr;           // set-expression text
    long long N = 0;
    int r = 1;
    long long param = 0;        // AP length L or walk element count m
    std::optional<Coloring> coloring;
    std::optional<Witness> witness;

    // Extras beyond the base schema.
    std::vector<PartitionInterval> partition; // adversarial-coloring certificates
    std::string aux_expr;                     // subset-AP certificates: difference set S
    std::string target;                       // threshold certificates: "ap" | "walk"
    std::string outcome;                      // threshold certificates: "found" | "exceeded"
};

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

struct VerifyReport {
    bool pass = false;
    std::string detail;
};

// Replays the certificate's claim from scratch: re-materializes the set and
// re-searches with verifier-local loops (independent of the search/ramsey
// implementations). The node budget bounds the threshold re-exhaustion.
VerifyReport verify_certificate(const Certificate& cert,
                                unsigned long long node_budget = 200'000'000ULL,
                                long long window_cap = kDefaultWindowCap);

} // namespace ladderlab
