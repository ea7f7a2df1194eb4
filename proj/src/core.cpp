#include "ladderlab/core.hpp"

#include <algorithm>

#include <json.hpp>

namespace ladderlab {

using ordered_json = nlohmann::ordered_json;

Coloring modular_coloring(long long n, long long N) {
    Coloring c;
    c.N = N;
    c.r = static_cast<int>(n);
    c.colors.resize(static_cast<std::size_t>(N));
    for (long long x = 1; x <= N; ++x)
        c.colors[static_cast<std::size_t>(x - 1)] = static_cast<int>(x % n);
    return c;
}

Coloring product_coloring(const Coloring& c1, const Coloring& c2) {
    if (c1.N != c2.N)
        throw DimensionMismatch("product of colorings over different windows: " +
                                std::to_string(c1.N) + " vs " + std::to_string(c2.N));
    Coloring out;
    out.N = c1.N;
    out.r = c1.r * c2.r;
    out.colors.resize(c1.colors.size());
    for (std::size_t i = 0; i < c1.colors.size(); ++i)
        out.colors[i] = c1.colors[i] * c2.r + c2.colors[i];
    return out;
}

Rational density(const SortedWindow& window) {
    if (window.N() == 0) return Rational(0);
    return Rational(static_cast<long long>(window.size()), window.N());
}

Rational relative_density(const SetExpr& expr, long long n, long long k) {
    long long count = 0;
    for (long long t = 1; t <= k; ++t)
        if (member(expr, t * n)) ++count;
    return Rational(count, k);
}

bool check_growth(const SortedWindow& window, const Rational& epsilon) {
    const auto& s = window.elements();
    // s_{i+1} >= (1 + p/q) s_i  <=>  q s_{i+1} >= (q + p) s_i, exactly
    long long p = epsilon.numerator(), q = epsilon.denominator();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (static_cast<__int128>(q) * s[i + 1] < static_cast<__int128>(q + p) * s[i])
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Certificate JSON

std::string claim_name(Claim c) {
    switch (c) {
        case Claim::NoMonoAp: return "no-mono-ap";
        case Claim::NoMonoWalk: return "no-mono-walk";
        case Claim::WitnessFound: return "witness-found";
        case Claim::Threshold: return "threshold";
    }
    return "?";
}

Claim claim_from_name(const std::string& s) {
    if (s == "no-mono-ap") return Claim::NoMonoAp;
    if (s == "no-mono-walk") return Claim::NoMonoWalk;
    if (s == "witness-found") return Claim::WitnessFound;
    if (s == "threshold") return Claim::Threshold;
    throw MalformedCertificate("unknown claim kind: " + s);
}

namespace {

ordered_json witness_to_json(const Witness& w) {
    ordered_json j;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ApWitness>) {
                j["kind"] = "ap";
                j["a"] = v.a;
                j["d"] = v.d;
                j["len"] = v.len;
                j["color"] = v.color;
            } else if constexpr (std::is_same_v<T, WalkWitness>) {
                j["kind"] = "walk";
                j["vertices"] = v.vertices;
                j["color"] = v.color;
            } else if constexpr (std::is_same_v<T, CubeWitness>) {
                j["kind"] = "cube";
                j["generators"] = v.generators;
            } else {
                j["kind"] = "homothetic";
                j["x"] = v.x;
                j["n"] = v.n;
            }
        },
        w);
    return j;
}

Witness witness_from_json(const ordered_json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "ap")
        return ApWitness{j.at("a").get<long long>(), j.at("d").get<long long>(),
                         j.at("len").get<long long>(), j.at("color").get<int>()};
    if (kind == "walk")
        return WalkWitness{j.at("vertices").get<std::vector<long long>>(),
                           j.at("color").get<int>()};
    if (kind == "cube")
        return CubeWitness{j.at("generators").get<std::vector<long long>>()};
    if (kind == "homothetic")
        return HomotheticWitness{j.at("x").get<long long>(), j.at("n").get<long long>()};
    throw MalformedCertificate("unknown witness kind: " + kind);
}

} // namespace

std::string certificate_to_json(const Certificate& cert) {
    ordered_json j;
    j["version"] = cert.version;
    j["claim"] = claim_name(cert.claim);
    j["expr"] = cert.expr;
    j["N"] = cert.N;
    j["r"] = cert.r;
    j["param"] = cert.param;
    j["coloring"] = cert.coloring ? ordered_json(cert.coloring->colors) : ordered_json(nullptr);
    j["witness"] = cert.witness ? witness_to_json(*cert.witness) : ordered_json(nullptr);
    if (!cert.partition.empty()) {
        ordered_json p = ordered_json::array();
        for (const auto& iv : cert.partition)
            p.push_back({{"start", iv.start}, {"len", iv.len}, {"forbidden", iv.forbidden}});
        j["partition"] = p;
    }
    if (!cert.aux_expr.empty()) j["aux_expr"] = cert.aux_expr;
    if (!cert.target.empty()) j["target"] = cert.target;
    if (!cert.outcome.empty()) j["outcome"] = cert.outcome;
    return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedCertificate(std::string("bad JSON: ") + e.what());
    }
    Certificate cert;
    try {
        cert.version = j.at("version").get<int>();
        if (cert.version != 1)
            throw MalformedCertificate("unsupported version " + std::to_string(cert.version));
        cert.claim = claim_from_name(j.at("claim").get<std::string>());
        cert.expr = j.at("expr").get<std::string>();
        cert.N = j.at("N").get<long long>();
        cert.r = j.at("r").get<int>();
        cert.param = j.at("param").get<long long>();
        if (!j.at("coloring").is_null()) {
            Coloring c;
            c.colors = j.at("coloring").get<std::vector<int>>();
            c.N = static_cast<long long>(c.colors.size());
            c.r = cert.r;
            cert.coloring = std::move(c);
        }
        if (!j.at("witness").is_null()) cert.witness = witness_from_json(j.at("witness"));
        if (j.contains("partition")) {
            for (const auto& iv : j.at("partition"))
                cert.partition.push_back({iv.at("start").get<long long>(),
                                          iv.at("len").get<long long>(),
                                          iv.at("forbidden").get<int>()});
        }
        if (j.contains("aux_expr")) cert.aux_expr = j.at("aux_expr").get<std::string>();
        if (j.contains("target")) cert.target = j.at("target").get<std::string>();
        if (j.contains("outcome")) cert.outcome = j.at("outcome").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw MalformedCertificate(std::string("missing or ill-typed field: ") + e.what());
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Verification: self-contained replays, not routed through search/ramsey.

namespace {

// Least monochromatic L-term AP with common difference in S, or nullopt.
std::optional<ApWitness> replay_find_ap(const Coloring& col, const SortedWindow& S,
                                        long long L) {
    long long N = col.N;
    for (long long a = 1; a <= N; ++a) {
        for (long long d : S.elements()) {
            if (a + (L - 1) * d > N) break;
            int c = col.at(a);
            bool mono = true;
            for (long long i = 1; i < L; ++i)
                if (col.at(a + i * d) != c) { mono = false; break; }
            if (mono) return ApWitness{a, d, L, c};
        }
    }
    return std::nullopt;
}

// Longest monochromatic increasing chain with steps in S (element count).
long long replay_longest_walk(const Coloring& col, const SortedWindow& S) {
    long long N = col.N;
    if (N == 0) return 0;
    std::vector<long long> len(static_cast<std::size_t>(N), 1);
    long long best = 1;
    for (long long x = 1; x <= N; ++x) {
        for (long long s : S.elements()) {
            if (s >= x) break;
            if (col.at(x - s) == col.at(x))
                len[x - 1] = std::max(len[x - 1], len[x - s - 1] + 1);
        }
        best = std::max(best, len[x - 1]);
    }
    return best;
}

struct ReplaySearch {
    const SortedWindow& S;
    long long N;
    int r;
    bool walk_target;
    long long param; // L or m
    unsigned long long budget;
    unsigned long long nodes = 0;
    std::vector<int> colors;
    std::vector<long long> chain;

    ReplaySearch(const SortedWindow& s, long long n, int r_, bool walk, long long p,
                 unsigned long long b)
        : S(s), N(n), r(r_), walk_target(walk), param(p), budget(b),
          colors(static_cast<std::size_t>(n), -1), chain(static_cast<std::size_t>(n), 0) {}

    bool completes(long long x, int c) {
        if (walk_target) {
            long long best = 1;
            for (long long s : S.elements()) {
                if (s >= x) break;
                if (colors[x - s - 1] == c) best = std::max(best, chain[x - s - 1] + 1);
            }
            chain[x - 1] = best;
            return best >= param;
        }
        for (long long d : S.elements()) {
            if ((param - 1) * d >= x) break;
            bool mono = true;
            for (long long i = 1; i < param; ++i)
                if (colors[x - i * d - 1] != c) { mono = false; break; }
            if (mono) return true;
        }
        return false;
    }

    // True iff some r-coloring of [1,N] avoids the target. Canonical color
    // introduction only; the decision is invariant under color permutation.
    bool avoider_exists(long long x, int maxused) {
        if (x > N) return true;
        if (++nodes > budget) throw Interrupted("verification budget exhausted", x - 1, nodes);
        int limit = std::min(maxused + 1, r - 1);
        for (int c = 0; c <= limit; ++c) {
            colors[x - 1] = c;
            if (!completes(x, c) && avoider_exists(x + 1, std::max(maxused, c))) return true;
        }
        colors[x - 1] = -1;
        return false;
    }
};

VerifyReport fail(const std::string& detail) { return {false, detail}; }

bool coloring_in_range(const Coloring& c, int r) {
    return std::all_of(c.colors.begin(), c.colors.end(),
                       [r](int v) { return v >= 0 && v < r; });
}

// Does `col` (over [1,M]) contain the target structure?
bool contains_target(const Coloring& col, const SortedWindow& S, bool walk, long long param) {
    if (walk) return replay_longest_walk(col, S) >= param;
    return replay_find_ap(col, S, param).has_value();
}

} // namespace

VerifyReport verify_certificate(const Certificate& cert, unsigned long long node_budget,
                                long long window_cap) {
    SetExprPtr expr = parse(cert.expr);
    if (cert.N < 1) return fail("nonpositive N");
    SortedWindow window = materialize(expr, cert.N, window_cap);

    switch (cert.claim) {
        case Claim::NoMonoAp: {
            if (!cert.coloring) return fail("no-mono-ap certificate lacks a coloring");
            const Coloring& col = *cert.coloring;
            if (col.N != cert.N) return fail("coloring length disagrees with N");
            if (!coloring_in_range(col, cert.r)) return fail("color value out of range");
            if (auto w = replay_find_ap(col, window, cert.param))
                return fail("monochromatic AP exists: a=" + std::to_string(w->a) +
                            " d=" + std::to_string(w->d));
            return {true, "no monochromatic " + std::to_string(cert.param) + "-AP found"};
        }
        case Claim::NoMonoWalk: {
            if (!cert.coloring) return fail("no-mono-walk certificate lacks a coloring");
            const Coloring& col = *cert.coloring;
            if (col.N != cert.N) return fail("coloring length disagrees with N");
            if (!coloring_in_range(col, cert.r)) return fail("color value out of range");
            long long longest = replay_longest_walk(col, window);
            if (longest >= cert.param)
                return fail("monochromatic walk of " + std::to_string(longest) +
                            " elements exists");
            return {true, "longest monochromatic walk has " + std::to_string(longest) +
                              " elements"};
        }
        case Claim::WitnessFound: {
            if (!cert.witness) return fail("witness-found certificate lacks a witness");
            return std::visit(
                [&](const auto& w) -> VerifyReport {
                    using T = std::decay_t<decltype(w)>;
                    if constexpr (std::is_same_v<T, ApWitness>) {
                        if (w.len < 1 || w.d < 1 || w.a < 1 ||
                            w.a + (w.len - 1) * w.d > cert.N)
                            return fail("AP out of range");
                        if (cert.coloring) {
                            // monochromatic AP over expr
                            if (!window.contains(w.d))
                                return fail("common difference not in set");
                            for (long long i = 0; i < w.len; ++i)
                                if (cert.coloring->at(w.a + i * w.d) != w.color)
                                    return fail("AP term at index " + std::to_string(i) +
                                                " has wrong color");
                            return {true, "monochromatic AP verified"};
                        }
                        if (!cert.aux_expr.empty()) {
                            // AP inside subset X=expr with difference in aux S
                            SortedWindow sWin =
                                materialize(parse(cert.aux_expr), cert.N, window_cap);
                            if (!sWin.contains(w.d))
                                return fail("common difference not in difference set");
                            for (long long i = 0; i < w.len; ++i)
                                if (!window.contains(w.a + i * w.d))
                                    return fail("AP term at index " + std::to_string(i) +
                                                " not in subset");
                            return {true, "subset AP verified"};
                        }
                        return fail("AP witness needs a coloring or aux_expr");
                    } else if constexpr (std::is_same_v<T, WalkWitness>) {
                        if (!cert.coloring) return fail("walk witness needs a coloring");
                        if (w.vertices.empty()) return fail("empty walk");
                        if (static_cast<long long>(w.vertices.size()) < cert.param)
                            return fail("walk shorter than claimed length");
                        for (std::size_t i = 0; i < w.vertices.size(); ++i) {
                            long long v = w.vertices[i];
                            if (v < 1 || v > cert.N) return fail("walk vertex out of range");
                            if (cert.coloring->at(v) != w.color)
                                return fail("walk vertex " + std::to_string(v) +
                                            " has wrong color");
                            if (i > 0 && !window.contains(v - w.vertices[i - 1]))
                                return fail("walk step " + std::to_string(i) +
                                            " not in set");
                        }
                        return {true, "monochromatic walk verified"};
                    } else if constexpr (std::is_same_v<T, CubeWitness>) {
                        if (w.generators.empty()) return fail("empty cube");
                        if (w.generators.size() > 24)
                            return fail("cube dimension too large to replay");
                        std::vector<long long> sums;
                        for (long long g : w.generators) {
                            std::vector<long long> next = sums;
                            next.push_back(g);
                            for (long long s : sums) next.push_back(s + g);
                            sums = std::move(next);
                        }
                        for (long long s : sums)
                            if (!window.contains(s))
                                return fail("subset sum " + std::to_string(s) +
                                            " not in window");
                        return {true, "combinatorial cube verified"};
                    } else {
                        if (w.x < 1 || w.n < 1) return fail("bad homothetic parameters");
                        for (long long i = 1; i <= w.n; ++i)
                            if (!window.contains(i * w.x))
                                return fail("multiple " + std::to_string(i * w.x) +
                                            " not in window");
                        return {true, "homothetic progression verified"};
                    }
                },
                *cert.witness);
        }
        case Claim::Threshold: {
            bool walk;
            if (cert.target == "ap") walk = false;
            else if (cert.target == "walk") walk = true;
            else return fail("threshold certificate lacks target kind");
            if (!cert.coloring) return fail("threshold certificate lacks a coloring");
            const Coloring& col = *cert.coloring;
            if (!coloring_in_range(col, cert.r)) return fail("color value out of range");
            if (cert.outcome == "exceeded") {
                if (col.N != cert.N) return fail("avoider length disagrees with N");
                if (contains_target(col, window, walk, cert.param))
                    return fail("claimed avoider contains the target structure");
                return {true, "avoider of [1," + std::to_string(cert.N) + "] verified"};
            }
            if (cert.outcome != "found") return fail("threshold certificate lacks outcome");
            if (col.N != cert.N - 1) return fail("extremal coloring must cover [1,N-1]");
            if (cert.N > 1) {
                Coloring sub = col;
                if (contains_target(sub, materialize(expr, cert.N - 1, window_cap), walk,
                                    cert.param))
                    return fail("claimed extremal coloring contains the target structure");
            }
            ReplaySearch rs(window, cert.N, cert.r, walk, cert.param, node_budget);
            if (rs.avoider_exists(1, -1))
                return fail("an r-coloring of [1," + std::to_string(cert.N) +
                            "] avoiding the target exists");
            return {true, "threshold N=" + std::to_string(cert.N) + " confirmed by exhaustion"};
        }
    }
    return fail("unreachable");
}

} // namespace ladderlab
