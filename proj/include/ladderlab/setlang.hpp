#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ladderlab/errors.hpp"

namespace ladderlab {

struct SetExpr;
using SetExprPtr = std::shared_ptr<const SetExpr>;

// AST nodes of the set language. Every node denotes a subset of Z+.
struct AllNode {};
struct OddsNode {};
struct EvensNode {};
struct ModSetNode { long long n; };                 // nZ ∩ Z+, n >= 1
struct PolyNode { std::vector<long long> coeffs; }; // c1..cd, P(x)=c1 x+...+cd x^d, cd != 0
struct SquaresNode {};
struct CubesNode {};
struct GeomNode { long long a; long long num; long long den; }; // {ceil(a*(num/den)^i)}, reduced, num/den > 1
struct ExplicitNode { std::vector<long long> elems; };          // strictly increasing
struct CombCubeNode { std::vector<long long> gens; };           // sorted multiset, all >= 1
struct DiagonalNode { long long height; };
struct UnionNode { SetExprPtr lhs, rhs; };
struct IntersectNode { SetExprPtr lhs, rhs; };
struct DiffNode { SetExprPtr lhs, rhs; };
struct ComplementNode { SetExprPtr inner; };        // relative to Z+

struct SetExpr {
    std::variant<AllNode, OddsNode, EvensNode, ModSetNode, PolyNode, SquaresNode,
                 CubesNode, GeomNode, ExplicitNode, CombCubeNode, DiagonalNode,
                 UnionNode, IntersectNode, DiffNode, ComplementNode>
        node;
};

bool operator==(const SetExpr& a, const SetExpr& b);
inline bool operator!=(const SetExpr& a, const SetExpr& b) { return !(a == b); }

// S ∩ [1,N] as a sorted element list plus a membership bitmap.
class SortedWindow {
public:
    SortedWindow() = default;
    SortedWindow(long long n, std::vector<long long> elems);

    long long N() const { return n_; }
    const std::vector<long long>& elements() const { return elements_; }
    bool contains(long long x) const {
        if (x < 1 || x > n_) return false;
        return (bits_[static_cast<std::size_t>((x - 1) >> 6)] >> ((x - 1) & 63)) & 1;
    }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    // Exclusion metadata (populated by diagonal_set, empty otherwise).
    const std::vector<long long>& excluded() const { return excluded_; }
    void set_excluded(std::vector<long long> ex) { excluded_ = std::move(ex); }

private:
    long long n_ = 0;
    std::vector<long long> elements_;
    std::vector<std::uint64_t> bits_;
    std::vector<long long> excluded_;
};

inline constexpr long long kDefaultWindowCap = 10'000'000;

SetExprPtr parse(const std::string& text);
std::string render(const SetExpr& expr);
inline std::string render(const SetExprPtr& expr) { return render(*expr); }

bool member(const SetExpr& expr, long long x);
inline bool member(const SetExprPtr& expr, long long x) { return member(*expr, x); }

SortedWindow materialize(const SetExpr& expr, long long n, long long cap = kDefaultWindowCap);
inline SortedWindow materialize(const SetExprPtr& expr, long long n,
                                long long cap = kDefaultWindowCap) {
    return materialize(*expr, n, cap);
}

// One step of the diagonal construction: the polynomial (coeffs c1..cd), the
// image element pulled into the set, and the image element pushed out.
struct DiagonalEntry {
    std::vector<long long> coeffs;
    long long included;
    long long excluded;
};

// Deterministic replay of the diagonal construction for all polynomials of
// weight deg + sum|ci| <= height + 1 with positive leading coefficient.
std::vector<DiagonalEntry> diagonal_trace(long long height);

SortedWindow diagonal_set(long long height, long long n, long long cap = kDefaultWindowCap);

} // namespace ladderlab
