#include "ladderlab/setlang.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace ladderlab {

using boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// SortedWindow

SortedWindow::SortedWindow(long long n, std::vector<long long> elems)
    : n_(n), elements_(std::move(elems)),
      bits_(static_cast<std::size_t>((n + 63) / 64), 0) {
    for (long long x : elements_)
        bits_[static_cast<std::size_t>((x - 1) >> 6)] |= std::uint64_t{1} << ((x - 1) & 63);
}

// ---------------------------------------------------------------------------
// Structural equality

bool operator==(const SetExpr& a, const SetExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, ModSetNode>) return lhs.n == rhs.n;
            else if constexpr (std::is_same_v<T, PolyNode>) return lhs.coeffs == rhs.coeffs;
            else if constexpr (std::is_same_v<T, GeomNode>)
                return lhs.a == rhs.a && lhs.num == rhs.num && lhs.den == rhs.den;
            else if constexpr (std::is_same_v<T, ExplicitNode>) return lhs.elems == rhs.elems;
            else if constexpr (std::is_same_v<T, CombCubeNode>) return lhs.gens == rhs.gens;
            else if constexpr (std::is_same_v<T, DiagonalNode>) return lhs.height == rhs.height;
            else if constexpr (std::is_same_v<T, UnionNode> || std::is_same_v<T, IntersectNode> ||
                               std::is_same_v<T, DiffNode>)
                return *lhs.lhs == *rhs.lhs && *lhs.rhs == *rhs.rhs;
            else if constexpr (std::is_same_v<T, ComplementNode>)
                return *lhs.inner == *rhs.inner;
            else
                return true; // stateless keyword nodes
        },
        a.node);
}

// ---------------------------------------------------------------------------
// Parser: whitespace-insensitive recursive descent over a small token stream.

namespace {

struct Token {
    enum Kind { Ident, Int, LParen, RParen, LBrace, RBrace, Comma, Eq, End } kind;
    std::size_t offset;
    std::string text;   // Ident
    long long value;    // Int
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        tok_.offset = pos_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '(': tok_.kind = Token::LParen; ++pos_; return;
            case ')': tok_.kind = Token::RParen; ++pos_; return;
            case '{': tok_.kind = Token::LBrace; ++pos_; return;
            case '}': tok_.kind = Token::RBrace; ++pos_; return;
            case ',': tok_.kind = Token::Comma; ++pos_; return;
            case '=': tok_.kind = Token::Eq; ++pos_; return;
            default: break;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            if (c == '-') ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError(start, "digit after '-'");
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_.kind = Token::Int;
            try {
                tok_.value = std::stoll(text_.substr(start, pos_ - start));
            } catch (const std::out_of_range&) {
                throw ParseError(start, "integer in range");
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
                ++pos_;
            tok_.kind = Token::Ident;
            tok_.text = text_.substr(start, pos_ - start);
            for (char& ch : tok_.text) ch = static_cast<char>(std::tolower(ch));
            return;
        }
        throw ParseError(pos_, "expression token");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    SetExprPtr parse_top() {
        SetExprPtr e = parse_expr();
        if (lex_.peek().kind != Token::End)
            throw ParseError(lex_.peek().offset, "end of input");
        return e;
    }

private:
    Lexer lex_;

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError(lex_.peek().offset, expected);
    }

    long long expect_int() {
        if (lex_.peek().kind != Token::Int) fail("integer");
        return lex_.take().value;
    }

    void expect(Token::Kind k, const std::string& what) {
        if (lex_.peek().kind != k) fail(what);
        lex_.take();
    }

    std::vector<long long> int_args() {
        expect(Token::LParen, "'('");
        std::vector<long long> args;
        args.push_back(expect_int());
        while (lex_.peek().kind == Token::Comma) {
            lex_.take();
            args.push_back(expect_int());
        }
        expect(Token::RParen, "')'");
        return args;
    }

    static SetExprPtr make(SetExpr e) { return std::make_shared<SetExpr>(std::move(e)); }

    SetExprPtr parse_expr() {
        const Token& t = lex_.peek();
        if (t.kind == Token::LBrace) return parse_explicit();
        if (t.kind != Token::Ident) fail("set expression");
        Token head = lex_.take();
        const std::string& name = head.text;
        if (name == "all") return make({AllNode{}});
        if (name == "odds") return make({OddsNode{}});
        if (name == "evens") return make({EvensNode{}});
        if (name == "squares") return make({SquaresNode{}});
        if (name == "cubes") return make({CubesNode{}});
        if (name == "modset") {
            auto args = int_args();
            if (args.size() != 1) throw ParseError(head.offset, "modset(n)");
            if (args[0] < 1) throw ParseError(head.offset, "positive modulus");
            return make({ModSetNode{args[0]}});
        }
        if (name == "poly") return parse_poly(head.offset);
        if (name == "geom") {
            auto args = int_args();
            if (args.size() != 2 && args.size() != 3)
                throw ParseError(head.offset, "geom(a, num[, den])");
            long long a = args[0], num = args[1], den = args.size() == 3 ? args[2] : 1;
            if (a < 1 || num < 1 || den < 1)
                throw ParseError(head.offset, "positive geom parameters");
            long long g = std::gcd(num, den);
            num /= g;
            den /= g;
            if (num <= den) throw ParseError(head.offset, "geom ratio greater than 1");
            return make({GeomNode{a, num, den}});
        }
        if (name == "combcube") {
            auto args = int_args();
            for (long long g : args)
                if (g < 1) throw ParseError(head.offset, "positive generators");
            std::sort(args.begin(), args.end());
            return make({CombCubeNode{std::move(args)}});
        }
        if (name == "diagonal") {
            auto args = int_args();
            if (args.size() != 1 || args[0] < 0)
                throw ParseError(head.offset, "diagonal(height)");
            return make({DiagonalNode{args[0]}});
        }
        if (name == "union" || name == "intersect" || name == "diff") {
            expect(Token::LParen, "'('");
            SetExprPtr a = parse_expr();
            expect(Token::Comma, "','");
            SetExprPtr b = parse_expr();
            expect(Token::RParen, "')'");
            if (name == "union") return make({UnionNode{a, b}});
            if (name == "intersect") return make({IntersectNode{a, b}});
            return make({DiffNode{a, b}});
        }
        if (name == "complement") {
            expect(Token::LParen, "'('");
            SetExprPtr a = parse_expr();
            expect(Token::RParen, "')'");
            return make({ComplementNode{a}});
        }
        throw ParseError(head.offset, "known set name");
    }

    // poly(c1,...,cd) with an optional leading c0=<int>; nonzero c0 is rejected.
    SetExprPtr parse_poly(std::size_t head_offset) {
        expect(Token::LParen, "'('");
        std::vector<long long> coeffs;
        bool first = true;
        for (;;) {
            if (first && lex_.peek().kind == Token::Ident && lex_.peek().text == "c0") {
                lex_.take();
                expect(Token::Eq, "'='");
                long long c0 = expect_int();
                if (c0 != 0) throw ConstantTermError(c0);
            } else {
                coeffs.push_back(expect_int());
            }
            first = false;
            if (lex_.peek().kind != Token::Comma) break;
            lex_.take();
        }
        expect(Token::RParen, "')'");
        if (coeffs.empty()) throw ParseError(head_offset, "at least one coefficient");
        if (coeffs.back() == 0)
            throw ParseError(head_offset, "nonzero leading coefficient");
        return make({PolyNode{std::move(coeffs)}});
    }

    SetExprPtr parse_explicit() {
        std::size_t off = lex_.peek().offset;
        expect(Token::LBrace, "'{'");
        std::vector<long long> elems;
        if (lex_.peek().kind != Token::RBrace) {
            elems.push_back(expect_int());
            while (lex_.peek().kind == Token::Comma) {
                lex_.take();
                elems.push_back(expect_int());
            }
        }
        expect(Token::RBrace, "'}'");
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (elems[i] < 1) throw ParseError(off, "positive elements");
            if (i > 0 && elems[i] <= elems[i - 1])
                throw ParseError(off, "strictly increasing elements");
        }
        return make({ExplicitNode{std::move(elems)}});
    }
};

} // namespace

SetExprPtr parse(const std::string& text) { return Parser(text).parse_top(); }

// ---------------------------------------------------------------------------
// Canonical printing

namespace {

std::string join_ints(const std::vector<long long>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

} // namespace

std::string render(const SetExpr& expr) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, AllNode>) return "all";
            else if constexpr (std::is_same_v<T, OddsNode>) return "odds";
            else if constexpr (std::is_same_v<T, EvensNode>) return "evens";
            else if constexpr (std::is_same_v<T, SquaresNode>) return "squares";
            else if constexpr (std::is_same_v<T, CubesNode>) return "cubes";
            else if constexpr (std::is_same_v<T, ModSetNode>)
                return "modset(" + std::to_string(node.n) + ")";
            else if constexpr (std::is_same_v<T, PolyNode>)
                return "poly(" + join_ints(node.coeffs, ", ") + ")";
            else if constexpr (std::is_same_v<T, GeomNode>) {
                std::string s = "geom(" + std::to_string(node.a) + ", " + std::to_string(node.num);
                if (node.den != 1) s += ", " + std::to_string(node.den);
                return s + ")";
            } else if constexpr (std::is_same_v<T, ExplicitNode>)
                return "{" + join_ints(node.elems, ",") + "}";
            else if constexpr (std::is_same_v<T, CombCubeNode>)
                return "combcube(" + join_ints(node.gens, ", ") + ")";
            else if constexpr (std::is_same_v<T, DiagonalNode>)
                return "diagonal(" + std::to_string(node.height) + ")";
            else if constexpr (std::is_same_v<T, UnionNode>)
                return "union(" + render(*node.lhs) + ", " + render(*node.rhs) + ")";
            else if constexpr (std::is_same_v<T, IntersectNode>)
                return "intersect(" + render(*node.lhs) + ", " + render(*node.rhs) + ")";
            else if constexpr (std::is_same_v<T, DiffNode>)
                return "diff(" + render(*node.lhs) + ", " + render(*node.rhs) + ")";
            else
                return "complement(" + render(*node.inner) + ")";
        },
        expr.node);
}

// ---------------------------------------------------------------------------
// Membership and materialization

namespace {

// P(t) for P(x) = c1 x + ... + cd x^d, clamped well outside [-B, B] on overflow.
long long poly_eval_clamped(const std::vector<long long>& coeffs, long long t, long long bound) {
    __int128 acc = 0;
    const __int128 clamp = static_cast<__int128>(bound) * 4 + 4;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * t + *it;
        if (acc > clamp) acc = clamp;
        if (acc < -clamp) acc = -clamp;
    }
    acc *= t;
    if (acc > clamp) acc = clamp;
    if (acc < -clamp) acc = -clamp;
    return static_cast<long long>(acc);
}

// Smallest T such that |P(t)| provably exceeds bound for all |t| > T.
long long poly_arg_bound(const std::vector<long long>& coeffs, long long bound) {
    long long lead = std::llabs(coeffs.back());
    std::size_t d = coeffs.size();
    for (long long t = 1;; t *= 2) {
        // dominance: lead*t^d > bound + sum_{i<d} |ci| t^i, monotone in t
        cpp_int big = lead;
        cpp_int tt = t;
        for (std::size_t i = 0; i < d; ++i) big *= tt;
        cpp_int rest = bound;
        cpp_int pw = 1;
        for (std::size_t i = 0; i + 1 < d; ++i) {
            pw *= tt;
            rest += pw * std::llabs(coeffs[i]);
        }
        if (big > rest) return t;
        if (t > (1LL << 40)) throw ResourceError("polynomial argument bound overflow");
    }
}

// Sorted distinct elements of P(Z) ∩ [1, bound].
std::vector<long long> poly_image(const std::vector<long long>& coeffs, long long bound) {
    std::vector<long long> out;
    if (coeffs.size() == 1) {
        long long step = std::llabs(coeffs[0]);
        for (long long v = step; v <= bound; v += step) out.push_back(v);
        return out;
    }
    long long T = poly_arg_bound(coeffs, bound);
    for (long long t = -T; t <= T; ++t) {
        long long v = poly_eval_clamped(coeffs, t, bound);
        if (v >= 1 && v <= bound) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Elements of {ceil(a * (num/den)^i)} up to bound, exact via big integers.
std::vector<long long> geom_elements(const GeomNode& g, long long bound) {
    std::vector<long long> out;
    cpp_int num = g.a, den = 1;
    for (;;) {
        cpp_int val = (num + den - 1) / den;
        if (val > bound) break;
        long long v = static_cast<long long>(val);
        if (out.empty() || out.back() != v) out.push_back(v);
        num *= g.num;
        den *= g.den;
    }
    return out;
}

// Achievable nonempty subset sums of gens, as a bitmap over [0, bound].
std::vector<std::uint64_t> subset_sum_bits(const std::vector<long long>& gens, long long bound) {
    std::size_t words = static_cast<std::size_t>(bound / 64 + 1);
    std::vector<std::uint64_t> bits(words, 0);
    bits[0] = 1; // empty sum; dropped by callers
    for (long long g : gens) {
        if (g > bound) continue;
        std::vector<std::uint64_t> shifted(words, 0);
        std::size_t ws = static_cast<std::size_t>(g / 64);
        unsigned bs = static_cast<unsigned>(g % 64);
        for (std::size_t i = words; i-- > 0;) {
            std::uint64_t v = 0;
            if (i >= ws) {
                v = bits[i - ws] << bs;
                if (bs && i > ws) v |= bits[i - ws - 1] >> (64 - bs);
            }
            shifted[i] = v;
        }
        for (std::size_t i = 0; i < words; ++i) bits[i] |= shifted[i];
    }
    return bits;
}

std::mutex g_diag_mutex;
std::map<long long, std::vector<DiagonalEntry>> g_diag_cache;

const std::vector<DiagonalEntry>& diagonal_cached(long long height) {
    std::lock_guard<std::mutex> lock(g_diag_mutex);
    auto it = g_diag_cache.find(height);
    if (it == g_diag_cache.end())
        it = g_diag_cache.emplace(height, diagonal_trace(height)).first;
    return it->second;
}

} // namespace

bool member(const SetExpr& expr, long long x) {
    if (x < 1) return false;
    return std::visit(
        [x](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, AllNode>) return true;
            else if constexpr (std::is_same_v<T, OddsNode>) return x % 2 == 1;
            else if constexpr (std::is_same_v<T, EvensNode>) return x % 2 == 0;
            else if constexpr (std::is_same_v<T, ModSetNode>) return x % node.n == 0;
            else if constexpr (std::is_same_v<T, PolyNode>) {
                auto img = poly_image(node.coeffs, x);
                return std::binary_search(img.begin(), img.end(), x);
            } else if constexpr (std::is_same_v<T, SquaresNode>) {
                long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
                for (long long t = std::max(0LL, r - 2); t <= r + 2; ++t)
                    if (t * t == x) return true;
                return false;
            } else if constexpr (std::is_same_v<T, CubesNode>) {
                long long r = static_cast<long long>(std::cbrt(static_cast<double>(x)));
                for (long long t = std::max(0LL, r - 2); t <= r + 2; ++t)
                    if (t * t * t == x) return true;
                return false;
            } else if constexpr (std::is_same_v<T, GeomNode>) {
                auto elems = geom_elements(node, x);
                return !elems.empty() && elems.back() == x;
            } else if constexpr (std::is_same_v<T, ExplicitNode>)
                return std::binary_search(node.elems.begin(), node.elems.end(), x);
            else if constexpr (std::is_same_v<T, CombCubeNode>) {
                auto bits = subset_sum_bits(node.gens, x);
                bits[0] &= ~std::uint64_t{1};
                return (bits[static_cast<std::size_t>(x / 64)] >> (x % 64)) & 1;
            } else if constexpr (std::is_same_v<T, DiagonalNode>) {
                for (const auto& e : diagonal_cached(node.height))
                    if (e.included == x) return true;
                return false;
            } else if constexpr (std::is_same_v<T, UnionNode>)
                return member(*node.lhs, x) || member(*node.rhs, x);
            else if constexpr (std::is_same_v<T, IntersectNode>)
                return member(*node.lhs, x) && member(*node.rhs, x);
            else if constexpr (std::is_same_v<T, DiffNode>)
                return member(*node.lhs, x) && !member(*node.rhs, x);
            else
                return !member(*node.inner, x);
        },
        expr.node);
}

namespace {

// Recursive bitmap materialization; bit i-1 <-> integer i.
std::vector<std::uint64_t> materialize_bits(const SetExpr& expr, long long n) {
    std::size_t words = static_cast<std::size_t>((n + 63) / 64);
    std::vector<std::uint64_t> bits(words, 0);
    auto set_bit = [&](long long x) {
        if (x >= 1 && x <= n)
            bits[static_cast<std::size_t>((x - 1) >> 6)] |= std::uint64_t{1} << ((x - 1) & 63);
    };
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, AllNode>) {
                for (long long x = 1; x <= n; ++x) set_bit(x);
            } else if constexpr (std::is_same_v<T, OddsNode>) {
                for (long long x = 1; x <= n; x += 2) set_bit(x);
            } else if constexpr (std::is_same_v<T, EvensNode>) {
                for (long long x = 2; x <= n; x += 2) set_bit(x);
            } else if constexpr (std::is_same_v<T, ModSetNode>) {
                for (long long x = node.n; x <= n; x += node.n) set_bit(x);
            } else if constexpr (std::is_same_v<T, PolyNode>) {
                for (long long v : poly_image(node.coeffs, n)) set_bit(v);
            } else if constexpr (std::is_same_v<T, SquaresNode>) {
                for (long long t = 1; t * t <= n; ++t) set_bit(t * t);
            } else if constexpr (std::is_same_v<T, CubesNode>) {
                for (long long t = 1; t * t * t <= n; ++t) set_bit(t * t * t);
            } else if constexpr (std::is_same_v<T, GeomNode>) {
                for (long long v : geom_elements(node, n)) set_bit(v);
            } else if constexpr (std::is_same_v<T, ExplicitNode>) {
                for (long long v : node.elems) set_bit(v);
            } else if constexpr (std::is_same_v<T, CombCubeNode>) {
                auto sums = subset_sum_bits(node.gens, n);
                sums[0] &= ~std::uint64_t{1};
                // sums indexes value v at bit v; window bit is v-1
                for (long long v = 1; v <= n; ++v)
                    if ((sums[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1) set_bit(v);
            } else if constexpr (std::is_same_v<T, DiagonalNode>) {
                for (const auto& e : diagonal_cached(node.height)) set_bit(e.included);
            } else if constexpr (std::is_same_v<T, UnionNode>) {
                bits = materialize_bits(*node.lhs, n);
                auto rhs = materialize_bits(*node.rhs, n);
                for (std::size_t i = 0; i < words; ++i) bits[i] |= rhs[i];
            } else if constexpr (std::is_same_v<T, IntersectNode>) {
                bits = materialize_bits(*node.lhs, n);
                auto rhs = materialize_bits(*node.rhs, n);
                for (std::size_t i = 0; i < words; ++i) bits[i] &= rhs[i];
            } else if constexpr (std::is_same_v<T, DiffNode>) {
                bits = materialize_bits(*node.lhs, n);
                auto rhs = materialize_bits(*node.rhs, n);
                for (std::size_t i = 0; i < words; ++i) bits[i] &= ~rhs[i];
            } else if constexpr (std::is_same_v<T, ComplementNode>) {
                bits = materialize_bits(*node.inner, n);
                for (std::size_t i = 0; i < words; ++i) bits[i] = ~bits[i];
                if (n % 64) bits[words - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
            }
        },
        expr.node);
    return bits;
}

} // namespace

SortedWindow materialize(const SetExpr& expr, long long n, long long cap) {
    if (n < 1) throw ResourceError("window bound must be positive");
    if (n > cap)
        throw ResourceError("window bound " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
    auto bits = materialize_bits(expr, n);
    std::vector<long long> elems;
    for (std::size_t w = 0; w < bits.size(); ++w) {
        std::uint64_t word = bits[w];
        while (word) {
            unsigned b = static_cast<unsigned>(__builtin_ctzll(word));
            elems.push_back(static_cast<long long>(w * 64 + b + 1));
            word &= word - 1;
        }
    }
    SortedWindow win(n, std::move(elems));
    if (const auto* d = std::get_if<DiagonalNode>(&expr.node)) {
        std::vector<long long> ex;
        for (const auto& e : diagonal_cached(d->height)) ex.push_back(e.excluded);
        std::sort(ex.begin(), ex.end());
        ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
        win.set_excluded(std::move(ex));
    }
    return win;
}

// ---------------------------------------------------------------------------
// Diagonal construction

namespace {

// All coefficient vectors (c1..cd) with cd >= 1 and sum|ci| = mass,
// in ascending lexicographic order.
void gen_coeff_vectors(std::size_t d, long long mass, std::vector<long long>& cur,
                       std::vector<std::vector<long long>>& out) {
    if (cur.size() + 1 == d) {
        if (mass >= 1) {
            cur.push_back(mass); // leading coefficient, positive
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (long long c = -mass; c <= mass; ++c) {
        cur.push_back(c);
        gen_coeff_vectors(d, mass - std::llabs(c), cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<DiagonalEntry> diagonal_trace(long long height) {
    std::vector<DiagonalEntry> entries;
    std::set<long long> included, excluded;
    for (long long w = 2; w <= height + 1; ++w) {
        for (std::size_t d = 1; d < static_cast<std::size_t>(w); ++d) {
            std::vector<std::vector<long long>> polys;
            std::vector<long long> cur;
            gen_coeff_vectors(d, w - static_cast<long long>(d), cur, polys);
            std::sort(polys.begin(), polys.end());
            for (const auto& coeffs : polys) {
                long long bound = 1024;
                for (;;) {
                    auto img = poly_image(coeffs, bound);
                    // pick the smallest image element not yet excluded,
                    // then the next distinct one not yet included
                    long long inc = -1, exc = -1;
                    for (long long v : img) {
                        if (inc < 0) {
                            if (!excluded.count(v)) inc = v;
                        } else if (v > inc && !included.count(v)) {
                            exc = v;
                            break;
                        }
                    }
                    if (inc >= 0 && exc >= 0) {
                        included.insert(inc);
                        excluded.insert(exc);
                        entries.push_back({coeffs, inc, exc});
                        break;
                    }
                    bound *= 4;
                    if (bound > (1LL << 50))
                        throw ResourceError("diagonal image enumeration overflow");
                }
            }
        }
    }
    return entries;
}

SortedWindow diagonal_set(long long height, long long n, long long cap) {
    if (n < 1) throw ResourceError("window bound must be positive");
    if (n > cap)
        throw ResourceError("window bound " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
    const auto& entries = diagonal_cached(height);
    std::vector<long long> elems, ex;
    for (const auto& e : entries) {
        if (e.included <= n) elems.push_back(e.included);
        ex.push_back(e.excluded);
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::sort(ex.begin(), ex.end());
    ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
    SortedWindow win(n, std::move(elems));
    win.set_excluded(std::move(ex));
    return win;
}

} // namespace ladderlab
