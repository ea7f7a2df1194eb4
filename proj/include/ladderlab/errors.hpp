#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ladderlab {

// Parse failure in the set-expression grammar; carries the byte offset of the
// offending token and a description of what was expected there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string expected)
        : std::runtime_error("parse error at byte " + std::to_string(offset) +
                             ": expected " + expected),
          offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// poly(...) with a nonzero constant term.
class ConstantTermError : public std::runtime_error {
public:
    explicit ConstantTermError(long long c0)
        : std::runtime_error("polynomial constant term must be zero, got " +
                             std::to_string(c0)) {}
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GapConditionUnverifiable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class WindowTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NeighborBoundViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Difference-set growth stalled before reaching the target size; the partial
// set built so far is attached.
class WindowExhausted : public std::runtime_error {
public:
    WindowExhausted(std::string what, std::vector<long long> partial)
        : std::runtime_error(std::move(what)), partial_(std::move(partial)) {}

    const std::vector<long long>& partial() const { return partial_; }

private:
    std::vector<long long> partial_;
};

class LoopDetected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CycleDetected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedCertificate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string& message)
        : std::runtime_error("config line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Search budget or time limit hit; carries the best depth reached so far.
class Interrupted : public std::runtime_error {
public:
    Interrupted(std::string what, long long best_depth, unsigned long long nodes)
        : std::runtime_error(std::move(what)), best_depth_(best_depth), nodes_(nodes) {}

    long long best_depth() const { return best_depth_; }
    unsigned long long nodes() const { return nodes_; }

private:
    long long best_depth_;
    unsigned long long nodes_;
};

} // namespace ladderlab
