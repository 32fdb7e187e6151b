#pragma once

#include <stdexcept>
#include <string>

namespace geoind {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NegativeRadicand : Error {
    NegativeRadicand() : Error("square root of a negative value") {}
};

// A construction was applied to points that do not satisfy its hypothesis.
// `path` locates the offending subterm when the failure happened inside a
// term evaluation ("" for direct calls).
struct PreconditionViolated : Error {
    std::string path;
    explicit PreconditionViolated(const std::string& what, std::string p = "")
        : Error(p.empty() ? what : what + " (at " + p + ")"), path(std::move(p)) {}
};

struct DegenerateLine : Error {
    DegenerateLine() : Error("line through two equal points is undefined") {}
};

struct PointOnLine : Error {
    PointOnLine() : Error("point lies on the line") {}
};

struct PointNotOnLine : Error {
    PointNotOnLine() : Error("point does not lie on the line") {}
};

struct UnknownAxiom : Error {
    explicit UnknownAxiom(const std::string& id) : Error("unknown axiom id: " + id) {}
};

struct WrongArity : Error {
    WrongArity(const std::string& id, int expected, int got)
        : Error("axiom " + id + " expects " + std::to_string(expected) +
                " points, got " + std::to_string(got)) {}
};

struct UnboundVariable : Error {
    std::string name;
    explicit UnboundVariable(std::string n)
        : Error("unbound variable: " + n), name(std::move(n)) {}
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct ArityError : Error {
    std::string symbol;
    int expected;
    int got;
    ArityError(std::string sym, int exp, int g)
        : Error("symbol " + sym + " expects " + std::to_string(exp) +
                " arguments, got " + std::to_string(g)),
          symbol(std::move(sym)), expected(exp), got(g) {}
};

// Laurent-series field errors.
struct OddValuation : Error {
    OddValuation() : Error("series has odd valuation: no square root in this field") {}
};

struct NegativeElement : Error {
    NegativeElement() : Error("series is not positive") {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what = "decision depends on truncated coefficients")
        : Error(what) {}
};

}  // namespace geoind
