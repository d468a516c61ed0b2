#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace parityq {

// Base for all typed errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ValuationOfZero : Error {
    ValuationOfZero() : Error("valuation of zero is undefined") {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& w) : Error("not a p-adic unit: " + w) {}
};

struct ZeroArgument : Error {
    explicit ZeroArgument(const std::string& where) : Error("zero argument in " + where) {}
};

struct DivisionByZeroPoly : Error {
    DivisionByZeroPoly() : Error("polynomial division by zero") {}
};

struct RootAtZero : Error {
    RootAtZero() : Error("cubic has a root at zero (constant term vanishes)") {}
};

struct NotSeparable : Error {
    NotSeparable() : Error("polynomial is not separable") {}
};

struct EvenPrimeUnsupported : Error {
    EvenPrimeUnsupported() : Error("cluster analysis requires an odd prime") {}
};

struct FilterInapplicable : Error {
    explicit FilterInapplicable(const std::string& why)
        : Error("semistability filter inapplicable: " + why) {}
};

struct DegreeTooSmall : Error {
    DegreeTooSmall() : Error("polynomial degree too small") {}
};

struct NotSquarefree : Error {
    NotSquarefree() : Error("polynomial is not squarefree") {}
};

struct DegenerateSturm : Error {
    int index;
    explicit DegenerateSturm(int i, const std::string& why)
        : Error("degenerate Sturm chain at index " + std::to_string(i) + ": " + why),
          index(i) {}
};

struct BranchMismatch : Error {
    explicit BranchMismatch(const std::string& why) : Error("branch mismatch: " + why) {}
};

struct CannotInfer : Error {
    explicit CannotInfer(const std::string& why) : Error("cannot infer lambda: " + why) {}
};

struct NotIntegral : Error {
    NotIntegral() : Error("cubic is not integral; integralize first") {}
};

struct UnsupportedPlace : Error {
    explicit UnsupportedPlace(const std::string& why) : Error("unsupported place: " + why) {}
};

struct StrictModeUnsupported : Error {
    std::vector<std::string> places;
    explicit StrictModeUnsupported(std::vector<std::string> ps, const std::string& msg)
        : Error(msg), places(std::move(ps)) {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace parityq
