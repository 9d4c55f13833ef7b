#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ndet {

/// Ordered bag of outcomes of a nondeterministic list computation:
/// one inner vector per choice, in deterministic depth-first order.
using ChoiceBag = std::vector<std::vector<int>>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A back-end was asked for an operation it does not provide
/// (committed choice on a plain back-end, observation on an analysis).
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// Ill-sorted or open term where a closed, sort-correct one is required.
class SortError : public Error {
public:
    using Error::Error;
};

/// Unbound variable or shadowing binder in a target-language program.
class ScopeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line),
          col(col) {}

    int line;
    int col;
};

/// Signals a bug in the compiler pipeline (e.g. an ill-scoped residual
/// program reaching the target interpreter).
class InternalError : public Error {
public:
    using Error::Error;
};

/// Built-in total predicates on integer sequences, usable under rid.
struct Pred {
    enum class Kind { Sorted, LenAtMost, SumEven };

    Kind kind = Kind::Sorted;
    int bound = 0;  // meaningful for LenAtMost only

    static Pred sorted() { return {Kind::Sorted, 0}; }
    static Pred lenAtMost(int k) { return {Kind::LenAtMost, k}; }
    static Pred sumEven() { return {Kind::SumEven, 0}; }

    bool operator==(const Pred&) const = default;
};

/// Sorted here is non-increasing: every element >= its successor.
bool holds(const Pred& p, std::span<const int> xs);

std::string predToText(const Pred& p);

}  // namespace ndet
