#pragma once

#include <string>

#include "ndet/core.hpp"
#include "ndet/sexp.hpp"

namespace ndet::sexpio {

[[noreturn]] void fail(const sexp::Node& at, const std::string& msg);

// Atom holding a base-10 integer.
int parseInt(const sexp::Node& node);

// i-th argument of a list form whose head atom is the form name; checks arity.
const sexp::Node& arg(const sexp::Node& node, std::size_t i, std::size_t arity);

// `sorted` | `(len<= K)` | `sum-even`
Pred parsePred(const sexp::Node& node);

}  // namespace ndet::sexpio
