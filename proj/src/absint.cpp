#include "ndet/absint.hpp"

#include <limits>

#include "ndet/eval.hpp"

namespace ndet {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

}  // namespace

ExtNat extPlus(ExtNat a, ExtNat b) {
    if (a.isInf || b.isInf) return ExtNat::inf();
    if (a.n > kMax - b.n) return ExtNat::inf();  // saturate rather than wrap
    return ExtNat::fin(a.n + b.n);
}

ExtNat extTimes(ExtNat a, ExtNat b) {
    if (a.isInf || b.isInf) return ExtNat::inf();
    if (a.n != 0 && b.n > kMax / a.n) return ExtNat::inf();
    return ExtNat::fin(a.n * b.n);
}

ExtNat extMax(ExtNat a, ExtNat b) {
    if (a.isInf || b.isInf) return ExtNat::inf();
    return ExtNat::fin(a.n > b.n ? a.n : b.n);
}

ExtNat extMin(ExtNat a, ExtNat b) {
    if (a.isInf) return b;
    if (b.isInf) return a;
    return ExtNat::fin(a.n < b.n ? a.n : b.n);
}

bool extLeq(ExtNat a, ExtNat b) {
    if (b.isInf) return true;
    if (a.isInf) return false;
    return a.n <= b.n;
}

std::string extToText(ExtNat a) { return a.isInf ? "inf" : std::to_string(a.n); }

NdetDeg degDet() { return {false, ExtNat::fin(1)}; }

NdetDeg degTop() { return {true, ExtNat::inf()}; }

NdetDeg degJoin(NdetDeg a, NdetDeg b) {
    return {a.can_fail || b.can_fail, extMax(a.choices, b.choices)};
}

NdetDeg degMerge(NdetDeg a, NdetDeg b) {
    return {a.can_fail || b.can_fail, extTimes(a.choices, b.choices)};
}

bool degLeq(NdetDeg a, NdetDeg b) {
    return (!a.can_fail || b.can_fail) && extLeq(a.choices, b.choices);
}

std::string degToText(NdetDeg d) {
    return std::string("{can_fail=") + (d.can_fail ? "true" : "false") +
           ", choices=" + extToText(d.choices) + "}";
}

NdetDeg analyze(const Term& t) {
    AbsBackend abs;
    return evalWith(abs, t);
}

}  // namespace ndet
