#pragma once

#include <string>

#include "ndet/absint.hpp"
#include "ndet/core.hpp"

namespace ndet {

// [[1,2,3],[2,1,3]] — compact, no spaces.
std::string bagToJson(const ChoiceBag& bag);

// {"can_fail":true,"choices":"inf"} or {"can_fail":false,"choices":3}
std::string degToJson(const NdetDeg& d);

}  // namespace ndet
