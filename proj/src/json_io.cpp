#include "ndet/json_io.hpp"

#include <json.hpp>

namespace ndet {

std::string bagToJson(const ChoiceBag& bag) {
    nlohmann::json j(bag);
    return j.dump();
}

std::string degToJson(const NdetDeg& d) {
    nlohmann::json j;
    j["can_fail"] = d.can_fail;
    if (d.choices.isInf) {
        j["choices"] = "inf";
    } else {
        j["choices"] = d.choices.n;
    }
    return j.dump();
}

}  // namespace ndet
