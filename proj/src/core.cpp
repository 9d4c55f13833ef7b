#include "ndet/core.hpp"

namespace ndet {

bool holds(const Pred& p, std::span<const int> xs) {
    switch (p.kind) {
        case Pred::Kind::Sorted:
            for (std::size_t i = 1; i < xs.size(); i++) {
                if (xs[i - 1] < xs[i]) return false;
            }
            return true;
        case Pred::Kind::LenAtMost:
            return xs.size() <= static_cast<std::size_t>(p.bound);
        case Pred::Kind::SumEven: {
            long long sum = 0;
            for (int x : xs) sum += x;
            return sum % 2 == 0;
        }
    }
    return false;
}

std::string predToText(const Pred& p) {
    switch (p.kind) {
        case Pred::Kind::Sorted:
            return "sorted";
        case Pred::Kind::LenAtMost:
            return "(len<= " + std::to_string(p.bound) + ")";
        case Pred::Kind::SumEven:
            return "sum-even";
    }
    return "sorted";
}

}  // namespace ndet
