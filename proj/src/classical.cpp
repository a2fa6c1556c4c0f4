#include "qbell/classical.hpp"

#include <string>

#include "qbell/errors.hpp"

namespace qbell {

int lhv_value(const DeterministicStrategy& s) {
    return (s.a2 < s.b2 ? 1 : 0) + (s.b2 < s.a1 ? 1 : 0) + (s.a1 < s.b1 ? 1 : 0) + (s.b1 <= s.a2 ? 1 : 0);
}

LhvMinimum lhv_minimum(int d) {
    if (d < 1) {
        throw InvalidDimensionError("lhv_minimum: d must be >= 1, got " + std::to_string(d));
    }
    if (d > 40) {
        throw BudgetExceededError("lhv_minimum: d^4 enumeration capped at d = 40, got " + std::to_string(d));
    }
    LhvMinimum best{5, {0, 0, 0, 0}};
    for (int a1 = 0; a1 < d; ++a1) {
        for (int a2 = 0; a2 < d; ++a2) {
            for (int b1 = 0; b1 < d; ++b1) {
                for (int b2 = 0; b2 < d; ++b2) {
                    const DeterministicStrategy s{a1, a2, b1, b2};
                    const int v = lhv_value(s);
                    if (v < best.min_value) {  // first hit in lexicographic order wins ties
                        best = {v, s};
                    }
                }
            }
        }
    }
    return best;
}

}  // namespace qbell
