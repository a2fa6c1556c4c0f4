#pragma once

namespace qbell {

/// Deterministic hidden-variable strategy: the fixed outcome in [0, d) that
/// each of the four measurements yields. These are the extreme points of the
/// local polytope; mixtures follow by convexity.
struct DeterministicStrategy {
    int a1;
    int a2;
    int b1;
    int b2;
};

/// Indicator sum [a2<b2] + [b2<a1] + [a1<b1] + [b1<=a2], an integer in 0..4.
int lhv_value(const DeterministicStrategy& strategy);

struct LhvMinimum {
    int min_value;
    DeterministicStrategy witness;  // lexicographically smallest argmin (a1,a2,b1,b2)
};

/// Minimum of lhv_value over all d^4 deterministic strategies (d <= 40).
LhvMinimum lhv_minimum(int d);

}  // namespace qbell
