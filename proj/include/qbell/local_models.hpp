#pragma once

#include <array>
#include <random>

#include "qbell/bell.hpp"
#include "qbell/classical.hpp"
#include "qbell/random.hpp"

namespace qbell {

/// The four d=2 outcome tables of one behaviour, indexed by setting pair.
struct SettingQuad {
    JointDistribution p11;
    JointDistribution p12;
    JointDistribution p21;
    JointDistribution p22;
};

/// Random point of the local polytope: a convex mixture of the 16
/// deterministic d=2 strategies. Such behaviours have consistent marginals,
/// which is exactly what the CHSH correspondence requires.
inline SettingQuad random_local_quadruple(std::mt19937_64& rng) {
    std::array<double, 16> w{};
    double total = 0.0;
    for (double& x : w) {
        x = uniform01(rng) + 1e-9;
        total += x;
    }
    std::array<std::vector<double>, 4> tables;  // order: (1,1),(1,2),(2,1),(2,2)
    for (auto& t : tables) {
        t.assign(4, 0.0);
    }
    int idx = 0;
    for (int a1 = 0; a1 < 2; ++a1) {
        for (int a2 = 0; a2 < 2; ++a2) {
            for (int b1 = 0; b1 < 2; ++b1) {
                for (int b2 = 0; b2 < 2; ++b2) {
                    const double p = w[static_cast<std::size_t>(idx++)] / total;
                    tables[0][static_cast<std::size_t>(a1 * 2 + b1)] += p;
                    tables[1][static_cast<std::size_t>(a1 * 2 + b2)] += p;
                    tables[2][static_cast<std::size_t>(a2 * 2 + b1)] += p;
                    tables[3][static_cast<std::size_t>(a2 * 2 + b2)] += p;
                }
            }
        }
    }
    return SettingQuad{
        JointDistribution(2, 1, 1, std::move(tables[0])),
        JointDistribution(2, 1, 2, std::move(tables[1])),
        JointDistribution(2, 2, 1, std::move(tables[2])),
        JointDistribution(2, 2, 2, std::move(tables[3])),
    };
}

/// The four quantum tables for a Schmidt state with the conjectured-optimal
/// bases.
inline SettingQuad quantum_quadruple(const SchmidtState& state) {
    const int d = state.dim();
    const MeasurementBasis a1 = best_basis(d, Party::alice, 1);
    const MeasurementBasis a2 = best_basis(d, Party::alice, 2);
    const MeasurementBasis b1 = best_basis(d, Party::bob, 1);
    const MeasurementBasis b2 = best_basis(d, Party::bob, 2);
    return SettingQuad{
        joint_distribution(state, a1, b1),
        joint_distribution(state, a1, b2),
        joint_distribution(state, a2, b1),
        joint_distribution(state, a2, b2),
    };
}

inline ChshCheck chsh_identity_check(const SettingQuad& quad) {
    return chsh_identity_check(quad.p11, quad.p12, quad.p21, quad.p22);
}

}  // namespace qbell
