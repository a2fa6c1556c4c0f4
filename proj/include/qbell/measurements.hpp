#pragma once

#include <complex>
#include <vector>

namespace qbell {

enum class Party { alice, bob };

/// One party's projective measurement basis for one setting: d Fourier-phase
/// unit vectors of dimension d. Vectors are materialized only for d <= 4096;
/// above that components are computed on demand from the phase formula.
class MeasurementBasis {
  public:
    static constexpr int kMaterializeLimit = 4096;

    int dim() const { return d_; }
    Party party() const { return party_; }
    int setting() const { return setting_; }
    double phase() const { return phase_; }

    /// Component <m|v_k> of basis vector k.
    std::complex<double> component(int k, int m) const;

    friend MeasurementBasis best_basis(int d, Party party, int setting);

  private:
    MeasurementBasis(int d, Party party, int setting, double phase);

    int d_;
    Party party_;
    int setting_;
    double phase_;                                // alpha_a or beta_b
    std::vector<std::complex<double>> vectors_;   // row k holds vector k, empty when not materialized
};

/// The conjectured-optimal basis: Alice vector k has components
/// exp(i 2pi m(k+alpha_a)/d)/sqrt(d); Bob vector l has components
/// exp(i 2pi n(-l+beta_b)/d)/sqrt(d), with alpha_1=0, alpha_2=1/2,
/// beta_1=1/4, beta_2=-1/4.
MeasurementBasis best_basis(int d, Party party, int setting);

}  // namespace qbell
