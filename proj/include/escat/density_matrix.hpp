#ifndef ESCAT_DENSITY_MATRIX_HPP
#define ESCAT_DENSITY_MATRIX_HPP

#include "escat/amplitudes.hpp"
#include "escat/sample.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

namespace escat {

/// Incident wave vector plus the ordered set of momentum transfers that
/// spans the reduced density matrix. Transfers are distinct and nonzero;
/// the forward beam is excluded because the Rutherford envelope diverges.
class BeamSet {
public:
    BeamSet(WaveVector k0, std::vector<WaveVector> transfers);

    const WaveVector& k0() const { return k0_; }
    const std::vector<WaveVector>& transfers() const { return transfers_; }
    int dim() const { return static_cast<int>(transfers_.size()); }

    /// True when every transfer lies on the z axis (the oracle's geometry).
    bool is_axial() const;

private:
    WaveVector k0_;
    std::vector<WaveVector> transfers_;
};

/// The probe electron's reduced density matrix gamma_{q,q'} over a beam
/// basis: Hermitian, trace 1, positive semidefinite. Construction
/// normalizes and verifies all three.
class DensityMatrix {
public:
    /// Normalizes `unnormalized` to unit trace and validates invariants.
    DensityMatrix(BeamSet basis, Eigen::MatrixXcd unnormalized);

    const BeamSet& basis() const { return basis_; }
    const Eigen::MatrixXcd& gamma() const { return gamma_; }
    int dim() const { return static_cast<int>(gamma_.rows()); }

    /// Ascending eigenvalues of gamma (real, from the Hermitian solver).
    Eigen::VectorXd eigenvalues() const;

private:
    BeamSet basis_;
    Eigen::MatrixXcd gamma_;
};

/// Boost-state overlap <F_q'|F_q> for a Gaussian CM state:
///   exp(i (q'-q) . <X>) * exp(-|q'-q|^2 sigma0^2 / 2)
std::complex<double> overlap_gaussian(const SampleState& state, const WaveVector& q,
                                      const WaveVector& q_prime);

/// Asymptotic reduced density matrix, direct form:
///   gamma_{q,q'} ~ exp(-(|q|^2 + |q'|^2 - q'.q) sigma0^2) f_q f_q'*
/// normalized to unit trace.
DensityMatrix build_rho_asymptotic(const SampleState& state, const Lattice& lattice,
                                   const AtomWavefunction& wf, const BeamSet& beams,
                                   double coulomb_prefactor = 1.0);

/// Same matrix assembled the factorized way, gamma_{q,q'} ~ c_q c_q'* <F_q'|F_q>.
/// Kept as an independent code path; the two must agree to 1e-12.
DensityMatrix build_rho_factorized(const SampleState& state, const Lattice& lattice,
                                   const AtomWavefunction& wf, const BeamSet& beams,
                                   double coulomb_prefactor = 1.0);

/// tr(rho^2) = sum |gamma_{q,q'}|^2. In (1/d, 1]; 1 iff pure.
double purity(const DensityMatrix& rho);

enum class EntropyBase { nats, bits };

/// -sum lambda_i ln lambda_i from the Hermitian eigendecomposition, with
/// 0 ln 0 := 0. Eigenvalues within 1e-10 of [0,1] are clipped; anything
/// further out is a positivity violation.
double von_neumann_entropy(const DensityMatrix& rho,
                           EntropyBase base = EntropyBase::nats);

/// HRTEM image intensity I(r) = <r|rho|r> = sum gamma_{q,q'} e^{i(q-q').r},
/// normalized (via the trace) to unit mean over a lattice period.
double intensity(const DensityMatrix& rho, const Vec3& r_m);

/// Two-beam fringe contrast (I_max - I_min)/(I_max + I_min), scanned over
/// one fringe period and refined to machine precision; equals 2|gamma_01|.
/// scan_direction defaults to the difference of the two transfers.
double fringe_contrast(const DensityMatrix& rho,
                       std::optional<Vec3> scan_direction = std::nullopt);

} // namespace escat

#endif
