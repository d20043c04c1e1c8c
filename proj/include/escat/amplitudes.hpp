#ifndef ESCAT_AMPLITUDES_HPP
#define ESCAT_AMPLITUDES_HPP

#include "escat/sample.hpp"

#include <complex>

namespace escat {

/// Lattice sum over atom sites, sum_j exp(-i q . R_j).
std::complex<double> structure_factor(const Lattice& lattice, const WaveVector& q);

/// Kinematic Bragg amplitude for a lattice of identical Gaussian atoms:
///   f_q = prefactor * Z / |q|^2 * exp(-|q|^2 sigma^2 / 2) * sum_j exp(-i q . R_j)
/// sigma is the density standard deviation of one atom. The Coulomb
/// prefactor stands in for e^2 in natural amplitude units; every observable
/// downstream is a ratio and cancels it.
std::complex<double> f_q(const Lattice& lattice, const AtomWavefunction& wf,
                         const WaveVector& q, double coulomb_prefactor = 1.0);

/// Asymptotic (large-n) scattering coefficient: CM damping and CM phase on
/// top of the conventional amplitude,
///   c_q = exp(-|q|^2 sigma0^2 / 2) * exp(i q . <X>) * f_q
std::complex<double> c_q_asymptotic(const SampleState& state, const Lattice& lattice,
                                    const AtomWavefunction& wf, const WaveVector& q,
                                    double coulomb_prefactor = 1.0);

/// Relativistic de Broglie wavelength of an electron with the given kinetic
/// energy; convenience for choosing realistic |k0|.
double electron_wavelength_pm(double kinetic_energy_keV);

} // namespace escat

#endif
