#include "escat/amplitudes.hpp"

#include <cmath>

namespace escat {

namespace {

// Exponents like q^2 sigma^2 are assembled through the unit layer so a
// mixed-unit slip cannot reach exp().
double damping_exponent(double q_norm_per_m, double length_m) {
    const Quantity qs = Quantity(q_norm_per_m, Dim::inverse_length) *
                        Quantity(length_m, Dim::length);
    const double x = qs.as_dimensionless();
    return x * x;
}

} // namespace

std::complex<double> structure_factor(const Lattice& lattice, const WaveVector& q) {
    std::complex<double> s{0.0, 0.0};
    for (const auto& r : lattice.positions()) {
        const double phase = -q.dot(r);
        s += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return s;
}

std::complex<double> f_q(const Lattice& lattice, const AtomWavefunction& wf,
                         const WaveVector& q, double coulomb_prefactor) {
    const double q2 = q.norm2();
    if (q2 == 0.0)
        throw NumericError("forward beam q = 0: Rutherford envelope diverges");
    if (!wf.is_gaussian())
        throw NumericError("f_q has a closed form for Gaussian atoms only; "
                           "route other profiles through the oracle");
    const double envelope = coulomb_prefactor * lattice.atomic_number() / q2;
    const double atom_ff = std::exp(-0.5 * damping_exponent(q.norm(), wf.sigma()));
    return envelope * atom_ff * structure_factor(lattice, q);
}

std::complex<double> c_q_asymptotic(const SampleState& state, const Lattice& lattice,
                                    const AtomWavefunction& wf, const WaveVector& q,
                                    double coulomb_prefactor) {
    const double damping = std::exp(-0.5 * damping_exponent(q.norm(), state.sigma0));
    const double phase = q.dot(state.cm_mean);
    return damping * std::complex<double>(std::cos(phase), std::sin(phase)) *
           f_q(lattice, wf, q, coulomb_prefactor);
}

double electron_wavelength_pm(double kinetic_energy_keV) {
    if (!(kinetic_energy_keV > 0.0))
        throw NumericError("electron wavelength needs kinetic energy > 0");
    const double E = kinetic_energy_keV * 1e3 * constants::elementary_charge; // J
    const double me = constants::electron_mass;
    const double c = constants::speed_of_light;
    const double lambda_m =
        constants::planck / std::sqrt(2.0 * me * E * (1.0 + E / (2.0 * me * c * c)));
    return convert(lambda_m, Unit::meter, Unit::picometer);
}

} // namespace escat
