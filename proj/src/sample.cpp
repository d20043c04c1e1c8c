#include "escat/sample.hpp"

#include <algorithm>

namespace escat {

namespace {

bool finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

} // namespace

AtomWavefunction AtomWavefunction::gaussian(double sigma_m) {
    if (!(sigma_m > 0.0) || !std::isfinite(sigma_m))
        throw ValidationError("gaussian atom profile requires sigma > 0");
    return AtomWavefunction(Kind::gaussian, sigma_m);
}

AtomWavefunction AtomWavefunction::box(double sigma_m) {
    if (!(sigma_m > 0.0) || !std::isfinite(sigma_m))
        throw ValidationError("box atom profile requires sigma > 0");
    return AtomWavefunction(Kind::box, sigma_m);
}

AtomWavefunction AtomWavefunction::triangle(double sigma_m) {
    if (!(sigma_m > 0.0) || !std::isfinite(sigma_m))
        throw ValidationError("triangle atom profile requires sigma > 0");
    return AtomWavefunction(Kind::triangle, sigma_m);
}

AtomWavefunction AtomWavefunction::tabulated(std::vector<double> positions_m,
                                             std::vector<std::complex<double>> amplitudes) {
    if (positions_m.size() != amplitudes.size() || positions_m.size() < 2)
        throw ValidationError("tabulated profile needs matching position/amplitude arrays");
    for (std::size_t i = 1; i < positions_m.size(); ++i)
        if (!(positions_m[i] > positions_m[i - 1]))
            throw ValidationError("tabulated grid must be strictly increasing");

    // trapezoidal moments of |phi|^2
    const std::size_t n = positions_m.size();
    double norm = 0.0, mean = 0.0, second = 0.0;
    auto dens = [&](std::size_t i) { return std::norm(amplitudes[i]); };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = positions_m[i + 1] - positions_m[i];
        norm += 0.5 * h * (dens(i) + dens(i + 1));
        mean += 0.5 * h * (dens(i) * positions_m[i] + dens(i + 1) * positions_m[i + 1]);
        second += 0.5 * h * (dens(i) * positions_m[i] * positions_m[i] +
                             dens(i + 1) * positions_m[i + 1] * positions_m[i + 1]);
    }
    if (std::abs(norm - 1.0) > 1e-8)
        throw ValidationError("tabulated |phi|^2 must integrate to 1 (got " +
                              std::to_string(norm) + ")");

    AtomWavefunction wf(Kind::tabulated, std::sqrt(std::max(0.0, second - mean * mean)));
    wf.grid_x_ = std::move(positions_m);
    wf.grid_amp_ = std::move(amplitudes);
    return wf;
}

double AtomWavefunction::density(double x) const {
    switch (kind_) {
    case Kind::gaussian: {
        const double u = x / sigma_;
        return std::exp(-0.5 * u * u) / (std::sqrt(2.0 * M_PI) * sigma_);
    }
    case Kind::box: {
        const double half = sigma_ * std::sqrt(3.0); // full width sigma*sqrt(12)
        return std::abs(x) <= half ? 1.0 / (2.0 * half) : 0.0;
    }
    case Kind::triangle: {
        const double a = sigma_ * std::sqrt(6.0);
        return std::abs(x) <= a ? (1.0 - std::abs(x) / a) / a : 0.0;
    }
    case Kind::tabulated:
        throw ValidationError("tabulated profile has no analytic density");
    }
    return 0.0;
}

double AtomWavefunction::support_halfwidth() const {
    switch (kind_) {
    case Kind::gaussian: return 8.0 * sigma_; // tail mass beyond 8 sigma ~ 1e-15
    case Kind::box: return sigma_ * std::sqrt(3.0);
    case Kind::triangle: return sigma_ * std::sqrt(6.0);
    case Kind::tabulated: return 0.5 * (grid_x_.back() - grid_x_.front());
    }
    return 0.0;
}

std::vector<double> AtomWavefunction::quadrature_breakpoints() const {
    const double h = support_halfwidth();
    if (kind_ == Kind::triangle)
        return {-h, 0.0, h}; // kink at the apex
    return {-h, h};
}

Lattice::Lattice(std::vector<Vec3> positions_m, int atomic_number, double atom_mass_kg)
    : positions_(std::move(positions_m)), atomic_number_(atomic_number),
      atom_mass_kg_(atom_mass_kg) {
    if (positions_.empty())
        throw ValidationError("lattice needs at least one atom");
    for (const auto& p : positions_)
        if (!finite(p))
            throw ValidationError("lattice positions must be finite");
    if (atomic_number_ < 1)
        throw ValidationError("atomic number must be >= 1");
    if (!(atom_mass_kg_ > 0.0) || !std::isfinite(atom_mass_kg_))
        throw ValidationError("atom mass must be > 0");
}

Lattice Lattice::linear_chain(int n, double spacing_m, int atomic_number,
                              double atom_mass_kg) {
    if (n < 1)
        throw ValidationError("linear chain needs n >= 1");
    if (!(spacing_m > 0.0))
        throw ValidationError("linear chain needs spacing > 0");
    std::vector<Vec3> pos(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        pos[static_cast<std::size_t>(j)] = {0.0, 0.0, j * spacing_m};
    return Lattice(std::move(pos), atomic_number, atom_mass_kg);
}

Vec3 Lattice::mean_position() const {
    Vec3 m{};
    for (const auto& p : positions_)
        m = m + p;
    return m / static_cast<double>(size());
}

SampleState::SampleState(Vec3 cm_mean_m, double sigma0_m, double total_mass_kg)
    : cm_mean(cm_mean_m), sigma0(sigma0_m), total_mass(total_mass_kg) {
    if (!finite(cm_mean) || !std::isfinite(sigma0) || !std::isfinite(total_mass))
        throw ValidationError("sample state fields must be finite");
    if (sigma0 < 0.0)
        throw ValidationError("sigma0 must be >= 0");
    if (!(total_mass > 0.0))
        throw ValidationError("total mass must be > 0");
}

SampleState SampleState::from_domain(Vec3 cm_mean_nm, double sigma0_pm, double mass_amu) {
    const double lnm = unit_scale_to_si(Unit::nanometer);
    return SampleState(cm_mean_nm * lnm,
                       convert(sigma0_pm, Unit::picometer, Unit::meter),
                       convert(mass_amu, Unit::atomic_mass_unit, Unit::kilogram));
}

SampleState cm_state_from_lattice(const Lattice& lattice, const AtomWavefunction& wf) {
    if (!wf.is_gaussian())
        throw ValidationError("analytic CM state is defined for Gaussian atoms only; "
                              "route other profiles through the oracle");
    const double n = lattice.size();
    return SampleState(lattice.mean_position(), wf.sigma() / std::sqrt(n),
                       lattice.total_mass());
}

} // namespace escat
