#ifndef ESCAT_SAMPLE_HPP
#define ESCAT_SAMPLE_HPP

#include "escat/errors.hpp"
#include "escat/units.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace escat {

/// 3-component real vector. All library-internal instances are SI
/// (meters for positions, 1/m for wave vectors); factories convert
/// from the domain units used at the boundary.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Momentum transfer / beam wave vector, stored in 1/m.
struct WaveVector : Vec3 {
    WaveVector() = default;
    explicit WaveVector(const Vec3& v) : Vec3(v) {}

    static WaveVector per_nm(double qx, double qy, double qz) {
        const double s = unit_scale_to_si(Unit::per_nanometer);
        return WaveVector{{qx * s, qy * s, qz * s}};
    }
    /// 1D convenience: q along z.
    static WaveVector axial_per_nm(double qz) { return per_nm(0.0, 0.0, qz); }
};

/// Single-atom amplitude profile. The width parameter sigma is always the
/// standard deviation of the probability density |phi|^2, not of the
/// amplitude. Analytic kinds carry closed-form characteristic functions;
/// tabulated profiles are integrated on their native grid.
class AtomWavefunction {
public:
    enum class Kind { gaussian, box, triangle, tabulated };

    static AtomWavefunction gaussian(double sigma_m);
    static AtomWavefunction box(double sigma_m);
    static AtomWavefunction triangle(double sigma_m);
    /// grid: strictly increasing positions (m) with complex amplitudes;
    /// |phi|^2 must integrate to 1 within 1e-8 (trapezoidal).
    static AtomWavefunction tabulated(std::vector<double> positions_m,
                                      std::vector<std::complex<double>> amplitudes);

    Kind kind() const { return kind_; }
    bool is_gaussian() const { return kind_ == Kind::gaussian; }

    /// Density standard deviation (m). For tabulated profiles this is the
    /// trapezoidal second moment of |phi|^2 about its mean.
    double sigma() const { return sigma_; }

    /// Probability density |phi(x)|^2 of a centered atom (analytic kinds).
    double density(double x) const;

    /// Support half-width of the centered density (m); the density is
    /// identically zero (or negligible, for the Gaussian) outside it.
    double support_halfwidth() const;

    /// Panel boundaries for piecewise-smooth quadrature of the centered
    /// density (kinks and jumps land on panel edges).
    std::vector<double> quadrature_breakpoints() const;

    const std::vector<double>& grid_positions() const { return grid_x_; }
    const std::vector<std::complex<double>>& grid_amplitudes() const { return grid_amp_; }

private:
    AtomWavefunction(Kind k, double sigma) : kind_(k), sigma_(sigma) {}

    Kind kind_;
    double sigma_ = 0.0;
    std::vector<double> grid_x_;
    std::vector<std::complex<double>> grid_amp_;
};

/// Rigid monoatomic lattice: atom sites R_j, atomic number Z, per-atom mass.
class Lattice {
public:
    Lattice(std::vector<Vec3> positions_m, int atomic_number, double atom_mass_kg);

    /// n atoms spaced along z starting at the origin.
    static Lattice linear_chain(int n, double spacing_m, int atomic_number,
                                double atom_mass_kg);

    const std::vector<Vec3>& positions() const { return positions_; }
    int size() const { return static_cast<int>(positions_.size()); }
    int atomic_number() const { return atomic_number_; }
    double atom_mass() const { return atom_mass_kg_; }
    double total_mass() const { return atom_mass_kg_ * size(); }
    Vec3 mean_position() const;

private:
    std::vector<Vec3> positions_;
    int atomic_number_;
    double atom_mass_kg_;
};

/// Gaussian description of the scatterer's center of mass: everything the
/// asymptotic reduced density matrix needs to know about the sample state.
struct SampleState {
    Vec3 cm_mean;        // m
    double sigma0;       // m, >= 0 (0 is the static-potential limit)
    double total_mass;   // kg

    SampleState(Vec3 cm_mean_m, double sigma0_m, double total_mass_kg);

    static SampleState from_domain(Vec3 cm_mean_nm, double sigma0_pm, double mass_amu);
};

/// CM state of a lattice of identical Gaussian atoms: sigma0 = sigma/sqrt(n).
/// Non-Gaussian profiles have no closed-form CM state here; route them
/// through the oracle module.
SampleState cm_state_from_lattice(const Lattice& lattice, const AtomWavefunction& wf);

} // namespace escat

#endif
