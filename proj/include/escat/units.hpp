#ifndef ESCAT_UNITS_HPP
#define ESCAT_UNITS_HPP

#include "escat/errors.hpp"

#include <array>
#include <string>

namespace escat {

/// CODATA 2018 constants, SI. Fixed at compile time, never configurable.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;              // J s
inline constexpr double amu = 1.66053906660e-27;             // kg
inline constexpr double elementary_charge = 1.602176634e-19; // C
inline constexpr double electron_mass = 9.1093837015e-31;    // kg
inline constexpr double speed_of_light = 299792458.0;        // m/s
inline constexpr double planck = 6.62607015e-34;             // J s
} // namespace constants

/// The dimensions this artifact works with. Internally a dimension is an
/// exponent triple over (length, mass, time); only these six are nameable
/// at the API boundary.
enum class Dim {
    length,
    inverse_length,
    mass,
    time,
    action,
    dimensionless,
};

/// Supported unit tags for boundary conversions.
enum class Unit {
    meter,
    nanometer,
    picometer,
    per_meter,
    per_nanometer,
    kilogram,
    atomic_mass_unit,
    second,
    picosecond,
    nanosecond,
    microsecond,
    joule_second,
    one,
};

Dim unit_dimension(Unit u);
double unit_scale_to_si(Unit u);
std::string dim_name(Dim d);

/// Exact scale-factor conversion between units of the same dimension.
/// Throws UnitError on dimension mismatch.
double convert(double value, Unit from, Unit to);

/// A checked scalar: value in SI plus a dimension exponent triple.
/// Addition/subtraction require identical dimensions; products track
/// exponents so expressions like sigma0^2 * M / hbar stay auditable.
class Quantity {
public:
    Quantity(double si_value, Dim d);

    /// Boundary constructor: converts to SI on entry.
    static Quantity in(double value, Unit u);

    double si() const { return value_; }

    /// Value under the named dimension; throws UnitError if the reduced
    /// exponents do not match.
    double expect(Dim d) const;

    /// Dimensionless-exponent guard: the argument of every e^(-x) in this
    /// codebase goes through here.
    double as_dimensionless() const;

    bool is(Dim d) const;

    Quantity operator+(const Quantity& o) const;
    Quantity operator-(const Quantity& o) const;
    Quantity operator*(const Quantity& o) const;
    Quantity operator/(const Quantity& o) const;

private:
    Quantity(double v, std::array<int, 3> exps) : value_(v), exps_(exps) {}

    double value_;
    std::array<int, 3> exps_; // exponents of (m, kg, s)

    friend Quantity sqrt(const Quantity& q);
};

/// Square root with halved exponents; throws UnitError on odd exponents
/// or negative values.
Quantity sqrt(const Quantity& q);

} // namespace escat

#endif
