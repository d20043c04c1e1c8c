#include "escat/units.hpp"

#include <cmath>

namespace escat {

namespace {

std::array<int, 3> dim_exponents(Dim d) {
    switch (d) {
    case Dim::length: return {1, 0, 0};
    case Dim::inverse_length: return {-1, 0, 0};
    case Dim::mass: return {0, 1, 0};
    case Dim::time: return {0, 0, 1};
    case Dim::action: return {2, 1, -1}; // J s = kg m^2 / s
    case Dim::dimensionless: return {0, 0, 0};
    }
    throw UnitError("unknown dimension");
}

std::string exps_name(const std::array<int, 3>& e) {
    return "m^" + std::to_string(e[0]) + " kg^" + std::to_string(e[1]) +
           " s^" + std::to_string(e[2]);
}

} // namespace

Dim unit_dimension(Unit u) {
    switch (u) {
    case Unit::meter:
    case Unit::nanometer:
    case Unit::picometer: return Dim::length;
    case Unit::per_meter:
    case Unit::per_nanometer: return Dim::inverse_length;
    case Unit::kilogram:
    case Unit::atomic_mass_unit: return Dim::mass;
    case Unit::second:
    case Unit::picosecond:
    case Unit::nanosecond:
    case Unit::microsecond: return Dim::time;
    case Unit::joule_second: return Dim::action;
    case Unit::one: return Dim::dimensionless;
    }
    throw UnitError("unknown unit");
}

double unit_scale_to_si(Unit u) {
    switch (u) {
    case Unit::meter: return 1.0;
    case Unit::nanometer: return 1e-9;
    case Unit::picometer: return 1e-12;
    case Unit::per_meter: return 1.0;
    case Unit::per_nanometer: return 1e9;
    case Unit::kilogram: return 1.0;
    case Unit::atomic_mass_unit: return constants::amu;
    case Unit::second: return 1.0;
    case Unit::picosecond: return 1e-12;
    case Unit::nanosecond: return 1e-9;
    case Unit::microsecond: return 1e-6;
    case Unit::joule_second: return 1.0;
    case Unit::one: return 1.0;
    }
    throw UnitError("unknown unit");
}

std::string dim_name(Dim d) {
    switch (d) {
    case Dim::length: return "length";
    case Dim::inverse_length: return "inverse_length";
    case Dim::mass: return "mass";
    case Dim::time: return "time";
    case Dim::action: return "action";
    case Dim::dimensionless: return "dimensionless";
    }
    return "?";
}

double convert(double value, Unit from, Unit to) {
    if (unit_dimension(from) != unit_dimension(to))
        throw UnitError("cannot convert " + dim_name(unit_dimension(from)) +
                        " to " + dim_name(unit_dimension(to)));
    return value * (unit_scale_to_si(from) / unit_scale_to_si(to));
}

Quantity::Quantity(double si_value, Dim d) : value_(si_value), exps_(dim_exponents(d)) {}

Quantity Quantity::in(double value, Unit u) {
    return Quantity(value * unit_scale_to_si(u), unit_dimension(u));
}

double Quantity::expect(Dim d) const {
    if (exps_ != dim_exponents(d))
        throw UnitError("expected " + dim_name(d) + ", have " + exps_name(exps_));
    return value_;
}

double Quantity::as_dimensionless() const { return expect(Dim::dimensionless); }

bool Quantity::is(Dim d) const { return exps_ == dim_exponents(d); }

Quantity Quantity::operator+(const Quantity& o) const {
    if (exps_ != o.exps_)
        throw UnitError("addition across dimensions: " + exps_name(exps_) +
                        " + " + exps_name(o.exps_));
    return Quantity(value_ + o.value_, exps_);
}

Quantity Quantity::operator-(const Quantity& o) const {
    if (exps_ != o.exps_)
        throw UnitError("subtraction across dimensions: " + exps_name(exps_) +
                        " - " + exps_name(o.exps_));
    return Quantity(value_ - o.value_, exps_);
}

Quantity Quantity::operator*(const Quantity& o) const {
    return Quantity(value_ * o.value_,
                    {exps_[0] + o.exps_[0], exps_[1] + o.exps_[1], exps_[2] + o.exps_[2]});
}

Quantity Quantity::operator/(const Quantity& o) const {
    return Quantity(value_ / o.value_,
                    {exps_[0] - o.exps_[0], exps_[1] - o.exps_[1], exps_[2] - o.exps_[2]});
}

Quantity sqrt(const Quantity& q) {
    if (q.exps_[0] % 2 || q.exps_[1] % 2 || q.exps_[2] % 2)
        throw UnitError("sqrt of odd dimension exponents");
    if (q.value_ < 0.0)
        throw UnitError("sqrt of negative quantity");
    return Quantity(std::sqrt(q.value_),
                    {q.exps_[0] / 2, q.exps_[1] / 2, q.exps_[2] / 2});
}

} // namespace escat
