// constants.hpp — physical constants and environment geometry

#pragma once

#include <numbers>

#include "openbath/errors.hpp"

namespace openbath {

// Natural units (hbar = c = kB = 1) are the default everywhere.
struct PhysConsts {
    double hbar{1.0};
    double c{1.0};   // dispersion constant in omega = c|k|
    double kB{1.0};

    void validate() const {
        if (!(hbar > 0.0) || !(c > 0.0) || !(kB > 0.0))
            throw InvalidArgument("PhysConsts must be strictly positive");
    }
};

// Geometry of the environment coupling. Fixes the prefactor in
//   chi(t) = prefactor * ∫_0^∞ dω ω² |f(ω)|² sin(ωt).
enum class Geometry { OneD, ThreeD, ScalarMode, VectorMode };

inline double susceptibility_prefactor(Geometry g, const PhysConsts& pc = {}) {
    const double base = 8.0 * std::numbers::pi / (pc.hbar * pc.c * pc.c * pc.c);
    switch (g) {
        case Geometry::ThreeD:
            return 2.0 * base / 3.0;  // 16π/3ħc³
        case Geometry::OneD:
        case Geometry::ScalarMode:
        case Geometry::VectorMode:
            return base;              // 8π/ħc³
    }
    throw InvalidArgument("unknown Geometry");
}

// Frequency (or time) window [lo, hi]; used wherever an integration range
// must be supplied by the caller.
struct Window {
    double lo{0.0};
    double hi{0.0};

    void validate() const {
        if (!(lo < hi)) throw InvalidArgument("Window requires lo < hi");
    }
};

// Environment specification: geometry + constants + temperature (0 = vacuum).
struct BathSpec {
    Geometry geometry{Geometry::OneD};
    PhysConsts consts{};
    double temperature{0.0};

    void validate() const {
        consts.validate();
        if (!(temperature >= 0.0)) throw InvalidArgument("temperature must be >= 0");
    }
};

} // namespace openbath
