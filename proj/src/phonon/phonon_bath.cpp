// Copyright 2026 The DQD Decoherence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dqd/phonon_bath.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "dqd/constants.hpp"
#include "dqd/errors.hpp"
#include "dqd/quadrature.hpp"

namespace dqd {
namespace {

using constants::boltzmann;
using constants::hbar;
using constants::pi;

constexpr int kSeriesTerms = 18;  // x^7 ... x^41

// Taylor coefficients of the absorption bracket, c[m] multiplies x^(7+2m).
std::array<double, kSeriesTerms> bracket_series() {
    std::array<double, kSeriesTerms> c{};
    for (int m = 0; m < kSeriesTerms; ++m) {
        const int n = 7 + 2 * m;
        auto factorial = [](int k) {
            double f = 1.0;
            for (int i = 2; i <= k; ++i) f *= i;
            return f;
        };
        auto sign = [](int j) { return (j % 2 == 0) ? 1.0 : -1.0; };
        const int j3 = (n - 3) / 2;  // 10 x^3 cos x and -45 x^2 sin x
        const int j1 = (n - 1) / 2;  // -105 x cos x and 105 sin x
        c[m] = 10.0 * sign(j3) / factorial(2 * j3) - 45.0 * sign(j3) / factorial(2 * j3 + 1) -
               105.0 * sign(j1) / factorial(2 * j1) + 105.0 * sign(j1) / factorial(2 * j1 + 1);
    }
    return c;
}

void require_positive(double value, const char *name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << name << " must be positive and finite, got " << value;
        throw InvalidArgument(msg.str());
    }
}

std::size_t round_up(std::size_t n, std::size_t multiple) {
    return ((n + multiple - 1) / multiple) * multiple;
}

bool close_enough(double previous, double current, double tolerance) {
    return std::abs(current - previous) <= tolerance * std::abs(current);
}

}  // namespace

void MaterialSpec::validate() const {
    require_positive(piezo_modulus, "material.piezo_modulus");
    require_positive(mass_density, "material.mass_density");
    require_positive(sound_speed, "material.sound_speed");
}

void DeviceGeometry::validate() const {
    require_positive(dot_size, "geometry.dot_size");
    require_positive(separation, "geometry.separation");
}

std::optional<std::string> overlap_warning(const DeviceGeometry &geometry) {
    const double ratio = geometry.separation / geometry.dot_size;
    if (ratio > 3.0) return std::nullopt;
    std::ostringstream msg;
    msg << "dot separation L/a = " << ratio
        << " <= 3: dot wavefunctions overlap and the form factor is unreliable";
    return msg.str();
}

void BathSpec::validate() const {
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
        throw InvalidArgument("bath.temperature must be >= 0 and finite");
    }
}

void QuadratureConfig::validate() const {
    if (!(relative_tolerance > 0.0 && relative_tolerance <= 1e-2)) {
        throw InvalidArgument("quadrature.relative_tolerance must lie in (0, 1e-2]");
    }
    if (max_refinements < 1) {
        throw InvalidArgument("quadrature.max_refinements must be >= 1");
    }
    if (!(q_cutoff_factor >= 6.0)) {
        throw InvalidArgument("quadrature.q_cutoff_factor must be >= 6");
    }
}

double thermal_occupation(double phonon_energy, double temperature) {
    require_positive(phonon_energy, "phonon_energy");
    if (!(temperature >= 0.0)) throw InvalidArgument("temperature must be >= 0");
    if (temperature == 0.0) return 0.0;
    const double x = phonon_energy / (boltzmann * temperature);
    return 1.0 / std::expm1(x);
}

double absorption_bracket(double x) {
    if (std::abs(x) < 1.0) {
        static const std::array<double, kSeriesTerms> c = bracket_series();
        const double x2 = x * x;
        double sum = 0.0;
        for (int m = kSeriesTerms - 1; m >= 0; --m) sum = sum * x2 + c[m];
        return sum * x2 * x2 * x2 * x;
    }
    const double x2 = x * x;
    return x2 * x2 * x + 5.0 * x * (2.0 * x2 - 21.0) * std::cos(x) +
           15.0 * (7.0 - 3.0 * x2) * std::sin(x);
}

double form_factor_solid_angle(double x) {
    if (!(x >= 0.0)) throw InvalidArgument("form_factor_solid_angle: x must be >= 0");
    if (x == 0.0) return 0.0;
    const double x2 = x * x;
    return 0.4 * pi * absorption_bracket(x) / (x2 * x2 * x);
}

Vec3 polarization_vector(Polarization polarization, const Vec3 &direction) {
    const double norm = std::hypot(direction[0], direction[1], direction[2]);
    if (!(norm > 0.0)) throw InvalidArgument("polarization_vector: zero direction");
    const double cos_t = std::clamp(direction[2] / norm, -1.0, 1.0);
    const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
    const double phi = std::atan2(direction[1], direction[0]);
    const double cos_p = std::cos(phi);
    const double sin_p = std::sin(phi);
    switch (polarization) {
        case Polarization::longitudinal:
            return {sin_t * cos_p, sin_t * sin_p, cos_t};
        case Polarization::transverse1:
            return {sin_p, -cos_p, 0.0};
        case Polarization::transverse2:
            return {-cos_t * cos_p, -cos_t * sin_p, sin_t};
    }
    throw InvalidArgument("polarization_vector: unknown polarisation");
}

double coupling_sq(const Vec3 &q, Polarization polarization, const MaterialSpec &material,
                   const DeviceGeometry &geometry, double sample_volume) {
    const double qn = std::hypot(q[0], q[1], q[2]);
    if (!(qn > 0.0)) throw InvalidArgument("coupling_sq: zero wave vector");
    require_positive(sample_volume, "sample_volume");
    const Vec3 e = {q[0] / qn, q[1] / qn, q[2] / qn};
    const Vec3 xi = polarization_vector(polarization, e);
    const double p = xi[0] * e[1] * e[2] + xi[1] * e[0] * e[2] + xi[2] * e[0] * e[1];
    const double s = std::sin(0.5 * q[0] * geometry.separation);
    const double a = geometry.dot_size;
    const double m = material.piezo_modulus;
    return hbar * m * m /
           (2.0 * material.mass_density * qn * material.sound_speed * sample_volume) *
           std::exp(-0.5 * a * a * qn * qn) * p * p * s * s;
}

double resonant_wavenumber(const MaterialSpec &material, double splitting_eps) {
    require_positive(splitting_eps, "splitting_eps");
    return splitting_eps / (hbar * material.sound_speed);
}

double spontaneous_rate_closed(const MaterialSpec &material, const DeviceGeometry &geometry,
                               double splitting_eps) {
    const double k = resonant_wavenumber(material, splitting_eps);
    const double x = k * geometry.separation;
    const double a = geometry.dot_size;
    const double m = material.piezo_modulus;
    const double s = material.sound_speed;
    // M^2 / (20 pi rho s^2 hbar L^5 k^4) * bracket(kL), with L^5 k^4 = x^5 / k.
    return m * m * k / (20.0 * pi * material.mass_density * s * s * hbar) *
           std::exp(-0.5 * a * a * k * k) * (absorption_bracket(x) / std::pow(x, 5));
}

double absorption_rate_closed(const MaterialSpec &material, const DeviceGeometry &geometry,
                              double splitting_eps, const BathSpec &bath) {
    bath.validate();
    const double n = thermal_occupation(splitting_eps, bath.temperature);
    if (n == 0.0) return 0.0;
    return n * spontaneous_rate_closed(material, geometry, splitting_eps);
}

double absorption_rate_quadrature(const MaterialSpec &material, const DeviceGeometry &geometry,
                                  double splitting_eps, const BathSpec &bath,
                                  const QuadratureConfig &config) {
    config.validate();
    bath.validate();
    const double n_th = thermal_occupation(splitting_eps, bath.temperature);
    if (n_th == 0.0) return 0.0;
    const double k = resonant_wavenumber(material, splitting_eps);
    constexpr double volume = 1.0;

    auto solid_angle = [&](std::size_t order) {
        const GaussLegendreRule mu = gauss_legendre(order, -1.0, 1.0);
        const GaussLegendreRule phi = gauss_legendre(order, 0.0, 2.0 * pi);
        double sum = 0.0;
        for (std::size_t i = 0; i < order; ++i) {
            const double cos_t = mu.nodes[i];
            const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
            for (std::size_t j = 0; j < order; ++j) {
                const Vec3 q = {k * sin_t * std::cos(phi.nodes[j]),
                                k * sin_t * std::sin(phi.nodes[j]), k * cos_t};
                double g2 = 0.0;
                for (Polarization pol : kAllPolarizations) {
                    g2 += coupling_sq(q, pol, material, geometry, volume);
                }
                sum += mu.weights[i] * phi.weights[j] * g2;
            }
        }
        return sum;
    };

    const double x = k * geometry.separation;
    std::size_t order = round_up(16 + static_cast<std::size_t>(2.0 * x / pi), 8);
    double previous = solid_angle(order);
    double current = previous;
    bool converged = false;
    for (int r = 0; r < config.max_refinements; ++r) {
        order *= 2;
        current = solid_angle(order);
        if (current == 0.0 || close_enough(previous, current, config.relative_tolerance)) {
            converged = true;
            break;
        }
        previous = current;
    }
    if (!converged) {
        throw ConvergenceError("absorption_rate_quadrature: angular rule did not converge",
                               previous, current);
    }
    // V/(2 pi)^3 * (2 pi / hbar) * N * int q^2 dq delta(eps - hbar s q) (...) = ... k^2/(hbar s)
    const double s = material.sound_speed;
    return volume / std::pow(2.0 * pi, 3) * (2.0 * pi / hbar) * n_th * k * k / (hbar * s) *
           current;
}

double emission_rate(double absorption, double phonon_energy, double temperature) {
    if (!(absorption >= 0.0)) throw InvalidArgument("emission_rate: absorption must be >= 0");
    if (!(temperature > 0.0)) {
        throw InvalidArgument(
            "emission_rate: T = 0 needs the spontaneous rate; use the material overload");
    }
    const double n = thermal_occupation(phonon_energy, temperature);
    if (n == 0.0) {
        throw InvalidArgument("emission_rate: occupation underflows; use the material overload");
    }
    return absorption * (n + 1.0) / n;
}

double emission_rate(const MaterialSpec &material, const DeviceGeometry &geometry,
                     double splitting_eps, const BathSpec &bath) {
    bath.validate();
    const double n = thermal_occupation(splitting_eps, bath.temperature);
    return (n + 1.0) * spontaneous_rate_closed(material, geometry, splitting_eps);
}

PhononRates phonon_rates(const MaterialSpec &material, const DeviceGeometry &geometry,
                         double splitting_eps, const BathSpec &bath) {
    material.validate();
    geometry.validate();
    bath.validate();
    PhononRates rates;
    rates.occupation = thermal_occupation(splitting_eps, bath.temperature);
    const double w0 = spontaneous_rate_closed(material, geometry, splitting_eps);
    rates.absorption = rates.occupation * w0;
    rates.emission = (rates.occupation + 1.0) * w0;
    rates.gamma = rates.emission + rates.absorption;
    return rates;
}

double relaxation_rate(const MaterialSpec &material, const DeviceGeometry &geometry,
                       double splitting_eps, const BathSpec &bath) {
    return phonon_rates(material, geometry, splitting_eps, bath).gamma;
}

double dephasing_B2(const MaterialSpec &material, const DeviceGeometry &geometry,
                    const BathSpec &bath, double time, const QuadratureConfig &config) {
    config.validate();
    bath.validate();
    geometry.validate();
    if (!(time >= 0.0)) throw InvalidArgument("dephasing_B2: time must be >= 0");
    if (!(material.mass_density > 0.0) || !(material.sound_speed > 0.0)) {
        throw InvalidArgument("dephasing_B2: mass density and sound speed must be positive");
    }
    if (time == 0.0 || material.piezo_modulus == 0.0) return 0.0;

    const double a = geometry.dot_size;
    const double s = material.sound_speed;
    const double q_max = config.q_cutoff_factor / a;
    const double temperature = bath.temperature;

    // Composite Gauss-Legendre: fixed-order panels, panel count doubled per
    // refinement. Panels track the sin^2(q s t / 2) and sin^2(q L / 2)
    // oscillations without building very high-order rules.
    constexpr std::size_t kPanelOrder = 16;
    static const GaussLegendreRule unit = gauss_legendre(kPanelOrder, 0.0, 1.0);
    auto radial = [&](std::size_t panels) {
        const double width = q_max / static_cast<double>(panels);
        double sum = 0.0;
        for (std::size_t k = 0; k < panels; ++k) {
            const double lo = width * static_cast<double>(k);
            for (std::size_t i = 0; i < kPanelOrder; ++i) {
                const double q = lo + width * unit.nodes[i];
                const double osc = std::sin(0.5 * q * s * time);
                const double coth =
                    temperature > 0.0
                        ? 1.0 / std::tanh(hbar * q * s / (2.0 * boltzmann * temperature))
                        : 1.0;
                const double radial_factor = std::exp(-0.5 * a * a * q * q) / q * osc * osc * coth;
                if (radial_factor == 0.0) continue;
                sum += width * unit.weights[i] * radial_factor *
                       form_factor_solid_angle(q * geometry.separation);
            }
        }
        return sum;
    };

    const double periods = q_max * (s * time + geometry.separation) / (2.0 * pi);
    std::size_t panels = 2 + static_cast<std::size_t>(periods);
    double previous = radial(panels);
    double current = previous;
    bool converged = false;
    for (int r = 0; r < config.max_refinements; ++r) {
        panels *= 2;
        current = radial(panels);
        if (current == 0.0 || close_enough(previous, current, config.relative_tolerance)) {
            converged = true;
            break;
        }
        previous = current;
    }
    if (!converged) {
        throw ConvergenceError("dephasing_B2: radial rule did not converge", previous, current);
    }
    const double m = material.piezo_modulus;
    return m * m / (2.0 * pi * pi * pi * hbar * material.mass_density * s * s * s) * current;
}

}  // namespace dqd
