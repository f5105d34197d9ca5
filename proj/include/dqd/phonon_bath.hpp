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

#ifndef DQD_PHONON_BATH_HPP_
#define DQD_PHONON_BATH_HPP_

#include <array>
#include <optional>
#include <string>

namespace dqd {

/// Piezoelectric material constants, SI. `piezo_modulus` is the single
/// independent component M of the zinc-blende M_ijk tensor, in J/m (so that
/// the electron-phonon coupling g comes out in joules).
struct MaterialSpec {
    double piezo_modulus = 0.0;
    double mass_density = 0.0;  // kg / m^3
    double sound_speed = 0.0;   // m / s

    void validate() const;
};

/// Gaussian dots of size 2a whose centres are `separation` apart along x.
struct DeviceGeometry {
    double dot_size = 0.0;    // a, metres
    double separation = 0.0;  // L, metres

    void validate() const;
};

/// Returns a message when L/a <= 3 and the non-overlap assumption is doubtful.
std::optional<std::string> overlap_warning(const DeviceGeometry &geometry);

struct BathSpec {
    double temperature = 0.0;  // kelvin, T = 0 is the exact limit

    void validate() const;
};

struct QuadratureConfig {
    double relative_tolerance = 1e-6;
    int max_refinements = 6;
    double q_cutoff_factor = 12.0;  // q_max = q_cutoff_factor / a

    void validate() const;
};

enum class Polarization { longitudinal, transverse1, transverse2 };

inline constexpr std::array<Polarization, 3> kAllPolarizations = {
    Polarization::longitudinal, Polarization::transverse1, Polarization::transverse2};

using Vec3 = std::array<double, 3>;

/// Bose-Einstein occupation 1/(exp(E/k_B T) - 1); exactly 0 at T = 0.
double thermal_occupation(double phonon_energy, double temperature);

/// x^5 + 5x(2x^2 - 21)cos x + 15(7 - 3x^2)sin x. Nonnegative and O(x^7) at
/// the origin; evaluated from its Taylor series for x < 1.
double absorption_bracket(double x);

/// int dOmega sum_lambda P_lambda^2 sin^2(x e_x / 2) = (2 pi / 5) bracket(x) / x^5.
double form_factor_solid_angle(double x);

/// Unit polarisation vector for a phonon travelling along `direction`
/// (need not be normalised).
Vec3 polarization_vector(Polarization polarization, const Vec3 &direction);

/// |g_{q,lambda}|^2 in J^2 for wave vector q (1/m) in a sample of volume V.
/// The dot axis is x. Throws InvalidArgument for q = 0.
double coupling_sq(const Vec3 &q, Polarization polarization, const MaterialSpec &material,
                   const DeviceGeometry &geometry, double sample_volume);

/// Phonon wave number k = eps / (hbar s) resonant with the splitting.
double resonant_wavenumber(const MaterialSpec &material, double splitting_eps);

/// Absorption rate with the occupation factor stripped (W^a / N_th), i.e. the
/// spontaneous emission rate. Closed form.
double spontaneous_rate_closed(const MaterialSpec &material, const DeviceGeometry &geometry,
                               double splitting_eps);

/// Closed-form absorption rate W^a (1/s), summed over polarisations.
double absorption_rate_closed(const MaterialSpec &material, const DeviceGeometry &geometry,
                              double splitting_eps, const BathSpec &bath);

/// Absorption rate from the golden-rule mode sum: the energy delta is
/// resolved onto the sphere |q| = k and the solid angle integrated with a
/// product Gauss-Legendre rule whose orders double until converged.
/// Throws ConvergenceError after max_refinements doublings.
double absorption_rate_quadrature(const MaterialSpec &material, const DeviceGeometry &geometry,
                                  double splitting_eps, const BathSpec &bath,
                                  const QuadratureConfig &config = {});

/// W^e = W^a (N_th + 1)/N_th. Requires T > 0; use the physics overload at T = 0.
double emission_rate(double absorption, double phonon_energy, double temperature);

/// W^e from first principles; at T = 0 this is the spontaneous rate.
double emission_rate(const MaterialSpec &material, const DeviceGeometry &geometry,
                     double splitting_eps, const BathSpec &bath);

struct PhononRates {
    double occupation = 0.0;
    double absorption = 0.0;
    double emission = 0.0;
    double gamma = 0.0;  // W^e + W^a
};

PhononRates phonon_rates(const MaterialSpec &material, const DeviceGeometry &geometry,
                         double splitting_eps, const BathSpec &bath);

/// Gamma = W^e + W^a.
double relaxation_rate(const MaterialSpec &material, const DeviceGeometry &geometry,
                       double splitting_eps, const BathSpec &bath);

/// Pure-dephasing exponent B^2(t) from the piezoelectric couplings, integrated
/// over q in [0, q_cutoff_factor / a] and the full solid angle.
double dephasing_B2(const MaterialSpec &material, const DeviceGeometry &geometry,
                    const BathSpec &bath, double time, const QuadratureConfig &config = {});

}  // namespace dqd

#endif  // DQD_PHONON_BATH_HPP_
