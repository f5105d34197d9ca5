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

#include "dqd/channels.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "dqd/constants.hpp"

namespace dqd {
namespace {

using constants::boltzmann;
using constants::hbar;

Eigen::Index vec_index(Eigen::Index i, Eigen::Index j, Eigen::Index dim) { return i + dim * j; }

void require_nonnegative(double value, const char *name) {
    if (!(value >= 0.0)) {
        std::ostringstream msg;
        msg << name << " must be >= 0, got " << value;
        throw InvalidArgument(msg.str());
    }
}

void require_positive(double value, const char *name) {
    if (!(value > 0.0)) {
        std::ostringstream msg;
        msg << name << " must be > 0, got " << value;
        throw InvalidArgument(msg.str());
    }
}

Matrix pauli_x() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

Matrix pauli_z() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

}  // namespace

std::string to_string(GateKind kind) { return kind == GateKind::NOT ? "NOT" : "PHASE"; }

GateSpec GateSpec::from_splitting(GateKind kind, double splitting_eps) {
    require_positive(splitting_eps, "splitting_eps");
    return {kind, splitting_eps, constants::pi * hbar / splitting_eps};
}

GateSpec GateSpec::from_duration(GateKind kind, double duration_tau) {
    require_positive(duration_tau, "duration_tau");
    return {kind, constants::pi * hbar / duration_tau, duration_tau};
}

Channel::Channel(Eigen::Index dim, Matrix superoperator, std::string label)
    : dim_(dim), matrix_(std::move(superoperator)), label_(std::move(label)) {
    if (dim_ <= 0 || matrix_.rows() != dim_ * dim_ || matrix_.cols() != dim_ * dim_) {
        throw DimensionError("Channel: superoperator must be dim^2 x dim^2");
    }
    for (Eigen::Index k = 0; k < dim_; ++k) {
        for (Eigen::Index l = 0; l < dim_; ++l) {
            const Eigen::Index col = vec_index(k, l, dim_);
            Complex tr = 0.0;
            for (Eigen::Index i = 0; i < dim_; ++i) tr += matrix_(vec_index(i, i, dim_), col);
            const double expected = (k == l) ? 1.0 : 0.0;
            if (std::abs(tr - expected) > kChannelTolerance) {
                throw ChannelValidityError("Channel '" + label_ + "' is not trace-preserving");
            }
            for (Eigen::Index i = 0; i < dim_; ++i) {
                for (Eigen::Index j = 0; j < dim_; ++j) {
                    const Complex a = matrix_(vec_index(i, j, dim_), col);
                    const Complex b = matrix_(vec_index(j, i, dim_), vec_index(l, k, dim_));
                    if (std::abs(a - std::conj(b)) > kChannelTolerance) {
                        throw ChannelValidityError("Channel '" + label_ +
                                                   "' is not Hermiticity-preserving");
                    }
                }
            }
        }
    }
}

ThermalPopulations thermal_populations(double splitting_eps, double temperature) {
    require_positive(splitting_eps, "splitting_eps");
    require_nonnegative(temperature, "temperature");
    if (temperature == 0.0) return {1.0, 0.0};
    const double boltz = std::exp(-splitting_eps / (boltzmann * temperature));
    return {1.0 / (1.0 + boltz), boltz / (1.0 + boltz)};
}

Channel relaxation_channel_energy_basis(double gamma, double splitting_eps, double temperature,
                                        double t) {
    require_nonnegative(gamma, "gamma");
    require_nonnegative(t, "t");
    const ThermalPopulations th = thermal_populations(splitting_eps, temperature);
    const double decay = std::exp(-gamma * t);
    const double phase = splitting_eps * t / hbar;
    const Complex coherence = std::exp(Complex(-0.5 * gamma * t, phase));

    // index 0 = |+>, 1 = |->; acts linearly, so thermal targets scale with Tr(rho).
    Matrix s = Matrix::Zero(4, 4);
    s(vec_index(0, 0, 2), vec_index(0, 0, 2)) = th.p_plus + th.p_minus * decay;
    s(vec_index(0, 0, 2), vec_index(1, 1, 2)) = th.p_plus * (1.0 - decay);
    s(vec_index(1, 1, 2), vec_index(0, 0, 2)) = th.p_minus * (1.0 - decay);
    s(vec_index(1, 1, 2), vec_index(1, 1, 2)) = th.p_minus + th.p_plus * decay;
    s(vec_index(0, 1, 2), vec_index(0, 1, 2)) = coherence;
    s(vec_index(1, 0, 2), vec_index(1, 0, 2)) = std::conj(coherence);
    return Channel(2, std::move(s), "relaxation[energy]");
}

Channel not_gate_channel(double gamma, double splitting_eps, double temperature, double t) {
    const Channel energy = relaxation_channel_energy_basis(gamma, splitting_eps, temperature, t);
    const Channel logical = change_basis(energy, hadamard());
    return Channel(2, logical.matrix(), "not-gate");
}

Channel phase_gate_channel(double b2, double splitting_eps, double t) {
    require_nonnegative(b2, "B2");
    require_nonnegative(t, "t");
    const Complex factor = std::exp(Complex(-b2, splitting_eps * t / hbar));
    Matrix s = Matrix::Zero(4, 4);
    s(vec_index(0, 0, 2), vec_index(0, 0, 2)) = 1.0;
    s(vec_index(1, 1, 2), vec_index(1, 1, 2)) = 1.0;
    s(vec_index(0, 1, 2), vec_index(0, 1, 2)) = factor;
    s(vec_index(1, 0, 2), vec_index(1, 0, 2)) = std::conj(factor);
    return Channel(2, std::move(s), "phase-gate");
}

Channel ideal_channel(const GateSpec &gate, double t) {
    require_positive(gate.splitting_eps, "splitting_eps");
    require_positive(gate.duration_tau, "duration_tau");
    if (!(t >= 0.0) || t > gate.duration_tau * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "ideal_channel: t = " << t << " outside [0, tau = " << gate.duration_tau << "]";
        throw InvalidArgument(msg.str());
    }
    // exp(-i H t / hbar) with H = -(eps/2) P is cos(w) + i sin(w) P, w = eps t / (2 hbar).
    const double w = 0.5 * gate.splitting_eps * t / hbar;
    const Matrix generator = gate.kind == GateKind::NOT ? pauli_x() : pauli_z();
    const Matrix u = std::cos(w) * Matrix::Identity(2, 2) + Complex(0.0, std::sin(w)) * generator;
    return unitary_channel(u, "ideal-" + to_string(gate.kind));
}

Channel identity_channel(Eigen::Index dim) {
    return Channel(dim, Matrix::Identity(dim * dim, dim * dim), "identity");
}

Channel unitary_channel(const Matrix &u, std::string label) {
    if (u.rows() != u.cols()) throw DimensionError("unitary_channel: matrix must be square");
    return Channel(u.rows(), kron(u.conjugate(), u), std::move(label));
}

Matrix apply_superoperator(const Matrix &superoperator, const Matrix &x) {
    return devectorize(superoperator * vectorize(x), x.rows());
}

DensityMatrix apply_channel(const Channel &channel, const DensityMatrix &rho) {
    if (channel.dim() != rho.dim()) {
        std::ostringstream msg;
        msg << "apply_channel: channel dim " << channel.dim() << " vs state dim " << rho.dim();
        throw DimensionError(msg.str());
    }
    Matrix out = apply_superoperator(channel.matrix(), rho.matrix());
    const Complex tr = out.trace();
    if (std::abs(tr - 1.0) > kChannelTolerance || hermiticity_defect(out) > kChannelTolerance) {
        throw ChannelValidityError("apply_channel: '" + channel.label() +
                                   "' produced a non-Hermitian or non-unit-trace output");
    }
    out = 0.5 * (out + out.adjoint()).eval();
    out /= out.trace().real();
    try {
        return DensityMatrix(std::move(out));
    } catch (const PositivityError &e) {
        throw ChannelValidityError("apply_channel: '" + channel.label() +
                                   "' produced a non-positive output: " + e.what());
    }
}

Matrix tensor_superoperators(const Matrix &a, Eigen::Index dim_a, const Matrix &b,
                             Eigen::Index dim_b) {
    const Eigen::Index dim = dim_a * dim_b;
    Matrix out(dim * dim, dim * dim);
    for (Eigen::Index ja = 0; ja < dim_a; ++ja)
    for (Eigen::Index ia = 0; ia < dim_a; ++ia)
    for (Eigen::Index jb = 0; jb < dim_b; ++jb)
    for (Eigen::Index ib = 0; ib < dim_b; ++ib) {
        const Eigen::Index row = vec_index(ia * dim_b + ib, ja * dim_b + jb, dim);
        const Eigen::Index row_a = vec_index(ia, ja, dim_a);
        const Eigen::Index row_b = vec_index(ib, jb, dim_b);
        for (Eigen::Index la = 0; la < dim_a; ++la)
        for (Eigen::Index ka = 0; ka < dim_a; ++ka) {
            const Complex va = a(row_a, vec_index(ka, la, dim_a));
            for (Eigen::Index lb = 0; lb < dim_b; ++lb)
            for (Eigen::Index kb = 0; kb < dim_b; ++kb) {
                out(row, vec_index(ka * dim_b + kb, la * dim_b + lb, dim)) =
                    va * b(row_b, vec_index(kb, lb, dim_b));
            }
        }
    }
    return out;
}

Channel tensor_channels(const Channel &a, const Channel &b) {
    return Channel(a.dim() * b.dim(), tensor_superoperators(a.matrix(), a.dim(), b.matrix(), b.dim()),
                   a.label() + "(x)" + b.label());
}

Channel compose(const Channel &second, const Channel &first) {
    if (second.dim() != first.dim()) throw DimensionError("compose: dimension mismatch");
    return Channel(first.dim(), second.matrix() * first.matrix(),
                   second.label() + "o" + first.label());
}

Channel change_basis(const Channel &channel, const Matrix &basis) {
    if (basis.rows() != channel.dim() || basis.cols() != channel.dim()) {
        throw DimensionError("change_basis: basis must be dim x dim");
    }
    const Matrix w = kron(basis.conjugate(), basis);
    return Channel(channel.dim(), w * channel.matrix() * w.adjoint(), channel.label());
}

Matrix choi_matrix(const Channel &channel) {
    const Eigen::Index n = channel.dim();
    Matrix choi = Matrix::Zero(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            Matrix unit = Matrix::Zero(n, n);
            unit(i, j) = 1.0;
            choi += kron(apply_superoperator(channel.matrix(), unit), unit);
        }
    }
    return choi;
}

Timescales extract_timescales(double gamma) {
    require_positive(gamma, "gamma");
    return {1.0 / gamma, 2.0 / gamma};
}

Matrix hadamard() {
    Matrix h(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    h << r, r, r, -r;
    return h;
}

}  // namespace dqd
