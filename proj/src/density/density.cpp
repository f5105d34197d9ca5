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

#include "dqd/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dqd {
namespace {

void require_square(const Matrix &m, const char *what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        std::ostringstream msg;
        msg << what << ": expected a non-empty square matrix, got " << m.rows() << "x"
            << m.cols();
        throw DimensionError(msg.str());
    }
}

void require_same_dim(Eigen::Index a, Eigen::Index b, const char *what) {
    if (a != b) {
        std::ostringstream msg;
        msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw DimensionError(msg.str());
    }
}

}  // namespace

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) throw DimensionError("PureState: empty amplitude vector");
    const double norm_sq = amplitudes_.squaredNorm();
    if (std::abs(norm_sq - 1.0) > kNormalizationTolerance) {
        std::ostringstream msg;
        msg << "PureState: squared norm " << norm_sq << " is not 1";
        throw NormalizationError(msg.str());
    }
}

PureState PureState::normalized(Vector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0)) throw InvalidArgument("PureState: cannot normalise a zero vector");
    amplitudes /= norm;
    return PureState(std::move(amplitudes));
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    require_square(entries_, "DensityMatrix");
    const double herm = hermiticity_defect(entries_);
    if (herm > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "DensityMatrix: not Hermitian (defect " << herm << ")";
        throw InvariantError(msg.str());
    }
    const Complex tr = entries_.trace();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace " << tr.real() << "+" << tr.imag() << "i is not 1";
        throw InvariantError(msg.str());
    }
    const double smallest = hermitian_eigenvalues(entries_)(0);
    if (smallest < -kPositivityTolerance) {
        std::ostringstream msg;
        msg << "DensityMatrix: eigenvalue " << smallest << " below positivity tolerance";
        throw PositivityError(msg.str());
    }
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double> &populations) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(populations.size()),
                            static_cast<Eigen::Index>(populations.size()));
    for (std::size_t i = 0; i < populations.size(); ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = populations[i];
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    if (dim <= 0) throw DimensionError("maximally_mixed: dim must be positive");
    return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DeviationMatrix::DeviationMatrix(Matrix entries) : entries_(std::move(entries)) {
    require_square(entries_, "DeviationMatrix");
    const double herm = hermiticity_defect(entries_);
    if (herm > kHermitianTolerance) {
        std::ostringstream msg;
        msg << "DeviationMatrix: not Hermitian (defect " << herm << ")";
        throw InvariantError(msg.str());
    }
    if (std::abs(entries_.trace()) > kTraceTolerance) {
        throw InvariantError("DeviationMatrix: trace is not zero");
    }
}

DensityMatrix density_from_pure(const PureState &state) {
    const Vector &c = state.amplitudes();
    Matrix rho = c * c.adjoint();
    // Exact Hermiticity; the outer product can differ from its adjoint in the last bit.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(std::move(rho));
}

DeviationMatrix deviation(const DensityMatrix &actual, const DensityMatrix &ideal) {
    require_same_dim(actual.dim(), ideal.dim(), "deviation");
    return DeviationMatrix(actual.matrix() - ideal.matrix());
}

double eigenvalue_norm(const DeviationMatrix &sigma) { return spectral_max_abs(sigma.matrix()); }

double trace_norm(const DeviationMatrix &sigma) { return spectral_abs_sum(sigma.matrix()); }

double entropy(const DensityMatrix &rho) {
    const RealVector p = hermitian_eigenvalues(rho.matrix());
    double s = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) < -kPositivityTolerance) {
            throw PositivityError("entropy: negative eigenvalue");
        }
        const double clamped = std::clamp(p(i), 0.0, 1.0);
        if (clamped > 0.0) s -= clamped * std::log(clamped);
    }
    return std::max(s, 0.0);
}

double idempotency_defect(const DensityMatrix &rho) {
    // Tr(rho^2) = sum |rho_jk|^2 for Hermitian rho.
    const double purity = rho.matrix().squaredNorm();
    return std::max(1.0 - purity, 0.0);
}

double fidelity(const DensityMatrix &ideal, const DensityMatrix &actual) {
    require_same_dim(ideal.dim(), actual.dim(), "fidelity");
    // Tr(AB) = sum_jk A_jk B_kj
    return (ideal.matrix().cwiseProduct(actual.matrix().transpose())).sum().real();
}

DensityMatrix conjugate(const DensityMatrix &rho, const Matrix &u) {
    require_same_dim(rho.dim(), u.rows(), "conjugate");
    Matrix out = u * rho.matrix() * u.adjoint();
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix(std::move(out));
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    return DensityMatrix(kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace_second(const DensityMatrix &rho, Eigen::Index keep_dim) {
    if (keep_dim <= 0 || rho.dim() % keep_dim != 0) {
        throw DimensionError("partial_trace_second: keep_dim does not divide dim");
    }
    const Eigen::Index other = rho.dim() / keep_dim;
    Matrix out = Matrix::Zero(keep_dim, keep_dim);
    for (Eigen::Index i = 0; i < keep_dim; ++i) {
        for (Eigen::Index j = 0; j < keep_dim; ++j) {
            for (Eigen::Index k = 0; k < other; ++k) {
                out(i, j) += rho(i * other + k, j * other + k);
            }
        }
    }
    return DensityMatrix(std::move(out));
}

}  // namespace dqd
