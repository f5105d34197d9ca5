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

#include "dqd/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace dqd {

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Vector vectorize(const Matrix &m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix devectorize(const Vector &v, Eigen::Index dim) {
    return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

RealVector hermitian_eigenvalues(const Matrix &m) {
    const Matrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double hermiticity_defect(const Matrix &m) {
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double spectral_max_abs(const Matrix &m) {
    const RealVector ev = hermitian_eigenvalues(m);
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double spectral_abs_sum(const Matrix &m) {
    return hermitian_eigenvalues(m).cwiseAbs().sum();
}

}  // namespace dqd
