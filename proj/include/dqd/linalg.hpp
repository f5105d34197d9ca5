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

#ifndef DQD_LINALG_HPP_
#define DQD_LINALG_HPP_

#include <complex>

#include <Eigen/Dense>

namespace dqd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Kronecker product a (x) b; a's index is the most significant.
Matrix kron(const Matrix &a, const Matrix &b);

/// Column-stacking vectorisation: vec(m)[i + n*j] = m(i, j).
Vector vectorize(const Matrix &m);
Matrix devectorize(const Vector &v, Eigen::Index dim);

/// Eigenvalues of the Hermitian part (m + m^dagger)/2, ascending.
RealVector hermitian_eigenvalues(const Matrix &m);

/// Largest |m(j,k) - conj(m(k,j))|.
double hermiticity_defect(const Matrix &m);

/// max |lambda_i| and sum |lambda_i| of a Hermitian matrix.
double spectral_max_abs(const Matrix &m);
double spectral_abs_sum(const Matrix &m);

}  // namespace dqd

#endif  // DQD_LINALG_HPP_
