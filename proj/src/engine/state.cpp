// Copyright 2026 The sqkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sqkd/engine/state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "sqkd/engine/error.hpp"

namespace sqkd {
namespace {

double squared_norm(const Amplitudes& amps) {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

void check_length(const SubsystemLayout& layout, std::size_t n) {
  if (layout.total_dim() != n) {
    throw Error(Errc::DimensionMismatch, "layout dimension " + std::to_string(layout.total_dim()) +
                                             " vs " + std::to_string(n) + " amplitudes");
  }
}

void check_hermitian_trace(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::DimensionMismatch, "density matrix not square");
  double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (m.size() > 0 && herm > kMatrixTol) {
    throw Error(Errc::InvalidState, "density matrix not Hermitian (" + std::to_string(herm) + ")");
  }
  double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kMatrixTol) {
    throw Error(Errc::InvalidState, "density matrix trace " + std::to_string(tr));
  }
}

}  // namespace

StateVector::StateVector(SubsystemLayout layout, Amplitudes amps)
    : layout_(std::move(layout)), amps_(std::move(amps)) {
  check_length(layout_, amps_.size());
  double n = std::sqrt(squared_norm(amps_));
  if (std::abs(n - 1.0) > kNormTol) {
    throw Error(Errc::InvalidState, "state norm " + std::to_string(n));
  }
}

StateVector StateVector::vacuum() { return {SubsystemLayout{}, Amplitudes{cplx{1.0, 0.0}}}; }

StateVector StateVector::basis(Label label, std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(Errc::IndexOutOfRange, "basis index " + std::to_string(index));
  Amplitudes a(dim);
  a[index] = 1.0;
  return {SubsystemLayout::single(label, dim), std::move(a)};
}

StateVector StateVector::plus(Label label) {
  const double h = std::numbers::sqrt2 / 2.0;
  return {SubsystemLayout::single(label, 2), {h, h}};
}

StateVector StateVector::minus(Label label) {
  const double h = std::numbers::sqrt2 / 2.0;
  return {SubsystemLayout::single(label, 2), {h, -h}};
}

StateVector StateVector::normalized(SubsystemLayout layout, Amplitudes amps) {
  check_length(layout, amps.size());
  double n = std::sqrt(squared_norm(amps));
  if (n == 0.0) throw Error(Errc::InvalidState, "cannot normalize a zero vector");
  for (auto& a : amps) a /= n;
  return {std::move(layout), std::move(amps)};
}

double StateVector::norm() const { return std::sqrt(squared_norm(amps_)); }

StateVector trusted_state(SubsystemLayout layout, Amplitudes amps) {
  return StateVector(StateVector::Unchecked{}, std::move(layout), std::move(amps));
}

SubnormalizedVector::SubnormalizedVector(SubsystemLayout layout, Amplitudes amps)
    : layout_(std::move(layout)), amps_(std::move(amps)) {
  check_length(layout_, amps_.size());
  weight_ = squared_norm(amps_);
  if (weight_ > 1.0 + kNormTol) {
    throw Error(Errc::InvalidState, "branch weight " + std::to_string(weight_) + " exceeds 1");
  }
}

double SubnormalizedVector::norm() const { return std::sqrt(weight_); }

StateVector SubnormalizedVector::normalized() const {
  if (weight_ == 0.0) throw Error(Errc::InvalidState, "zero-weight branch");
  Amplitudes a = amps_;
  const double n = std::sqrt(weight_);
  for (auto& x : a) x /= n;
  return StateVector(StateVector::Unchecked{}, layout_, std::move(a));
}

DensityMatrix::DensityMatrix(SubsystemLayout layout, Matrix entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
  check_length(layout_, static_cast<std::size_t>(entries_.rows()));
  check_hermitian_trace(entries_);
  Matrix sym = (entries_ + entries_.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kMatrixTol) {
    throw Error(Errc::InvalidState, "density matrix has a negative eigenvalue");
  }
}

// Copies rather than moves: argument evaluation order is unspecified.
DensityMatrix::DensityMatrix(Matrix entries)
    : DensityMatrix(SubsystemLayout::single(reg(0), static_cast<std::size_t>(entries.rows())), entries) {}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  Eigen::Map<const Eigen::VectorXcd> v(psi.amps().data(), static_cast<Eigen::Index>(psi.dim()));
  return trusted_density(psi.layout(), v * v.adjoint());
}

DensityMatrix trusted_density(SubsystemLayout layout, Matrix entries) {
  check_length(layout, static_cast<std::size_t>(entries.rows()));
  check_hermitian_trace(entries);
  return DensityMatrix(DensityMatrix::Unchecked{}, std::move(layout), std::move(entries));
}

Unitary::Unitary(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw Error(Errc::DimensionMismatch, "unitary must be square and non-empty");
  }
  const auto n = entries_.rows();
  double dev = (entries_.adjoint() * entries_ - Matrix::Identity(n, n)).norm();
  if (dev > kMatrixTol) {
    throw Error(Errc::InvalidState, "matrix is not unitary (deviation " + std::to_string(dev) + ")");
  }
}

Unitary Unitary::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return Unitary(Matrix::Identity(n, n));
}

Unitary Unitary::hadamard() {
  const double h = std::numbers::sqrt2 / 2.0;
  Matrix m(2, 2);
  m << h, h, h, -h;
  return Unitary(std::move(m));
}

Unitary Unitary::pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return Unitary(std::move(m));
}

Unitary Unitary::cnot() { return controlled(pauli_x()); }

Unitary Unitary::swap() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return Unitary(std::move(m));
}

Unitary Unitary::rotation(double theta) {
  Matrix m(2, 2);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  m << c, -s, s, c;
  return Unitary(std::move(m));
}

Unitary Unitary::phase(double phi) {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 1) = std::polar(1.0, phi);
  return Unitary(std::move(m));
}

Unitary Unitary::controlled(const Unitary& u) {
  const auto d = u.entries_.rows();
  Matrix m = Matrix::Zero(2 * d, 2 * d);
  m.topLeftCorner(d, d) = Matrix::Identity(d, d);
  m.bottomRightCorner(d, d) = u.entries_;
  return Unitary(std::move(m));
}

Unitary Unitary::kron(const Unitary& a, const Unitary& b) {
  const auto ra = a.entries_.rows();
  const auto rb = b.entries_.rows();
  Matrix m(ra * rb, ra * rb);
  for (Eigen::Index i = 0; i < ra; ++i) {
    for (Eigen::Index j = 0; j < ra; ++j) {
      m.block(i * rb, j * rb, rb, rb) = a.entries_(i, j) * b.entries_;
    }
  }
  return Unitary(std::move(m));
}

Unitary Unitary::adjoint() const { return Unitary(entries_.adjoint()); }

Unitary Unitary::operator*(const Unitary& rhs) const {
  if (dim() != rhs.dim()) throw Error(Errc::DimensionMismatch, "unitary product");
  return Unitary(entries_ * rhs.entries_);
}

}  // namespace sqkd
