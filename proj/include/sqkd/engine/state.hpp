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

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sqkd/engine/layout.hpp"

namespace sqkd {

using cplx = std::complex<double>;
using Amplitudes = std::vector<cplx>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kNormTol = 1e-10;
inline constexpr double kMatrixTol = 1e-9;
inline constexpr double kStateEqTol = 1e-9;

// Normalized pure state over a layout.
class StateVector {
 public:
  // Throws Errc::DimensionMismatch on length mismatch and Errc::InvalidState
  // when the norm is off by more than kNormTol.
  StateVector(SubsystemLayout layout, Amplitudes amps);

  // Empty layout, single amplitude 1.
  static StateVector vacuum();
  static StateVector basis(Label label, std::size_t dim, std::size_t index);
  static StateVector plus(Label label);
  static StateVector minus(Label label);
  // Rescales amps to unit norm; throws Errc::InvalidState on a zero vector.
  static StateVector normalized(SubsystemLayout layout, Amplitudes amps);

  const SubsystemLayout& layout() const { return layout_; }
  const Amplitudes& amps() const { return amps_; }
  std::size_t dim() const { return amps_.size(); }
  cplx operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;

 private:
  struct Unchecked {};
  StateVector(Unchecked, SubsystemLayout layout, Amplitudes amps)
      : layout_(std::move(layout)), amps_(std::move(amps)) {}
  friend class SubnormalizedVector;
  friend StateVector trusted_state(SubsystemLayout, Amplitudes);

  SubsystemLayout layout_;
  Amplitudes amps_;
};

// Skips the norm check. Kernel outputs only.
StateVector trusted_state(SubsystemLayout layout, Amplitudes amps);

// Unnormalized branch of a state, e.g. the component left after projecting a
// subsystem onto a basis vector. weight() is the squared norm.
class SubnormalizedVector {
 public:
  SubnormalizedVector(SubsystemLayout layout, Amplitudes amps);

  const SubsystemLayout& layout() const { return layout_; }
  const Amplitudes& amps() const { return amps_; }
  double weight() const { return weight_; }
  double norm() const;
  // Throws Errc::InvalidState when weight() is zero.
  StateVector normalized() const;

 private:
  SubsystemLayout layout_;
  Amplitudes amps_;
  double weight_ = 0.0;
};

class DensityMatrix {
 public:
  // Validates Hermiticity, unit trace and positivity within kMatrixTol.
  DensityMatrix(SubsystemLayout layout, Matrix entries);
  // Layout with a single anonymous register.
  explicit DensityMatrix(Matrix entries);

  static DensityMatrix pure(const StateVector& psi);

  const SubsystemLayout& layout() const { return layout_; }
  const Matrix& entries() const { return entries_; }
  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }

 private:
  struct Unchecked {};
  DensityMatrix(Unchecked, SubsystemLayout layout, Matrix entries)
      : layout_(std::move(layout)), entries_(std::move(entries)) {}
  friend DensityMatrix trusted_density(SubsystemLayout, Matrix);

  SubsystemLayout layout_;
  Matrix entries_;
};

// Hermiticity and trace are still checked; the eigenvalue check is skipped
// because kernel outputs are Gram matrices and PSD by construction.
DensityMatrix trusted_density(SubsystemLayout layout, Matrix entries);

class Unitary {
 public:
  // Throws Errc::InvalidState unless ||U^dag U - I||_F <= kMatrixTol.
  explicit Unitary(Matrix entries);

  static Unitary identity(std::size_t dim);
  static Unitary hadamard();
  static Unitary pauli_x();
  static Unitary cnot();
  static Unitary swap();
  // Real rotation [[c, -s], [s, c]].
  static Unitary rotation(double theta);
  static Unitary phase(double phi);
  // |0><0| (x) I + |1><1| (x) u.
  static Unitary controlled(const Unitary& u);
  static Unitary kron(const Unitary& a, const Unitary& b);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Unitary adjoint() const;
  Unitary operator*(const Unitary& rhs) const;

 private:
  Matrix entries_;
};

}  // namespace sqkd
