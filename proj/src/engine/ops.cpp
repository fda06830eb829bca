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

#include "sqkd/engine/ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "sqkd/engine/error.hpp"
#include "sqkd/engine/kernels.hpp"

namespace sqkd {
namespace {

std::vector<std::size_t> target_positions(const SubsystemLayout& layout, std::span<const Label> targets,
                                          std::size_t expected_dim) {
  auto pos = layout.positions(targets);
  std::size_t d = 1;
  for (auto p : pos) d *= layout.dims()[p];
  if (d != expected_dim) {
    throw Error(Errc::DimensionMismatch, "unitary of dimension " + std::to_string(expected_dim) +
                                             " on targets of dimension " + std::to_string(d));
  }
  return pos;
}

Amplitudes transformed(const SubsystemLayout& layout, Amplitudes amps, const Unitary& u,
                       std::span<const Label> targets) {
  auto pos = target_positions(layout, targets, u.dim());
  kernels::apply_matrix(amps, layout.dims(), pos, u.matrix());
  return amps;
}

Amplitudes projected(const SubsystemLayout& layout, Amplitudes amps, Label target, std::size_t basis_state) {
  const auto pos = layout.position(target);
  const auto d = layout.dims()[pos];
  if (basis_state >= d) {
    throw Error(Errc::IndexOutOfRange, "basis state " + std::to_string(basis_state) + " of " +
                                           target.str() + " (dim " + std::to_string(d) + ")");
  }
  const auto stride = layout.stride(pos);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i / stride) % d != basis_state) amps[i] = 0.0;
  }
  return amps;
}

SubnormalizedVector sliced(const SubsystemLayout& layout, const Amplitudes& amps, Label target,
                           std::size_t basis_state) {
  const auto pos = layout.position(target);
  const auto d = layout.dims()[pos];
  if (basis_state >= d) {
    throw Error(Errc::IndexOutOfRange, "basis state " + std::to_string(basis_state) + " of " + target.str());
  }
  auto rest = layout.without(target);
  const std::size_t inner = layout.stride(pos);
  const std::size_t outer = layout.total_dim() / (inner * d);
  Amplitudes out(rest.total_dim());
  for (std::size_t o = 0; o < outer; ++o) {
    std::copy_n(amps.begin() + static_cast<std::ptrdiff_t>((o * d + basis_state) * inner), inner,
                out.begin() + static_cast<std::ptrdiff_t>(o * inner));
  }
  return {std::move(rest), std::move(out)};
}

void require_qubit(const SubsystemLayout& layout, Label target) {
  if (layout.dim_of(target) != 2) {
    throw Error(Errc::NonQubitTarget, target.str() + " has dimension " + std::to_string(layout.dim_of(target)));
  }
}

double probability(const SubsystemLayout& layout, const Amplitudes& amps, Label target, Outcome outcome) {
  require_qubit(layout, target);
  const bool x_basis = outcome == Outcome::Plus || outcome == Outcome::Minus;
  const Label t[] = {target};
  Amplitudes a = x_basis ? transformed(layout, amps, Unitary::hadamard(), t) : amps;
  const std::size_t keep[] = {layout.position(target)};
  auto p = kernels::marginal_probabilities(a, layout.dims(), keep);
  const bool second = outcome == Outcome::One || outcome == Outcome::Minus;
  return p[second ? 1 : 0];
}

}  // namespace

StateVector tensor(const StateVector& a, const StateVector& b) {
  auto layout = a.layout().concat(b.layout());
  Amplitudes out;
  out.reserve(a.dim() * b.dim());
  for (const auto& x : a.amps()) {
    for (const auto& y : b.amps()) out.push_back(x * y);
  }
  return StateVector(std::move(layout), std::move(out));
}

StateVector apply_unitary(const StateVector& psi, const Unitary& u, std::span<const Label> targets) {
  return trusted_state(psi.layout(), transformed(psi.layout(), psi.amps(), u, targets));
}

StateVector apply_unitary(const StateVector& psi, const Unitary& u, std::initializer_list<Label> targets) {
  return apply_unitary(psi, u, std::span<const Label>(targets.begin(), targets.size()));
}

SubnormalizedVector apply_unitary(const SubnormalizedVector& psi, const Unitary& u,
                                  std::span<const Label> targets) {
  return {psi.layout(), transformed(psi.layout(), psi.amps(), u, targets)};
}

Measurement measure(const StateVector& psi, Label target, Basis basis, Rng& rng) {
  require_qubit(psi.layout(), target);
  const Label t[] = {target};
  StateVector rotated = basis == Basis::X ? apply_unitary(psi, Unitary::hadamard(), t) : psi;
  const double p0 = probability(rotated.layout(), rotated.amps(), target, Outcome::Zero);
  const std::size_t bit = rng.uniform() < p0 ? 0 : 1;
  StateVector collapsed = project(rotated, target, bit).normalized();
  if (basis == Basis::X) collapsed = apply_unitary(collapsed, Unitary::hadamard(), t);
  const Outcome outcome = basis == Basis::Z ? (bit == 0 ? Outcome::Zero : Outcome::One)
                                            : (bit == 0 ? Outcome::Plus : Outcome::Minus);
  return {outcome, std::move(collapsed), bit == 0 ? p0 : 1.0 - p0};
}

double outcome_probability(const StateVector& psi, Label target, Outcome outcome) {
  return probability(psi.layout(), psi.amps(), target, outcome);
}

double outcome_probability(const SubnormalizedVector& psi, Label target, Outcome outcome) {
  return probability(psi.layout(), psi.amps(), target, outcome);
}

SubnormalizedVector project(const StateVector& psi, Label target, std::size_t basis_state) {
  return {psi.layout(), projected(psi.layout(), psi.amps(), target, basis_state)};
}

SubnormalizedVector project(const SubnormalizedVector& psi, Label target, std::size_t basis_state) {
  return {psi.layout(), projected(psi.layout(), psi.amps(), target, basis_state)};
}

SubnormalizedVector slice(const StateVector& psi, Label target, std::size_t basis_state) {
  return sliced(psi.layout(), psi.amps(), target, basis_state);
}

SubnormalizedVector slice(const SubnormalizedVector& psi, Label target, std::size_t basis_state) {
  return sliced(psi.layout(), psi.amps(), target, basis_state);
}

StateVector squeeze(const StateVector& psi, Label target, std::size_t basis_state) {
  auto s = slice(psi, target, basis_state);
  if (std::abs(s.weight() - 1.0) > kNormTol) {
    throw Error(Errc::InvalidState, target.str() + " is not in basis state " + std::to_string(basis_state));
  }
  return trusted_state(s.layout(), s.amps());
}

StateVector relabel(const StateVector& psi, Label from, Label to) {
  return trusted_state(psi.layout().relabeled(from, to), psi.amps());
}

StateVector permute(const StateVector& psi, std::span<const Label> order) {
  const auto& layout = psi.layout();
  if (order.size() != layout.size()) {
    throw Error(Errc::DimensionMismatch, "permutation must name every subsystem");
  }
  auto pos = layout.positions(order);
  auto out_layout = layout.subset(order);
  // Offsets in the input buffer, enumerated in output order.
  auto offsets = kernels::subset_offsets(layout.dims(), pos);
  Amplitudes out(offsets.size());
  for (std::size_t i = 0; i < offsets.size(); ++i) out[i] = psi.amps()[offsets[i]];
  return trusted_state(std::move(out_layout), std::move(out));
}

DensityMatrix partial_trace(const StateVector& psi, std::span<const Label> keep) {
  if (keep.empty()) throw Error(Errc::EmptyKeepSet, "partial_trace needs at least one kept subsystem");
  auto pos = psi.layout().positions(keep);
  Matrix rho = kernels::reduce(psi.amps(), psi.layout().dims(), pos);
  return trusted_density(psi.layout().subset(keep), std::move(rho));
}

DensityMatrix partial_trace(const StateVector& psi, std::initializer_list<Label> keep) {
  return partial_trace(psi, std::span<const Label>(keep.begin(), keep.size()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const Label> keep) {
  if (keep.empty()) throw Error(Errc::EmptyKeepSet, "partial_trace needs at least one kept subsystem");
  const auto& layout = rho.layout();
  auto pos = layout.positions(keep);
  auto keep_off = kernels::subset_offsets(layout.dims(), pos);
  auto rest_off = kernels::subset_offsets(layout.dims(), kernels::complement(layout.size(), pos));
  const auto k = static_cast<Eigen::Index>(keep_off.size());
  Matrix out = Matrix::Zero(k, k);
  const auto& m = rho.entries();
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      cplx acc = 0.0;
      for (auto r : rest_off) {
        acc += m(static_cast<Eigen::Index>(keep_off[a] + r), static_cast<Eigen::Index>(keep_off[b] + r));
      }
      out(a, b) = acc;
    }
  }
  return trusted_density(layout.subset(keep), std::move(out));
}

std::vector<Matrix> conditional_blocks(const StateVector& psi, std::span<const Label> condition,
                                       std::span<const Label> keep) {
  const auto& layout = psi.layout();
  auto cpos = layout.positions(condition);
  auto kpos = layout.positions(keep);
  for (auto c : cpos) {
    if (std::find(kpos.begin(), kpos.end(), c) != kpos.end()) {
      throw Error(Errc::DuplicateLabel, "a subsystem cannot be both conditioned on and kept");
    }
  }
  std::vector<std::size_t> cdims;
  std::size_t n = 1;
  for (auto c : cpos) {
    cdims.push_back(layout.dims()[c]);
    n *= layout.dims()[c];
  }
  std::vector<Matrix> blocks(n);
  std::vector<std::size_t> values(cpos.size());
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t rem = x;
    for (std::size_t i = cpos.size(); i-- > 0;) {
      values[i] = rem % cdims[i];
      rem /= cdims[i];
    }
    blocks[x] = kernels::reduce(psi.amps(), layout.dims(), kpos, cpos, values);
  }
  return blocks;
}

std::vector<double> eigenvalues(const Matrix& hermitian) {
  Matrix sym = (hermitian + hermitian.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(Errc::DimensionMismatch, "trace_distance operands differ in dimension");
  // Fixed operand order keeps the result bit-for-bit symmetric.
  const bool swap = std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size(),
                                                 [](cplx x, cplx y) {
                                                   return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
                                                 });
  double s = 0.0;
  for (double e : eigenvalues(swap ? Matrix(b - a) : Matrix(a - b))) s += std::abs(e);
  return std::clamp(0.5 * s, 0.0, 1.0);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance(a.entries(), b.entries());
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.entries().squaredNorm();
}

double entropy(const Matrix& rho) {
  double s = 0.0;
  for (double e : eigenvalues(rho)) {
    if (e > 1e-15) s -= e * std::log2(e);
  }
  return std::max(s, 0.0);
}

double entropy(const DensityMatrix& rho) { return entropy(rho.entries()); }

cplx inner(const StateVector& a, const StateVector& b) {
  if (a.layout() != b.layout()) throw Error(Errc::DimensionMismatch, "inner product of different layouts");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double distance_up_to_phase(const StateVector& a, const StateVector& b) {
  if (a.layout() != b.layout()) return std::numeric_limits<double>::infinity();
  const cplx ov = inner(b, a);
  const cplx phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : cplx{1.0, 0.0};
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - phase * b[i]));
  return d;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.layout() != b.layout()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace sqkd
