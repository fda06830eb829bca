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

// Brute-force reference computations used as test oracles. Everything here is
// written directly against index arithmetic and full matrices, without going
// through the engine kernels, so agreement is meaningful.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "sqkd/attacks/attack_spec.hpp"
#include "sqkd/protocol/protocol.hpp"

namespace sqkd::oracle {

using cvec = std::vector<std::complex<double>>;

// Mixed-radix digits of `index`, most significant subsystem first.
inline std::vector<std::size_t> digits(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> d(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    d[i] = index % dims[i];
    index /= dims[i];
  }
  return d;
}

// Tr_rest |psi><psi| built from the full density matrix; `keep` holds
// positions in the order the reduced matrix should use.
inline Eigen::MatrixXcd partial_trace(const cvec& psi, const std::vector<std::size_t>& dims,
                                      const std::vector<std::size_t>& keep) {
  const auto n = static_cast<Eigen::Index>(psi.size());
  Eigen::MatrixXcd full(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) full(i, j) = psi[i] * std::conj(psi[j]);
  }
  std::size_t kdim = 1;
  for (auto p : keep) kdim *= dims[p];
  std::vector<bool> kept(dims.size(), false);
  for (auto p : keep) kept[p] = true;

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(kdim), static_cast<Eigen::Index>(kdim));
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto di = digits(static_cast<std::size_t>(i), dims);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto dj = digits(static_cast<std::size_t>(j), dims);
      bool same_rest = true;
      for (std::size_t s = 0; s < dims.size() && same_rest; ++s) same_rest = kept[s] || di[s] == dj[s];
      if (!same_rest) continue;
      std::size_t a = 0, b = 0;
      for (auto p : keep) {
        a = a * dims[p] + di[p];
        b = b * dims[p] + dj[p];
      }
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) += full(i, j);
    }
  }
  return out;
}

// n-qubit register, qubit 0 is the most significant bit.
struct Qubits {
  std::size_t n = 0;
  cvec amps{1.0};

  std::size_t bit(std::size_t q) const { return std::size_t{1} << (n - 1 - q); }

  // Applies a 2^k x 2^k gate whose row index reads qubits[0] as its high bit.
  void apply(const Eigen::MatrixXcd& g, const std::vector<std::size_t>& qubits) {
    const std::size_t k = qubits.size();
    const std::size_t m = std::size_t{1} << k;
    std::size_t mask = 0;
    for (auto q : qubits) mask |= bit(q);
    cvec in(m), out(m);
    std::vector<std::size_t> idx(m);
    for (std::size_t base = 0; base < amps.size(); ++base) {
      if (base & mask) continue;
      for (std::size_t s = 0; s < m; ++s) {
        std::size_t i = base;
        for (std::size_t t = 0; t < k; ++t) {
          if ((s >> (k - 1 - t)) & 1U) i |= bit(qubits[t]);
        }
        idx[s] = i;
        in[s] = amps[i];
      }
      for (std::size_t r = 0; r < m; ++r) {
        std::complex<double> acc = 0.0;
        for (std::size_t c = 0; c < m; ++c) acc += g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
        out[r] = acc;
      }
      for (std::size_t s = 0; s < m; ++s) amps[idx[s]] = out[s];
    }
  }

  void append(const cvec& single) {
    cvec next(amps.size() * single.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
      for (std::size_t j = 0; j < single.size(); ++j) next[i * single.size() + j] = amps[i] * single[j];
    }
    amps = std::move(next);
    n += single.size() == 2 ? 1 : 0;
  }
};

// The whole protocol for a fixed choice pattern, on qubits laid out as
// [Eve probe qubits..., B0, A0, B1, A1, ...]. Bob's transit qubit for round i
// lives in slot B_i from the start; SIFT is the CNOT B_i -> A_i.
// Only qubit probes (or the trivial dimension-1 probe) are supported.
inline Qubits run_protocol(const attacks::AttackSpec& attack, const std::vector<protocol::Choice>& pattern) {
  const auto& probe = attack.probe_layout();
  std::size_t n_eve = 0;
  for (auto d : probe.dims()) {
    if (d == 2) {
      ++n_eve;
    } else if (d != 1) {
      throw std::invalid_argument("oracle handles qubit probes only");
    }
  }
  Qubits q;
  q.n = n_eve;
  q.amps = attack.probe_init().amps();
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    q.append({h, h});
    q.append({1.0, 0.0});
  }
  auto qubit_of = [&](Label l, std::size_t round) -> std::size_t {
    if (l.role == Role::Transit) return n_eve + 2 * round;
    std::size_t pos = 0;
    for (std::size_t s = 0; s < probe.size(); ++s) {
      if (probe.labels()[s] == l) return pos;
      if (probe.dims()[s] == 2) ++pos;
    }
    throw std::invalid_argument("unknown probe label");
  };
  auto run_step = [&](const attacks::AttackStep* step, std::size_t round) {
    if (!step) return;
    std::vector<std::size_t> qs;
    for (const auto& l : step->targets) {
      if (l.role != Role::Transit && probe.dim_of(l) == 1) continue;
      qs.push_back(qubit_of(l, round));
    }
    q.apply(step->unitary.matrix(), qs);
  };
  Eigen::MatrixXcd cnot = Eigen::MatrixXcd::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    run_step(attack.forward(i), i);
    if (pattern[i] == protocol::Choice::Sift) q.apply(cnot, {n_eve + 2 * i, n_eve + 2 * i + 1});
    run_step(attack.backward(i), i);
  }
  return q;
}

// Eve's unnormalized state conditioned on Alice's SIFT bits taking value x
// (bits in pattern order, first SIFT round most significant), obtained by
// projecting the full state and summing out everything but Eve's qubits.
inline std::vector<Eigen::MatrixXcd> eve_conditionals(const Qubits& q, std::size_t n_eve,
                                                      const std::vector<protocol::Choice>& pattern) {
  std::vector<std::size_t> alice;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == protocol::Choice::Sift) alice.push_back(n_eve + 2 * i + 1);
  }
  const std::size_t k = alice.size();
  const std::size_t de = std::size_t{1} << n_eve;
  const std::size_t rest = q.amps.size() / de;
  std::vector<Eigen::MatrixXcd> out(std::size_t{1} << k,
                                    Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(de), static_cast<Eigen::Index>(de)));
  for (std::size_t x = 0; x < out.size(); ++x) {
    cvec projected = q.amps;
    for (std::size_t i = 0; i < projected.size(); ++i) {
      for (std::size_t t = 0; t < k; ++t) {
        const std::size_t want = (x >> (k - 1 - t)) & 1U;
        if (((i & q.bit(alice[t])) != 0) != (want == 1)) projected[i] = 0.0;
      }
    }
    for (std::size_t e = 0; e < de; ++e) {
      for (std::size_t f = 0; f < de; ++f) {
        std::complex<double> acc = 0.0;
        for (std::size_t r = 0; r < rest; ++r) acc += projected[e * rest + r] * std::conj(projected[f * rest + r]);
        out[x](static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(f)) = acc;
      }
    }
  }
  return out;
}

inline double trace_norm_half(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

inline double entropy_bits(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    if (l > 1e-15) s -= l * std::log2(l);
  }
  return s;
}

}  // namespace sqkd::oracle
