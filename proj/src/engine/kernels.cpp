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

#include "sqkd/engine/kernels.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sqkd::kernels {
namespace {

// Below this many complex multiply-adds a parallel region costs more than it saves.
constexpr std::size_t kParallelWork = std::size_t{1} << 14;

std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) s[i - 1] = s[i] * dims[i];
  return s;
}

std::size_t product(std::span<const std::size_t> dims, std::span<const std::size_t> positions) {
  std::size_t p = 1;
  for (auto pos : positions) p *= dims[pos];
  return p;
}

std::size_t fixed_base(std::span<const std::size_t> dims, std::span<const std::size_t> fixed,
                       std::span<const std::size_t> values) {
  auto strides = strides_of(dims);
  std::size_t base = 0;
  for (std::size_t i = 0; i < fixed.size(); ++i) base += values[i] * strides[fixed[i]];
  return base;
}

std::vector<std::size_t> merged(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::vector<std::size_t> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::vector<std::size_t> subset_offsets(std::span<const std::size_t> dims,
                                        std::span<const std::size_t> positions) {
  auto strides = strides_of(dims);
  std::vector<std::size_t> offsets{0};
  offsets.reserve(product(dims, positions));
  for (auto pos : positions) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[pos]);
    for (auto o : offsets) {
      for (std::size_t d = 0; d < dims[pos]; ++d) next.push_back(o + d * strides[pos]);
    }
    offsets = std::move(next);
  }
  return offsets;
}

std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> positions) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(positions.begin(), positions.end(), i) == positions.end()) out.push_back(i);
  }
  return out;
}

void apply_matrix(std::span<cplx> amps, std::span<const std::size_t> dims,
                  std::span<const std::size_t> targets, const Matrix& u) {
  const auto target_off = subset_offsets(dims, targets);
  const auto rest_off = subset_offsets(dims, complement(dims.size(), targets));
  const auto k = static_cast<std::int64_t>(target_off.size());
  const auto n_rest = static_cast<std::int64_t>(rest_off.size());
  const bool parallel = static_cast<std::size_t>(n_rest * k * k) >= kParallelWork;

#pragma omp parallel if (parallel)
  {
    std::vector<cplx> in(static_cast<std::size_t>(k));
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < n_rest; ++r) {
      const std::size_t base = rest_off[static_cast<std::size_t>(r)];
      for (std::int64_t j = 0; j < k; ++j) in[j] = amps[base + target_off[j]];
      for (std::int64_t i = 0; i < k; ++i) {
        cplx acc = 0.0;
        for (std::int64_t j = 0; j < k; ++j) acc += u(i, j) * in[j];
        amps[base + target_off[i]] = acc;
      }
    }
  }
}

Matrix reduce(std::span<const cplx> amps, std::span<const std::size_t> dims,
              std::span<const std::size_t> keep, std::span<const std::size_t> fixed,
              std::span<const std::size_t> fixed_values) {
  const auto keep_off = subset_offsets(dims, keep);
  const auto rest_off = subset_offsets(dims, complement(dims.size(), merged(keep, fixed)));
  const std::size_t base = fixed_base(dims, fixed, fixed_values);
  const auto k = static_cast<std::int64_t>(keep_off.size());
  const std::size_t n_rest = rest_off.size();
  Matrix rho = Matrix::Zero(k, k);
  const bool parallel = static_cast<std::size_t>(k * k) * n_rest / 2 >= kParallelWork;

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t a = 0; a < k; ++a) {
    const std::size_t oa = base + keep_off[static_cast<std::size_t>(a)];
    for (std::int64_t b = a; b < k; ++b) {
      const std::size_t ob = base + keep_off[static_cast<std::size_t>(b)];
      cplx acc = 0.0;
      for (std::size_t r = 0; r < n_rest; ++r) acc += amps[oa + rest_off[r]] * std::conj(amps[ob + rest_off[r]]);
      rho(a, b) = acc;
      rho(b, a) = std::conj(acc);
    }
  }
  return rho;
}

std::vector<double> marginal_probabilities(std::span<const cplx> amps,
                                           std::span<const std::size_t> dims,
                                           std::span<const std::size_t> keep) {
  const auto keep_off = subset_offsets(dims, keep);
  const auto rest_off = subset_offsets(dims, complement(dims.size(), keep));
  const auto k = static_cast<std::int64_t>(keep_off.size());
  std::vector<double> p(keep_off.size(), 0.0);
  const bool parallel = amps.size() >= kParallelWork;

#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t a = 0; a < k; ++a) {
    double acc = 0.0;
    for (auto r : rest_off) acc += std::norm(amps[keep_off[a] + r]);
    p[a] = acc;
  }
  return p;
}

namespace serial {
namespace {

std::vector<std::size_t> decode(std::size_t index, std::span<const std::size_t> dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    digits[i] = index % dims[i];
    index /= dims[i];
  }
  return digits;
}

std::size_t encode(std::span<const std::size_t> digits, std::span<const std::size_t> dims) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) index = index * dims[i] + digits[i];
  return index;
}

// Row-major index of the digits at `positions`.
std::size_t sub_index(std::span<const std::size_t> digits, std::span<const std::size_t> dims,
                      std::span<const std::size_t> positions) {
  std::size_t index = 0;
  for (auto p : positions) index = index * dims[p] + digits[p];
  return index;
}

std::size_t total(std::span<const std::size_t> dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  return n;
}

}  // namespace

void apply_matrix(std::span<cplx> amps, std::span<const std::size_t> dims,
                  std::span<const std::size_t> targets, const Matrix& u) {
  const std::size_t n = total(dims);
  const auto k = static_cast<std::size_t>(u.rows());
  std::vector<cplx> out(n);
  std::vector<std::size_t> target_dims;
  for (auto t : targets) target_dims.push_back(dims[t]);

  for (std::size_t i = 0; i < n; ++i) {
    auto digits = decode(i, dims);
    const std::size_t row = sub_index(digits, dims, targets);
    cplx acc = 0.0;
    for (std::size_t col = 0; col < k; ++col) {
      auto col_digits = decode(col, target_dims);
      for (std::size_t t = 0; t < targets.size(); ++t) digits[targets[t]] = col_digits[t];
      acc += u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) * amps[encode(digits, dims)];
    }
    out[i] = acc;
  }
  std::copy(out.begin(), out.end(), amps.begin());
}

Matrix reduce(std::span<const cplx> amps, std::span<const std::size_t> dims,
              std::span<const std::size_t> keep, std::span<const std::size_t> fixed,
              std::span<const std::size_t> fixed_values) {
  const auto rest = complement(dims.size(), merged(keep, fixed));
  const auto k = static_cast<Eigen::Index>(product(dims, keep));
  const auto r = static_cast<Eigen::Index>(product(dims, rest));
  Matrix m = Matrix::Zero(k, r);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    auto digits = decode(i, dims);
    bool match = true;
    for (std::size_t f = 0; f < fixed.size(); ++f) match = match && digits[fixed[f]] == fixed_values[f];
    if (!match) continue;
    m(static_cast<Eigen::Index>(sub_index(digits, dims, keep)),
      static_cast<Eigen::Index>(sub_index(digits, dims, rest))) = amps[i];
  }
  return m * m.adjoint();
}

std::vector<double> marginal_probabilities(std::span<const cplx> amps,
                                           std::span<const std::size_t> dims,
                                           std::span<const std::size_t> keep) {
  std::vector<double> p(product(dims, keep), 0.0);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    p[sub_index(decode(i, dims), dims, keep)] += std::norm(amps[i]);
  }
  return p;
}

}  // namespace serial
}  // namespace sqkd::kernels
