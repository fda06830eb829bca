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

#include "sqkd/engine/layout.hpp"

#include <algorithm>

#include "sqkd/engine/error.hpp"

namespace sqkd {

std::string Label::str() const {
  switch (role) {
    case Role::BobMemory: return "B" + std::to_string(index);
    case Role::Transit: return "T";
    case Role::AliceProbe: return "A" + std::to_string(index);
    case Role::EveProbe: return "E" + std::to_string(index);
    case Role::Register: return "R" + std::to_string(index);
  }
  return "?";
}

SubsystemLayout::SubsystemLayout(std::vector<std::size_t> dims, std::vector<Label> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.size() != labels_.size()) {
    throw Error(Errc::DimensionMismatch, "layout has " + std::to_string(dims_.size()) +
                                             " dims but " + std::to_string(labels_.size()) +
                                             " labels");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (dims_[i] == 0) throw Error(Errc::DimensionMismatch, "subsystem dimension must be >= 1");
    total_ *= dims_[i];
  }
  auto sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(Errc::DuplicateLabel, dup->str());
  }
}

SubsystemLayout SubsystemLayout::single(Label label, std::size_t dim) {
  return SubsystemLayout({dim}, {label});
}

bool SubsystemLayout::contains(Label label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t SubsystemLayout::position(Label label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(Errc::UnknownLabel, label.str());
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> SubsystemLayout::positions(std::span<const Label> labels) const {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) {
    auto p = position(l);
    if (std::find(out.begin(), out.end(), p) != out.end()) {
      throw Error(Errc::DuplicateLabel, l.str());
    }
    out.push_back(p);
  }
  return out;
}

std::size_t SubsystemLayout::stride(std::size_t pos) const {
  std::size_t s = 1;
  for (std::size_t j = pos + 1; j < dims_.size(); ++j) s *= dims_[j];
  return s;
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& other) const {
  auto dims = dims_;
  auto labels = labels_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  return SubsystemLayout(std::move(dims), std::move(labels));
}

SubsystemLayout SubsystemLayout::without(Label label) const {
  auto pos = position(label);
  auto dims = dims_;
  auto labels = labels_;
  dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(pos));
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(pos));
  return SubsystemLayout(std::move(dims), std::move(labels));
}

SubsystemLayout SubsystemLayout::subset(std::span<const Label> labels) const {
  std::vector<std::size_t> dims;
  for (const auto& l : labels) dims.push_back(dims_[position(l)]);
  return SubsystemLayout(std::move(dims), {labels.begin(), labels.end()});
}

SubsystemLayout SubsystemLayout::relabeled(Label from, Label to) const {
  auto labels = labels_;
  labels[position(from)] = to;
  return SubsystemLayout(dims_, std::move(labels));
}

std::vector<Label> SubsystemLayout::labels_with_role(Role role) const {
  std::vector<Label> out;
  for (const auto& l : labels_) {
    if (l.role == role) out.push_back(l);
  }
  return out;
}

}  // namespace sqkd
