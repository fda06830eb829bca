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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sqkd {

// Role of a subsystem in the joint Bob-memory / transit / Alice-probe /
// Eve-probe register. `Register` is a neutral tag for standalone matrices.
enum class Role : std::uint8_t { BobMemory, Transit, AliceProbe, EveProbe, Register };

struct Label {
  Role role = Role::Register;
  std::uint32_t index = 0;

  auto operator<=>(const Label&) const = default;

  std::string str() const;
};

inline Label bob_memory(std::uint32_t i) { return {Role::BobMemory, i}; }
inline Label transit() { return {Role::Transit, 0}; }
inline Label alice_probe(std::uint32_t i) { return {Role::AliceProbe, i}; }
inline Label eve_probe(std::uint32_t i) { return {Role::EveProbe, i}; }
inline Label reg(std::uint32_t i) { return {Role::Register, i}; }

// Ordered list of subsystems. Amplitudes are row-major over this list: the
// first subsystem is the most significant digit of a basis index.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  SubsystemLayout(std::vector<std::size_t> dims, std::vector<Label> labels);

  static SubsystemLayout single(Label label, std::size_t dim);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return dims_.size(); }
  bool empty() const { return dims_.empty(); }
  std::size_t total_dim() const { return total_; }

  bool contains(Label label) const;
  // Throws Errc::UnknownLabel.
  std::size_t position(Label label) const;
  std::vector<std::size_t> positions(std::span<const Label> labels) const;
  std::size_t dim_of(Label label) const { return dims_[position(label)]; }
  std::size_t stride(std::size_t pos) const;

  // Throws Errc::DuplicateLabel when the label sets intersect.
  SubsystemLayout concat(const SubsystemLayout& other) const;
  SubsystemLayout without(Label label) const;
  SubsystemLayout subset(std::span<const Label> labels) const;
  SubsystemLayout relabeled(Label from, Label to) const;

  std::vector<Label> labels_with_role(Role role) const;

  bool operator==(const SubsystemLayout&) const = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Label> labels_;
  std::size_t total_ = 1;
};

}  // namespace sqkd
