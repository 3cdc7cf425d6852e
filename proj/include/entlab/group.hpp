// Copyright 2026 the entlab developers
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

#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "entlab/linalg.hpp"

namespace entlab {

/// The eight single-qubit operators used for extended dense coding. All
/// entries lie in {0, +/-1, +/-i}; the set is closed under multiplication up
/// to a global phase in {1, -1, i, -i}.
enum class Label : int { I = 0, A, B, C, D, E, F, G };

inline constexpr std::array<Label, 8> kAllLabels{Label::I, Label::A, Label::B, Label::C,
                                                 Label::D, Label::E, Label::F, Label::G};

inline char label_char(Label l) {
  return "IABCDEFG"[static_cast<int>(l)];
}

inline Label label_from_char(char c) {
  const std::string names = "IABCDEFG";
  const std::size_t pos = names.find(c);
  if (pos == std::string::npos) {
    throw std::invalid_argument(std::string("label_from_char: unknown label '") + c + "'");
  }
  return static_cast<Label>(pos);
}

struct GroupElement {
  Label label;
  OperatorMatrix matrix;
};

inline GroupElement group_element(Label l) {
  const cplx i(0.0, 1.0);
  switch (l) {
    case Label::I: return {l, OperatorMatrix::from_rows({{1.0, 0.0}, {0.0, 1.0}})};
    case Label::A: return {l, OperatorMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})};
    case Label::B: return {l, OperatorMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}})};
    case Label::C: return {l, OperatorMatrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}})};
    case Label::D: return {l, OperatorMatrix::from_rows({{1.0, 0.0}, {0.0, i}})};
    case Label::E: return {l, OperatorMatrix::from_rows({{0.0, 1.0}, {i, 0.0}})};
    case Label::F: return {l, OperatorMatrix::from_rows({{1.0, 0.0}, {0.0, -i}})};
    case Label::G: return {l, OperatorMatrix::from_rows({{0.0, 1.0}, {-i, 0.0}})};
  }
  throw std::logic_error("group_element: bad enum value");
}

/// Published multiplication table, row label acting from the left:
/// entry [r][c] names the product (up to global phase) of row element r with
/// column element c.
inline constexpr std::array<std::array<char, 8>, 8> kProductTable{{
    {'I', 'A', 'B', 'C', 'D', 'E', 'F', 'G'},
    {'A', 'I', 'C', 'B', 'G', 'F', 'E', 'D'},
    {'B', 'C', 'I', 'A', 'F', 'G', 'D', 'E'},
    {'C', 'B', 'A', 'I', 'E', 'D', 'G', 'F'},
    {'D', 'E', 'F', 'G', 'B', 'C', 'I', 'A'},
    {'E', 'D', 'G', 'F', 'A', 'I', 'C', 'B'},
    {'F', 'G', 'D', 'E', 'I', 'A', 'B', 'C'},
    {'G', 'F', 'E', 'D', 'C', 'B', 'A', 'I'},
}};

inline Label expected_product(Label row, Label col) {
  return label_from_char(kProductTable[static_cast<std::size_t>(row)]
                                      [static_cast<std::size_t>(col)]);
}

/// Names a phase from {1, -1, i, -i}; group products never leave this set.
inline const char* phase_label(cplx phase) {
  const cplx i(0.0, 1.0);
  if (std::abs(phase - cplx(1.0)) <= kExactTol) return "1";
  if (std::abs(phase + cplx(1.0)) <= kExactTol) return "-1";
  if (std::abs(phase - i) <= kExactTol) return "i";
  if (std::abs(phase + i) <= kExactTol) return "-i";
  throw std::logic_error("phase_label: phase not a fourth root of unity");
}

/// One verified table entry: the product row*col identified as an element of
/// the set, with the global phase it picked up. `exact` means phase == 1.
struct TableVerdict {
  Label row;
  Label col;
  Label expected;
  Label computed;
  cplx phase;
  bool exact;
};

/// Identifies x*y within the eight-element set up to global phase. Throws if
/// the product escapes the set, which would falsify closure.
inline TableVerdict multiply_mod_phase(const GroupElement& x, const GroupElement& y) {
  const OperatorMatrix product = multiply(x.matrix, y.matrix);
  for (Label cand : kAllLabels) {
    const GroupElement g = group_element(cand);
    const PhaseMatch m = equal_up_to_global_phase(product, g.matrix, kExactTol);
    if (m.matched) {
      return TableVerdict{x.label, y.label, expected_product(x.label, y.label),
                          cand, m.phase,
                          std::abs(m.phase - cplx(1.0)) <= kExactTol};
    }
  }
  throw std::logic_error("multiply_mod_phase: product left the eight-element set");
}

inline TableVerdict multiply_mod_phase(Label x, Label y) {
  return multiply_mod_phase(group_element(x), group_element(y));
}

/// Recomputes all 64 products and identifies each within the set.
inline std::vector<TableVerdict> verify_table() {
  std::vector<TableVerdict> verdicts;
  verdicts.reserve(64);
  for (Label r : kAllLabels) {
    const GroupElement x = group_element(r);
    for (Label c : kAllLabels) {
      verdicts.push_back(multiply_mod_phase(x, group_element(c)));
    }
  }
  return verdicts;
}

/// True iff the labels contain the identity and are closed under
/// multiplication mod phase. Duplicates are ignored.
inline bool subgroup_check(const std::vector<Label>& labels) {
  std::vector<Label> set = labels;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (std::find(set.begin(), set.end(), Label::I) == set.end()) return false;
  for (Label a : set) {
    for (Label b : set) {
      const Label p = multiply_mod_phase(a, b).computed;
      if (std::find(set.begin(), set.end(), p) == set.end()) return false;
    }
  }
  return true;
}

}  // namespace entlab
