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

#include <cmath>
#include <stdexcept>

#include "entlab/linalg.hpp"

namespace entlab {

namespace detail {
inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

/// Two-qubit entangler: maps the computational basis onto the Bell basis,
/// |00> -> (|00>+|11>)/sqrt2 and so on.
inline OperatorMatrix entangler() {
  const double s = detail::kInvSqrt2;
  return OperatorMatrix::from_rows({
      {s, 0.0, 0.0, s},
      {0.0, s, s, 0.0},
      {0.0, s, -s, 0.0},
      {s, 0.0, 0.0, -s},
  });
}

/// Entangler with phase damage theta1 on the |00>/|11> plane and theta2 on
/// the |01>/|10> plane. The lower rows carry the conjugate phases so the gate
/// stays unitary for every angle pair; imperfect_entangler(0, 0) reduces to
/// entangler() exactly.
inline OperatorMatrix imperfect_entangler(double theta1, double theta2) {
  if (!std::isfinite(theta1) || !std::isfinite(theta2)) {
    throw std::invalid_argument("imperfect_entangler: non-finite angle");
  }
  const double s = detail::kInvSqrt2;
  const cplx e1 = std::polar(1.0, theta1);
  const cplx e2 = std::polar(1.0, theta2);
  return OperatorMatrix::from_rows({
      {s * e1, 0.0, 0.0, cplx(s)},
      {0.0, s * e2, cplx(s), 0.0},
      {0.0, cplx(s), -s * std::conj(e2), 0.0},
      {cplx(s), 0.0, 0.0, -s * std::conj(e1)},
  });
}

inline OperatorMatrix hadamard2() {
  const double s = detail::kInvSqrt2;
  return OperatorMatrix::from_rows({
      {s, s},
      {s, -s},
  });
}

/// Two-qubit Hadamard H (x) H; the readout that turns residual entangler
/// phase error into |01>/|10> population.
inline OperatorMatrix hadamard4() {
  return tensor(hadamard2(), hadamard2());
}

/// Hermitian involution that separates the circular pair: maps
/// (|0>+i|1>)/sqrt2 to |0> and (|0>-i|1>)/sqrt2 to |1> (up to phase), so a
/// computational readout distinguishes +i from -i superpositions.
inline OperatorMatrix i_distinguisher() {
  const double s = detail::kInvSqrt2;
  const cplx i(0.0, 1.0);
  return OperatorMatrix::from_rows({
      {cplx(s), -s * i},
      {s * i, cplx(-s)},
  });
}

}  // namespace entlab
