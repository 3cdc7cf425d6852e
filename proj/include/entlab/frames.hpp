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

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "entlab/linalg.hpp"

namespace entlab {

/// Point on the unit circle over the qubit basis: alpha|0> + beta e^{i theta}|1>
/// with real alpha, beta >= 0 and alpha^2 + beta^2 = 1.
struct QubitPoint {
  double alpha = 1.0;
  double beta = 0.0;
  double theta = 0.0;
};

/// Parameters of the general single-qubit rotation
///   [ alpha e^{i theta1}   beta e^{-i theta2} ]
///   [ beta  e^{i theta2}  -alpha e^{-i theta1} ],
/// unitary for every angle pair when alpha^2 + beta^2 = 1.
struct RotationParams {
  double alpha = 1.0;
  double beta = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
};

namespace detail {

inline void require_amplitude_pair(double alpha, double beta, const char* what) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha < 0.0 || beta < 0.0) {
    throw std::invalid_argument(std::string(what) +
                                ": alpha and beta must be finite and nonnegative");
  }
  const double n2 = alpha * alpha + beta * beta;
  if (std::abs(n2 - 1.0) > kExactTol) {
    throw std::invalid_argument(std::string(what) + ": alpha^2 + beta^2 = " +
                                std::to_string(n2) + ", expected 1");
  }
}

inline void require_finite_angle(double theta, const char* what) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument(std::string(what) + ": non-finite angle");
  }
}

}  // namespace detail

inline StateVector qubit_point_to_state(const QubitPoint& p) {
  detail::require_amplitude_pair(p.alpha, p.beta, "qubit_point_to_state");
  detail::require_finite_angle(p.theta, "qubit_point_to_state");
  return StateVector({cplx(p.alpha, 0.0), p.beta * std::polar(1.0, p.theta)});
}

inline OperatorMatrix general_rotation(const RotationParams& r) {
  detail::require_amplitude_pair(r.alpha, r.beta, "general_rotation");
  detail::require_finite_angle(r.theta1, "general_rotation");
  detail::require_finite_angle(r.theta2, "general_rotation");
  const cplx e1 = std::polar(1.0, r.theta1);
  const cplx e2 = std::polar(1.0, r.theta2);
  return OperatorMatrix::from_rows({
      {r.alpha * e1, r.beta * std::conj(e2)},
      {r.beta * e2, -r.alpha * std::conj(e1)},
  });
}

/// Coordinate plane spanned by two of the three qutrit basis directions.
enum class Plane { XY, XZ, YZ };

inline const char* plane_name(Plane p) {
  switch (p) {
    case Plane::XY: return "XY";
    case Plane::XZ: return "XZ";
    case Plane::YZ: return "YZ";
  }
  throw std::logic_error("plane_name: bad enum value");
}

/// Measurement frame for a qutrit: an orthonormal pair spanning one
/// coordinate plane. Each plane carries two frames (the computational pair
/// and the balanced-superposition pair), mutually unbiased within the plane.
struct Frame {
  std::string label;
  Plane plane;
  std::array<StateVector, 2> vectors;
};

/// The nine signal directions of the qutrit scheme: three computational axes
/// plus a +/- superposition pair inside each coordinate plane.
///
/// Index order: 0:|0>, 1:|1>, 2:|2>, 3:(|0>+|1>)/sqrt2, 4:(|0>-|1>)/sqrt2,
/// 5:(|0>+|2>)/sqrt2, 6:(|0>-|2>)/sqrt2, 7:(|1>+|2>)/sqrt2, 8:(|1>-|2>)/sqrt2.
inline std::vector<StateVector> nine_directions() {
  std::vector<StateVector> d;
  d.reserve(9);
  d.push_back(basis_state(3, 0));
  d.push_back(basis_state(3, 1));
  d.push_back(basis_state(3, 2));
  d.push_back(StateVector::normalized({1.0, 1.0, 0.0}));
  d.push_back(StateVector::normalized({1.0, -1.0, 0.0}));
  d.push_back(StateVector::normalized({1.0, 0.0, 1.0}));
  d.push_back(StateVector::normalized({1.0, 0.0, -1.0}));
  d.push_back(StateVector::normalized({0.0, 1.0, 1.0}));
  d.push_back(StateVector::normalized({0.0, 1.0, -1.0}));
  return d;
}

/// Human-readable names matching the nine_directions() index order.
inline std::vector<std::string> nine_direction_labels() {
  return {"|0>",           "|1>",           "|2>",
          "(|0>+|1>)/sqrt2", "(|0>-|1>)/sqrt2", "(|0>+|2>)/sqrt2",
          "(|0>-|2>)/sqrt2", "(|1>+|2>)/sqrt2", "(|1>-|2>)/sqrt2"};
}

/// The six qutrit measurement frames: {computational, superposition} pair per
/// coordinate plane. Together their vectors cover all nine directions.
inline std::vector<Frame> six_frames() {
  const std::vector<StateVector> d = nine_directions();
  std::vector<Frame> f;
  f.reserve(6);
  f.push_back(Frame{"XY-computational", Plane::XY, {d[0], d[1]}});
  f.push_back(Frame{"XY-superposition", Plane::XY, {d[3], d[4]}});
  f.push_back(Frame{"XZ-computational", Plane::XZ, {d[0], d[2]}});
  f.push_back(Frame{"XZ-superposition", Plane::XZ, {d[5], d[6]}});
  f.push_back(Frame{"YZ-computational", Plane::YZ, {d[1], d[2]}});
  f.push_back(Frame{"YZ-superposition", Plane::YZ, {d[7], d[8]}});
  return f;
}

/// Labels of every frame containing the given direction (up to global
/// phase). Computational axes belong to two frames, superpositions to one.
/// Throws if the state is not one of the nine directions.
inline std::vector<std::string> frame_membership(const StateVector& s) {
  if (s.dim() != 3) {
    throw std::invalid_argument("frame_membership: qutrit state required");
  }
  std::vector<std::string> labels;
  for (const Frame& f : six_frames()) {
    for (const StateVector& v : f.vectors) {
      if (equal_up_to_global_phase(s, v, kExactTol).matched) {
        labels.push_back(f.label);
        break;
      }
    }
  }
  if (labels.empty()) {
    throw std::invalid_argument("frame_membership: state is not one of the nine directions");
  }
  return labels;
}

}  // namespace entlab
