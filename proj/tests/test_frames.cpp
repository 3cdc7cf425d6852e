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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "entlab/frames.hpp"
#include "entlab/random.hpp"

using namespace entlab;

TEST_CASE("qubit points map onto states", "[frames]") {
  // (alpha, beta, theta) = (0, 1, pi/2): the state i|1>.
  const StateVector a = qubit_point_to_state({0.0, 1.0, std::numbers::pi / 2});
  REQUIRE(std::abs(a[0]) < kExactTol);
  REQUIRE(std::abs(a[1] - cplx(0.0, 1.0)) < kExactTol);

  // (1/sqrt2, 1/sqrt2, pi/2): the circular superposition (|0>+i|1>)/sqrt2.
  const double s = 1.0 / std::sqrt(2.0);
  const StateVector b = qubit_point_to_state({s, s, std::numbers::pi / 2});
  REQUIRE(std::abs(b[0] - cplx(s, 0.0)) < kExactTol);
  REQUIRE(std::abs(b[1] - cplx(0.0, s)) < kExactTol);

  // (1/sqrt2, 1/sqrt2, 0): the balanced real superposition.
  const StateVector c = qubit_point_to_state({s, s, 0.0});
  REQUIRE(std::abs(c[0] - cplx(s, 0.0)) < kExactTol);
  REQUIRE(std::abs(c[1] - cplx(s, 0.0)) < kExactTol);

  REQUIRE_THROWS_AS(qubit_point_to_state({0.5, 0.5, 0.0}), std::invalid_argument);
  REQUIRE_THROWS_AS(qubit_point_to_state({-1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("general rotation special cases", "[frames]") {
  // alpha=1, beta=0, zero angles: diag(1, -1).
  const OperatorMatrix r1 = general_rotation({1.0, 0.0, 0.0, 0.0});
  REQUIRE(std::abs(r1.at(0, 0) - cplx(1.0)) < kExactTol);
  REQUIRE(std::abs(r1.at(0, 1)) < kExactTol);
  REQUIRE(std::abs(r1.at(1, 0)) < kExactTol);
  REQUIRE(std::abs(r1.at(1, 1) + cplx(1.0)) < kExactTol);

  // Balanced amplitudes, zero angles: the Hadamard.
  const double s = 1.0 / std::sqrt(2.0);
  const OperatorMatrix r2 = general_rotation({s, s, 0.0, 0.0});
  REQUIRE(std::abs(r2.at(0, 0) - cplx(s)) < kExactTol);
  REQUIRE(std::abs(r2.at(0, 1) - cplx(s)) < kExactTol);
  REQUIRE(std::abs(r2.at(1, 0) - cplx(s)) < kExactTol);
  REQUIRE(std::abs(r2.at(1, 1) + cplx(s)) < kExactTol);

  REQUIRE_THROWS_AS(general_rotation({0.9, 0.9, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("general rotation is unitary for every parameter choice", "[frames]") {
  Rng rng(31);
  for (int rep = 0; rep < 50; ++rep) {
    const double phi = rng.uniform(0.0, std::numbers::pi / 2);
    const RotationParams p{std::cos(phi), std::sin(phi), rng.uniform(-6.0, 6.0),
                           rng.uniform(-6.0, 6.0)};
    const OperatorMatrix r = general_rotation(p);
    REQUIRE(is_unitary(r, kExactTol));
    // First column is the rotated |0>.
    const StateVector out = apply(r, ket0());
    REQUIRE(std::abs(out[0] - p.alpha * std::polar(1.0, p.theta1)) < kExactTol);
    REQUIRE(std::abs(out[1] - p.beta * std::polar(1.0, p.theta2)) < kExactTol);
  }
}

TEST_CASE("nine directions are normalized and correctly placed", "[frames]") {
  const auto dirs = nine_directions();
  REQUIRE(dirs.size() == 9);
  for (const StateVector& d : dirs) {
    REQUIRE(d.dim() == 3);
    REQUIRE(std::abs(d.norm() - 1.0) < kExactTol);
  }
  REQUIRE(std::abs(dirs[2][2] - cplx(1.0)) < kExactTol);
  const double s = 1.0 / std::sqrt(2.0);
  REQUIRE(std::abs(dirs[3][0] - cplx(s)) < kExactTol);
  REQUIRE(std::abs(dirs[3][1] - cplx(s)) < kExactTol);
  REQUIRE(std::abs(dirs[3][2]) < kExactTol);
  REQUIRE(nine_direction_labels().size() == 9);
}

TEST_CASE("pairwise direction overlaps take three values", "[frames]") {
  // Brute force over all 36 unordered pairs: the squared overlap of two
  // distinct directions is 0 (orthogonal), 1/4 (superpositions of different
  // planes sharing one axis), or 1/2 (axis against a superposition through
  // it, or plane-sharing superpositions).
  const auto dirs = nine_directions();
  std::set<long> seen;  // overlaps scaled by 1e6 and rounded for set identity
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      const double f = fidelity(dirs[i], dirs[j]);
      const bool ok = std::abs(f) < kExactTol || std::abs(f - 0.25) < kExactTol ||
                      std::abs(f - 0.5) < kExactTol;
      REQUIRE(ok);
      seen.insert(std::lround(f * 1e6));
    }
  }
  // All three values actually occur.
  REQUIRE(seen == std::set<long>({0, 250000, 500000}));
}

TEST_CASE("six frames partition the directions", "[frames]") {
  const auto frames = six_frames();
  REQUIRE(frames.size() == 6);

  for (const Frame& f : frames) {
    // Each frame is an orthonormal pair.
    REQUIRE(std::abs(fidelity(f.vectors[0], f.vectors[0]) - 1.0) < kExactTol);
    REQUIRE(std::abs(fidelity(f.vectors[1], f.vectors[1]) - 1.0) < kExactTol);
    REQUIRE(fidelity(f.vectors[0], f.vectors[1]) < kExactTol);
  }

  // Within each plane the two frames are mutually unbiased: every cross
  // overlap is 1/2.
  for (const Frame& a : frames) {
    for (const Frame& b : frames) {
      if (a.plane != b.plane || a.label == b.label) continue;
      for (const StateVector& u : a.vectors) {
        for (const StateVector& v : b.vectors) {
          REQUIRE(std::abs(fidelity(u, v) - 0.5) < kExactTol);
        }
      }
    }
  }

  // The twelve frame vectors cover all nine directions: computational axes
  // appear twice, superpositions once.
  const auto dirs = nine_directions();
  std::array<int, 9> hits{};
  for (const Frame& f : frames) {
    for (const StateVector& v : f.vectors) {
      bool found = false;
      for (std::size_t d = 0; d < dirs.size(); ++d) {
        if (equal_up_to_global_phase(v, dirs[d], kExactTol).matched) {
          ++hits[d];
          found = true;
          break;
        }
      }
      REQUIRE(found);
    }
  }
  for (std::size_t d = 0; d < 9; ++d) {
    REQUIRE(hits[d] == (d < 3 ? 2 : 1));
  }
}

TEST_CASE("frame membership lookups", "[frames]") {
  const auto dirs = nine_directions();

  const auto m0 = frame_membership(dirs[0]);  // |0>
  REQUIRE(m0 == std::vector<std::string>({"XY-computational", "XZ-computational"}));

  const auto m7 = frame_membership(dirs[7]);  // (|1>+|2>)/sqrt2
  REQUIRE(m7 == std::vector<std::string>({"YZ-superposition"}));

  // Membership is a ray property: a global phase does not change it.
  const StateVector phased = StateVector::unchecked(
      {cplx(0.0, 1.0) * dirs[7][0], cplx(0.0, 1.0) * dirs[7][1], cplx(0.0, 1.0) * dirs[7][2]});
  REQUIRE(frame_membership(phased) == m7);

  REQUIRE_THROWS_AS(frame_membership(StateVector::normalized({0.6, 0.8, 0.0})),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(frame_membership(ket0()), std::invalid_argument);
}
