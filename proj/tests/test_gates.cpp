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

#include <cmath>
#include <numbers>

#include "entlab/entanglement.hpp"
#include "entlab/gates.hpp"
#include "entlab/linalg.hpp"

using namespace entlab;

TEST_CASE("entangler maps the computational basis to the Bell basis", "[gates]") {
  const OperatorMatrix u = entangler();
  REQUIRE(is_unitary(u, kExactTol));

  REQUIRE(max_entry_distance(apply(u, basis_state(4, 0)), bell_phi_plus()) < kExactTol);
  REQUIRE(max_entry_distance(apply(u, basis_state(4, 1)), bell_psi_plus()) < kExactTol);

  // Columns 2 and 3 give the remaining two Bell states with definite signs.
  const StateVector c2 = apply(u, basis_state(4, 2));
  REQUIRE(std::abs(c2[1] - cplx(1.0 / std::sqrt(2.0))) < kExactTol);
  REQUIRE(std::abs(c2[2] + cplx(1.0 / std::sqrt(2.0))) < kExactTol);
  const StateVector c3 = apply(u, basis_state(4, 3));
  REQUIRE(max_entry_distance(c3, bell_phi_minus()) < kExactTol);
}

TEST_CASE("imperfect entangler reduces to the clean gate at zero error", "[gates]") {
  REQUIRE(max_entry_distance(imperfect_entangler(0.0, 0.0), entangler()) < kExactTol);
}

TEST_CASE("imperfect entangler stays unitary across the angle plane", "[gates]") {
  for (double t1 = -3.0; t1 <= 3.0; t1 += 0.375) {
    for (double t2 = -3.0; t2 <= 3.0; t2 += 0.375) {
      REQUIRE(is_unitary(imperfect_entangler(t1, t2), kExactTol));
    }
  }
  REQUIRE_THROWS_AS(imperfect_entangler(std::nan(""), 0.0), std::invalid_argument);
}

TEST_CASE("imperfect entangler output amplitudes", "[gates]") {
  // On |00> only theta1 matters: the output is (e^{i t1}|00> + |11>)/sqrt2.
  const double t1 = 1.234;
  const StateVector out = apply(imperfect_entangler(t1, 0.777), basis_state(4, 0));
  const double s = 1.0 / std::sqrt(2.0);
  REQUIRE(std::abs(out[0] - s * std::polar(1.0, t1)) < kExactTol);
  REQUIRE(std::abs(out[1]) < kExactTol);
  REQUIRE(std::abs(out[2]) < kExactTol);
  REQUIRE(std::abs(out[3] - cplx(s)) < kExactTol);
}

TEST_CASE("two-qubit hadamard is the square of the single-qubit one", "[gates]") {
  REQUIRE(max_entry_distance(hadamard4(), tensor(hadamard2(), hadamard2())) < kExactTol);
  REQUIRE(is_unitary(hadamard4(), kExactTol));

  // H|0> = |+>, H|+> = |0>.
  REQUIRE(max_entry_distance(apply(hadamard2(), ket0()), ket_plus()) < kExactTol);
  REQUIRE(max_entry_distance(apply(hadamard2(), ket_plus()), ket0()) < kExactTol);

  // The ideal pair (|00>+|11>)/sqrt2 is a fixed point of H (x) H.
  REQUIRE(max_entry_distance(apply(hadamard4(), bell_phi_plus()), bell_phi_plus()) <
          kExactTol);
}

TEST_CASE("hadamard readout exposes the entangler phase error", "[gates]") {
  // For output (e^{i t}|00> + |11>)/sqrt2 the |01> and |10> weights after
  // H (x) H are each |e^{i t} - 1|^2 / 8, totalling sin^2(t/2).
  for (double t = -3.1; t <= 3.1; t += 0.31) {
    const StateVector out = apply(imperfect_entangler(t, -0.4), basis_state(4, 0));
    const auto p = hadamard_diagnostic(out);
    const double amp2 = std::norm(std::polar(1.0, t) - cplx(1.0)) / 8.0;
    REQUIRE(std::abs(p[1] - amp2) < kAccumTol);
    REQUIRE(std::abs(p[2] - amp2) < kAccumTol);
    const double st = std::sin(0.5 * t);
    REQUIRE(std::abs((p[1] + p[2]) - st * st) < kAccumTol);
  }
  // Clean gate: nothing in the error slots.
  const auto p0 = hadamard_diagnostic(apply(entangler(), basis_state(4, 0)));
  REQUIRE(p0[1] < kExactTol);
  REQUIRE(p0[2] < kExactTol);
}

TEST_CASE("i-distinguisher separates the circular superpositions", "[gates]") {
  const OperatorMatrix m = i_distinguisher();
  REQUIRE(is_unitary(m, kExactTol));

  // Hermitian and involutory: M == M†, M^2 == I.
  REQUIRE(max_entry_distance(m, adjoint(m)) < kExactTol);
  REQUIRE(max_entry_distance(multiply(m, m), OperatorMatrix::identity(2)) < kExactTol);

  // M maps (|0>+i|1>)/sqrt2 to |0> exactly, and (|0>-i|1>)/sqrt2 to |1> up
  // to a phase, so one computational readout separates the pair.
  const StateVector up = apply(m, ket_plus_i());
  REQUIRE(std::abs(up[0] - cplx(1.0)) < kExactTol);
  REQUIRE(std::abs(up[1]) < kExactTol);

  const StateVector down = apply(m, ket_minus_i());
  REQUIRE(fidelity(down, ket1()) > 1.0 - kExactTol);
  const PhaseMatch pm = equal_up_to_global_phase(down, ket1(), kExactTol);
  REQUIRE(pm.matched);
  REQUIRE(std::abs(pm.phase - cplx(0.0, 1.0)) < kExactTol);

  // |0> and |1> land on the circular pair, completing the swap.
  REQUIRE(std::abs(fidelity(apply(m, ket0()), ket_plus_i()) - 1.0) < kExactTol);
  REQUIRE(std::abs(fidelity(apply(m, ket1()), ket_minus_i()) - 1.0) < kExactTol);
}
