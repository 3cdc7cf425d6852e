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

#include "entlab/density.hpp"
#include "entlab/gates.hpp"
#include "entlab/group.hpp"
#include "entlab/linalg.hpp"
#include "entlab/random.hpp"

namespace entlab {

// --- Bell states and the extended orthonormal set ---

inline StateVector bell_phi_plus() { return StateVector::normalized({1.0, 0.0, 0.0, 1.0}); }
inline StateVector bell_phi_minus() { return StateVector::normalized({1.0, 0.0, 0.0, -1.0}); }
inline StateVector bell_psi_plus() { return StateVector::normalized({0.0, 1.0, 1.0, 0.0}); }
inline StateVector bell_psi_minus() { return StateVector::normalized({0.0, 1.0, -1.0, 0.0}); }

/// Two flavors of maximally entangled two-qubit bases: the Bell quadruple
/// with +/-1 relative phases, and its circular counterpart with +/-i.
enum class BasisFlavor { standard, i_basis };

inline const char* flavor_name(BasisFlavor f) {
  switch (f) {
    case BasisFlavor::standard: return "standard";
    case BasisFlavor::i_basis: return "i-basis";
  }
  throw std::logic_error("flavor_name: bad enum value");
}

inline BasisFlavor flavor_from_name(const std::string& name) {
  if (name == "standard") return BasisFlavor::standard;
  if (name == "i-basis" || name == "i_basis") return BasisFlavor::i_basis;
  throw std::invalid_argument("flavor_from_name: unknown flavor '" + name + "'");
}

/// The four orthonormal states of one flavor, indexed by the two-bit message
/// they encode in dense coding.
inline std::array<StateVector, 4> flavor_basis(BasisFlavor f) {
  const cplx i(0.0, 1.0);
  if (f == BasisFlavor::standard) {
    return {bell_phi_plus(), bell_phi_minus(), bell_psi_plus(), bell_psi_minus()};
  }
  return {StateVector::normalized({1.0, 0.0, 0.0, i}),
          StateVector::normalized({1.0, 0.0, 0.0, -i}),
          StateVector::normalized({0.0, 1.0, i, 0.0}),
          StateVector::normalized({0.0, 1.0, -i, 0.0})};
}

inline std::array<std::string, 4> flavor_labels(BasisFlavor f) {
  if (f == BasisFlavor::standard) {
    return {"(|00>+|11>)/sqrt2", "(|00>-|11>)/sqrt2", "(|01>+|10>)/sqrt2",
            "(|01>-|10>)/sqrt2"};
  }
  return {"(|00>+i|11>)/sqrt2", "(|00>-i|11>)/sqrt2", "(|01>+i|10>)/sqrt2",
          "(|01>-i|10>)/sqrt2"};
}

/// All eight states of both flavors: standard basis first (indices 0..3),
/// then the i-basis (indices 4..7). Each quadruple is orthonormal; across
/// flavors the squared overlap is 1/2 within a plane and 0 across planes.
inline std::array<StateVector, 8> extended_bell_set() {
  const auto s = flavor_basis(BasisFlavor::standard);
  const auto c = flavor_basis(BasisFlavor::i_basis);
  return {s[0], s[1], s[2], s[3], c[0], c[1], c[2], c[3]};
}

inline std::array<std::string, 8> extended_bell_labels() {
  const auto s = flavor_labels(BasisFlavor::standard);
  const auto c = flavor_labels(BasisFlavor::i_basis);
  return {s[0], s[1], s[2], s[3], c[0], c[1], c[2], c[3]};
}

// --- the one-parameter entangled family ---

/// (|00> + k|11>) / sqrt(1 + |k|^2) for complex k; k = 0 gives a product
/// state, |k| = 1 the maximally entangled ridge.
inline StateVector family_state(cplx k) {
  if (!is_finite(k)) {
    throw std::invalid_argument("family_state: non-finite parameter");
  }
  return StateVector::normalized({1.0, 0.0, 0.0, k});
}

/// Concurrence 2|ad - bc| of a two-qubit pure state (a,b,c,d): 0 for product
/// states, 1 for maximally entangled ones.
inline double concurrence(const StateVector& s) {
  if (s.dim() != 4) {
    throw std::invalid_argument("concurrence: two-qubit state required");
  }
  return 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]);
}

// --- entangler quality diagnostics ---

/// Fidelity of imperfect_entangler(theta1, *)|00> against the ideal target
/// (|00>+|11>)/sqrt2; analytically cos^2(theta1/2), independent of theta2.
inline double entangler_fidelity(double theta1) {
  const StateVector out = apply(imperfect_entangler(theta1, 0.0), basis_state(4, 0));
  return fidelity(out, bell_phi_plus());
}

/// Computational-basis Born probabilities after the two-qubit Hadamard
/// readout. For the damaged entangler output the |01> and |10> weights carry
/// the phase error: their sum is sin^2(theta1/2).
inline std::array<double, 4> hadamard_diagnostic(const StateVector& s) {
  if (s.dim() != 4) {
    throw std::invalid_argument("hadamard_diagnostic: two-qubit state required");
  }
  const StateVector t = apply(hadamard4(), s);
  return {std::norm(t[0]), std::norm(t[1]), std::norm(t[2]), std::norm(t[3])};
}

/// Sum of the |01> and |10> readout weights; the error signal a Hadamard
/// detection stage reports for a phase-damaged pair source.
inline double detection_signal(const StateVector& s) {
  const auto p = hadamard_diagnostic(s);
  return p[1] + p[2];
}

// --- dense coding over the extended set ---

/// Encoding operator applied to the first qubit of a shared (|00>+|11>)/sqrt2
/// pair. Message index is the two-bit value b1b0 in {0..3}.
inline GroupElement encode_operator(int message, BasisFlavor flavor) {
  if (message < 0 || message > 3) {
    throw std::invalid_argument("encode_operator: message must be in 0..3");
  }
  static constexpr std::array<Label, 4> kStandard{Label::I, Label::B, Label::A, Label::C};
  static constexpr std::array<Label, 4> kCircular{Label::D, Label::F, Label::E, Label::G};
  const Label l = (flavor == BasisFlavor::standard)
                      ? kStandard[static_cast<std::size_t>(message)]
                      : kCircular[static_cast<std::size_t>(message)];
  return group_element(l);
}

/// Alice's dense-coding step: (g (x) I) applied to the shared pair, landing
/// on flavor_basis(flavor)[message] up to global phase.
inline StateVector extended_encode(int message, BasisFlavor flavor) {
  const GroupElement g = encode_operator(message, flavor);
  const OperatorMatrix op = tensor(g.matrix, OperatorMatrix::identity(2));
  return apply(op, bell_phi_plus());
}

/// Born probabilities of the four decode outcomes when measuring in the given
/// flavor's basis.
inline std::array<double, 4> decode_probabilities(const StateVector& s, BasisFlavor flavor) {
  if (s.dim() != 4) {
    throw std::invalid_argument("decode_probabilities: two-qubit state required");
  }
  if (std::abs(s.norm() - 1.0) > kAccumTol) {
    throw std::invalid_argument("decode_probabilities: state not normalized");
  }
  const auto basis = flavor_basis(flavor);
  std::array<double, 4> p{};
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    p[i] = fidelity(basis[i], s);
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > kAccumTol) {
    throw std::logic_error("decode_probabilities: outcome weights sum to " +
                           std::to_string(sum));
  }
  return p;
}

/// Samples a decode outcome (message index) in the given flavor's basis.
inline int extended_decode(const StateVector& s, BasisFlavor flavor, Rng& rng) {
  const auto p = decode_probabilities(s, flavor);
  return static_cast<int>(rng.categorical(std::span<const double>(p.data(), p.size())));
}

// --- pure entanglement vs classical correlation ---

/// Pair sources compared by the mixedness experiment: a pure
/// (|00>+|11>)/sqrt2 emitter versus an even classical mixture of |00> and
/// |11>. Both give identical computational-basis statistics; the rotated
/// correlation measurement below tells them apart.
enum class SourceKind { pure_bell, classical_mixture };

inline const char* source_name(SourceKind k) {
  switch (k) {
    case SourceKind::pure_bell: return "pure-bell";
    case SourceKind::classical_mixture: return "classical-mixture";
  }
  throw std::logic_error("source_name: bad enum value");
}

inline SourceKind source_from_name(const std::string& name) {
  if (name == "pure-bell" || name == "pure_bell") return SourceKind::pure_bell;
  if (name == "classical-mixture" || name == "classical_mixture") {
    return SourceKind::classical_mixture;
  }
  throw std::invalid_argument("source_from_name: unknown source '" + name + "'");
}

inline DensityMatrix source_density(SourceKind kind) {
  if (kind == SourceKind::pure_bell) {
    return density_from_ensemble({{bell_phi_plus(), 1.0}});
  }
  return density_from_ensemble({{tensor(ket0(), ket0()), 0.5},
                                {tensor(ket1(), ket1()), 0.5}});
}

namespace detail {

inline std::array<StateVector, 4> xx_joint_basis() {
  return {tensor(ket_plus(), ket_plus()), tensor(ket_plus(), ket_minus()),
          tensor(ket_minus(), ket_plus()), tensor(ket_minus(), ket_minus())};
}

}  // namespace detail

/// E[(-1)^{a XOR b}] for both sides measuring in the +/- basis, straight from
/// the density matrix: 1 for the pure pair, 0 for the classical mixture.
inline double correlation_analytic(SourceKind kind) {
  const DensityMatrix rho = source_density(kind);
  const auto basis = detail::xx_joint_basis();
  static constexpr std::array<double, 4> kSign{1.0, -1.0, -1.0, 1.0};
  double e = 0.0;
  for (std::size_t i = 0; i < 4; ++i) e += kSign[i] * born_weight(rho, basis[i]);
  return e;
}

/// One sampled correlation run: joint outcome counts in the +/- basis
/// (ordered ++, +-, -+, --) and the resulting correlation estimate.
struct CorrelationRun {
  std::array<long, 4> joint_counts{};
  double correlation = 0.0;
};

inline CorrelationRun run_correlation(SourceKind kind, long shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("run_correlation: shots must be positive");
  }
  const auto basis = detail::xx_joint_basis();
  const StateVector phi = bell_phi_plus();
  const StateVector zz0 = tensor(ket0(), ket0());
  const StateVector zz1 = tensor(ket1(), ket1());
  // Outcome distributions are precomputed; per shot the mixture draws which
  // branch fired, then both draw the joint +/- outcome.
  std::array<std::array<double, 4>, 3> dist{};
  for (std::size_t i = 0; i < 4; ++i) {
    dist[0][i] = fidelity(basis[i], phi);
    dist[1][i] = fidelity(basis[i], zz0);
    dist[2][i] = fidelity(basis[i], zz1);
  }
  Rng rng(seed);
  CorrelationRun run;
  long signed_sum = 0;
  for (long n = 0; n < shots; ++n) {
    std::size_t which = 0;
    if (kind == SourceKind::classical_mixture) {
      which = rng.bernoulli(0.5) ? 1 : 2;
    }
    const std::size_t o =
        rng.categorical(std::span<const double>(dist[which].data(), 4));
    ++run.joint_counts[o];
    signed_sum += (o == 0 || o == 3) ? 1 : -1;
  }
  run.correlation = static_cast<double>(signed_sum) / static_cast<double>(shots);
  return run;
}

/// Correlation estimate only; see run_correlation for the full tally.
inline double correlation_experiment(SourceKind kind, long shots, std::uint64_t seed) {
  return run_correlation(kind, shots, seed).correlation;
}

/// Heralded pair source: per trigger, a pair appears with pair_prob and a
/// double pair with double_pair_prob (a subset of the pair events).
struct SourceModel {
  double pair_prob = 1e-4;
  double double_pair_prob = 1e-8;
};

}  // namespace entlab
