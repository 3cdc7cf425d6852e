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
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "entlab/entanglement.hpp"
#include "entlab/frames.hpp"
#include "entlab/linalg.hpp"
#include "entlab/random.hpp"

namespace entlab {

/// The three prepare-and-measure key distribution variants:
///  - standard_zx:       {|0>,|1>} and {|+>,|->} on a qubit
///  - superposition_xy:  {|+>,|->} and {|+i>,|-i>} on a qubit
///  - qutrit_nine:       the nine directions / six frames on a qutrit
enum class Variant { standard_zx, superposition_xy, qutrit_nine };

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::standard_zx: return "standard-zx";
    case Variant::superposition_xy: return "superposition-xy";
    case Variant::qutrit_nine: return "qutrit-nine";
  }
  throw std::logic_error("variant_name: bad enum value");
}

inline Variant variant_from_name(const std::string& name) {
  std::string n = name;
  for (char& c : n) {
    if (c == '_') c = '-';
  }
  if (n == "standard-zx") return Variant::standard_zx;
  if (n == "superposition-xy") return Variant::superposition_xy;
  if (n == "qutrit-nine") return Variant::qutrit_nine;
  throw std::invalid_argument("variant_from_name: unknown variant '" + name + "'");
}

/// Projective measurement outcome. Qubit frames never produce out_of_frame;
/// qutrit frames collapse onto the plane's complement when the prepared
/// direction has weight outside the frame's span.
enum class Outcome : int { first = 0, second = 1, out_of_frame = 2 };

/// A measurement setting: two orthonormal outcome vectors, plus (for qutrit
/// frames) the unique direction orthogonal to both, onto which out-of-frame
/// weight collapses.
struct MeasurementFrame {
  std::string label;
  std::vector<StateVector> vectors;
  std::optional<StateVector> complement;
};

/// Unit vector orthogonal to both inputs (qutrits only), via the conjugate
/// cross product.
inline StateVector orthogonal_complement(const StateVector& v0, const StateVector& v1) {
  if (v0.dim() != 3 || v1.dim() != 3) {
    throw std::invalid_argument("orthogonal_complement: qutrit states required");
  }
  const cplx a0 = std::conj(v0[0]), a1 = std::conj(v0[1]), a2 = std::conj(v0[2]);
  const cplx b0 = std::conj(v1[0]), b1 = std::conj(v1[1]), b2 = std::conj(v1[2]);
  return StateVector::normalized({a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0});
}

/// Static description of one variant: Alice's signal states, the measurement
/// frames, and which (frame, slot) pairs each state belongs to. Slot is the
/// key bit the state encodes within that frame.
struct VariantSetup {
  Variant kind;
  std::vector<StateVector> alice_states;
  std::vector<MeasurementFrame> frames;
  std::vector<std::vector<std::pair<int, int>>> membership;
};

inline VariantSetup make_setup(Variant v) {
  VariantSetup s;
  s.kind = v;
  switch (v) {
    case Variant::standard_zx: {
      s.frames.push_back({"Z", {ket0(), ket1()}, std::nullopt});
      s.frames.push_back({"X", {ket_plus(), ket_minus()}, std::nullopt});
      s.alice_states = {ket0(), ket1(), ket_plus(), ket_minus()};
      break;
    }
    case Variant::superposition_xy: {
      s.frames.push_back({"X", {ket_plus(), ket_minus()}, std::nullopt});
      s.frames.push_back({"Y", {ket_plus_i(), ket_minus_i()}, std::nullopt});
      s.alice_states = {ket_plus(), ket_minus(), ket_plus_i(), ket_minus_i()};
      break;
    }
    case Variant::qutrit_nine: {
      for (const Frame& f : six_frames()) {
        s.frames.push_back({f.label,
                            {f.vectors[0], f.vectors[1]},
                            orthogonal_complement(f.vectors[0], f.vectors[1])});
      }
      s.alice_states = nine_directions();
      break;
    }
  }
  // Membership is derived, not hand-listed: a state belongs to every frame
  // holding it as an outcome vector up to global phase.
  s.membership.resize(s.alice_states.size());
  for (std::size_t a = 0; a < s.alice_states.size(); ++a) {
    for (std::size_t f = 0; f < s.frames.size(); ++f) {
      for (std::size_t slot = 0; slot < s.frames[f].vectors.size(); ++slot) {
        if (equal_up_to_global_phase(s.alice_states[a], s.frames[f].vectors[slot],
                                     kExactTol)
                .matched) {
          s.membership[a].emplace_back(static_cast<int>(f), static_cast<int>(slot));
        }
      }
    }
    if (s.membership[a].empty()) {
      throw std::logic_error("make_setup: signal state belongs to no frame");
    }
  }
  return s;
}

/// Born probabilities of (first, second, out_of_frame) for a state measured
/// in a frame. The three weights must account for the whole state; a sum off
/// by more than kExactTol aborts rather than skewing the sample.
inline std::array<double, 3> measurement_probabilities(const StateVector& s,
                                                       const MeasurementFrame& f) {
  std::array<double, 3> p{fidelity(f.vectors[0], s), fidelity(f.vectors[1], s), 0.0};
  if (f.complement) p[2] = fidelity(*f.complement, s);
  const double sum = p[0] + p[1] + p[2];
  if (std::abs(sum - 1.0) > kExactTol) {
    throw std::logic_error("measurement_probabilities: outcome weights sum to " +
                           std::to_string(sum));
  }
  return p;
}

namespace detail {

/// Samples one projective measurement and returns the outcome plus the
/// post-measurement state. Channel flips swap the two in-frame outcomes with
/// probability flip_prob (out_of_frame is unaffected); the forwarded state
/// follows the flipped outcome. Draw order per call: one uniform for the
/// outcome, then one uniform for the flip only when flip_prob > 0.
inline std::pair<Outcome, StateVector> measure_in_frame(const StateVector& s,
                                                        const MeasurementFrame& f,
                                                        double flip_prob, Rng& rng) {
  const auto p = measurement_probabilities(s, f);
  const double u = rng.uniform();
  int o;
  if (u < p[0]) {
    o = 0;
  } else if (u < p[0] + p[1]) {
    o = 1;
  } else {
    // Two-outcome frames have p[2] == 0; a draw landing in the roundoff
    // sliver above p[0]+p[1] still maps to the second outcome.
    o = f.complement ? 2 : 1;
  }
  if (flip_prob > 0.0 && o != 2 && rng.bernoulli(flip_prob)) o ^= 1;
  StateVector collapsed = (o == 2) ? *f.complement : f.vectors[static_cast<std::size_t>(o)];
  return {static_cast<Outcome>(o), std::move(collapsed)};
}

}  // namespace detail

/// Three-outcome projective measurement of a qutrit in one of the six
/// frames: the frame's two vectors plus the complement of their span.
inline Outcome qutrit_measure(const StateVector& s, const Frame& frame, Rng& rng) {
  if (s.dim() != 3) {
    throw std::invalid_argument("qutrit_measure: qutrit state required");
  }
  const MeasurementFrame mf{frame.label,
                            {frame.vectors[0], frame.vectors[1]},
                            orthogonal_complement(frame.vectors[0], frame.vectors[1])};
  return detail::measure_in_frame(s, mf, 0.0, rng).first;
}

inline Outcome qutrit_measure(const StateVector& s, const Frame& frame, std::uint64_t seed) {
  Rng rng(seed);
  return qutrit_measure(s, frame, rng);
}

/// Intercept-resend eavesdropper: measures each transmission in a frame of
/// her choosing and forwards the collapsed state. pick_frame defaults to a
/// uniformly random frame per round.
struct EveStrategy {
  std::function<std::size_t(const VariantSetup&, Rng&)> pick_frame =
      [](const VariantSetup& setup, Rng& rng) {
        return static_cast<std::size_t>(rng.integer(setup.frames.size()));
      };
};

/// Channel between Alice and Bob: optional intercept-resend attack, plus
/// symmetric in-frame outcome flips with probability flip_prob applied to
/// every measurement performed on the channel's output.
struct ChannelModel {
  double flip_prob = 0.0;
  std::optional<EveStrategy> eve;
};

inline ChannelModel noiseless_channel() { return ChannelModel{}; }

inline ChannelModel intercepted_channel() {
  return ChannelModel{0.0, EveStrategy{}};
}

/// One protocol round. Bits are slot indices within the announced frame;
/// kept == true implies both bits are defined (0 or 1). Eve fields are -1
/// when no eavesdropper was configured.
struct RoundRecord {
  int alice_state = -1;
  int alice_basis = -1;
  int bob_basis = -1;
  int bob_outcome = -1;
  bool kept = false;
  int alice_bit = -1;
  int bob_bit = -1;
  int eve_basis = -1;
  int eve_outcome = -1;
};

struct SessionSummary {
  long sent = 0;
  long sifted = 0;
  long errors = 0;
  double sift_rate = 0.0;
  double qber = 0.0;
};

struct ProtocolTranscript {
  Variant variant;
  std::uint64_t seed = 0;
  std::vector<RoundRecord> rounds;
  SessionSummary summary;
};

/// Runs a full prepare-and-measure session. Deterministic for a given
/// (variant, rounds, channel, seed); the per-round draw order is part of the
/// format: Alice's state, Alice's announced frame (only when the state
/// belongs to several), Eve's frame and measurement (when configured), Bob's
/// frame, Bob's measurement.
///
/// Sifting keeps a round when Alice's state belongs to Bob's frame and Bob's
/// outcome landed in-frame. Alice's bit is the state's slot in Bob's frame;
/// Bob's bit is his outcome.
inline ProtocolTranscript run_session(Variant v, long n_rounds, const ChannelModel& channel,
                                      std::uint64_t seed) {
  if (n_rounds < 1) {
    throw std::invalid_argument("run_session: round count must be positive");
  }
  if (!(channel.flip_prob >= 0.0 && channel.flip_prob <= 1.0)) {
    throw std::invalid_argument("run_session: flip_prob outside [0, 1]");
  }
  const VariantSetup setup = make_setup(v);
  Rng rng(seed);
  ProtocolTranscript t;
  t.variant = v;
  t.seed = seed;
  t.rounds.reserve(static_cast<std::size_t>(n_rounds));

  for (long n = 0; n < n_rounds; ++n) {
    RoundRecord rec;
    const std::size_t a = rng.integer(setup.alice_states.size());
    rec.alice_state = static_cast<int>(a);
    const auto& member = setup.membership[a];
    const std::size_t announced =
        (member.size() > 1) ? rng.integer(member.size()) : 0;
    rec.alice_basis = member[announced].first;

    StateVector flying = setup.alice_states[a];
    if (channel.eve) {
      const std::size_t ef = channel.eve->pick_frame(setup, rng);
      auto [eo, collapsed] =
          detail::measure_in_frame(flying, setup.frames[ef], channel.flip_prob, rng);
      rec.eve_basis = static_cast<int>(ef);
      rec.eve_outcome = static_cast<int>(eo);
      flying = std::move(collapsed);
    }

    const std::size_t bf = rng.integer(setup.frames.size());
    rec.bob_basis = static_cast<int>(bf);
    const Outcome bo =
        detail::measure_in_frame(flying, setup.frames[bf], channel.flip_prob, rng).first;
    rec.bob_outcome = static_cast<int>(bo);

    int slot_in_bob_frame = -1;
    for (const auto& [frame, slot] : member) {
      if (frame == static_cast<int>(bf)) {
        slot_in_bob_frame = slot;
        break;
      }
    }
    rec.kept = slot_in_bob_frame >= 0 && bo != Outcome::out_of_frame;
    if (rec.kept) {
      rec.alice_bit = slot_in_bob_frame;
      rec.bob_bit = static_cast<int>(bo);
      ++t.summary.sifted;
      if (rec.alice_bit != rec.bob_bit) ++t.summary.errors;
    }
    t.rounds.push_back(rec);
  }
  t.summary.sent = n_rounds;
  t.summary.sift_rate =
      static_cast<double>(t.summary.sifted) / static_cast<double>(n_rounds);
  t.summary.qber = (t.summary.sifted > 0)
                       ? static_cast<double>(t.summary.errors) /
                             static_cast<double>(t.summary.sifted)
                       : 0.0;
  return t;
}

/// The sifted key as (alice_bit, bob_bit) pairs in round order.
inline std::vector<std::pair<int, int>> sift(const ProtocolTranscript& t) {
  std::vector<std::pair<int, int>> key;
  key.reserve(static_cast<std::size_t>(t.summary.sifted));
  for (const RoundRecord& r : t.rounds) {
    if (r.kept) key.emplace_back(r.alice_bit, r.bob_bit);
  }
  return key;
}

/// Heralded-source yield over a trigger run: expected pair count plus the
/// simulated pair and double-pair tallies. Double-pair events are a subset of
/// pair events (one uniform draw decides both).
struct ThroughputReport {
  double expected_pairs = 0.0;
  long simulated_pairs = 0;
  long simulated_double_pairs = 0;
};

inline ThroughputReport source_throughput(const SourceModel& model, long trials,
                                          std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("source_throughput: trials must be positive");
  }
  if (!(model.pair_prob >= 0.0 && model.pair_prob <= 1.0) ||
      !(model.double_pair_prob >= 0.0 && model.double_pair_prob <= 1.0)) {
    throw std::invalid_argument("source_throughput: probabilities outside [0, 1]");
  }
  if (model.double_pair_prob > model.pair_prob) {
    throw std::invalid_argument(
        "source_throughput: double-pair probability exceeds pair probability");
  }
  Rng rng(seed);
  ThroughputReport rep;
  rep.expected_pairs = model.pair_prob * static_cast<double>(trials);
  for (long n = 0; n < trials; ++n) {
    const double u = rng.uniform();
    if (u < model.pair_prob) {
      ++rep.simulated_pairs;
      if (u < model.double_pair_prob) ++rep.simulated_double_pairs;
    }
  }
  return rep;
}

}  // namespace entlab
