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

// Acceptance gate for the toolkit: thirteen end-to-end criteria, one
// [PASS]/[FAIL] line each, nonzero exit when anything fails. Criterion 13
// drives the installed CLI binary (path injected at build time) to prove
// byte-level reproducibility of emitted reports.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "entlab/entlab.hpp"

using namespace entlab;

namespace {

struct Outcome13 {
  bool ok = false;
  std::string detail;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// --- criterion bodies ---

Outcome13 group_table_criterion() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto verdicts = verify_table();
  int matches = 0, exact = 0;
  for (const TableVerdict& v : verdicts) {
    matches += (v.computed == v.expected);
    exact += v.exact;
    // phase_label throws if the phase escapes {1,-1,i,-i}.
    phase_label(v.phase);
  }
  const double elapsed = ms_since(t0);
  const bool ok = matches == 64 && exact == 40 && elapsed < 1000.0;
  return {ok, std::to_string(matches) + "/64 labels, " + std::to_string(exact) +
                  " exact + " + std::to_string(64 - exact) + " projective phases, " +
                  fmt(elapsed) + " ms"};
}

Outcome13 subgroup_criterion() {
  const bool iabc = subgroup_check({Label::I, Label::A, Label::B, Label::C});
  const bool id = subgroup_check({Label::I, Label::D});
  return {iabc && !id,
          std::string("{I,A,B,C} closed: ") + (iabc ? "yes" : "no") +
              ", {I,D} closed: " + (id ? "yes" : "no")};
}

Outcome13 bell_generation_criterion() {
  const StateVector out = apply(entangler(), basis_state(4, 0));
  const double f = fidelity(out, bell_phi_plus());
  return {std::abs(f - 1.0) <= 1e-12,
          "fidelity(U|00>, (|00>+|11>)/sqrt2) = 1 - " + fmt(1.0 - f)};
}

Outcome13 entangler_grid_criterion() {
  const double theta2 = 0.61803398875;  // any fixed second angle
  double max_fid_err = 0.0, max_det_err = 0.0, max_sum_err = 0.0;
  bool unitary_ok = true;
  for (int i = 0; i <= 100; ++i) {
    const double t1 = std::numbers::pi * i / 100.0;
    const OperatorMatrix u = imperfect_entangler(t1, theta2);
    if (!is_unitary(u, 1e-12)) unitary_ok = false;
    const StateVector out = apply(u, basis_state(4, 0));
    const double c = std::cos(0.5 * t1);
    const double fid = fidelity(out, bell_phi_plus());
    const double det = detection_signal(out);
    max_fid_err = std::max(max_fid_err, std::abs(fid - c * c));
    max_det_err = std::max(max_det_err, std::abs(det - (1.0 - c * c)));
    max_sum_err = std::max(max_sum_err, std::abs(fid + det - 1.0));
  }
  const bool ok =
      unitary_ok && max_fid_err <= 1e-9 && max_det_err <= 1e-9 && max_sum_err <= 1e-9;
  return {ok, "101 angles in [0, pi]: max |fid - cos^2| = " + fmt(max_fid_err) +
                  ", max |det - sin^2| = " + fmt(max_det_err) +
                  ", max |fid + det - 1| = " + fmt(max_sum_err) +
                  (unitary_ok ? ", all unitary" : ", UNITARITY BROKEN")};
}

Outcome13 extended_set_criterion() {
  const auto set = extended_bell_set();
  double max_err = 0.0;
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      double expected;
      if (a == b) {
        expected = 1.0;
      } else if (a / 4 == b / 4) {
        expected = 0.0;
      } else {
        expected = ((a % 4 < 2) == (b % 4 < 2)) ? 0.5 : 0.0;
      }
      max_err = std::max(max_err, std::abs(fidelity(set[a], set[b]) - expected));
    }
  }
  return {max_err <= 1e-12, "64 overlaps, max deviation " + fmt(max_err)};
}

Outcome13 i_distinguisher_criterion() {
  const OperatorMatrix m = i_distinguisher();
  const double herm = max_entry_distance(m, adjoint(m));
  const double invol = max_entry_distance(multiply(m, m), OperatorMatrix::identity(2));
  const double p_up = std::norm(apply(m, ket_plus_i())[0]);
  const double p_down = std::norm(apply(m, ket_minus_i())[1]);
  const bool ok = herm <= 1e-12 && invol <= 1e-12 && std::abs(p_up - 1.0) <= 1e-12 &&
                  std::abs(p_down - 1.0) <= 1e-12;
  return {ok, "P(0 | +i) = " + fmt(p_up) + ", P(1 | -i) = " + fmt(p_down) +
                  ", hermitian/involution residuals " + fmt(herm) + "/" + fmt(invol)};
}

Outcome13 dense_coding_criterion() {
  // All eight (message, flavor) pairs decode deterministically.
  for (const BasisFlavor f : {BasisFlavor::standard, BasisFlavor::i_basis}) {
    for (int msg = 0; msg < 4; ++msg) {
      const auto p = decode_probabilities(extended_encode(msg, f), f);
      for (int o = 0; o < 4; ++o) {
        const double expected = (o == msg) ? 1.0 : 0.0;
        if (std::abs(p[static_cast<std::size_t>(o)] - expected) > 1e-12) {
          return {false, "message " + std::to_string(msg) + " flavor " +
                             std::string(flavor_name(f)) + " leaks probability"};
        }
      }
    }
  }
  // Cross-flavor decoding at 10^4 shots: both live outcomes at 0.5 +/- 0.015.
  Rng rng(20260819);
  const int shots = 10000;
  const StateVector s = extended_encode(0, BasisFlavor::i_basis);
  std::array<int, 4> hist{};
  for (int n = 0; n < shots; ++n) {
    ++hist[static_cast<std::size_t>(extended_decode(s, BasisFlavor::standard, rng))];
  }
  const double f0 = hist[0] / static_cast<double>(shots);
  const double f1 = hist[1] / static_cast<double>(shots);
  const bool ok = hist[2] == 0 && hist[3] == 0 && std::abs(f0 - 0.5) <= 0.015 &&
                  std::abs(f1 - 0.5) <= 0.015;
  return {ok, "8/8 messages deterministic; cross-flavor split " + fmt(f0) + "/" + fmt(f1)};
}

// Shared by criteria 8 and 9.
Outcome13 qubit_bb84_criterion(Variant v, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  // Noiseless: in every matched frame the wrong slot has exactly zero Born
  // weight, so the sifted error count is identically zero.
  const VariantSetup setup = make_setup(v);
  for (std::size_t a = 0; a < setup.alice_states.size(); ++a) {
    for (const auto& [frame, slot] : setup.membership[a]) {
      const auto p = measurement_probabilities(setup.alice_states[a],
                                               setup.frames[static_cast<std::size_t>(frame)]);
      if (p[static_cast<std::size_t>(1 - slot)] != 0.0) {
        return {false, "nonzero error weight in a matched frame"};
      }
    }
  }
  const ProtocolTranscript clean = run_session(v, 20000, noiseless_channel(), seed);
  if (clean.summary.errors != 0) {
    return {false, "noiseless session produced errors"};
  }
  // Intercept-resend at 10^5 rounds.
  const ProtocolTranscript eve = run_session(v, 100000, intercepted_channel(), seed + 1);
  const double elapsed = ms_since(t0);
  const bool ok = std::abs(eve.summary.qber - 0.25) <= 0.02 &&
                  std::abs(eve.summary.sift_rate - 0.5) <= 0.01 && elapsed < 10000.0;
  return {ok, "clean QBER 0; eve QBER " + fmt(eve.summary.qber) + ", sift " +
                  fmt(eve.summary.sift_rate) + ", " + fmt(elapsed) + " ms"};
}

Outcome13 qutrit_bb84_criterion() {
  const auto t0 = std::chrono::steady_clock::now();
  const VariantSetup setup = make_setup(Variant::qutrit_nine);
  for (std::size_t a = 0; a < setup.alice_states.size(); ++a) {
    for (const auto& [frame, slot] : setup.membership[a]) {
      const auto p = measurement_probabilities(setup.alice_states[a],
                                               setup.frames[static_cast<std::size_t>(frame)]);
      if (p[static_cast<std::size_t>(1 - slot)] != 0.0 || p[2] != 0.0) {
        return {false, "nonzero error weight in a matched frame"};
      }
    }
  }
  const ProtocolTranscript clean = run_session(Variant::qutrit_nine, 100000,
                                               noiseless_channel(), 271828);
  const double elapsed = ms_since(t0);
  const bool ok = clean.summary.errors == 0 &&
                  std::abs(clean.summary.sift_rate - 2.0 / 9.0) <= 0.01 &&
                  elapsed < 10000.0;
  return {ok, "sift " + fmt(clean.summary.sift_rate) + " (target 2/9 = " +
                  fmt(2.0 / 9.0) + "), QBER " + fmt(clean.summary.qber) + ", " +
                  fmt(elapsed) + " ms"};
}

Outcome13 mixedness_criterion() {
  const double purity_pure = purity(source_density(SourceKind::pure_bell));
  const double purity_mixed = purity(source_density(SourceKind::classical_mixture));
  const double corr_pure_a = correlation_analytic(SourceKind::pure_bell);
  const double corr_mixed_a = correlation_analytic(SourceKind::classical_mixture);
  const double corr_pure = correlation_experiment(SourceKind::pure_bell, 10000, 161803);
  const double corr_mixed =
      correlation_experiment(SourceKind::classical_mixture, 10000, 161804);
  const bool ok = std::abs(purity_pure - 1.0) <= 1e-12 &&
                  std::abs(purity_mixed - 0.5) <= 1e-12 &&
                  std::abs(corr_pure_a - 1.0) <= 1e-12 &&
                  std::abs(corr_mixed_a) <= 1e-12 && corr_pure == 1.0 &&
                  std::abs(corr_mixed) <= 0.03;
  return {ok, "purity " + fmt(purity_pure) + "/" + fmt(purity_mixed) + ", correlation " +
                  fmt(corr_pure) + "/" + fmt(corr_mixed)};
}

Outcome13 source_model_criterion() {
  const SourceModel model;  // pair 1e-4
  const ThroughputReport rep = source_throughput(model, 1000000, 6626070);
  const double dev = std::abs(static_cast<double>(rep.simulated_pairs) - 100.0);
  const bool ok = rep.expected_pairs == 100.0 && dev <= 40.0;
  return {ok, "expected 100, simulated " + std::to_string(rep.simulated_pairs) +
                  " (|dev| = " + fmt(dev) + " <= 40)"};
}

// --- criterion 13: CLI byte reproducibility ---

std::string run_cli(const std::string& args, int* exit_code) {
  const std::string cmd = std::string(ENTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    *exit_code = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  *exit_code = pclose(pipe);
  return out;
}

Outcome13 reproducibility_criterion() {
  const std::vector<std::string> invocations{
      "group-table",
      "entangler --trials 300 --seed 7",
      "bb84 --variant superposition-xy --trials 3000 --eve --seed 314",
      "bb84 --variant qutrit-nine --trials 2000 --flip-prob 0.05 --seed 15",
      "dense-code --flavor i-basis --message 10 --shots 2000 --seed 5",
      "mixedness --source classical-mixture --shots 3000 --seed 9",
      "directions --format csv",
  };
  for (const std::string& args : invocations) {
    int rc1 = 0, rc2 = 0;
    const std::string a = run_cli(args, &rc1);
    const std::string b = run_cli(args, &rc2);
    if (rc1 != 0 || rc2 != 0) {
      return {false, "nonzero exit for '" + args + "'"};
    }
    if (a.empty() || a != b) {
      return {false, "re-run differs for '" + args + "'"};
    }
  }

  // Rebuild a command line from a report's own echoed config and check the
  // regenerated report is byte-identical.
  int rc = 0;
  const std::string original =
      run_cli("bb84 --variant superposition-xy --trials 3000 --eve --seed 314", &rc);
  if (rc != 0) return {false, "seed run failed"};
  const json rep = json::parse(original);
  const json& cfg = rep.at("config");
  std::ostringstream rebuilt;
  rebuilt << cfg.at("command").get<std::string>()
          << " --variant " << cfg.at("variant").get<std::string>()
          << " --trials " << cfg.at("trials").get<long>()
          << " --flip-prob " << cfg.at("flip_prob").get<double>()
          << " --seed " << cfg.at("seed").get<std::uint64_t>();
  if (cfg.at("eve").get<bool>()) rebuilt << " --eve";
  const std::string regenerated = run_cli(rebuilt.str(), &rc);
  if (rc != 0) return {false, "rebuilt run failed"};
  if (regenerated != original) {
    return {false, "config-echo rebuild differs: '" + rebuilt.str() + "'"};
  }
  return {true, std::to_string(invocations.size()) +
                    " invocations byte-stable; config echo round-trips"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome13()> body;
  };
  const std::vector<Criterion> criteria{
      {"group table verified up to phase", group_table_criterion},
      {"subgroup closure checks", subgroup_criterion},
      {"entangler creates the shared pair", bell_generation_criterion},
      {"imperfect entangler closed forms on 101-point grid", entangler_grid_criterion},
      {"extended basis overlap structure", extended_set_criterion},
      {"i-distinguisher separates circular superpositions", i_distinguisher_criterion},
      {"dense coding delivers two bits", dense_coding_criterion},
      {"key distribution: standard frames",
       [] { return qubit_bb84_criterion(Variant::standard_zx, 1000); }},
      {"key distribution: superposition frames",
       [] { return qubit_bb84_criterion(Variant::superposition_xy, 2000); }},
      {"key distribution: qutrit nine directions", qutrit_bb84_criterion},
      {"purity and correlation separate pure from mixed", mixedness_criterion},
      {"heralded source throughput", source_model_criterion},
      {"byte-reproducible reports", reproducibility_criterion},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome13 out;
    try {
      out = criteria[i].body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    failures += !out.ok;
    std::printf("[%s] %2zu. %s: %s\n", out.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, out.detail.c_str());
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
  }
  return failures == 0 ? 0 : 1;
}
