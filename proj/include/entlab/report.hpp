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
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "entlab/entanglement.hpp"
#include "entlab/frames.hpp"
#include "entlab/gates.hpp"
#include "entlab/group.hpp"
#include "entlab/linalg.hpp"
#include "entlab/qkd.hpp"
#include "entlab/random.hpp"
#include "entlab/version.hpp"

namespace entlab {

using json = nlohmann::json;

/// Knobs shared by the experiment commands. Each command reads the subset it
/// cares about and echoes exactly that subset into its report's config block,
/// so a report can be reproduced from its own header.
struct ExperimentConfig {
  std::string command;
  std::uint64_t seed = 0;
  long trials = 1000;
  long shots = 10000;
  std::string variant = "standard-zx";
  std::string flavor = "standard";
  std::string message = "00";
  std::string source = "pure-bell";
  bool eve = false;
  double flip_prob = 0.0;
  bool fixed_theta = false;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta_range = 0.1;
  double pair_prob = 1e-4;
  double double_pair_prob = 1e-8;
  int jobs = 1;
  bool include_rounds = false;
};

namespace detail {

inline json report_skeleton(const std::string& command, json config) {
  config["command"] = command;
  json r;
  r["toolkit"] = "entlab";
  r["version"] = kVersion;
  r["config"] = std::move(config);
  r["results"] = json::array();
  r["summary"] = json::object();
  return r;
}

inline std::string message_string(int m) {
  static const char* kNames[4] = {"00", "01", "10", "11"};
  return kNames[m];
}

inline int message_index(const std::string& m) {
  for (int i = 0; i < 4; ++i) {
    if (m == message_string(i)) return i;
  }
  throw std::invalid_argument("message must be one of 00, 01, 10, 11");
}

}  // namespace detail

// --- command: group-table ---

/// Recomputes the eight-element multiplication table, identifying every
/// product up to global phase and checking it against the published labels.
inline json cmd_group_table(const ExperimentConfig& cfg) {
  json rep = detail::report_skeleton("group-table", {{"seed", cfg.seed}});
  const std::vector<TableVerdict> verdicts = verify_table();
  long matches = 0, exact = 0, projective = 0;
  for (const TableVerdict& v : verdicts) {
    const bool match = v.computed == v.expected;
    matches += match;
    exact += v.exact;
    projective += !v.exact;
    rep["results"].push_back({{"row", std::string(1, label_char(v.row))},
                              {"col", std::string(1, label_char(v.col))},
                              {"expected", std::string(1, label_char(v.expected))},
                              {"computed", std::string(1, label_char(v.computed))},
                              {"match", match},
                              {"phase", phase_label(v.phase)},
                              {"exact", v.exact}});
  }
  rep["summary"] = {{"entries", verdicts.size()},
                    {"label_matches", matches},
                    {"exact_phase", exact},
                    {"projective_phase", projective},
                    {"all_match", matches == static_cast<long>(verdicts.size())},
                    {"closed_subgroup_IABC",
                     subgroup_check({Label::I, Label::A, Label::B, Label::C})},
                    {"closed_pair_ID", subgroup_check({Label::I, Label::D})}};
  return rep;
}

inline bool group_table_ok(const json& report) {
  return report.at("summary").at("all_match").get<bool>();
}

// --- command: entangler ---

/// Sweeps the imperfect entangler over sampled (or fixed) phase errors and
/// reports per-trial fidelity and Hadamard detection signal next to the
/// closed forms cos^2(theta1/2) and sin^2(theta1/2).
inline json cmd_entangler(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) {
    throw std::invalid_argument("entangler: trials must be positive");
  }
  if (!(cfg.theta_range >= 0.0)) {
    throw std::invalid_argument("entangler: theta-range must be nonnegative");
  }
  // The worker count never changes the result (each trial has its own derived
  // stream), so it is deliberately left out of the echoed config.
  json config = {{"seed", cfg.seed}, {"trials", cfg.trials}};
  if (cfg.fixed_theta) {
    config["theta1"] = cfg.theta1;
    config["theta2"] = cfg.theta2;
  } else {
    config["theta_range"] = cfg.theta_range;
  }
  json rep = detail::report_skeleton("entangler", config);

  struct Row {
    double t1, t2, fid, det;
  };
  std::vector<Row> rows(static_cast<std::size_t>(cfg.trials));
  const StateVector in = basis_state(4, 0);
  const StateVector target = bell_phi_plus();
  // Each trial draws from its own derived stream, so the result is identical
  // for any worker count.
  auto worker = [&](long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
      double t1, t2;
      if (cfg.fixed_theta) {
        t1 = cfg.theta1;
        t2 = cfg.theta2;
      } else {
        t1 = rng.uniform(-cfg.theta_range, cfg.theta_range);
        t2 = rng.uniform(-cfg.theta_range, cfg.theta_range);
      }
      const StateVector out = apply(imperfect_entangler(t1, t2), in);
      rows[static_cast<std::size_t>(i)] =
          Row{t1, t2, fidelity(out, target), detection_signal(out)};
    }
  };
  const int jobs =
      static_cast<int>(std::max<long>(1, std::min<long>(cfg.jobs, cfg.trials)));
  if (jobs == 1) {
    worker(0, cfg.trials);
  } else {
    std::vector<std::thread> pool;
    const long chunk = (cfg.trials + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const long lo = j * chunk;
      const long hi = std::min<long>(cfg.trials, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(worker, lo, hi);
    }
    for (std::thread& th : pool) th.join();
  }

  double fid_sum = 0.0, det_sum = 0.0, max_fid_dev = 0.0, max_det_dev = 0.0;
  for (long i = 0; i < cfg.trials; ++i) {
    const Row& r = rows[static_cast<std::size_t>(i)];
    const double c = std::cos(0.5 * r.t1);
    const double fid_ref = c * c;
    const double det_ref = 1.0 - c * c;
    fid_sum += r.fid;
    det_sum += r.det;
    max_fid_dev = std::max(max_fid_dev, std::abs(r.fid - fid_ref));
    max_det_dev = std::max(max_det_dev, std::abs(r.det - det_ref));
    rep["results"].push_back({{"trial", i},
                              {"theta1", r.t1},
                              {"theta2", r.t2},
                              {"fidelity", r.fid},
                              {"detection", r.det},
                              {"fidelity_analytic", fid_ref},
                              {"detection_analytic", det_ref}});
  }
  rep["summary"] = {{"trials", cfg.trials},
                    {"mean_fidelity", fid_sum / static_cast<double>(cfg.trials)},
                    {"mean_detection", det_sum / static_cast<double>(cfg.trials)},
                    {"max_fidelity_deviation", max_fid_dev},
                    {"max_detection_deviation", max_det_dev}};
  return rep;
}

// --- command: bb84 ---

inline json round_to_json(const RoundRecord& r, long index) {
  return {{"round", index},
          {"alice_state", r.alice_state},
          {"alice_basis", r.alice_basis},
          {"bob_basis", r.bob_basis},
          {"bob_outcome", r.bob_outcome},
          {"kept", r.kept},
          {"alice_bit", r.alice_bit},
          {"bob_bit", r.bob_bit},
          {"eve_basis", r.eve_basis},
          {"eve_outcome", r.eve_outcome}};
}

/// One key-distribution session of the selected variant.
inline json cmd_bb84(const ExperimentConfig& cfg) {
  const Variant v = variant_from_name(cfg.variant);
  ChannelModel channel;
  channel.flip_prob = cfg.flip_prob;
  if (cfg.eve) channel.eve = EveStrategy{};
  const ProtocolTranscript t = run_session(v, cfg.trials, channel, cfg.seed);

  json rep = detail::report_skeleton("bb84", {{"seed", cfg.seed},
                                              {"trials", cfg.trials},
                                              {"variant", variant_name(v)},
                                              {"eve", cfg.eve},
                                              {"flip_prob", cfg.flip_prob},
                                              {"include_rounds", cfg.include_rounds}});
  if (cfg.include_rounds) {
    long idx = 0;
    for (const RoundRecord& r : t.rounds) rep["results"].push_back(round_to_json(r, idx++));
  }
  rep["summary"] = {{"sent", t.summary.sent},
                    {"sifted", t.summary.sifted},
                    {"errors", t.summary.errors},
                    {"sift_rate", t.summary.sift_rate},
                    {"qber", t.summary.qber}};
  return rep;
}

/// Full round log in a line-per-round CSV form, for --rounds-out.
inline std::string transcript_rounds_csv(const ProtocolTranscript& t) {
  std::string out =
      "round,alice_state,alice_basis,bob_basis,bob_outcome,kept,alice_bit,bob_bit,"
      "eve_basis,eve_outcome\n";
  long idx = 0;
  for (const RoundRecord& r : t.rounds) {
    out += std::to_string(idx++) + ',' + std::to_string(r.alice_state) + ',' +
           std::to_string(r.alice_basis) + ',' + std::to_string(r.bob_basis) + ',' +
           std::to_string(r.bob_outcome) + ',' + (r.kept ? "true" : "false") + ',' +
           std::to_string(r.alice_bit) + ',' + std::to_string(r.bob_bit) + ',' +
           std::to_string(r.eve_basis) + ',' + std::to_string(r.eve_outcome) + '\n';
  }
  return out;
}

// --- command: dense-code ---

/// Dense-coding round trip: encode a two-bit message in the chosen flavor,
/// decode shots times in the same flavor (lossless) and in the other flavor
/// (two-point split).
inline json cmd_dense_code(const ExperimentConfig& cfg) {
  if (cfg.shots < 1) {
    throw std::invalid_argument("dense-code: shots must be positive");
  }
  const int msg = detail::message_index(cfg.message);
  const BasisFlavor matched = flavor_from_name(cfg.flavor);
  const BasisFlavor crossed =
      (matched == BasisFlavor::standard) ? BasisFlavor::i_basis : BasisFlavor::standard;
  const StateVector encoded = extended_encode(msg, matched);

  Rng rng(cfg.seed);
  std::array<long, 4> hist_matched{};
  std::array<long, 4> hist_crossed{};
  for (long n = 0; n < cfg.shots; ++n) {
    ++hist_matched[static_cast<std::size_t>(extended_decode(encoded, matched, rng))];
  }
  for (long n = 0; n < cfg.shots; ++n) {
    ++hist_crossed[static_cast<std::size_t>(extended_decode(encoded, crossed, rng))];
  }

  json rep = detail::report_skeleton("dense-code", {{"seed", cfg.seed},
                                                    {"shots", cfg.shots},
                                                    {"flavor", flavor_name(matched)},
                                                    {"message", cfg.message}});
  auto push_rows = [&](BasisFlavor f, const std::array<long, 4>& hist) {
    for (int o = 0; o < 4; ++o) {
      rep["results"].push_back(
          {{"decode_basis", flavor_name(f)},
           {"outcome", detail::message_string(o)},
           {"count", hist[static_cast<std::size_t>(o)]},
           {"frequency", static_cast<double>(hist[static_cast<std::size_t>(o)]) /
                             static_cast<double>(cfg.shots)}});
    }
  };
  push_rows(matched, hist_matched);
  push_rows(crossed, hist_crossed);
  rep["summary"] = {
      {"message", cfg.message},
      {"flavor", flavor_name(matched)},
      {"shots", cfg.shots},
      {"recovery_rate", static_cast<double>(hist_matched[static_cast<std::size_t>(msg)]) /
                            static_cast<double>(cfg.shots)},
      {"cross_basis", flavor_name(crossed)}};
  return rep;
}

// --- command: mixedness ---

/// Purity and rotated-basis correlation for the pure pair source versus the
/// classical mixture: identical computational statistics, correlation 1
/// versus 0 in the +/- basis.
inline json cmd_mixedness(const ExperimentConfig& cfg) {
  if (cfg.shots < 1) {
    throw std::invalid_argument("mixedness: shots must be positive");
  }
  const SourceKind kind = source_from_name(cfg.source);
  const DensityMatrix rho = source_density(kind);
  const CorrelationRun run = run_correlation(kind, cfg.shots, cfg.seed);

  json rep = detail::report_skeleton(
      "mixedness", {{"seed", cfg.seed}, {"shots", cfg.shots}, {"source", source_name(kind)}});
  static const char* kOutcomeNames[4] = {"++", "+-", "-+", "--"};
  for (int o = 0; o < 4; ++o) {
    rep["results"].push_back(
        {{"outcome", kOutcomeNames[o]},
         {"count", run.joint_counts[static_cast<std::size_t>(o)]},
         {"frequency", static_cast<double>(run.joint_counts[static_cast<std::size_t>(o)]) /
                           static_cast<double>(cfg.shots)}});
  }
  rep["summary"] = {{"source", source_name(kind)},
                    {"shots", cfg.shots},
                    {"purity", purity(rho)},
                    {"correlation", run.correlation},
                    {"correlation_analytic", correlation_analytic(kind)}};
  return rep;
}

// --- command: directions ---

/// Lists the nine qutrit directions with their amplitudes and frame
/// memberships, plus the six frames.
inline json cmd_directions(const ExperimentConfig& cfg) {
  json rep = detail::report_skeleton("directions", {{"seed", cfg.seed}});
  const auto dirs = nine_directions();
  const auto labels = nine_direction_labels();
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const auto member = frame_membership(dirs[i]);
    std::string joined;
    for (const std::string& m : member) {
      if (!joined.empty()) joined += '|';
      joined += m;
    }
    rep["results"].push_back({{"index", i},
                              {"label", labels[i]},
                              {"re0", dirs[i][0].real()},
                              {"im0", dirs[i][0].imag()},
                              {"re1", dirs[i][1].real()},
                              {"im1", dirs[i][1].imag()},
                              {"re2", dirs[i][2].real()},
                              {"im2", dirs[i][2].imag()},
                              {"frames", joined}});
  }
  json frames = json::array();
  for (const Frame& f : six_frames()) {
    frames.push_back({{"label", f.label}, {"plane", plane_name(f.plane)}});
  }
  rep["summary"] = {{"directions", dirs.size()}, {"frames", std::move(frames)}};
  return rep;
}

// --- serialization ---

inline std::string to_json_text(const json& report) {
  return report.dump(2) + "\n";
}

namespace detail {

/// CSV column order per command; nlohmann objects sort keys alphabetically,
/// which makes awkward tables.
inline std::vector<std::string> csv_columns(const std::string& command) {
  if (command == "group-table") {
    return {"row", "col", "expected", "computed", "match", "phase", "exact"};
  }
  if (command == "entangler") {
    return {"trial", "theta1",            "theta2",   "fidelity",
            "detection", "fidelity_analytic", "detection_analytic"};
  }
  if (command == "bb84") {
    return {"round",    "alice_state", "alice_basis", "bob_basis", "bob_outcome",
            "kept", "alice_bit",   "bob_bit",     "eve_basis", "eve_outcome"};
  }
  if (command == "dense-code") {
    return {"decode_basis", "outcome", "count", "frequency"};
  }
  if (command == "mixedness") {
    return {"outcome", "count", "frequency"};
  }
  if (command == "directions") {
    return {"index", "label", "re0", "im0", "re1", "im1", "re2", "im2", "frames"};
  }
  throw std::invalid_argument("csv_columns: unknown command '" + command + "'");
}

/// Information-preserving decimal form for doubles (%.17g round-trips).
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_float()) return format_double(v.get<double>());
  return v.dump();
}

}  // namespace detail

/// CSV rendering of a report's result rows. The first line echoes the config
/// as a comment (so the seed travels with the file), the second is the
/// header.
inline std::string to_csv_text(const json& report) {
  const std::string command = report.at("config").at("command").get<std::string>();
  const std::vector<std::string> cols = detail::csv_columns(command);
  std::string out = "# entlab " + std::string(kVersion) + " " + report.at("config").dump() + "\n";
  for (std::size_t c = 0; c < cols.size(); ++c) {
    out += (c ? "," : "") + cols[c];
  }
  out += '\n';
  for (const json& row : report.at("results")) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) out += ',';
      out += detail::csv_cell(row.at(cols[c]));
    }
    out += '\n';
  }
  return out;
}

/// Plain-text rendering: the summary block, plus the label grid for
/// group-table runs.
inline std::string to_table_text(const json& report) {
  const json& config = report.at("config");
  const std::string command = config.at("command").get<std::string>();
  std::ostringstream os;
  os << "entlab " << kVersion << " :: " << command << "\n";
  os << "config: " << config.dump() << "\n";
  if (command == "group-table") {
    os << "\n   ";
    for (Label c : kAllLabels) os << ' ' << label_char(c);
    os << '\n';
    const json& rows = report.at("results");
    for (int r = 0; r < 8; ++r) {
      os << "  " << label_char(kAllLabels[static_cast<std::size_t>(r)]) << ' ';
      for (int c = 0; c < 8; ++c) {
        os << ' ' << rows[static_cast<std::size_t>(r * 8 + c)]["computed"].get<std::string>();
      }
      os << '\n';
    }
  }
  os << "\nsummary:\n";
  const json& summary = report.at("summary");
  for (auto it = summary.begin(); it != summary.end(); ++it) {
    os << "  " << it.key() << ": " << it.value().dump() << '\n';
  }
  os << "rows: " << report.at("results").size() << '\n';
  return os.str();
}

/// Dispatch by format name: "json", "csv", or "table".
inline std::string render_report(const json& report, const std::string& format) {
  if (format == "json") return to_json_text(report);
  if (format == "csv") return to_csv_text(report);
  if (format == "table") return to_table_text(report);
  throw std::invalid_argument("render_report: unknown format '" + format + "'");
}

/// Runs the named command against the config; the single entry point the CLI
/// and the tests share.
inline json run_command(const ExperimentConfig& cfg) {
  if (cfg.command == "group-table") return cmd_group_table(cfg);
  if (cfg.command == "entangler") return cmd_entangler(cfg);
  if (cfg.command == "bb84") return cmd_bb84(cfg);
  if (cfg.command == "dense-code") return cmd_dense_code(cfg);
  if (cfg.command == "mixedness") return cmd_mixedness(cfg);
  if (cfg.command == "directions") return cmd_directions(cfg);
  throw std::invalid_argument("run_command: unknown command '" + cfg.command + "'");
}

}  // namespace entlab
