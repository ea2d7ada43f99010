// Copyright 2026 The permzk Authors
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

// Command-line front end over the permzk C API.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "permzk/permzk.h"

namespace {

constexpr int kExitUsage = 2;

struct InstanceDeleter {
  void operator()(permzk_instance* p) const { permzk_instance_free(p); }
};
using InstancePtr = std::unique_ptr<permzk_instance, InstanceDeleter>;

struct StringDeleter {
  void operator()(char* p) const { permzk_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int report_failure(permzk_status status) {
  std::cerr << "error: " << permzk_status_name(status) << ": " << permzk_last_error() << '\n';
  return kExitUsage;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

struct Options {
  std::string instance;
  std::string protocol = "group-conj";
  std::string composition = "default";
  std::size_t rounds = 0;
  std::size_t k = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  std::size_t samples = 1000;
  std::string prover = "honest";
  std::string verifier = "honest";
  bool exact = false;
  std::string out;
  std::uint64_t cap = 1'000'000;
};

int emit(permzk_status status, int exit_code, char* report_raw, const Options& opts) {
  OwnedString report(report_raw);
  if (status != PERMZK_OK) return report_failure(status);
  std::cout << report.get();
  if (!opts.out.empty() && !write_file(opts.out, report.get())) return kExitUsage;
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-knowledge proofs for conjugacy of permutation groups", "permzk"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--instance", opts.instance, "Instance file")->required();
    cmd->add_option("--seed", opts.seed, "Seed for all randomness")->envname("PERMZK_SEED");
    cmd->add_option("--out", opts.out, "Output file");
  };

  auto* decide = app.add_subcommand("decide", "Decide an instance by brute force");
  add_common(decide);
  decide->add_option("--cap", opts.cap, "Largest <U> the brute-force search may enumerate");

  auto* prove = app.add_subcommand("prove", "Run a protocol and print the transcript");
  add_common(prove);
  prove->add_option("--protocol", opts.protocol, "group-conj | non-conj | elem-conj")
      ->check(CLI::IsMember({"group-conj", "non-conj", "elem-conj"}));
  prove->add_option("--composition", opts.composition, "default | sequential | parallel")
      ->check(CLI::IsMember({"default", "sequential", "parallel"}));
  prove->add_option("--rounds,-t", opts.rounds, "Repetitions (default: protocol-specific)");
  prove->add_option("--k", opts.k, "Tuple length (default 4m, or 8m for non-conj)");
  prove->add_option("--trials", opts.trials, "Repeat the whole run and report the rate");
  prove->add_option("--prover", opts.prover,
                    "honest | guess | malformed (non-conj: honest | always0 | always1 | majority)");
  prove->add_option("--verifier", opts.verifier, "honest | const0 | const1 | parity");
  prove->add_option("--cap", opts.cap, "Largest <U> the prover may enumerate");

  auto* simulate = app.add_subcommand("simulate", "Run the zero-knowledge simulator checks");
  add_common(simulate);
  simulate->add_option("--verifier", opts.verifier, "honest | const0 | const1 | parity");
  simulate->add_flag("--exact", opts.exact, "Exact enumeration (tiny instances only)");
  simulate->add_option("--samples,--trials", opts.samples, "Samples per side");
  simulate->add_option("--k", opts.k, "Tuple length (default 4m)");
  simulate->add_option("--cap", opts.cap, "Largest <U> the prover may enumerate");

  auto* genlemma = app.add_subcommand("stats-genlemma", "Measure generating-tuple frequency");
  genlemma->alias("genlemma");
  add_common(genlemma);
  genlemma->add_option("--k", opts.k, "Tuple length (default 4m)");
  genlemma->add_option("--trials", opts.trials, "Trials (default 1000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  permzk_instance* raw = nullptr;
  if (permzk_status s = permzk_instance_load(opts.instance.c_str(), &raw); s != PERMZK_OK) {
    return report_failure(s);
  }
  InstancePtr instance(raw);

  int exit_code = 0;
  char* report = nullptr;

  if (decide->parsed()) {
    const auto s = permzk_decide(instance.get(), opts.cap, &exit_code, &report);
    return emit(s, exit_code, report, opts);
  }

  if (prove->parsed()) {
    permzk_prove_options po;
    permzk_prove_options_init(&po);
    po.protocol = opts.protocol.c_str();
    po.composition = opts.composition.c_str();
    po.rounds = opts.rounds;
    po.k = opts.k;
    po.seed = opts.seed;
    po.prover = opts.prover.c_str();
    po.verifier = opts.verifier.c_str();
    po.trials = opts.trials == 0 ? 1 : opts.trials;
    po.cap = opts.cap;
    char* transcript_raw = nullptr;
    const auto s = permzk_prove(instance.get(), &po, &exit_code, &report, &transcript_raw);
    OwnedString transcript(transcript_raw);
    OwnedString owned_report(report);
    if (s != PERMZK_OK) return report_failure(s);
    const std::string text = transcript.get();
    if (!opts.out.empty()) {
      if (!write_file(opts.out, text.empty() ? owned_report.get() : text)) return kExitUsage;
    } else {
      std::cout << text;
    }
    std::cout << owned_report.get();
    return exit_code;
  }

  if (simulate->parsed()) {
    permzk_simulate_options so;
    permzk_simulate_options_init(&so);
    so.seed = opts.seed;
    so.verifier = opts.verifier.c_str();
    so.exact = opts.exact ? 1 : 0;
    so.samples = opts.samples;
    so.k = opts.k;
    so.cap = opts.cap;
    const auto s = permzk_simulate(instance.get(), &so, &exit_code, &report);
    return emit(s, exit_code, report, opts);
  }

  permzk_genlemma_options go;
  permzk_genlemma_options_init(&go);
  go.k = opts.k;
  if (opts.trials != 0) go.trials = opts.trials;
  go.seed = opts.seed;
  const auto s = permzk_genlemma(instance.get(), &go, &exit_code, &report);
  return emit(s, exit_code, report, opts);
}
