// Copyright 2026 The mcusynth Authors
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

#include "mcusynth/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "mcusynth/circuit_io.hpp"
#include "mcusynth/gate_spec.hpp"
#include "mcusynth/synthesizer.hpp"
#include "mcusynth/z2identity.hpp"

namespace mcusynth::cli {
namespace {

constexpr std::int64_t kLemma1Bound = 8;

std::string format_counts(const GateCounts& c) {
  std::ostringstream os;
  os << "cnot=" << c.cnot << " cv=" << c.cv << " cvdg=" << c.cvdg << " total=" << c.total;
  return os.str();
}

std::string format_significant(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s = buf;
  if (s.find_first_of(".eni") == std::string::npos) s += ".0";
  return s;
}

// Prints one report line and returns whether it passed.
bool report_line(std::ostream& out, const VerificationReport& r, std::string_view unit) {
  out << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.cases << ' ' << unit << ')';
  if (r.counterexample) out << " counterexample " << *r.counterexample;
  out << '\n';
  return r.passed;
}

}  // namespace

std::string format_amplitude(Complex z) {
  const bool has_re = std::abs(z.real()) > kPrintThreshold;
  const bool has_im = std::abs(z.imag()) > kPrintThreshold;
  if (!has_im) return format_significant(z.real());
  if (!has_re) return format_significant(z.imag()) + "i";
  const std::string im = format_significant(z.imag());
  return format_significant(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

int cmd_verify_identity(const VerifyIdentityArgs& args, std::ostream& out, std::ostream& err) {
  const int max_n = args.recurrent_only ? kMaxRecurrentOnlyN : kExhaustiveLimit;
  if (args.n < 1 || args.n > max_n) {
    err << "error: --n must be in [1, " << max_n << "]"
        << (args.recurrent_only ? "" : " (use --recurrent-only for larger n)") << '\n';
    return kExitUsage;
  }
  if (args.samples < 1) {
    err << "error: --samples must be >= 1\n";
    return kExitUsage;
  }

  std::size_t failures = 0;
  auto tally = [&](bool ok) { failures += ok ? 0 : 1; };
  for (int k = 1; k <= args.n; ++k) {
    if (args.recurrent_only) {
      tally(report_line(out, verify_recurrent_sampled(k, args.samples, args.seed + k), "assignments"));
    } else {
      tally(report_line(out, verify_prop_a(k), "assignments"));
      if (k >= 2) tally(report_line(out, verify_prop_b(k), "assignments"));
    }
    tally(report_line(out, verify_lemma2(k, args.samples, args.seed + 1000 + k), "trials"));
    if (k >= 2) {
      const auto [lhs, rhs] = verify_lemma3(k);
      out << "lemma3 n=" << k << ": " << (lhs == rhs ? "PASS" : "FAIL") << " (lhs=" << lhs << " rhs=" << rhs
          << ")\n";
      tally(lhs == rhs);
    }
  }
  tally(report_line(out, verify_lemma1(-kLemma1Bound, kLemma1Bound), "triples"));

  if (failures == 0) {
    out << "all checks passed\n";
    return kExitOk;
  }
  out << failures << " check(s) failed\n";
  return kExitFailed;
}

int cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err) {
  if (args.controls < 1 || args.controls > kMaxControls) {
    err << "error: --controls must be in [1, " << kMaxControls << "]\n";
    return kExitUsage;
  }
  GateSpec gate;
  try {
    gate = parse_gate_spec(args.gate);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Circuit circuit = synth_general(args.controls, gate.matrix);
  if (args.optimize) {
    out << "before: " << format_counts(gate_count(circuit)) << '\n';
    circuit = peephole_cancel(circuit);
    out << "after: " << format_counts(gate_count(circuit)) << '\n';
  } else {
    out << "counts: " << format_counts(gate_count(circuit)) << '\n';
  }

  try {
    save_circuit(args.out, circuit);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  out << "wrote " << circuit.size() << " gates on " << circuit.width() << " qubits to " << args.out.string() << '\n';
  return kExitOk;
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  if (args.controls < 1) {
    err << "error: --controls must be >= 1\n";
    return kExitUsage;
  }
  try {
    const GateSpec gate = parse_gate_spec(args.gate);
    const Circuit circuit = load_circuit(args.circuit);
    if (circuit.width() != static_cast<Qubit>(args.controls + 1)) {
      err << "error: circuit has " << circuit.width() << " qubits, expected controls+1 = " << args.controls + 1
          << '\n';
      return kExitUsage;
    }
    if (circuit.width() > kDefaultMaxDenseWidth) {
      err << "error: width " << circuit.width() << " exceeds simulator bound " << kDefaultMaxDenseWidth << '\n';
      return kExitUsage;
    }
    const double d = operator_distance(circuit_unitary(circuit), reference_mcu(args.controls, gate.matrix));
    const bool ok = d < kCheckTolerance;
    out << "distance=" << format_real(d) << ' ' << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const Circuit circuit = load_circuit(args.circuit);
    if (args.input.size() != circuit.width()) {
      err << "error: input has " << args.input.size() << " bits, circuit has " << circuit.width() << " qubits\n";
      return kExitUsage;
    }
    const StateVector result = run(circuit, StateVector::from_bitstring(args.input));
    for (std::size_t i = 0; i < result.dimension(); ++i) {
      if (std::abs(result[i]) > kPrintThreshold) {
        out << "|" << basis_label(circuit.width(), i) << "⟩: " << format_amplitude(result[i]) << '\n';
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthesize and verify n-controlled unitary gates from CNOT and controlled-V gates"};
  app.require_subcommand(1);

  VerifyIdentityArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-identity", "Check the alternating subset-parity identity and lemmas");
  verify_cmd->add_option("--n", verify.n, "Largest number of variables")->required();
  verify_cmd->add_flag("--recurrent-only", verify.recurrent_only, "Sample the recurrent form only (n up to 24)");
  verify_cmd->add_option("--samples", verify.samples, "Random samples per randomized check");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Build an n-controlled U circuit");
  synth_cmd->add_option("--controls", synth.controls, "Number of control qubits")->required();
  synth_cmd->add_option("--gate", synth.gate, "I|X|Y|Z|H|S|T or @matrix.json")->required();
  synth_cmd->add_flag("--optimize", synth.optimize, "Run peephole cancellation");
  synth_cmd->add_option("--out", synth.out, "Output circuit file")->required();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Compare a circuit file against the reference operator");
  check_cmd->add_option("--circuit", check.circuit, "Circuit file")->required();
  check_cmd->add_option("--controls", check.controls, "Number of control qubits")->required();
  check_cmd->add_option("--gate", check.gate, "I|X|Y|Z|H|S|T or @matrix.json")->required();

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run a circuit file on a basis state");
  simulate_cmd->add_option("--circuit", simulate.circuit, "Circuit file")->required();
  simulate_cmd->add_option("--input", simulate.input, "Input bitstring, qubit 0 first")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (*verify_cmd) return cmd_verify_identity(verify, out, err);
  if (*synth_cmd) return cmd_synth(synth, out, err);
  if (*check_cmd) return cmd_check(check, out, err);
  return cmd_simulate(simulate, out, err);
}

}  // namespace mcusynth::cli
