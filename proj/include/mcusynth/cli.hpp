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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "mcusynth/simulator.hpp"

namespace mcusynth::cli {

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxRecurrentOnlyN = 24;
inline constexpr double kCheckTolerance = 1e-9;
inline constexpr double kPrintThreshold = 1e-12;

struct VerifyIdentityArgs {
  int n = 0;
  bool recurrent_only = false;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 20260101;
};

struct SynthArgs {
  int controls = 0;
  std::string gate;
  bool optimize = false;
  std::filesystem::path out;
};

struct CheckArgs {
  std::filesystem::path circuit;
  int controls = 0;
  std::string gate;
};

struct SimulateArgs {
  std::filesystem::path circuit;
  std::string input;
};

int cmd_verify_identity(const VerifyIdentityArgs& args, std::ostream& out, std::ostream& err);
int cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 12 significant digits; integral values keep a trailing ".0".
std::string format_amplitude(Complex z);

}  // namespace mcusynth::cli
