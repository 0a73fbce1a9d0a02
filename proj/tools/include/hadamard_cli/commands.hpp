#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hadamard_cli/codec.hpp"

namespace hadamard::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kPrecondition = 2,
  kBudget = 3,
  kSuiteFailed = 4,  // paper-suite ran, some check failed
};

struct JobSpec {
  std::string subcommand;
  json payload = json::object();
  std::uint64_t seed = kDefaultSeed;
  bool symbolic = false;
  bool transcript = false;
  bool notation = false;
};

struct JobResult {
  int exit_code = kOk;
  json document;
};

const std::vector<std::string>& subcommands();
// Subcommands that take no input payload.
bool needs_payload(const std::string& subcommand);

// Never throws for bad input: errors come back as
// {"error": {"kind", "message", "pointer"?}} with the matching exit code.
JobResult run(const JobSpec& job);

// Individual reproductions behind `paper-suite`.
json paper_suite(std::uint64_t seed);

}  // namespace hadamard::cli
