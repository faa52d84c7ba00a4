#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "contra/io.hpp"

namespace contra {

constexpr std::uint64_t kDefaultSeed = 20240611;

/// One batch job. Inputs are already-loaded JSON documents keyed by role
/// ("input", "M", "N", "B", "V", "W", "rho", "ses", "battery").
struct JobSpec {
  std::string command;
  std::map<std::string, json> inputs;
  std::optional<Field> field;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 8;
  std::uint32_t p = 2;
  long lambda = 0;
  unsigned mmax = 3;
};

struct JobResult {
  /// 0 when every asserted check passes, 1 on a check failure, 2 on bad input.
  int exit_code = 0;
  json report;
};

JobResult run_job(const JobSpec& job);

/// "coalgebra", "comodule", "contramodule", "morphism", "rational" or "" .
std::string input_kind(const json& j);

}  // namespace contra
