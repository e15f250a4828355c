#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hida/json_io.hpp"

namespace hida {

/// Deliberate defects used to confirm that the suites notice wrong constants.
enum class Mutation {
  none,
  annihilation_constant,  // a_i e_A = e_{A_i} instead of r_i e_{A_i}
  coboundary_sign         // inner (-1)^i of the coboundary replaced by +1
};

struct InvariantResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

struct CheckFailure {
  std::string invariant;
  std::uint64_t seed = 0;
  json::Json inputs;
  json::Json expected;
  json::Json got;
};

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<InvariantResult> invariants;
  std::vector<CheckFailure> failures;  // at most a few recorded per invariant
  double elapsed_seconds = 0;

  bool passed() const;
  /// Failures of the named invariant; 0 when it did not run.
  std::size_t failures_of(std::string_view invariant) const;
};

const std::vector<std::string>& suite_names();

/// Runs `cases` seeded cases of every invariant in the suite ("all" runs every
/// suite). Throws ParseError on an unknown suite name.
CheckReport run_suite(std::string_view suite, std::uint64_t seed, std::size_t cases,
                      Mutation mutation = Mutation::none);

/// Elapsed time is left out so the output is reproducible.
json::Json to_json(const CheckReport& report);

}  // namespace hida
