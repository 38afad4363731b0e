#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "seshadri/exactnum.hpp"

namespace seshadri::cli {

/// Schema violation in a job description; the message carries the field
/// path.
class SchemaError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

nlohmann::json value_to_json(const SeshadriValue& v, unsigned decimal_digits);
SeshadriValue value_from_json(const nlohmann::json& j);

struct JobOutcome {
  nlohmann::json envelope;
  int status = 0;  // 0 ok, 2 domain/schema error, 3 inconsistency error
};

/// Runs one job {"command": ..., "params": {...}, "seed"?, "trials"?}.
/// Never throws: errors are encoded in the envelope and status.
JobOutcome run_job(const nlohmann::json& job, std::uint64_t default_seed,
                   long default_trials, unsigned decimal_digits = 10);

struct BatchOptions {
  std::uint64_t seed = 0;
  long trials = 5;
  int parallelism = 1;
  unsigned decimal_digits = 10;
};

/// Executes one JSON job per input line; envelopes are emitted in input
/// order regardless of parallelism, with per-job sub-seeds derived from
/// (batch seed, line index). Returns the maximum per-job status.
int run_batch(std::istream& in, std::ostream& out, const BatchOptions& opts);

}  // namespace seshadri::cli
