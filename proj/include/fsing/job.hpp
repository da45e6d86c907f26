#ifndef FSING_JOB_HPP
#define FSING_JOB_HPP

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "fsing/localcoh.hpp"

namespace fsing {

// One CLI invocation. Commands: test-ideal, fedder, me, delta, isolated,
// injectivity, hn-dims, kernel-dims, witness, sigma, repro-example-1,
// repro-example-2.
struct JobSpec {
  std::string command;
  std::uint32_t p = 2;
  int n = 1;  // the ring is F_p[x0..xn]
  std::string f;
  int e = 1;      // level for test-ideal and witness
  int eMax = 4;   // level bound for me, delta, injectivity, sigma
  std::optional<std::pair<std::int64_t, std::int64_t>> window;
  std::optional<std::int64_t> maxDim;
  bool json = false;
};

struct JobOutcome {
  int exitCode = 0;
  nlohmann::ordered_json report;  // schema "fsing-report/1"
  std::string text;
};

// Runs a job and renders both output forms. Deterministic: equal specs
// produce byte-identical reports. Exit codes: 0 success, 1 reference
// mismatch, 2 parse/validation error, 3 resource guard.
JobOutcome runJob(const JobSpec& spec);

}  // namespace fsing

#endif
