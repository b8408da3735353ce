#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace freesep {

// Structured result of one experiment run. `outcome_code` follows the CLI
// convention: 0 = paper-consistent outcome, 1 = counterexample or violation
// found. Errors are reported by throwing.
struct RunResult {
  nlohmann::json report;
  int outcome_code = 0;
};

inline constexpr const char* kDefaultTargets = "ut3,cyc1,cyc2,cyc3";

RunResult run_member(int rank, const std::vector<std::string>& gens, const std::string& word);

// pprime = 0 scans the given exponents as-is; otherwise only primes q != pprime.
// max_witnesses caps the violations listed in the report (counters keep the
// full totals).
RunResult run_isolated(int rank, const std::vector<std::string>& gens, int max_len,
                       std::vector<int> exponents, int pprime, int threads,
                       std::size_t max_witnesses = 1000);

RunResult run_witness(int n_max);

// targets: comma-separated list of ut3 | ut4 | cyc<k>, instantiated at prime p.
RunResult run_psep(int rank, const std::vector<std::string>& gens, const std::string& exclude,
                   int p, const std::string& targets, std::uint64_t budget, int threads);

RunResult run_separate(int rank, const std::vector<std::string>& gens, const std::string& word);

}  // namespace freesep
