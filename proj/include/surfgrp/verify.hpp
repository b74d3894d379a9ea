#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfgrp/twist.hpp"

namespace surfgrp {

// `deviation` marks a claim that holds up to a recorded sign or index
// convention; it does not count as a failure.
enum class CheckStatus { pass, fail, deviation };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string anchor;  // stable claim slug, one per claim family
  nlohmann::json params;
  CheckStatus status;
  nlohmann::json details;
};

struct VerifyOptions {
  int probe_depth = 4;
  int probe_samples = 2000;
  uint64_t seed = 1;
  uint64_t guard = 2'000'000;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool overall_pass() const;
  nlohmann::json to_json() const;
};

std::vector<CheckResult> check_orders(int g, uint64_t guard);
std::vector<CheckResult> check_group_axioms(int g, int samples, uint64_t seed);
std::vector<CheckResult> check_quotient_axioms(int g, long long e,
                                               uint64_t guard);
std::vector<CheckResult> check_evaluate_homomorphism(int g, int samples,
                                                     uint64_t seed);
std::vector<CheckResult> check_relator_kill(int g_lo, int g_hi);
std::vector<CheckResult> check_twists_well_defined(int g_lo, int g_hi);
std::vector<CheckResult> check_characteristic(int g, long long e,
                                              uint64_t seed, uint64_t guard);
std::vector<CheckResult> probe_nongeometric(int g, long long e, int depth,
                                            int samples, uint64_t seed,
                                            uint64_t guard);
std::vector<CheckResult> check_k_at_least_3(int g);
std::vector<CheckResult> check_power_spans(int g);
std::vector<CheckResult> check_power_congruences(int g);
std::vector<CheckResult> check_twist_congruences(int g);
std::vector<CheckResult> check_exponent_property(int g, uint64_t guard);
std::vector<CheckResult> check_elimination(int g);
std::vector<CheckResult> check_bounds(int g_lo, int g_hi);

VerificationReport run_all(const std::vector<int>& g_list,
                           const VerifyOptions& opts = {});

}  // namespace surfgrp
