#pragma once

// Reproduces the closed-form multiplier, capability and bound results on a
// fixed corpus of abelian, Heisenberg and dim L^2 = 1 algebras.

#include "json.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace nilmul {

struct VerifyLimits {
  std::size_t max_abelian = 6;
  std::size_t max_heisenberg = 3;
  bool parallel = true;
};

struct VerifyCase {
  std::string id;
  std::string description;
  std::string provenance;  // where the expected value comes from
  nlohmann::json expected;
  nlohmann::json computed;

  bool pass() const { return expected == computed; }
};

/// Cases sorted by id; the output is identical across runs.
std::vector<VerifyCase> verify_paper(const VerifyLimits& limits = {});

nlohmann::json verify_to_json(const std::vector<VerifyCase>& cases);

}  // namespace nilmul
