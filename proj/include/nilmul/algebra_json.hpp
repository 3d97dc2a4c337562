#pragma once

// JSON algebra files:
//   { "name": str, "dim": int, "basis": [str...],
//     "brackets": [ {"i": int, "j": int, "value": [[k, "p/q"], ...]}, ... ] }
// Only pairs with i < j are listed (0-based); omitted pairs are zero.

#include "nilmul/fdlie.hpp"

#include "json.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace nilmul {

/// Malformed algebra input; the message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json algebra_to_json(const LieAlgebra& l);
LieAlgebra algebra_from_json(const nlohmann::json& j);

LieAlgebra read_algebra(const std::filesystem::path& path);
void write_algebra(const LieAlgebra& l, const std::filesystem::path& path);

}  // namespace nilmul
