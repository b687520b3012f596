#pragma once

// JSON and text serialization. Matrices in files are row-major with one row
// per source basis vector (row i is the image of e_i), so the inclusion at
// level n is dim V_{n-1} x dim V_n. Rationals are "p" or "p/q" strings.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fimod/analysis.hpp"
#include "fimod/degree_calculus.hpp"
#include "fimod/fi_module.hpp"

namespace fimod {

/// Malformed file or a module violating an FI-module identity.
class InvalidModuleFile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json module_to_json(const TruncatedFIModule& v);
/// Parses and validates; throws InvalidModuleFile naming the first problem.
TruncatedFIModule module_from_json(const nlohmann::json& j);

TruncatedFIModule load_module(const std::filesystem::path& path);
void save_module(const TruncatedFIModule& v, const std::filesystem::path& path);

nlohmann::json character_table_to_json(const CharacterTable& table);
nlohmann::json character_polynomial_to_json(const CharacterPolynomial& q);
nlohmann::json bound_table_to_json(const BoundTable& table);
nlohmann::json config_bounds_to_json(int manifoldDim, bool orientable, long q);
nlohmann::json analysis_to_json(const Analysis& a);

std::string bound_table_to_text(const BoundTable& table);
std::string config_bounds_to_text(int manifoldDim, bool orientable, long q);
std::string analysis_to_text(const Analysis& a);

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace fimod
