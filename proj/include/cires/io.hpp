#ifndef CIRES_IO_HPP
#define CIRES_IO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cires/mf.hpp"
#include "cires/resolution.hpp"

namespace cires {

/// Input error with the offending field (JSON pointer) or line/column.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using StringMatrix = std::vector<std::vector<std::string>>;

struct ModuleSpec {
  StringMatrix matrix;
  std::vector<int> row_twists;
};

struct MFSpec {
  std::string f;
  StringMatrix phi;
  std::optional<StringMatrix> psi;
};

struct UlrichSpec {
  std::string kind;  // "product" or "determinantal"
  std::vector<std::string> factors;
  StringMatrix L;
};

struct ExperimentParams {
  std::optional<std::size_t> length, window, r_max;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> b;
};

struct InputSpec {
  std::uint32_t characteristic = kDefaultCharacteristic;
  std::vector<std::string> variables;
  std::vector<std::string> ci;
  std::optional<ModuleSpec> module;
  std::optional<MFSpec> mf;
  std::optional<UlrichSpec> ulrich;
  ExperimentParams params;

  RingPtr ring;
  CIPtr algebra;
  std::optional<GradedMatrix> presentation;
  /// Built from "mf" (psi solved for when absent) or "ulrich".
  std::optional<MatrixFactorization> factorization;
};

/// Parses and validates; polynomial strings are stored canonically.
InputSpec parse_input(const std::string& text);
InputSpec parse_input_file(const std::filesystem::path& path);

nlohmann::json to_json(const InputSpec& spec);
/// Sorted keys, two-space indent, trailing newline.
std::string canonical_serialization(const InputSpec& spec);
std::string content_hash(const InputSpec& spec);

nlohmann::json matrix_to_json(const GradedMatrix& m);

}  // namespace cires

#endif
