#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "homsplit/bundle.hpp"
#include "homsplit/operators.hpp"

namespace homsplit {

/// Malformed input: JSON syntax, wrong shapes, duplicate tensor keys, bad
/// polynomial text. Carries the structural Report when validation failed.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what, Report report = {})
      : std::runtime_error(what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

private:
  Report report_;
};

/// An operator file: {"kind", "matrix", "parameters"}; "imaginary_unit"
/// names a parameter to be reduced with i^2 = -1.
struct OperatorFile {
  OperatorKind kind = OperatorKind::averaging_quadri;
  PolyMatrix matrix;
  std::vector<std::string> parameters;
  std::string imaginary_unit;
};

/// Parses JSON text with // and /* */ comments allowed.
nlohmann::json parse_json_text(const std::string& text, const std::string& origin = "<input>");
nlohmann::json read_json_file(const std::filesystem::path& path);

AlgebraBundle algebra_from_json(const nlohmann::json& j);
RepresentationBundle representation_from_json(const nlohmann::json& j);
ActionBundle action_from_json(const nlohmann::json& j);
OperatorFile operator_from_json(const nlohmann::json& j);

/// Load and validate; structural violations throw InputError with the report.
AlgebraBundle load_algebra(const std::filesystem::path& path);
RepresentationBundle load_representation(const std::filesystem::path& path);
ActionBundle load_action(const std::filesystem::path& path);
OperatorFile load_operator(const std::filesystem::path& path);

/// "algebra", "representation" or "action", decided by the keys present.
std::string file_flavor(const nlohmann::json& j);

nlohmann::json to_json(const AlgebraBundle& b);
nlohmann::json to_json(const RepresentationBundle& r);
nlohmann::json to_json(const ActionBundle& a);
nlohmann::json to_json(const OperatorFile& op);
nlohmann::json matrix_to_json(const PolyMatrix& m);
nlohmann::json to_json(const Report& r);

/// Two-space indented JSON with a trailing newline; `header` lines are
/// emitted first as // comments.
std::string dump(const nlohmann::json& j, const std::vector<std::string>& header = {});

void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace homsplit
