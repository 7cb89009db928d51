#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace srqa::schema {

enum class AnswerType { Multichoice, FreeText, Factual };

std::string_view answer_type_name(AnswerType t);
AnswerType answer_type_from_name(std::string_view name);

/// Sentinels for empty registry cells. NaN marks missing or undetected data;
/// NotApplicable marks fields that are structurally empty (specifiers whose
/// triggering event did not occur). The two are never conflated downstream.
enum class MissingKind { NaN, NotApplicable };

/// Text rendering used in gold answers and exported records.
std::string_view missing_text(MissingKind k);

/// A cell value from an annotation spreadsheet: either real content or one of
/// the two missing sentinels.
struct CellValue {
  enum class Kind { Value, NaN, NotApplicable };
  Kind kind = Kind::NaN;
  std::string text;  // meaningful only when kind == Value

  static CellValue value(std::string v) { return {Kind::Value, std::move(v)}; }
  static CellValue nan() { return {Kind::NaN, {}}; }
  static CellValue not_applicable() { return {Kind::NotApplicable, {}}; }

  bool is_missing() const { return kind != Kind::Value; }
  /// "nan" / "not applicable" / the trimmed content.
  std::string render() const;

  bool operator==(const CellValue&) const = default;
};

struct OptionSetRule {
  bool operator==(const OptionSetRule&) const = default;
};
struct NumberWithUnitRule {
  std::string unit = "mm";
  bool accept_decimals = false;  // paper expects integers; flag widens to decimals
  bool operator==(const NumberWithUnitRule&) const = default;
};
struct NonEmptyTextRule {
  bool operator==(const NonEmptyTextRule&) const = default;
};
using FormatRule = std::variant<OptionSetRule, NumberWithUnitRule, NonEmptyTextRule>;

struct FeatureSpec {
  std::string feature_id;
  std::string name;
  std::string question;
  AnswerType answer_type = AnswerType::FreeText;
  std::vector<std::string> options;  // Multichoice only
  FormatRule format_rule = NonEmptyTextRule{};
  /// Specifier fields conditioned on an event reported in earlier items;
  /// empty cells on these map to NotApplicable instead of NaN.
  bool conditional_specifier = false;

  void validate() const;  // throws Error(InvalidConfig) on a broken invariant
};

struct RegistrySchema {
  std::string registry_name;
  std::vector<FeatureSpec> features;

  void validate() const;
  const FeatureSpec* find(std::string_view feature_id) const;
  const FeatureSpec& at(std::string_view feature_id) const;  // throws UnknownFeature
};

/// The six "Lymph node disease" items with their Italian questions: three
/// multichoice (lymph_only, num_stations, stage), one free-text (site), two
/// factual measurements in millimeters (axial_size, perp_size).
RegistrySchema default_lymphoma_schema();

/// Maps an annotator's raw cell content onto a CellValue. "-" and
/// case-insensitive "n.a." become NaN; an explicit "not applicable" (or an
/// empty cell on a conditional specifier) becomes NotApplicable; an empty cell
/// elsewhere becomes NaN; everything else passes through trimmed.
CellValue normalize_missing(std::string_view raw_value, const FeatureSpec& context);

/// Format validity per the feature's rule: option membership (case- and
/// whitespace-insensitive), a single number plus unit, or non-empty text.
bool format_check(std::string_view answer, const FeatureSpec& feature);

/// Schema file round-trip (JSON, one record per feature). The shipped default
/// file reproduces default_lymphoma_schema().
RegistrySchema load_schema(const std::filesystem::path& path);
void save_schema(const RegistrySchema& schema, const std::filesystem::path& path);

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

}  // namespace srqa::schema
