#include "srqa/schema.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "json.hpp"
#include "srqa/error.hpp"

namespace srqa::schema {

using nlohmann::json;

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view answer_type_name(AnswerType t) {
  switch (t) {
    case AnswerType::Multichoice: return "multichoice";
    case AnswerType::FreeText: return "free-text";
    case AnswerType::Factual: return "factual";
  }
  return "unknown";
}

AnswerType answer_type_from_name(std::string_view name) {
  std::string n = to_lower(name);
  if (n == "multichoice") return AnswerType::Multichoice;
  if (n == "free-text" || n == "freetext" || n == "free_text") return AnswerType::FreeText;
  if (n == "factual") return AnswerType::Factual;
  throw Error(ErrorClass::InvalidConfig, "unknown answer type '" + std::string(name) + "'");
}

std::string_view missing_text(MissingKind k) {
  return k == MissingKind::NaN ? "nan" : "not applicable";
}

std::string CellValue::render() const {
  switch (kind) {
    case Kind::NaN: return std::string(missing_text(MissingKind::NaN));
    case Kind::NotApplicable: return std::string(missing_text(MissingKind::NotApplicable));
    case Kind::Value: return trim(text);
  }
  return {};
}

void FeatureSpec::validate() const {
  if (feature_id.empty())
    throw Error(ErrorClass::InvalidConfig, "feature with empty feature_id");
  if (question.empty())
    throw Error(ErrorClass::InvalidConfig, "feature '" + feature_id + "' has an empty question");
  const bool multi = answer_type == AnswerType::Multichoice;
  if (multi && options.empty())
    throw Error(ErrorClass::InvalidConfig, "multichoice feature '" + feature_id + "' has no options");
  if (!multi && !options.empty())
    throw Error(ErrorClass::InvalidConfig,
                "feature '" + feature_id + "' carries options but is not multichoice");
  std::set<std::string> seen;
  for (const auto& o : options) {
    if (o.empty()) throw Error(ErrorClass::InvalidConfig, "empty option on '" + feature_id + "'");
    if (!seen.insert(to_lower(o)).second)
      throw Error(ErrorClass::InvalidConfig, "duplicate option '" + o + "' on '" + feature_id + "'");
  }
  if (const auto* nu = std::get_if<NumberWithUnitRule>(&format_rule); nu && nu->unit.empty())
    throw Error(ErrorClass::InvalidConfig, "NumberWithUnit rule on '" + feature_id + "' has empty unit");
}

void RegistrySchema::validate() const {
  std::set<std::string> ids;
  for (const auto& f : features) {
    f.validate();
    if (!ids.insert(f.feature_id).second)
      throw Error(ErrorClass::InvalidConfig, "duplicate feature_id '" + f.feature_id + "'");
  }
}

const FeatureSpec* RegistrySchema::find(std::string_view feature_id) const {
  for (const auto& f : features)
    if (f.feature_id == feature_id) return &f;
  return nullptr;
}

const FeatureSpec& RegistrySchema::at(std::string_view feature_id) const {
  if (const auto* f = find(feature_id)) return *f;
  throw Error(ErrorClass::UnknownFeature, "feature '" + std::string(feature_id) + "' not in schema");
}

RegistrySchema default_lymphoma_schema() {
  RegistrySchema s;
  s.registry_name = "Lymph node disease";
  s.features = {
      {"lymph_only", "Lymph only", "La diagnosi è solo di malattia dei linfonodi?",
       AnswerType::Multichoice, {"true", "false"}, OptionSetRule{}, false},
      {"num_stations", "Number of stations", "Quante sono le stazioni linfonodali interessate dal tumore?",
       AnswerType::Multichoice, {"1", "2+"}, OptionSetRule{}, false},
      {"stage", "Stage", "Qual è lo stadio del linfoma?",
       AnswerType::Multichoice,
       {"limited disease (stage I-II)", "advanced disease (stage III-IV)"},
       OptionSetRule{}, false},
      {"site", "Site", "Dove si trovano le stazioni linfonodali interessate dal tumore?",
       AnswerType::FreeText, {}, NonEmptyTextRule{}, false},
      {"axial_size", "Axial plane size",
       "Quanto è la dimensione massima sul piano assiale del tumore primario?",
       AnswerType::Factual, {}, NumberWithUnitRule{"mm", false}, false},
      {"perp_size", "Perpendicular axis size",
       "Quanto è la dimensione dell'asse perpendicolare al diametro massimo del tumore primario?",
       AnswerType::Factual, {}, NumberWithUnitRule{"mm", false}, false},
  };
  s.validate();
  return s;
}

CellValue normalize_missing(std::string_view raw_value, const FeatureSpec& context) {
  const std::string t = trim(raw_value);
  const std::string low = to_lower(t);
  if (low == "not applicable") return CellValue::not_applicable();
  if (t == "-" || low == "n.a." || low == "nan") return CellValue::nan();
  if (t.empty()) {
    return context.conditional_specifier ? CellValue::not_applicable() : CellValue::nan();
  }
  return CellValue::value(t);
}

namespace {

bool check_number_with_unit(std::string_view answer, const NumberWithUnitRule& rule) {
  const std::string t = trim(answer);
  size_t i = 0;
  // exactly one number: digits, optionally one decimal separator + digits
  size_t digits = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) { ++i; ++digits; }
  if (digits == 0) return false;
  if (rule.accept_decimals && i < t.size() && (t[i] == '.' || t[i] == ',')) {
    ++i;
    size_t frac = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) { ++i; ++frac; }
    if (frac == 0) return false;
  }
  if (i < t.size() && t[i] == ' ') ++i;  // single optional space
  const std::string rest = to_lower(t.substr(i));
  return rest == to_lower(rule.unit);
}

}  // namespace

bool format_check(std::string_view answer, const FeatureSpec& feature) {
  struct Visitor {
    std::string_view answer;
    const FeatureSpec& feature;
    bool operator()(const OptionSetRule&) const {
      const std::string norm = to_lower(trim(answer));
      return std::any_of(feature.options.begin(), feature.options.end(),
                         [&](const std::string& o) { return to_lower(trim(o)) == norm; });
    }
    bool operator()(const NumberWithUnitRule& r) const { return check_number_with_unit(answer, r); }
    bool operator()(const NonEmptyTextRule&) const { return !trim(answer).empty(); }
  };
  return std::visit(Visitor{answer, feature}, feature.format_rule);
}

namespace {

json rule_to_json(const FormatRule& rule) {
  if (std::holds_alternative<OptionSetRule>(rule)) return {{"kind", "option_set"}};
  if (const auto* nu = std::get_if<NumberWithUnitRule>(&rule))
    return {{"kind", "number_with_unit"}, {"unit", nu->unit}, {"accept_decimals", nu->accept_decimals}};
  return {{"kind", "non_empty_text"}};
}

FormatRule rule_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "option_set") return OptionSetRule{};
  if (kind == "number_with_unit")
    return NumberWithUnitRule{j.at("unit").get<std::string>(), j.value("accept_decimals", false)};
  if (kind == "non_empty_text") return NonEmptyTextRule{};
  throw Error(ErrorClass::InvalidConfig, "unknown format rule kind '" + kind + "'");
}

}  // namespace

RegistrySchema load_schema(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorClass::IoFailure, "cannot open schema file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorClass::MalformedRecord, "schema file " + path.string() + ": " + e.what());
  }
  RegistrySchema s;
  try {
    s.registry_name = j.at("registry_name").get<std::string>();
    for (const auto& jf : j.at("features")) {
      FeatureSpec f;
      f.feature_id = jf.at("feature_id").get<std::string>();
      f.name = jf.at("name").get<std::string>();
      f.question = jf.at("question").get<std::string>();
      f.answer_type = answer_type_from_name(jf.at("answer_type").get<std::string>());
      f.options = jf.value("options", std::vector<std::string>{});
      f.format_rule = rule_from_json(jf.at("format_rule"));
      f.conditional_specifier = jf.value("conditional_specifier", false);
      s.features.push_back(std::move(f));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorClass::MalformedRecord, "schema file " + path.string() + ": " + e.what());
  }
  s.validate();
  return s;
}

void save_schema(const RegistrySchema& schema, const std::filesystem::path& path) {
  json features = json::array();
  for (const auto& f : schema.features) {
    json jf{{"feature_id", f.feature_id},
            {"name", f.name},
            {"question", f.question},
            {"answer_type", answer_type_name(f.answer_type)},
            {"format_rule", rule_to_json(f.format_rule)}};
    if (!f.options.empty()) jf["options"] = f.options;
    if (f.conditional_specifier) jf["conditional_specifier"] = true;
    features.push_back(std::move(jf));
  }
  json j{{"registry_name", schema.registry_name}, {"features", features}};
  std::ofstream out(path);
  if (!out) throw Error(ErrorClass::IoFailure, "cannot write schema file " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace srqa::schema
