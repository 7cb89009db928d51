#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srqa/schema.hpp"

namespace srqa::metrics {

/// Lowercase, strip punctuation, collapse whitespace, split. The shared
/// normalization under SA, token F1 and ROUGE-L.
std::vector<std::string> normalize_answer(std::string_view text);

/// Exact match on normalized token lists.
int strict_accuracy(std::string_view pred, std::string_view gold);

/// Harmonic mean of token precision/recall over the multiset intersection of
/// normalized tokens. 1 when both sides normalize to empty, 0 when disjoint.
double token_f1(std::string_view pred, std::string_view gold);

/// Delegates to schema::format_check.
int format_accuracy(std::string_view pred, const schema::FeatureSpec& feature);

/// LCS-based F measure over normalized tokens.
double rouge_l(std::string_view pred, std::string_view gold);

struct ConfusionMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<long>> counts;  // counts[gold][pred]

  long total() const;
  long at(std::string_view gold, std::string_view pred) const;
  /// Fraction of gold==label rows predicted as label. Returns nullopt when the
  /// label never occurs in gold.
  std::optional<double> recall(std::string_view label) const;
};

/// 2x2 matrix over {"not applicable", "narrative"}; "narrative" groups every
/// free-text answer other than "not applicable".
ConfusionMatrix free_text_na_matrix(const std::vector<std::string>& preds,
                                    const std::vector<std::string>& golds);

/// General confusion matrix over the observed label set (sorted); used for the
/// per-feature multichoice matrices, with predictions outside the option set
/// grouped under "undefined".
ConfusionMatrix confusion_matrix(const std::vector<std::string>& preds,
                                 const std::vector<std::string>& golds,
                                 const std::vector<std::string>& known_labels);

struct InstanceScore {
  std::string instance_id;
  schema::AnswerType answer_type = schema::AnswerType::FreeText;
  int sa = 0;
  double f1 = 0.0;
  int fa = 0;
  double rouge = 0.0;
};

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation across folds (ddof=1)
};

struct TypeMetrics {
  MeanStd sa, f1, fa, rouge;
  long n = 0;  // instances pooled over folds
};

/// Percent-scale aggregates: per answer type, mean +- std across folds, plus
/// the overall micro-average row pooling all types within each fold.
struct MetricsReport {
  std::map<std::string, TypeMetrics> per_type;  // keyed by answer_type_name
  TypeMetrics overall;
  long n = 0;
  /// Raw per-fold values backing the aggregates; used by run comparison.
  /// fold_values[type][metric][fold] with metric in {"sa","f1","fa","rouge_l"}.
  std::map<std::string, std::map<std::string, std::vector<double>>> fold_values;
};

MetricsReport aggregate(const std::vector<InstanceScore>& scores,
                        const std::map<std::string, int>& fold_of_instance);

}  // namespace srqa::metrics
