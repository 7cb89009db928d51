#include "srqa/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>

#include "srqa/error.hpp"

namespace srqa::metrics {

std::vector<std::string> normalize_answer(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (unsigned char c : text) {
    if (c < 0x80 && std::ispunct(c)) {
      cleaned.push_back(' ');
    } else {
      cleaned.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  std::vector<std::string> tokens;
  std::string cur;
  for (unsigned char c : cleaned) {
    if (std::isspace(c)) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(static_cast<char>(c));
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

int strict_accuracy(std::string_view pred, std::string_view gold) {
  return normalize_answer(pred) == normalize_answer(gold) ? 1 : 0;
}

double token_f1(std::string_view pred, std::string_view gold) {
  const auto p = normalize_answer(pred);
  const auto g = normalize_answer(gold);
  if (p.empty() && g.empty()) return 1.0;
  if (p.empty() || g.empty()) return 0.0;
  std::map<std::string, long> gold_counts;
  for (const auto& t : g) ++gold_counts[t];
  long common = 0;
  for (const auto& t : p) {
    auto it = gold_counts.find(t);
    if (it != gold_counts.end() && it->second > 0) {
      ++common;
      --it->second;
    }
  }
  if (common == 0) return 0.0;
  const double precision = static_cast<double>(common) / static_cast<double>(p.size());
  const double recall = static_cast<double>(common) / static_cast<double>(g.size());
  return 2.0 * precision * recall / (precision + recall);
}

int format_accuracy(std::string_view pred, const schema::FeatureSpec& feature) {
  return schema::format_check(pred, feature) ? 1 : 0;
}

double rouge_l(std::string_view pred, std::string_view gold) {
  const auto p = normalize_answer(pred);
  const auto g = normalize_answer(gold);
  if (p.empty() && g.empty()) return 1.0;
  if (p.empty() || g.empty()) return 0.0;
  // DP over LCS length, two rolling rows.
  std::vector<long> prev(g.size() + 1, 0), cur(g.size() + 1, 0);
  for (size_t i = 1; i <= p.size(); ++i) {
    for (size_t j = 1; j <= g.size(); ++j) {
      cur[j] = p[i - 1] == g[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  const long lcs = prev[g.size()];
  if (lcs == 0) return 0.0;
  const double precision = static_cast<double>(lcs) / static_cast<double>(p.size());
  const double recall = static_cast<double>(lcs) / static_cast<double>(g.size());
  return 2.0 * precision * recall / (precision + recall);
}

long ConfusionMatrix::total() const {
  long t = 0;
  for (const auto& row : counts) t = std::accumulate(row.begin(), row.end(), t);
  return t;
}

long ConfusionMatrix::at(std::string_view gold, std::string_view pred) const {
  auto idx = [&](std::string_view l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end())
      throw Error(ErrorClass::InvalidConfig, "label '" + std::string(l) + "' not in matrix");
    return static_cast<size_t>(it - labels.begin());
  };
  return counts[idx(gold)][idx(pred)];
}

std::optional<double> ConfusionMatrix::recall(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  const size_t i = static_cast<size_t>(it - labels.begin());
  const long row_total = std::accumulate(counts[i].begin(), counts[i].end(), 0L);
  if (row_total == 0) return std::nullopt;
  return static_cast<double>(counts[i][i]) / static_cast<double>(row_total);
}

namespace {

std::string joined_normalized(std::string_view text) {
  const auto toks = normalize_answer(text);
  std::string out;
  for (const auto& t : toks) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

}  // namespace

ConfusionMatrix free_text_na_matrix(const std::vector<std::string>& preds,
                                    const std::vector<std::string>& golds) {
  if (preds.size() != golds.size())
    throw Error(ErrorClass::LengthMismatch, "preds and golds differ in length");
  ConfusionMatrix m;
  m.labels = {"not applicable", "narrative"};
  m.counts.assign(2, std::vector<long>(2, 0));
  auto bucket = [](const std::string& s) { return joined_normalized(s) == "not applicable" ? 0 : 1; };
  for (size_t i = 0; i < preds.size(); ++i) {
    ++m.counts[static_cast<size_t>(bucket(golds[i]))][static_cast<size_t>(bucket(preds[i]))];
  }
  return m;
}

ConfusionMatrix confusion_matrix(const std::vector<std::string>& preds,
                                 const std::vector<std::string>& golds,
                                 const std::vector<std::string>& known_labels) {
  if (preds.size() != golds.size())
    throw Error(ErrorClass::LengthMismatch, "preds and golds differ in length");
  ConfusionMatrix m;
  m.labels = known_labels;
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < m.labels.size(); ++i) index[joined_normalized(m.labels[i])] = i;
  bool needs_undefined = false;
  auto classify = [&](const std::string& s) -> long {
    auto it = index.find(joined_normalized(s));
    if (it != index.end()) return static_cast<long>(it->second);
    needs_undefined = true;
    return -1;
  };
  std::vector<std::pair<long, long>> cells(preds.size());
  for (size_t i = 0; i < preds.size(); ++i) cells[i] = {classify(golds[i]), classify(preds[i])};
  if (needs_undefined) m.labels.push_back("undefined");
  const size_t n = m.labels.size();
  m.counts.assign(n, std::vector<long>(n, 0));
  for (auto [g, p] : cells) {
    const size_t gi = g < 0 ? n - 1 : static_cast<size_t>(g);
    const size_t pi = p < 0 ? n - 1 : static_cast<size_t>(p);
    ++m.counts[gi][pi];
  }
  return m;
}

namespace {

MeanStd mean_std(const std::vector<double>& values) {
  MeanStd out;
  if (values.empty()) return out;
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  if (values.size() < 2) return out;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  return out;
}

struct Accumulator {
  double sa = 0, f1 = 0, fa = 0, rouge = 0;
  long n = 0;
  void add(const InstanceScore& s) {
    sa += s.sa;
    f1 += s.f1;
    fa += s.fa;
    rouge += s.rouge;
    ++n;
  }
};

}  // namespace

MetricsReport aggregate(const std::vector<InstanceScore>& scores,
                        const std::map<std::string, int>& fold_of_instance) {
  MetricsReport report;
  // fold -> type -> accumulator; "overall" pools all types.
  std::map<int, std::map<std::string, Accumulator>> per_fold;
  for (const auto& s : scores) {
    auto it = fold_of_instance.find(s.instance_id);
    if (it == fold_of_instance.end())
      throw Error(ErrorClass::FoldMismatch, "instance '" + s.instance_id + "' has no fold");
    auto& fold_acc = per_fold[it->second];
    fold_acc[std::string(schema::answer_type_name(s.answer_type))].add(s);
    fold_acc["overall"].add(s);
    ++report.n;
  }
  std::set<std::string> types;
  for (const auto& [fold, by_type] : per_fold)
    for (const auto& [type, acc] : by_type) types.insert(type);
  for (const auto& type : types) {
    std::vector<double> sa, f1, fa, rouge;
    long n = 0;
    for (const auto& [fold, by_type] : per_fold) {
      auto it = by_type.find(type);
      if (it == by_type.end() || it->second.n == 0) continue;
      const auto& acc = it->second;
      const double dn = static_cast<double>(acc.n);
      sa.push_back(100.0 * acc.sa / dn);
      f1.push_back(100.0 * acc.f1 / dn);
      fa.push_back(100.0 * acc.fa / dn);
      rouge.push_back(100.0 * acc.rouge / dn);
      n += acc.n;
    }
    TypeMetrics tm{mean_std(sa), mean_std(f1), mean_std(fa), mean_std(rouge), n};
    auto& fv = report.fold_values[type];
    fv["sa"] = sa;
    fv["f1"] = f1;
    fv["fa"] = fa;
    fv["rouge_l"] = rouge;
    if (type == "overall") {
      report.overall = tm;
    } else {
      report.per_type[type] = tm;
    }
  }
  return report;
}

}  // namespace srqa::metrics
