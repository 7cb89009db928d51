#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srqa/schema.hpp"
#include "srqa/tokenizer.hpp"

namespace srqa::decoding {

struct GenerationConfig {
  int num_beams = 1;
  double repetition_penalty = 1.0;
  double length_penalty = 1.0;
  int max_new_tokens = 64;
  std::uint64_t seed = 0;

  void validate() const;  // throws Error(InvalidConfig)
};

enum class FinishReason { EndToken, MaxLength, TrieTerminal };
std::string_view finish_reason_name(FinishReason r);

enum class ConfidenceSource { SequenceScore, SelfReported, Default };
std::string_view confidence_source_name(ConfidenceSource s);

struct GeneratedAnswer {
  std::string text;
  /// exp(mean token log-probability) of the returned hypothesis, in [0, 1].
  double confidence = 0.0;
  std::vector<double> token_logprobs;  // empty when the backend reports none
  FinishReason finish_reason = FinishReason::EndToken;
  ConfidenceSource confidence_source = ConfidenceSource::SequenceScore;
  /// Cumulative log-probability and the length-normalized ranking score
  /// (cumulative / length^length_penalty).
  double raw_score = 0.0;
  double normalized_score = 0.0;
};

/// Scoring interface for backends that expose their distribution. Scores are
/// log-probabilities over vocab(), deterministic given (context, prefix).
/// Implementations must be safe for concurrent next_scores calls.
class ScoringBackend {
 public:
  virtual ~ScoringBackend() = default;

  /// Token texts; the index of a token in this vector is its id.
  virtual const std::vector<std::string>& vocab() const = 0;
  virtual int eos_token() const = 0;
  virtual std::vector<double> next_scores(std::string_view context,
                                          std::span<const int> prefix) const = 0;
  virtual const batching::Tokenizer& tokenizer() const = 0;
};

/// Request metadata for opaque (closed, text-in/text-out) backends. The
/// prompt is the full self-contained input; the remaining fields let test
/// doubles identify what is being asked and let HTTP backends re-render the
/// parts through a prompt template. Production backends may ignore them.
struct GenerationRequest {
  std::string prompt;
  std::string report_chunk;
  std::string options_text;  // "1) true 2) false" style, empty for non-multichoice
  std::string question;
  std::string report_id;
  std::string feature_id;
  int batch_index = 0;
};

struct OpaqueResult {
  std::string text;
  std::optional<double> confidence;  // absent when the service reports no log-probs
  std::vector<double> token_logprobs;
};

class OpaqueBackend {
 public:
  virtual ~OpaqueBackend() = default;
  virtual OpaqueResult generate(const GenerationRequest& request,
                                const GenerationConfig& config) const = 0;
};

/// Prefix trie of allowed answer sequences. Two shapes exist: an explicit
/// tree built from option strings, where each root-to-terminal path is one
/// whitelist member and the terminal stores the member's original text; and a
/// token closure, which admits any sequence over a fixed token set with the
/// end token accepted at every node.
class WhitelistTrie {
 public:
  static WhitelistTrie from_sequences(const std::vector<std::string>& members,
                                      const batching::Tokenizer& tokenizer);
  static WhitelistTrie token_closure(std::set<std::string> tokens);

  bool empty() const;
  bool is_closure() const { return closure_; }
  int max_depth() const;  // longest member path; closure tries report 0

  struct Cursor {
    int node = 0;
    int depth = 0;
  };
  Cursor root() const { return {}; }
  std::vector<std::string> allowed_tokens(Cursor c) const;
  bool allows_end_token(Cursor c) const;
  std::optional<Cursor> advance(Cursor c, std::string_view token) const;
  bool terminal(Cursor c) const;
  bool has_children(Cursor c) const;
  /// Original member text at a terminal cursor, nullptr elsewhere.
  const std::string* canonical(Cursor c) const;

 private:
  struct Node {
    std::map<std::string, int, std::less<>> children;
    int member = -1;  // index into members_ when terminal
  };
  std::vector<Node> nodes_{Node{}};
  std::vector<std::string> members_;
  bool closure_ = false;
  std::set<std::string> closure_tokens_;
};

/// Beam search over a scoring backend. Repetition penalty subtracts
/// log(penalty) from the scores of tokens already present in the generated
/// prefix; hypotheses are ranked by cumulative log-probability divided by
/// length^length_penalty. The pure greedy rollout is always kept as a
/// candidate so widening the beam never returns a lower-scoring hypothesis.
GeneratedAnswer beam_search(const ScoringBackend& backend, std::string_view prompt,
                            const GenerationConfig& config);

/// Beam search with tokens outside the current trie node masked to -inf.
/// The returned text is always a whitelist member: tree tries complete on
/// terminal nodes, closures on the end token.
GeneratedAnswer constrained_beam_search(const ScoringBackend& backend, std::string_view prompt,
                                        const WhitelistTrie& trie, const GenerationConfig& config);

/// Multichoice -> trie of the option strings; Factual -> closure over the
/// tokens of the source batch text; FreeText -> nullopt (unconstrained).
std::optional<WhitelistTrie> build_whitelist(const schema::FeatureSpec& feature,
                                             std::string_view source_batch_text,
                                             const batching::Tokenizer& tokenizer);

/// Deterministic pseudo-random scoring backend: log-probabilities are derived
/// by hashing (seed, prefix, token), so outputs are reproducible and
/// independent of call order. Used for decoder property tests and as a stand-in
/// model for pipeline demos.
std::unique_ptr<ScoringBackend> random_scoring_backend(std::vector<std::string> vocab,
                                                       std::uint64_t seed);

}  // namespace srqa::decoding
