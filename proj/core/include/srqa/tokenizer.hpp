#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srqa::batching {

/// Tokenization contract shared by batching and decoding. Tokens are plain
/// strings; backends that index a fixed vocabulary map them to ids themselves.
/// encode must be deterministic and count(text) == encode(text).size().
class Tokenizer {
 public:
  virtual ~Tokenizer() = default;

  virtual std::vector<std::string> encode(std::string_view text) const = 0;

  /// Joins tokens back into text. Round-trips encode up to whitespace
  /// normalization; exact byte fidelity is not part of the contract.
  virtual std::string decode(std::span<const std::string> tokens) const = 0;

  std::size_t count(std::string_view text) const { return encode(text).size(); }
};

/// Whitespace-and-punctuation tokenizer used when no backend tokenizer is
/// supplied. Splits on whitespace, then separates runs of letters, runs of
/// digits, and individual punctuation characters ("16x27" -> 16, x, 27).
class DefaultTokenizer final : public Tokenizer {
 public:
  std::vector<std::string> encode(std::string_view text) const override;
  std::string decode(std::span<const std::string> tokens) const override;
};

/// Shared immutable instance, safe for concurrent use.
const Tokenizer& default_tokenizer();

}  // namespace srqa::batching
