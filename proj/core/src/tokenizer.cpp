#include "srqa/tokenizer.hpp"

#include <cctype>

namespace srqa::batching {

namespace {

enum class CharClass { Space, Letter, Digit, Punct };

CharClass classify(unsigned char c) {
  if (std::isspace(c)) return CharClass::Space;
  if (std::isdigit(c)) return CharClass::Digit;
  if (std::isalpha(c) || c >= 0x80) return CharClass::Letter;  // UTF-8 continuation bytes stay with letters
  return CharClass::Punct;
}

}  // namespace

std::vector<std::string> DefaultTokenizer::encode(std::string_view text) const {
  std::vector<std::string> tokens;
  std::string current;
  CharClass current_class = CharClass::Space;
  for (unsigned char c : text) {
    CharClass cls = classify(c);
    if (cls == CharClass::Space) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
      current_class = CharClass::Space;
      continue;
    }
    // Punctuation never aggregates; letter/digit runs break on class change.
    if (!current.empty() && (cls != current_class || cls == CharClass::Punct)) {
      tokens.push_back(std::move(current));
      current.clear();
    }
    current.push_back(static_cast<char>(c));
    current_class = cls;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string DefaultTokenizer::decode(std::span<const std::string> tokens) const {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

const Tokenizer& default_tokenizer() {
  static const DefaultTokenizer instance;
  return instance;
}

}  // namespace srqa::batching
