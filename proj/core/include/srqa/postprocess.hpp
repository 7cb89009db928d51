#pragma once

#include <string>
#include <string_view>

namespace srqa::decoding {
struct GeneratedAnswer;
}

namespace srqa::postproc {

struct PostprocessConfig {
  bool remove_truncated_words = true;
  bool dedup_sentences = true;
  bool strip_not_applicable = true;
  bool strip_final_punct = true;
};

/// Cleans a generated free-text answer, in order: drop a trailing word
/// fragment when generation stopped at the length limit, remove segments that
/// repeat an earlier segment after normalization, remove "not applicable"
/// segments when other content remains (an answer reduced to nothing becomes
/// "not applicable"), strip trailing punctuation. Idempotent on its output.
std::string postprocess(const decoding::GeneratedAnswer& answer, const PostprocessConfig& config = {});

/// Text-level pipeline; `truncated` marks that the text may end mid-word.
std::string postprocess_text(std::string_view text, const PostprocessConfig& config = {},
                             bool truncated = false);

}  // namespace srqa::postproc
