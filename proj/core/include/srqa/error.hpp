#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srqa {

// Machine-readable failure classes. The CLI prints the class name next to the
// message so callers can dispatch on it without parsing free text.
enum class ErrorClass {
  InvalidConfig,
  IoFailure,
  MalformedRecord,
  UnknownReportId,
  UnknownFeature,
  NoOverlap,
  SingleClass,
  TooFewInstances,
  SuffixTooLong,
  EmptyVocabulary,
  EmptyTrie,
  NoViablePath,
  Transport,
  BadResponse,
  AuthFailure,
  MissingBatchZero,
  NoResults,
  DegenerateSample,
  SampleSizeOutOfRange,
  ConstantVector,
  DegenerateAgreement,
  LengthMismatch,
  IncompleteSheet,
  EmptyGrid,
  FoldMismatch,
};

std::string_view error_class_name(ErrorClass c);

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& message)
      : std::runtime_error(std::string(error_class_name(cls)) + ": " + message), cls_(cls) {}

  ErrorClass error_class() const { return cls_; }
  std::string_view class_name() const { return error_class_name(cls_); }

 private:
  ErrorClass cls_;
};

}  // namespace srqa
