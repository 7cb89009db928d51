#include "srqa/error.hpp"

namespace srqa {

std::string_view error_class_name(ErrorClass c) {
  switch (c) {
    case ErrorClass::InvalidConfig: return "InvalidConfig";
    case ErrorClass::IoFailure: return "IoFailure";
    case ErrorClass::MalformedRecord: return "MalformedRecord";
    case ErrorClass::UnknownReportId: return "UnknownReportId";
    case ErrorClass::UnknownFeature: return "UnknownFeature";
    case ErrorClass::NoOverlap: return "NoOverlap";
    case ErrorClass::SingleClass: return "SingleClass";
    case ErrorClass::TooFewInstances: return "TooFewInstances";
    case ErrorClass::SuffixTooLong: return "SuffixTooLong";
    case ErrorClass::EmptyVocabulary: return "EmptyVocabulary";
    case ErrorClass::EmptyTrie: return "EmptyTrie";
    case ErrorClass::NoViablePath: return "NoViablePath";
    case ErrorClass::Transport: return "Transport";
    case ErrorClass::BadResponse: return "BadResponse";
    case ErrorClass::AuthFailure: return "AuthFailure";
    case ErrorClass::MissingBatchZero: return "MissingBatchZero";
    case ErrorClass::NoResults: return "NoResults";
    case ErrorClass::DegenerateSample: return "DegenerateSample";
    case ErrorClass::SampleSizeOutOfRange: return "SampleSizeOutOfRange";
    case ErrorClass::ConstantVector: return "ConstantVector";
    case ErrorClass::DegenerateAgreement: return "DegenerateAgreement";
    case ErrorClass::LengthMismatch: return "LengthMismatch";
    case ErrorClass::IncompleteSheet: return "IncompleteSheet";
    case ErrorClass::EmptyGrid: return "EmptyGrid";
    case ErrorClass::FoldMismatch: return "FoldMismatch";
  }
  return "Unknown";
}

}  // namespace srqa
