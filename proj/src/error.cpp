#include "xulosa/error.hpp"

namespace xulosa {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EncodingError: return "EncodingError";
    case ErrorCode::ResourceMissing: return "ResourceMissing";
    case ErrorCode::MalformedEntry: return "MalformedEntry";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::IndexVersionError: return "IndexVersionError";
    case ErrorCode::IndexCorrupt: return "IndexCorrupt";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptyAfterFiltering: return "EmptyAfterFiltering";
    case ErrorCode::DegenerateDistribution: return "DegenerateDistribution";
    case ErrorCode::BoundaryOutOfRange: return "BoundaryOutOfRange";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace xulosa
