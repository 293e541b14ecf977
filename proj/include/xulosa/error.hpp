#ifndef XULOSA_ERROR_HPP
#define XULOSA_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace xulosa {

enum class ErrorCode {
  EncodingError,
  ResourceMissing,
  MalformedEntry,
  EmptyCorpus,
  IndexVersionError,
  IndexCorrupt,
  EmptyInput,
  EmptyAfterFiltering,
  DegenerateDistribution,
  BoundaryOutOfRange,
  ConfigError,
  IoError,
};

const char* error_code_name(ErrorCode code);

/// Domain error carrying a machine-readable code. The CLI maps these to
/// exit code 2 and prints the code name on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Error(ErrorCode code, const std::string& message, std::size_t line)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  const char* code_name() const noexcept { return error_code_name(code_); }

  /// 1-based line number for file-format errors, if known.
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace xulosa

#endif  // XULOSA_ERROR_HPP
