#ifndef METERKIT_ERROR_HPP_
#define METERKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace meterkit {

enum class ErrorKind {
  kFileNotFound,
  kUnsupportedFormat,
  kCorruptData,
  kUnwritablePath,
  kDimensionMismatch,
  kInvalidArgument,
  kDegenerateConfiguration,
  kSingularSystem,
  kPointAtInfinity,
  kInsufficientPixels,
  kEmptyPointer,
  kInsufficientScales,
  kDegenerateRay,
  kZeroSpan,
  kInfeasibleLabel,
  kInstanceTooLarge,
  kUnparseableNumber,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* ErrorKindName(ErrorKind kind);

}  // namespace meterkit

#endif  // METERKIT_ERROR_HPP_
