#pragma once

#include <stdexcept>
#include <string>

namespace mp3sa {

enum class ErrorCode {
    kTruncated,
    kSyncMismatch,
    kUnsupportedVersion,
    kUnsupportedLayer,
    kForbiddenBitrate,
    kForbiddenSampleRate,
    kInvalidField,
    kOutOfRange,
    kMalformedCodeword,
    kBudgetOverflow,
    kTooFewFrames,
    kSchemaMismatch,
    kUnknownFeature,
    kInvalidArgument,
    kSingleClass,
    kIo,
    kFormat,
};

const char* to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-checkable code; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mp3sa
