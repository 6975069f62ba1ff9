#include "mp3sa/error.hpp"

namespace mp3sa {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::kTruncated: return "truncated stream";
        case ErrorCode::kSyncMismatch: return "sync mismatch";
        case ErrorCode::kUnsupportedVersion: return "unsupported MPEG version";
        case ErrorCode::kUnsupportedLayer: return "unsupported layer";
        case ErrorCode::kForbiddenBitrate: return "forbidden bitrate index";
        case ErrorCode::kForbiddenSampleRate: return "forbidden sample-rate index";
        case ErrorCode::kInvalidField: return "invalid field";
        case ErrorCode::kOutOfRange: return "value out of range";
        case ErrorCode::kMalformedCodeword: return "malformed codeword";
        case ErrorCode::kBudgetOverflow: return "bit budget overflow";
        case ErrorCode::kTooFewFrames: return "too few frames";
        case ErrorCode::kSchemaMismatch: return "schema mismatch";
        case ErrorCode::kUnknownFeature: return "unknown feature";
        case ErrorCode::kInvalidArgument: return "invalid argument";
        case ErrorCode::kSingleClass: return "single class";
        case ErrorCode::kIo: return "i/o error";
        case ErrorCode::kFormat: return "format error";
    }
    return "unknown error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace mp3sa
