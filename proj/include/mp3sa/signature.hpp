#pragma once

#include <span>
#include <string>
#include <vector>

#include "mp3sa/sideinfo.hpp"

namespace mp3sa {

/// An encoder suggested by a first-frame side-info pattern. Hints are
/// advisory; several may fire for one stream.
struct EncoderHint {
    std::string encoder;
    std::string rule;

    bool operator==(const EncoderHint&) const = default;
};

/// Rule identifiers, in evaluation order.
const std::vector<std::string>& signature_rules();

/// Evaluates each first-frame rule against the stream. Rules that look at
/// granule fields use channel 0. The constant-first-four-frames rule is
/// skipped for streams shorter than four frames.
std::vector<EncoderHint> first_frame_signature(std::span<const SideInfo> frames);

}  // namespace mp3sa
