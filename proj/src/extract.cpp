#include "mp3sa/extract.hpp"

#include "mp3sa/bitstream.hpp"
#include "mp3sa/error.hpp"
#include "mp3sa/maindata.hpp"

namespace mp3sa {

StreamAnalysis analyze_stream(std::span<const std::uint8_t> bytes, ChannelPolicy policy, bool decode_mdct) {
    StreamAnalysis out;
    const ParsedStream stream = parse_stream(bytes);
    out.rejected_frames = stream.rejected_frames;
    out.side_info.reserve(stream.frames.size());
    for (const auto& f : stream.frames) {
        out.side_info.push_back(f.side_info);
    }
    if (!decode_mdct) {
        return out;
    }

    const auto slices = assemble_main_data(stream.frames, bytes);
    for (std::size_t i = 0; i < slices.size(); ++i) {
        if (!slices[i].complete) {
            ++out.incomplete_frames;
            continue;
        }
        const auto& frame = stream.frames[i];
        try {
            const auto spectrum = decode_frame(slices[i], frame.side_info, frame.locator.header.sample_rate_hz);
            const int channels = policy == ChannelPolicy::kChannel0 ? 1 : spectrum.channels;
            for (std::size_t ch = 0; ch < static_cast<std::size_t>(channels); ++ch) {
                out.mdct_sums.push_back(mdct_subband_sums(spectrum.granule[0][ch].magnitudes,
                                                          spectrum.granule[1][ch].magnitudes));
            }
        } catch (const Error&) {
            ++out.undecodable_frames;
        }
    }
    return out;
}

std::vector<std::string> feature_names(const ExtractOptions& options) {
    switch (options.schema) {
        case Schema::kSi52: return si52_names();
        case Schema::kMdct64: return mdct64_names();
        case Schema::kStego3: return stego3_names();
        case Schema::kProposed7: return proposed7_names(options.si_features);
    }
    return {};
}

FeatureVector extract_features(const StreamAnalysis& analysis, const ExtractOptions& options) {
    switch (options.schema) {
        case Schema::kSi52: return si_feature_vector(analysis.side_info, options.policy);
        case Schema::kMdct64: return mdct_feature_vector_from_sums(analysis.mdct_sums);
        case Schema::kStego3:
            return stego_feature_vector(global_gain_series(analysis.side_info, options.policy));
        case Schema::kProposed7:
            return proposed7_vector(analysis.side_info, options.si_features, options.policy);
    }
    throw Error(ErrorCode::kSchemaMismatch, "unknown schema");
}

FeatureVector extract_features(std::span<const std::uint8_t> bytes, const ExtractOptions& options) {
    const auto analysis = analyze_stream(bytes, options.policy, options.schema == Schema::kMdct64);
    if (analysis.side_info.empty()) {
        throw Error(ErrorCode::kTooFewFrames, "no valid MPEG-1 Layer III frames");
    }
    return extract_features(analysis, options);
}

namespace {

ExtractResult extract_one(std::span<const std::uint8_t> bytes, const ExtractOptions& options) {
    ExtractResult r;
    try {
        r.features = extract_features(bytes, options);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

}  // namespace

std::vector<ExtractResult> extract_batch_serial(std::span<const std::vector<std::uint8_t>> files,
                                                const ExtractOptions& options) {
    std::vector<ExtractResult> results(files.size());
    for (std::size_t i = 0; i < files.size(); ++i) {
        results[i] = extract_one(files[i], options);
    }
    return results;
}

std::vector<ExtractResult> extract_batch(std::span<const std::vector<std::uint8_t>> files,
                                         const ExtractOptions& options) {
    std::vector<ExtractResult> results(files.size());
    const auto n = static_cast<long>(files.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        results[static_cast<std::size_t>(i)] = extract_one(files[static_cast<std::size_t>(i)], options);
    }
    return results;
}

}  // namespace mp3sa
