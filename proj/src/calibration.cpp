#include "mp3sa/calibration.hpp"

#include <algorithm>

#include "mp3sa/error.hpp"
#include "mp3sa/stats.hpp"

namespace mp3sa {

GainSeries global_gain_series(std::span<const SideInfo> frames, ChannelPolicy policy) {
    GainSeries series;
    series.policy = policy;
    int channels = frames.empty() ? 1 : frames.front().channels;
    if (policy == ChannelPolicy::kChannel0) {
        channels = 1;
    }
    for (std::size_t ch = 0; ch < static_cast<std::size_t>(channels); ++ch) {
        for (const auto& si : frames) {
            if (ch >= static_cast<std::size_t>(si.channels)) {
                continue;
            }
            for (std::size_t gr = 0; gr < 2; ++gr) {
                const int gain = si.granule[gr][ch].global_gain;
                if (gain == 0) {
                    ++series.dropped_zero;
                } else {
                    series.values.push_back(gain);
                }
            }
        }
    }
    if (series.values.size() < 2) {
        throw Error(ErrorCode::kTooFewFrames, "gain series needs at least 2 nonzero values");
    }
    return series;
}

CalibratedSeries calibrated_series(std::span<const double> x) {
    if (x.size() < 2) {
        throw Error(ErrorCode::kInvalidArgument, "calibration needs at least 2 values");
    }
    if (std::any_of(x.begin(), x.end(), [](double v) { return !(v > 0.0); })) {
        throw Error(ErrorCode::kInvalidArgument, "calibration needs strictly positive values");
    }
    CalibratedSeries out;
    out.c.resize(x.size() - 1);
    out.g.resize(x.size() - 1);
    for (std::size_t m = 0; m + 1 < x.size(); ++m) {
        const double reference = 0.5 * (x[m] + x[m + 1]);
        out.c[m] = x[m] / reference;
        out.g[m] = 2.0 * (x[m] - x[m + 1]) / (x[m] + x[m + 1]);
    }
    return out;
}

FeatureVector stego_feature_vector(std::span<const double> x) {
    if (x.size() < 4) {
        throw Error(ErrorCode::kTooFewFrames, "stego features need at least 4 gain values");
    }
    const auto cal = calibrated_series(x);
    const Moments m = moments(cal.g);
    return {Schema::kStego3, stego3_names(), {m.std, m.skewness, m.kurtosis}};
}

FeatureVector select_features(const FeatureVector& fv, std::span<const std::string> names, Schema schema) {
    FeatureVector out{schema, {}, {}};
    for (const auto& name : names) {
        const auto it = std::find(fv.names.begin(), fv.names.end(), name);
        if (it == fv.names.end()) {
            throw Error(ErrorCode::kUnknownFeature, "'" + name + "'");
        }
        out.names.push_back(name);
        out.values.push_back(fv.values[static_cast<std::size_t>(it - fv.names.begin())]);
    }
    return out;
}

FeatureVector proposed7_vector(std::span<const SideInfo> frames, std::span<const std::string> selected_si,
                               ChannelPolicy policy) {
    auto names = proposed7_names(selected_si);
    const auto stego = stego_feature_vector(global_gain_series(frames, policy));
    const auto si = select_features(si_feature_vector(frames, policy), selected_si, Schema::kSi52);
    FeatureVector fv{Schema::kProposed7, std::move(names), stego.values};
    fv.values.insert(fv.values.end(), si.values.begin(), si.values.end());
    return fv;
}

}  // namespace mp3sa
