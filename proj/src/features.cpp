#include "mp3sa/features.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "mp3sa/error.hpp"
#include "mp3sa/stats.hpp"

namespace mp3sa {
namespace {

constexpr std::array<std::string_view, 4> kStatNames = {"mean", "std", "min", "max"};

// Order defines the SI52 column order.
constexpr std::array<std::string_view, 13> kSiSeries = {
    "mdb",  "scfsi",         "p23l.g0",  "p23l.g1", "bv",  "r0c", "r1c",
    "preflag", "btype", "gg", "ts0", "ts1", "ts2"};

void append_summary(FeatureVector& fv, std::span<const double> series) {
    const Summary s = summarize(series);
    fv.values.insert(fv.values.end(), {s.mean, s.std, s.min, s.max});
}

int channels_for(const SideInfo& si, ChannelPolicy policy) {
    return policy == ChannelPolicy::kChannel0 ? 1 : si.channels;
}

}  // namespace

std::string_view to_string(Schema schema) {
    switch (schema) {
        case Schema::kSi52: return "si";
        case Schema::kMdct64: return "mdct";
        case Schema::kStego3: return "stego";
        case Schema::kProposed7: return "proposed7";
    }
    return "unknown";
}

Schema schema_from_string(std::string_view name) {
    for (Schema s : {Schema::kSi52, Schema::kMdct64, Schema::kStego3, Schema::kProposed7}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw Error(ErrorCode::kSchemaMismatch, "unknown feature set '" + std::string(name) + "'");
}

std::size_t schema_length(Schema schema) {
    switch (schema) {
        case Schema::kSi52: return 52;
        case Schema::kMdct64: return 64;
        case Schema::kStego3: return 3;
        case Schema::kProposed7: return 7;
    }
    return 0;
}

std::string_view to_string(ChannelPolicy policy) {
    return policy == ChannelPolicy::kPooled ? "pooled" : "channel0";
}

ChannelPolicy channel_policy_from_string(std::string_view name) {
    if (name == "pooled") {
        return ChannelPolicy::kPooled;
    }
    if (name == "channel0") {
        return ChannelPolicy::kChannel0;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown channel policy '" + std::string(name) + "'");
}

const std::vector<std::string>& si52_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (auto series : kSiSeries) {
            for (auto stat : kStatNames) {
                out.push_back("si." + std::string(series) + "." + std::string(stat));
            }
        }
        return out;
    }();
    return names;
}

const std::vector<std::string>& mdct64_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (int band = 0; band < kMdctSubbands; ++band) {
            char prefix[16];
            std::snprintf(prefix, sizeof prefix, "mdct.sb%02d.", band);
            for (auto stat : kStatNames) {
                out.push_back(prefix + std::string(stat));
            }
        }
        return out;
    }();
    return names;
}

const std::vector<std::string>& stego3_names() {
    static const std::vector<std::string> names = {"stego.g.std", "stego.g.skewness",
                                                   "stego.g.kurtosis"};
    return names;
}

std::vector<std::string> proposed7_names(std::span<const std::string> selected_si) {
    if (selected_si.size() != 4) {
        throw Error(ErrorCode::kInvalidArgument,
                    "PROPOSED7 needs exactly 4 SI features, got " + std::to_string(selected_si.size()));
    }
    const auto& si = si52_names();
    std::set<std::string> seen;
    for (const auto& name : selected_si) {
        if (std::find(si.begin(), si.end(), name) == si.end()) {
            throw Error(ErrorCode::kUnknownFeature, "'" + name + "' is not an SI52 feature");
        }
        if (!seen.insert(name).second) {
            throw Error(ErrorCode::kInvalidArgument, "duplicate SI feature '" + name + "'");
        }
    }
    std::vector<std::string> names = stego3_names();
    names.insert(names.end(), selected_si.begin(), selected_si.end());
    return names;
}

FeatureVector si_feature_vector(std::span<const SideInfo> frames, ChannelPolicy policy) {
    if (frames.size() < 3) {
        throw Error(ErrorCode::kTooFewFrames,
                    "SI features need at least 3 frames, got " + std::to_string(frames.size()));
    }
    std::array<std::vector<double>, kSiSeries.size()> series;
    for (std::size_t f = 0; f < frames.size(); ++f) {
        const auto& si = frames[f];
        if (f >= 2) {
            series[0].push_back(si.main_data_begin);
        }
        const int channels = channels_for(si, policy);
        for (int ch = 0; ch < channels; ++ch) {
            series[1].push_back(si.scfsi_sum(ch));
        }
        for (std::size_t gr = 0; gr < 2; ++gr) {
            for (std::size_t ch = 0; ch < static_cast<std::size_t>(channels); ++ch) {
                const auto& g = si.granule[gr][ch];
                series[2 + gr].push_back(g.part2_3_length);
                series[4].push_back(g.big_values);
                series[5].push_back(g.region0_count);
                series[6].push_back(g.region1_count);
                series[7].push_back(g.preflag);
                series[8].push_back(g.block_type);
                series[9].push_back(g.global_gain);
                series[10].push_back(g.table_select[0]);
                series[11].push_back(g.table_select[1]);
                series[12].push_back(g.table_select[2]);
            }
        }
    }
    FeatureVector fv{Schema::kSi52, si52_names(), {}};
    fv.values.reserve(52);
    for (const auto& s : series) {
        append_summary(fv, s);
    }
    return fv;
}

const std::array<int, kMdctSubbands + 1>& mdct_subband_edges() {
    static const std::array<int, kMdctSubbands + 1> edges = [] {
        std::array<int, kMdctSubbands + 1> e{};
        for (int b = 0; b < kMdctSubbands; ++b) {
            e[static_cast<std::size_t>(b + 1)] = e[static_cast<std::size_t>(b)] + (b < 12 ? 20 : 19);
        }
        return e;
    }();
    return edges;
}

SubbandSums mdct_subband_sums(const Magnitudes& granule0, const Magnitudes& granule1) {
    const auto& edges = mdct_subband_edges();
    auto kept = [&](int i) {
        return i < kMdctKeptPerGranule
                   ? granule0[static_cast<std::size_t>(kMdctFirstKept + i)]
                   : granule1[static_cast<std::size_t>(kMdctFirstKept + i - kMdctKeptPerGranule)];
    };
    SubbandSums sums{};
    for (std::size_t b = 0; b < kMdctSubbands; ++b) {
        double s = 0.0;
        for (int i = edges[b]; i < edges[b + 1]; ++i) {
            s += kept(i);
        }
        sums[b] = s;
    }
    return sums;
}

FeatureVector mdct_feature_vector_from_sums(std::span<const SubbandSums> sums) {
    if (sums.empty()) {
        throw Error(ErrorCode::kTooFewFrames, "MDCT features need at least one decodable frame");
    }
    FeatureVector fv{Schema::kMdct64, mdct64_names(), {}};
    fv.values.reserve(64);
    std::vector<double> column(sums.size());
    for (std::size_t b = 0; b < kMdctSubbands; ++b) {
        for (std::size_t i = 0; i < sums.size(); ++i) {
            column[i] = sums[i][b];
        }
        append_summary(fv, column);
    }
    return fv;
}

FeatureVector mdct_feature_vector(std::span<const MdctObservation> observations) {
    std::vector<SubbandSums> sums;
    sums.reserve(observations.size());
    for (const auto& obs : observations) {
        sums.push_back(mdct_subband_sums(obs.granule0, obs.granule1));
    }
    return mdct_feature_vector_from_sums(sums);
}

}  // namespace mp3sa
