#include "mp3sa/ovo.hpp"

#include <cmath>
#include <string>

#include "mp3sa/error.hpp"

namespace mp3sa {

OvoModel ovo_train(const Matrix& x, std::span<const int> labels, int class_count, const SvmOptions& options) {
    if (class_count < 2) {
        throw Error(ErrorCode::kSingleClass, "one-vs-one needs at least 2 classes");
    }
    if (labels.size() != x.rows()) {
        throw Error(ErrorCode::kInvalidArgument, "label count differs from sample count");
    }
    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(class_count));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0 || labels[i] >= class_count) {
            throw Error(ErrorCode::kInvalidArgument, "label " + std::to_string(labels[i]) + " out of range");
        }
        members[static_cast<std::size_t>(labels[i])].push_back(i);
    }
    for (int c = 0; c < class_count; ++c) {
        if (members[static_cast<std::size_t>(c)].empty()) {
            throw Error(ErrorCode::kInvalidArgument, "class " + std::to_string(c) + " has no samples");
        }
    }

    OvoModel model;
    model.class_count = class_count;
    for (int a = 0; a < class_count; ++a) {
        for (int b = a + 1; b < class_count; ++b) {
            std::vector<std::size_t> rows;
            std::vector<int> y;
            // Keep original sample order so results do not depend on pairing.
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (labels[i] == a || labels[i] == b) {
                    rows.push_back(i);
                    y.push_back(labels[i] == b ? 1 : -1);
                }
            }
            model.machines.push_back({a, b, svm_train(x.select_rows(rows), y, options).model});
        }
    }
    return model;
}

OvoPrediction ovo_predict(const OvoModel& model, std::span<const double> x) {
    OvoPrediction out;
    const auto k = static_cast<std::size_t>(model.class_count);
    out.votes.assign(k, 0);
    std::vector<double> strength(k, 0.0);
    double last = 0.0;
    for (const auto& m : model.machines) {
        const double d = m.svm.decision(x);
        last = d;
        const int winner = d > 0.0 ? m.second : m.first;
        ++out.votes[static_cast<std::size_t>(winner)];
        strength[static_cast<std::size_t>(winner)] += std::abs(d);
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < k; ++c) {
        if (out.votes[c] > out.votes[best] ||
            (out.votes[c] == out.votes[best] && strength[c] > strength[best])) {
            best = c;
        }
    }
    out.label = static_cast<int>(best);
    out.score = model.machines.size() == 1 ? last : strength[best];
    return out;
}

}  // namespace mp3sa
