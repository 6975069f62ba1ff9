#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "mp3sa/cv.hpp"
#include "mp3sa/error.hpp"
#include "mp3sa/ovo.hpp"
#include "mp3sa/rng.hpp"

using namespace mp3sa;

namespace {

struct Labelled {
    Matrix x;
    std::vector<int> labels;
};

Labelled gaussian_clusters(int classes, int per_class, double separation, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<double>> rows;
    Labelled d;
    for (int c = 0; c < classes; ++c) {
        for (int i = 0; i < per_class; ++i) {
            rows.push_back({separation * c + rng.normal(), separation * (c % 2) + rng.normal(), rng.normal()});
            d.labels.push_back(c);
        }
    }
    d.x = Matrix::from_rows(rows);
    return d;
}

}  // namespace

TEST(Ovo, ThreeClustersTenFold) {
    const auto d = gaussian_clusters(3, 100, 10.0, 12);
    CvOptions opt;
    opt.seed = 42;
    const auto r = kfold_cv(d.x, d.labels, 3, opt);
    EXPECT_GE(r.accuracy, 0.99);
    EXPECT_EQ(r.folds, 10);
}

TEST(Ovo, BinaryIsSingleMachine) {
    const auto d = gaussian_clusters(2, 30, 5.0, 1);
    SvmOptions opt;
    const auto m = ovo_train(d.x, d.labels, 2, opt);
    ASSERT_EQ(m.machines.size(), 1u);
    std::vector<int> y;
    for (int l : d.labels) {
        y.push_back(l == 1 ? 1 : -1);
    }
    const auto direct = svm_train(d.x, y, opt).model;
    for (std::size_t i = 0; i < d.x.rows(); ++i) {
        const auto p = ovo_predict(m, d.x.row(i));
        EXPECT_DOUBLE_EQ(p.score, direct.decision(d.x.row(i)));
        EXPECT_EQ(p.label, direct.predict(d.x.row(i)) == 1 ? 1 : 0);
    }
    EXPECT_EQ(ovo_train(gaussian_clusters(4, 10, 5.0, 2).x, gaussian_clusters(4, 10, 5.0, 2).labels, 4, opt)
                  .machines.size(),
              6u);
}

// Three classes on a line with each machine's vote split 1-1-1: the tie
// goes to the class with the larger summed |decision|.
TEST(Ovo, VoteTieBreak) {
    OvoModel m;
    m.class_count = 3;
    auto constant = [](double bias) {
        BinarySvm s;
        s.bias = bias;
        s.support_vectors = Matrix(0, 1);
        return s;
    };
    // 0 vs 1 -> 1 (0.5); 0 vs 2 -> 0 (2.0); 1 vs 2 -> 2 (1.0)
    m.machines = {{0, 1, constant(0.5)}, {0, 2, constant(-2.0)}, {1, 2, constant(1.0)}};
    const std::vector<double> x = {0.0};
    const auto p = ovo_predict(m, x);
    EXPECT_EQ(p.votes, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(p.label, 0);
    // Equal strengths fall back to the lowest index.
    m.machines = {{0, 1, constant(1.0)}, {0, 2, constant(-1.0)}, {1, 2, constant(1.0)}};
    EXPECT_EQ(ovo_predict(m, x).label, 0);
    m.machines = {{0, 1, constant(1.0)}, {0, 2, constant(-0.5)}, {1, 2, constant(1.0)}};
    EXPECT_EQ(ovo_predict(m, x).label, 1);
}

TEST(Ovo, EmptyClassRejected) {
    const auto d = gaussian_clusters(2, 10, 5.0, 1);
    EXPECT_THROW(ovo_train(d.x, d.labels, 3, SvmOptions{}), Error);
    EXPECT_THROW(ovo_train(d.x, d.labels, 1, SvmOptions{}), Error);
}

TEST(Cv, FoldsPartitionAndStratify) {
    std::vector<int> labels;
    for (int i = 0; i < 73; ++i) {
        labels.push_back(i % 3 == 0 ? 1 : 0);
    }
    const auto folds = stratified_folds(labels, 2, 10, 42);
    ASSERT_EQ(folds.size(), labels.size());
    for (int c = 0; c < 2; ++c) {
        std::vector<int> per_fold(10, 0);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            ASSERT_GE(folds[i], 0);
            ASSERT_LT(folds[i], 10);
            if (labels[i] == c) {
                ++per_fold[static_cast<std::size_t>(folds[i])];
            }
        }
        const auto [lo, hi] = std::minmax_element(per_fold.begin(), per_fold.end());
        EXPECT_LE(*hi - *lo, 1);
    }
    EXPECT_EQ(folds, stratified_folds(labels, 2, 10, 42));
    EXPECT_NE(folds, stratified_folds(labels, 2, 10, 43));
}

TEST(Cv, SeparableDataIsPerfect) {
    const auto d = gaussian_clusters(2, 40, 20.0, 3);
    const auto r = kfold_cv(d.x, d.labels, 2, CvOptions{});
    EXPECT_EQ(r.accuracy, 1.0);
    EXPECT_EQ(r.sensitivity, 1.0);
    EXPECT_EQ(r.specificity, 1.0);
    EXPECT_EQ(r.fold_accuracy.size(), 10u);
    EXPECT_EQ(r.confusion[0][0] + r.confusion[0][1], 40);
    EXPECT_EQ(r.confusion[1][0] + r.confusion[1][1], 40);
}

TEST(Cv, SensitivityIsClassOneRecall) {
    const auto d = gaussian_clusters(2, 60, 1.2, 4);
    const auto r = kfold_cv(d.x, d.labels, 2, CvOptions{});
    EXPECT_DOUBLE_EQ(r.sensitivity, r.confusion[1][1] / 60.0);
    EXPECT_DOUBLE_EQ(r.specificity, r.confusion[0][0] / 60.0);
    EXPECT_DOUBLE_EQ(r.accuracy, (r.confusion[0][0] + r.confusion[1][1]) / 120.0);
}

TEST(Cv, DeterministicForSeed) {
    const auto d = gaussian_clusters(2, 50, 1.0, 5);
    CvOptions opt;
    opt.svm.kernel = {KernelType::kRbf, 0.0};
    const auto a = kfold_cv(d.x, d.labels, 2, opt);
    const auto b = kfold_cv(d.x, d.labels, 2, opt);
    EXPECT_EQ(a.accuracy, b.accuracy);
    EXPECT_EQ(a.scores, b.scores);
    EXPECT_EQ(a.confusion, b.confusion);
}

// Standardizing inside each fold cancels any per-column affine map.
TEST(Cv, AffineInvariance) {
    const auto d = gaussian_clusters(2, 50, 1.0, 6);
    Matrix shifted = d.x;
    for (std::size_t i = 0; i < shifted.rows(); ++i) {
        shifted(i, 0) = 1000.0 + 50.0 * shifted(i, 0);
        shifted(i, 1) = -3.0 + 0.01 * shifted(i, 1);
        shifted(i, 2) = 7.0 * shifted(i, 2);
    }
    for (const Kernel k : {Kernel{KernelType::kLinear, 0.0}, Kernel{KernelType::kRbf, 0.0}}) {
        CvOptions opt;
        opt.svm.kernel = k;
        opt.svm.tolerance = 1e-12;
        const auto a = kfold_cv(d.x, d.labels, 2, opt);
        const auto b = kfold_cv(shifted, d.labels, 2, opt);
        EXPECT_EQ(a.accuracy, b.accuracy);
        EXPECT_EQ(a.confusion, b.confusion);
        for (std::size_t i = 0; i < a.scores.size(); ++i) {
            EXPECT_NEAR(a.scores[i], b.scores[i], 1e-6);
        }
    }
}

TEST(Cv, ReducesFoldsForSmallClasses) {
    const auto d = gaussian_clusters(2, 4, 10.0, 7);
    const auto r = kfold_cv(d.x, d.labels, 2, CvOptions{});
    EXPECT_EQ(r.folds, 4);
    EXPECT_FALSE(r.warnings.empty());
    CvOptions one;
    one.folds = 1;
    EXPECT_THROW(kfold_cv(d.x, d.labels, 2, one), Error);
}
