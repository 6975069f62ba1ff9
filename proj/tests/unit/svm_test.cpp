#include <gtest/gtest.h>

#include <cmath>

#include "mp3sa/error.hpp"
#include "mp3sa/kernel.hpp"
#include "mp3sa/rng.hpp"
#include "mp3sa/svm.hpp"
#include "../support/oracles.hpp"

using namespace mp3sa;

namespace {

struct Data {
    Matrix x;
    std::vector<int> y;
};

Data clusters(std::uint64_t seed, int per_class, double separation, double spread = 1.0) {
    Rng rng(seed);
    std::vector<std::vector<double>> rows;
    Data d;
    for (int i = 0; i < 2 * per_class; ++i) {
        const int label = i % 2 == 0 ? 1 : -1;
        rows.push_back({label * separation + spread * rng.normal(), label * separation + spread * rng.normal()});
        d.y.push_back(label);
    }
    d.x = Matrix::from_rows(rows);
    return d;
}

Data xor_points() {
    const std::vector<std::vector<double>> rows = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    return {Matrix::from_rows(rows), {-1, -1, 1, 1}};
}

}  // namespace

TEST(Kernel, Values) {
    const std::vector<double> a = {1.0, 2.0};
    const std::vector<double> b = {3.0, -1.0};
    EXPECT_DOUBLE_EQ((Kernel{KernelType::kLinear, 0.0})(a, b), 1.0);
    EXPECT_DOUBLE_EQ((Kernel{KernelType::kRbf, 0.5})(a, b), std::exp(-0.5 * 13.0));
    EXPECT_EQ(kernel_type_from_string("gaussian"), KernelType::kRbf);
    EXPECT_EQ(kernel_type_from_string("linear"), KernelType::kLinear);
    EXPECT_THROW(kernel_type_from_string("poly"), Error);
}

TEST(Kernel, ParallelMatchesSerial) {
    const auto d = clusters(1, 60, 1.0);
    for (const Kernel k : {Kernel{KernelType::kLinear, 0.0}, Kernel{KernelType::kRbf, 0.7}}) {
        EXPECT_EQ(kernel_matrix(d.x, k), kernel_matrix_serial(d.x, k));
    }
}

TEST(Svm, SeparableClustersLinear) {
    const auto d = clusters(2, 50, 4.0, 0.5);
    SvmOptions opt;
    const auto res = svm_train(d.x, d.y, opt);
    EXPECT_TRUE(res.converged);
    for (std::size_t i = 0; i < d.x.rows(); ++i) {
        EXPECT_EQ(res.model.predict(d.x.row(i)), d.y[i]);
    }
    EXPECT_LT(oracle::kkt_residual(d.x, d.y, res.alpha, res.model.bias, opt.kernel, opt.c), opt.tolerance);
}

TEST(Svm, XorWithRbf) {
    const auto d = xor_points();
    SvmOptions opt;
    opt.kernel = {KernelType::kRbf, 1.0};
    opt.c = 10.0;
    const auto res = svm_train(d.x, d.y, opt);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(res.model.predict(d.x.row(i)), d.y[i]);
    }
    EXPECT_LT(oracle::kkt_residual(d.x, d.y, res.alpha, res.model.bias, opt.kernel, opt.c), opt.tolerance);
}

TEST(Svm, KktOnOverlappingData) {
    for (std::uint64_t seed = 10; seed < 15; ++seed) {
        const auto d = clusters(seed, 80, 0.6);
        for (const Kernel k : {Kernel{KernelType::kLinear, 0.0}, Kernel{KernelType::kRbf, 0.5}}) {
            SvmOptions opt;
            opt.kernel = k;
            opt.c = 2.0;
            const auto res = svm_train(d.x, d.y, opt);
            ASSERT_TRUE(res.converged);
            for (double a : res.alpha) {
                EXPECT_GE(a, 0.0);
                EXPECT_LE(a, opt.c);
            }
            EXPECT_LT(oracle::kkt_residual(d.x, d.y, res.alpha, res.model.bias, k, opt.c), opt.tolerance);
        }
    }
}

TEST(Svm, DualObjectiveNonDecreasing) {
    const auto d = clusters(21, 60, 0.5);
    SvmOptions opt;
    opt.kernel = {KernelType::kRbf, 1.0};
    opt.record_objective = true;
    const auto res = svm_train(d.x, d.y, opt);
    ASSERT_FALSE(res.objective.empty());
    for (std::size_t t = 1; t < res.objective.size(); ++t) {
        EXPECT_GE(res.objective[t], res.objective[t - 1] - 1e-12);
    }
}

TEST(Svm, FlippedLabelsNegateDecision) {
    const auto d = clusters(4, 40, 0.8);
    std::vector<int> flipped(d.y);
    for (int& v : flipped) {
        v = -v;
    }
    SvmOptions opt;
    opt.kernel = {KernelType::kRbf, 0.5};
    opt.tolerance = 1e-12;
    const auto a = svm_train(d.x, d.y, opt).model;
    const auto b = svm_train(d.x, flipped, opt).model;
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const std::vector<double> p = {2 * rng.normal(), 2 * rng.normal()};
        EXPECT_NEAR(a.decision(p), -b.decision(p), 1e-9);
    }
}

TEST(Svm, SymmetricDataDecisionAtOriginIsBias) {
    // Each point has its negation in the other class.
    const std::vector<std::vector<double>> rows = {{1, 2}, {2, 1}, {-1, -2}, {-2, -1}, {0.5, 1.5}, {-0.5, -1.5}};
    const std::vector<int> y = {1, 1, -1, -1, 1, -1};
    const auto m = svm_train(Matrix::from_rows(rows), y, SvmOptions{}).model;
    const std::vector<double> origin = {0.0, 0.0};
    EXPECT_NEAR(m.decision(origin), m.bias, 1e-12);
}

TEST(Svm, SupportVectorPredictsItsLabel) {
    const auto d = clusters(9, 30, 3.0, 0.5);
    const auto res = svm_train(d.x, d.y, SvmOptions{});
    for (std::size_t i = 0; i < d.x.rows(); ++i) {
        if (res.alpha[i] > 0.0) {
            EXPECT_EQ(res.model.predict(d.x.row(i)), d.y[i]);
        }
    }
}

TEST(Svm, Errors) {
    const auto d = clusters(1, 5, 1.0);
    const std::vector<int> same(d.y.size(), 1);
    try {
        svm_train(d.x, same, SvmOptions{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kSingleClass);
    }
    Matrix bad = d.x;
    bad(0, 0) = std::nan("");
    EXPECT_THROW(svm_train(bad, d.y, SvmOptions{}), Error);
    SvmOptions zero_c;
    zero_c.c = 0.0;
    EXPECT_THROW(svm_train(d.x, d.y, zero_c), Error);
    const auto m = svm_train(d.x, d.y, SvmOptions{}).model;
    EXPECT_THROW(m.decision(std::vector<double>{1.0}), Error);
}

TEST(Svm, DeterministicAndSerialKernelAgrees) {
    const auto d = clusters(33, 50, 0.7);
    SvmOptions a;
    a.kernel = {KernelType::kRbf, 0.3};
    SvmOptions b = a;
    b.parallel_kernel = false;
    const auto ra = svm_train(d.x, d.y, a);
    const auto rb = svm_train(d.x, d.y, b);
    EXPECT_EQ(ra.alpha, rb.alpha);
    EXPECT_EQ(ra.model.bias, rb.model.bias);
}
