#include <gtest/gtest.h>

#include <cmath>

#include "mp3sa/error.hpp"
#include "mp3sa/normalize.hpp"
#include "mp3sa/rng.hpp"

using namespace mp3sa;

TEST(Normalize, SimpleColumn) {
    const std::vector<std::vector<double>> rows = {{1.0, 5.0}, {2.0, 5.0}, {3.0, 5.0}};
    const auto stats = fit_norm(rows, {"a", "b"});
    EXPECT_EQ(stats.mean, (std::vector<double>{2.0, 5.0}));
    EXPECT_EQ(stats.std, (std::vector<double>{1.0, 0.0}));
    EXPECT_EQ(apply_norm(stats, rows[0]), (std::vector<double>{-1.0, 0.0}));
    EXPECT_EQ(apply_norm(stats, rows[1]), (std::vector<double>{0.0, 0.0}));
    EXPECT_EQ(apply_norm(stats, rows[2]), (std::vector<double>{1.0, 0.0}));
}

TEST(Normalize, TrainingColumnsStandardized) {
    Rng rng(3);
    std::vector<std::vector<double>> rows(57, std::vector<double>(6));
    for (auto& r : rows) {
        for (std::size_t k = 0; k < r.size(); ++k) {
            r[k] = 1e3 * static_cast<double>(k) + std::pow(10.0, static_cast<double>(k) - 2) * rng.normal();
        }
    }
    const auto stats = fit_norm(rows, {"a", "b", "c", "d", "e", "f"});
    std::vector<std::vector<double>> z;
    for (const auto& r : rows) {
        z.push_back(apply_norm(stats, r));
    }
    const auto again = fit_norm(z, {"a", "b", "c", "d", "e", "f"});
    for (std::size_t k = 0; k < 6; ++k) {
        EXPECT_LT(std::abs(again.mean[k]), 1e-9);
        EXPECT_LT(std::abs(again.std[k] - 1.0), 1e-9);
    }
}

TEST(Normalize, Errors) {
    const std::vector<std::vector<double>> one = {{1.0}};
    EXPECT_THROW(fit_norm(one, {"a"}), Error);
    const std::vector<std::vector<double>> rows = {{1.0, 2.0}, {3.0, 4.0}};
    const auto stats = fit_norm(rows, {"a", "b"});
    try {
        apply_norm(stats, std::vector<double>{1.0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kSchemaMismatch);
    }
    const std::vector<std::string> wrong = {"a", "c"};
    EXPECT_THROW(apply_norm(stats, std::vector<double>{1.0, 2.0}, wrong), Error);
    const std::vector<std::vector<double>> ragged = {{1.0, 2.0}, {3.0}};
    EXPECT_THROW(fit_norm(ragged, {"a", "b"}), Error);
}
