#include "mp3sa/svm.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mp3sa/error.hpp"

namespace mp3sa {

double BinarySvm::decision(std::span<const double> x) const {
    if (support_vectors.rows() > 0 && x.size() != support_vectors.cols()) {
        throw Error(ErrorCode::kSchemaMismatch, "expected " + std::to_string(support_vectors.cols()) +
                                                    " features, got " + std::to_string(x.size()));
    }
    double sum = bias;
    for (std::size_t i = 0; i < coef.size(); ++i) {
        sum += coef[i] * kernel(support_vectors.row(i), x);
    }
    return sum;
}

namespace {

constexpr double kTau = 1e-12;

}  // namespace

SvmTrainResult svm_train(const Matrix& x, std::span<const int> y, const SvmOptions& options) {
    const std::size_t n = x.rows();
    if (y.size() != n) {
        throw Error(ErrorCode::kInvalidArgument, "label count differs from sample count");
    }
    if (!(options.c > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "C must be positive");
    }
    bool has_pos = false;
    bool has_neg = false;
    for (int label : y) {
        if (label == 1) {
            has_pos = true;
        } else if (label == -1) {
            has_neg = true;
        } else {
            throw Error(ErrorCode::kInvalidArgument, "labels must be +1 or -1");
        }
    }
    if (!has_pos || !has_neg) {
        throw Error(ErrorCode::kSingleClass, "training needs both classes");
    }
    for (double v : x.data()) {
        if (std::isnan(v)) {
            throw Error(ErrorCode::kInvalidArgument, "NaN feature value");
        }
    }

    const std::vector<double> k =
        options.parallel_kernel ? kernel_matrix(x, options.kernel) : kernel_matrix_serial(x, options.kernel);
    const double c = options.c;
    auto kij = [&](std::size_t i, std::size_t j) { return k[i * n + j]; };
    auto yd = [&](std::size_t i) { return static_cast<double>(y[i]); };

    std::vector<double> alpha(n, 0.0);
    std::vector<double> grad(n, -1.0);  // gradient of 1/2 a'Qa - e'a
    SvmTrainResult result;

    auto objective = [&] {
        double f = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            f += alpha[t] * (grad[t] - 1.0);
        }
        return -0.5 * f;
    };

    const double inf = std::numeric_limits<double>::infinity();
    std::size_t iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        // i: maximal violator in I_up.
        double gmax = -inf;
        std::size_t i = n;
        for (std::size_t t = 0; t < n; ++t) {
            if (y[t] == 1 ? alpha[t] < c : alpha[t] > 0.0) {
                const double v = -yd(t) * grad[t];
                if (v > gmax) {
                    gmax = v;
                    i = t;
                }
            }
        }
        // j: second-order choice in I_low.
        double gmax2 = -inf;
        double best = inf;
        std::size_t j = n;
        for (std::size_t t = 0; t < n; ++t) {
            if (!(y[t] == 1 ? alpha[t] > 0.0 : alpha[t] < c)) {
                continue;
            }
            const double v = yd(t) * grad[t];
            gmax2 = std::max(gmax2, v);
            if (i == n) {
                continue;
            }
            const double diff = gmax + v;
            if (diff > 0.0) {
                double quad = kij(i, i) + kij(t, t) - 2.0 * kij(i, t);
                if (quad <= 0.0) {
                    quad = kTau;
                }
                const double obj = -(diff * diff) / quad;
                if (obj < best) {
                    best = obj;
                    j = t;
                }
            }
        }
        if (i == n || j == n || gmax + gmax2 < options.tolerance) {
            result.converged = true;
            break;
        }

        const double ai = alpha[i];
        const double aj = alpha[j];
        const double qij = yd(i) * yd(j) * kij(i, j);
        if (y[i] != y[j]) {
            double quad = kij(i, i) + kij(j, j) + 2.0 * qij;
            if (quad <= 0.0) {
                quad = kTau;
            }
            const double delta = (-grad[i] - grad[j]) / quad;
            const double diff = alpha[i] - alpha[j];
            alpha[i] += delta;
            alpha[j] += delta;
            if (diff > 0.0) {
                if (alpha[j] < 0.0) {
                    alpha[j] = 0.0;
                    alpha[i] = diff;
                }
            } else if (alpha[i] < 0.0) {
                alpha[i] = 0.0;
                alpha[j] = -diff;
            }
            if (diff > 0.0) {
                if (alpha[i] > c) {
                    alpha[i] = c;
                    alpha[j] = c - diff;
                }
            } else if (alpha[j] > c) {
                alpha[j] = c;
                alpha[i] = c + diff;
            }
        } else {
            double quad = kij(i, i) + kij(j, j) - 2.0 * qij;
            if (quad <= 0.0) {
                quad = kTau;
            }
            const double delta = (grad[i] - grad[j]) / quad;
            const double sum = alpha[i] + alpha[j];
            alpha[i] -= delta;
            alpha[j] += delta;
            if (sum > c) {
                if (alpha[i] > c) {
                    alpha[i] = c;
                    alpha[j] = sum - c;
                }
            } else if (alpha[j] < 0.0) {
                alpha[j] = 0.0;
                alpha[i] = sum;
            }
            if (sum > c) {
                if (alpha[j] > c) {
                    alpha[j] = c;
                    alpha[i] = sum - c;
                }
            } else if (alpha[i] < 0.0) {
                alpha[i] = 0.0;
                alpha[j] = sum;
            }
        }

        const double dai = alpha[i] - ai;
        const double daj = alpha[j] - aj;
        for (std::size_t t = 0; t < n; ++t) {
            grad[t] += yd(t) * (yd(i) * kij(i, t) * dai + yd(j) * kij(j, t) * daj);
        }
        if (options.record_objective) {
            result.objective.push_back(objective());
        }
    }
    result.iterations = iter;

    // Bias from free vectors, else the midpoint of the feasible interval.
    double ub = inf;
    double lb = -inf;
    double free_sum = 0.0;
    std::size_t free_count = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const double yg = yd(t) * grad[t];
        if (alpha[t] >= c) {
            if (y[t] == -1) {
                ub = std::min(ub, yg);
            } else {
                lb = std::max(lb, yg);
            }
        } else if (alpha[t] <= 0.0) {
            if (y[t] == 1) {
                ub = std::min(ub, yg);
            } else {
                lb = std::max(lb, yg);
            }
        } else {
            free_sum += yg;
            ++free_count;
        }
    }
    const double rho = free_count > 0 ? free_sum / static_cast<double>(free_count) : 0.5 * (ub + lb);

    BinarySvm& model = result.model;
    model.kernel = options.kernel;
    model.c = c;
    model.bias = -rho;
    std::vector<std::size_t> support;
    for (std::size_t t = 0; t < n; ++t) {
        if (alpha[t] > 0.0) {
            support.push_back(t);
            model.coef.push_back(alpha[t] * yd(t));
        }
    }
    model.support_vectors = x.select_rows(support);
    result.alpha = std::move(alpha);
    return result;
}

}  // namespace mp3sa
