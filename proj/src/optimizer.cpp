// Copyright 2026 The tspdqes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tspdqes/vqe.hpp"

namespace tspdqes {
namespace {

// Simplex acceptability and step constants.
constexpr double kFlatness = 0.25;    // vertex must sit >= 0.25 rho off its face
constexpr double kMaxEdge = 2.1;      // and within 2.1 rho of the base
constexpr double kRepairStep = 0.5;   // geometry repair step, in units of rho
constexpr double kEdgeWeight = 1.1;   // distance scale when dropping vertices
constexpr double kPoorRatio = 0.1;    // actual/predicted below this is a miss
constexpr double kGoodRatio = 0.7;    // and above this widens the region
constexpr int kRefreshInterval = 64;  // rank-one updates between re-inversions

class Matrix {
  public:
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
    double &operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    double operator()(std::size_t r, std::size_t c) const {
        return data_[r * n_ + c];
    }
    [[nodiscard]] std::size_t size() const { return n_; }

  private:
    std::size_t n_;
    std::vector<double> data_;
};

// Gauss-Jordan with partial pivoting. Returns false when singular.
bool invert(const Matrix &source, Matrix &inverse) {
    const std::size_t n = source.size();
    Matrix work = source;
    inverse = Matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        inverse(i, i) = 1.0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(work(r, col)) > std::abs(work(pivot, col))) {
                pivot = r;
            }
        }
        if (work(pivot, col) == 0.0) {
            return false;
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(work(pivot, c), work(col, c));
                std::swap(inverse(pivot, c), inverse(col, c));
            }
        }
        const double scale = 1.0 / work(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            work(col, c) *= scale;
            inverse(col, c) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            const double factor = work(r, col);
            if (r == col || factor == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                work(r, c) -= factor * work(col, c);
                inverse(r, c) -= factor * inverse(col, c);
            }
        }
    }
    return true;
}

double norm2(std::span<const double> v) {
    double total = 0.0;
    for (double x : v) {
        total += x * x;
    }
    return std::sqrt(total);
}

/// Interpolation set: base point plus n vertices base + d_j, stored as the
/// rows of `offsets`. `inverse` satisfies offsets * inverse = I, so its
/// column j is normal to every offset except d_j.
class Simplex {
  public:
    Simplex(std::vector<double> base, double base_value, double rho,
            std::vector<double> vertex_values)
        : base_(std::move(base)), base_value_(base_value), offsets_(base_.size()),
          inverse_(base_.size()), values_(std::move(vertex_values)) {
        const std::size_t n = base_.size();
        for (std::size_t j = 0; j < n; ++j) {
            offsets_(j, j) = rho;
            inverse_(j, j) = 1.0 / rho;
        }
    }

    [[nodiscard]] std::size_t dimension() const { return base_.size(); }
    [[nodiscard]] const std::vector<double> &base() const { return base_; }
    [[nodiscard]] double base_value() const { return base_value_; }

    [[nodiscard]] std::vector<double> vertex(std::size_t j) const {
        std::vector<double> out = base_;
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] += offsets_(j, i);
        }
        return out;
    }

    [[nodiscard]] double offset_length(std::size_t j) const {
        double total = 0.0;
        for (std::size_t i = 0; i < dimension(); ++i) {
            total += offsets_(j, i) * offsets_(j, i);
        }
        return std::sqrt(total);
    }

    /// Distance from vertex j to the face spanned by the others.
    [[nodiscard]] double face_distance(std::size_t j) const {
        double total = 0.0;
        for (std::size_t i = 0; i < dimension(); ++i) {
            total += inverse_(i, j) * inverse_(i, j);
        }
        return total > 0.0 ? 1.0 / std::sqrt(total) : 0.0;
    }

    /// Unit normal of the face opposite vertex j, pointing toward it.
    [[nodiscard]] std::vector<double> face_normal(std::size_t j) const {
        std::vector<double> out(dimension());
        for (std::size_t i = 0; i < dimension(); ++i) {
            out[i] = inverse_(i, j);
        }
        const double length = norm2(out);
        for (double &x : out) {
            x /= length;
        }
        return out;
    }

    /// Gradient of the linear interpolant.
    [[nodiscard]] std::vector<double> gradient() const {
        const std::size_t n = dimension();
        std::vector<double> g(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const double df = values_[j] - base_value_;
            for (std::size_t i = 0; i < n; ++i) {
                g[i] += inverse_(i, j) * df;
            }
        }
        return g;
    }

    /// Barycentric weight of vertex j in base + step.
    [[nodiscard]] double weight(std::span<const double> step, std::size_t j) const {
        double total = 0.0;
        for (std::size_t i = 0; i < dimension(); ++i) {
            total += step[i] * inverse_(i, j);
        }
        return total;
    }

    /// Vertex j becomes base + step.
    void replace(std::size_t j, std::span<const double> step, double value) {
        const std::size_t n = dimension();
        const double lambda = weight(step, j);
        if (++updates_ >= kRefreshInterval || std::abs(lambda) < 1e-12) {
            for (std::size_t i = 0; i < n; ++i) {
                offsets_(j, i) = step[i];
            }
            values_[j] = value;
            refresh();
            return;
        }
        // Sherman-Morrison for a row swap: W -= w_j ((s - d_j)^T W) / lambda.
        std::vector<double> delta(n);
        for (std::size_t i = 0; i < n; ++i) {
            delta[i] = step[i] - offsets_(j, i);
        }
        std::vector<double> row(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                row[k] += delta[i] * inverse_(i, k);
            }
        }
        std::vector<double> column(n);
        for (std::size_t i = 0; i < n; ++i) {
            column[i] = inverse_(i, j) / lambda;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                inverse_(i, k) -= column[i] * row[k];
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            offsets_(j, i) = step[i];
        }
        values_[j] = value;
    }

    /// Makes vertex j the base; the old base becomes vertex j.
    void rebase(std::size_t j) {
        const std::size_t n = dimension();
        std::vector<double> shift(n);
        for (std::size_t i = 0; i < n; ++i) {
            shift[i] = offsets_(j, i);
            base_[i] += shift[i];
        }
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                offsets_(k, i) = k == j ? -shift[i] : offsets_(k, i) - shift[i];
            }
        }
        // The row map is an involution M, so the new inverse is W M: column
        // j becomes minus the sum of all columns.
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                sum += inverse_(i, k);
            }
            inverse_(i, j) = -sum;
        }
        std::swap(values_[j], base_value_);
    }

    /// Moves the lowest vertex into the base slot if it beats the base.
    void promote_best() {
        const auto best = std::min_element(values_.begin(), values_.end());
        if (best != values_.end() && *best < base_value_) {
            rebase(static_cast<std::size_t>(best - values_.begin()));
        }
    }

    [[nodiscard]] bool acceptable(double rho) const {
        for (std::size_t j = 0; j < dimension(); ++j) {
            if (offset_length(j) > kMaxEdge * rho ||
                face_distance(j) < kFlatness * rho) {
                return false;
            }
        }
        return true;
    }

    /// Vertex to repair: the farthest one if any is too far, else the one
    /// closest to its opposite face.
    [[nodiscard]] std::size_t worst_vertex(double rho) const {
        std::size_t far = 0;
        double far_length = -1.0;
        std::size_t flat = 0;
        double flat_distance = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < dimension(); ++j) {
            const double length = offset_length(j);
            if (length > far_length) {
                far_length = length;
                far = j;
            }
            const double distance = face_distance(j);
            if (distance < flat_distance) {
                flat_distance = distance;
                flat = j;
            }
        }
        return far_length > kMaxEdge * rho ? far : flat;
    }

    /// Vertex to drop for a new point base + step. `score_floor` of 1 keeps
    /// the simplex unless dropping improves its shape.
    [[nodiscard]] std::optional<std::size_t>
    vertex_to_drop(std::span<const double> step, double rho, bool improved) const {
        const std::size_t n = dimension();
        std::optional<std::size_t> chosen;
        double best_score = improved ? 0.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            double distance = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = improved ? offsets_(j, i) - step[i] : offsets_(j, i);
                distance += d * d;
            }
            distance = std::sqrt(distance);
            const double stretch = std::max(1.0, distance / (kEdgeWeight * rho));
            const double score = std::abs(weight(step, j)) * stretch * stretch;
            if (score > best_score) {
                best_score = score;
                chosen = j;
            }
        }
        return chosen;
    }

  private:
    void refresh() {
        updates_ = 0;
        Matrix fresh(dimension());
        if (invert(offsets_, fresh)) {
            inverse_ = std::move(fresh);
        }
    }

    std::vector<double> base_;
    double base_value_;
    Matrix offsets_;
    Matrix inverse_;
    std::vector<double> values_;
    int updates_ = 0;
};

double next_radius(double rho, double rho_end) {
    const double ratio = rho / rho_end;
    if (ratio <= 16.0) {
        return rho_end;
    }
    if (ratio <= 250.0) {
        return std::sqrt(ratio) * rho_end;
    }
    return 0.1 * rho;
}

} // namespace

OptimizationResult optimize(const Objective &objective,
                            std::vector<double> initial,
                            const OptimizerConfig &config) {
    if (config.rho_start <= 0.0 || config.rho_end <= 0.0 ||
        config.rho_end > config.rho_start) {
        throw std::invalid_argument("need 0 < rho_end <= rho_start");
    }
    if (config.max_evaluations < 1) {
        throw std::invalid_argument("max_evaluations must be positive");
    }
    for (double x : initial) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("initial point must be finite");
        }
    }

    OptimizationResult result;
    result.best_value = std::numeric_limits<double>::infinity();
    auto evaluate = [&](const std::vector<double> &x) {
        const double value = objective(x);
        ++result.evaluations;
        if (value < result.best_value) {
            result.best_value = value;
            result.best_parameters = x;
        }
        result.history.push_back(result.best_value);
        return value;
    };
    auto budget_left = [&] {
        return result.evaluations < config.max_evaluations;
    };

    const std::size_t n = initial.size();
    double rho = config.rho_start;
    const double base_value = evaluate(initial);
    if (n == 0) {
        return result;
    }

    std::vector<double> vertex_values(n, base_value);
    for (std::size_t j = 0; j < n; ++j) {
        if (!budget_left()) {
            return result;
        }
        auto x = initial;
        x[j] += rho;
        vertex_values[j] = evaluate(x);
    }
    Simplex simplex(std::move(initial), base_value, rho, std::move(vertex_values));

    // Geometry is only repaired after a trial step misses, so successful
    // runs of steps are not interrupted.
    bool repairing = false;
    // Trust radius for steps and geometry; rho is its floor.
    double radius = rho;
    while (budget_left()) {
        // The base stays put while repairing; moving it would drag every
        // vertex out of range again.
        if (!repairing) {
            simplex.promote_best();
        }

        if (repairing && !simplex.acceptable(radius)) {
            // Move the worst vertex half a radius off its face, on the side
            // where the linear model decreases.
            const std::size_t j = simplex.worst_vertex(radius);
            auto direction = simplex.face_normal(j);
            const auto g = simplex.gradient();
            double slope = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                slope += g[i] * direction[i];
            }
            const double sign = slope > 0.0 ? -1.0 : 1.0;
            std::vector<double> step(n);
            std::vector<double> x = simplex.base();
            for (std::size_t i = 0; i < n; ++i) {
                step[i] = sign * kRepairStep * radius * direction[i];
                x[i] += step[i];
            }
            simplex.replace(j, step, evaluate(x));
            continue;
        }
        repairing = false;

        const auto g = simplex.gradient();
        const double slope = norm2(g);
        bool poor = true;
        if (slope > 0.0 && std::isfinite(slope)) {
            std::vector<double> step(n);
            std::vector<double> x = simplex.base();
            for (std::size_t i = 0; i < n; ++i) {
                step[i] = -radius * g[i] / slope;
                x[i] += step[i];
            }
            const double predicted = radius * slope;
            const double value = evaluate(x);
            const double actual = simplex.base_value() - value;
            const bool improved = actual > 0.0;
            const double ratio = actual / predicted;
            poor = ratio < kPoorRatio;
            if (auto drop = simplex.vertex_to_drop(step, radius, improved)) {
                simplex.replace(*drop, step, value);
                if (improved) {
                    simplex.rebase(*drop);
                }
            }
            if (ratio >= kGoodRatio) {
                radius = std::min(2.0 * radius, config.rho_start);
            } else {
                radius = std::max(0.5 * radius, rho);
            }
        } else {
            radius = rho;
        }
        if (!poor) {
            continue;
        }
        if (!simplex.acceptable(radius)) {
            repairing = true;
            continue;
        }
        if (radius > 1.5 * rho) {
            continue;
        }
        if (rho <= config.rho_end) {
            break;
        }
        const double previous = rho;
        rho = next_radius(rho, config.rho_end);
        radius = std::max(0.5 * previous, rho);
    }
    return result;
}

} // namespace tspdqes
