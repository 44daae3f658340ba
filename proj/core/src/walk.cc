// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/walk.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

InitialState InitialState::make(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw std::invalid_argument("initial-state angles must be finite");
    }
    if (theta < 0 || theta > std::numbers::pi) {
        throw std::invalid_argument("theta must lie in [0, pi], got " + std::to_string(theta));
    }
    constexpr double two_pi = 2 * std::numbers::pi;
    double p = std::fmod(phi, two_pi);
    if (p < 0) {
        p += two_pi;
    }
    if (p >= two_pi) {
        p = 0;
    }
    return {theta, p};
}

InitialState InitialState::from_degrees(double theta_deg, double phi_deg) {
    constexpr double rad = std::numbers::pi / 180;
    return make(theta_deg * rad, phi_deg * rad);
}

WalkerState WalkerState::prepare(const InitialState &initial, int max_steps) {
    if (max_steps < 1) {
        throw std::invalid_argument("max_steps must be at least 1, got " + std::to_string(max_steps));
    }
    auto width = static_cast<size_t>(2 * max_steps + 1);
    std::vector<Amplitude> a0(width);
    std::vector<Amplitude> a1(width);
    a0[static_cast<size_t>(max_steps)] = std::cos(initial.theta / 2);
    a1[static_cast<size_t>(max_steps)] = std::polar(std::sin(initial.theta / 2), initial.phi);
    return WalkerState(max_steps, std::move(a0), std::move(a1));
}

Amplitude WalkerState::amp0(int position) const {
    if (position < -radius_ || position > radius_) {
        return 0;
    }
    return amp0_[static_cast<size_t>(position + radius_)];
}

Amplitude WalkerState::amp1(int position) const {
    if (position < -radius_ || position > radius_) {
        return 0;
    }
    return amp1_[static_cast<size_t>(position + radius_)];
}

double WalkerState::norm_squared() const {
    double total = 0;
    for (size_t k = 0; k < amp0_.size(); k++) {
        total += std::norm(amp0_[k]) + std::norm(amp1_[k]);
    }
    return total;
}

void WalkerState::apply_coin(const CoinOperator &coin) {
    const Amplitude c00 = coin(0, 0);
    const Amplitude c01 = coin(0, 1);
    const Amplitude c10 = coin(1, 0);
    const Amplitude c11 = coin(1, 1);
    auto lo = static_cast<size_t>(radius_ - steps_);
    auto hi = static_cast<size_t>(radius_ + steps_);
    for (size_t k = lo; k <= hi; k++) {
        Amplitude a = amp0_[k];
        Amplitude b = amp1_[k];
        amp0_[k] = c00 * a + c01 * b;
        amp1_[k] = c10 * a + c11 * b;
    }
}

void WalkerState::apply_shift() {
    if (steps_ >= radius_) {
        throw std::out_of_range(
            "walker support would leave the window of radius " + std::to_string(radius_) + " at step " +
            std::to_string(steps_ + 1));
    }
    auto lo = static_cast<std::ptrdiff_t>(radius_ - steps_);
    auto hi = static_cast<std::ptrdiff_t>(radius_ + steps_);
    // |1_c> at j -> |0_c> at j+1, and |0_c> at j -> |1_c> at j-1.
    amp0_.swap(amp1_);
    std::shift_right(amp0_.begin() + lo, amp0_.begin() + hi + 2, 1);
    amp0_[static_cast<size_t>(lo)] = 0;
    std::shift_left(amp1_.begin() + lo - 1, amp1_.begin() + hi + 1, 1);
    amp1_[static_cast<size_t>(hi)] = 0;
    steps_++;
}

void WalkerState::step(const CoinOperator &coin) {
    apply_coin(coin);
    apply_shift();
}

std::vector<WalkerState> evolve(const InitialState &initial, const CoinSequence &sequence, int steps) {
    std::vector<WalkerState> out;
    out.reserve(static_cast<size_t>(std::max(steps, 0)));
    evolve(initial, sequence, steps, [&](const WalkerState &s) { out.push_back(s); });
    return out;
}

DenseState dense_reference_evolve(const InitialState &initial, const CoinSequence &sequence, int steps) {
    if (steps < 1) {
        throw std::invalid_argument("steps must be at least 1");
    }
    if (steps > MAX_DENSE_REFERENCE_STEPS) {
        throw std::out_of_range(
            "dense reference is limited to " + std::to_string(MAX_DENSE_REFERENCE_STEPS) + " steps, got " +
            std::to_string(steps));
    }
    using Mat = Eigen::MatrixXcd;
    const Eigen::Index positions = 2 * steps + 1;
    const Eigen::Index dim = 2 * positions;

    Mat c01 = Mat::Zero(2, 2);
    c01(0, 1) = 1;
    Mat c10 = Mat::Zero(2, 2);
    c10(1, 0) = 1;
    Mat roll_plus = Mat::Zero(positions, positions);
    Mat roll_minus = Mat::Zero(positions, positions);
    for (Eigen::Index k = 0; k < positions; k++) {
        roll_plus((k + 1) % positions, k) = 1;
        roll_minus((k + positions - 1) % positions, k) = 1;
    }
    auto kron = [](const Mat &a, const Mat &b) {
        Mat out(a.rows() * b.rows(), a.cols() * b.cols());
        for (Eigen::Index i = 0; i < a.rows(); i++) {
            for (Eigen::Index j = 0; j < a.cols(); j++) {
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
            }
        }
        return out;
    };
    Mat shift = kron(roll_plus, c01) + kron(roll_minus, c10);
    Mat eye = Mat::Identity(positions, positions);

    std::map<CoinName, Mat> step_ops;
    for (CoinName n : sequence.pattern()) {
        if (step_ops.contains(n)) {
            continue;
        }
        CoinOperator c = named_coin(n);
        Mat coin(2, 2);
        coin << c(0, 0), c(0, 1), c(1, 0), c(1, 1);
        step_ops.emplace(n, shift * kron(eye, coin));
    }

    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi(2 * steps) = std::cos(initial.theta / 2);
    psi(2 * steps + 1) = std::polar(std::sin(initial.theta / 2), initial.phi);
    for (int t = 1; t <= steps; t++) {
        psi = step_ops.at(sequence.name_at(t)) * psi;
    }

    DenseState out;
    out.radius = steps;
    out.vec.assign(psi.data(), psi.data() + dim);
    return out;
}

}  // namespace qwalk
