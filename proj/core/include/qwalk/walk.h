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

#ifndef QWALK_WALK_H
#define QWALK_WALK_H

#include <span>
#include <vector>

#include "qwalk/coins.h"
#include "qwalk/sequences.h"

namespace qwalk {

/// Initial coin state cos(theta/2)|0_c> + e^{i phi} sin(theta/2)|1_c> at position 0.
struct InitialState {
    double theta = 0;
    double phi = 0;

    /// Validates theta in [0, pi] (std::invalid_argument otherwise) and wraps phi into [0, 2 pi).
    static InitialState make(double theta, double phi);
    /// Same, with both angles given in degrees.
    static InitialState from_degrees(double theta_deg, double phi_deg);
};

/// Walker amplitudes over positions -R..+R for coin states |0_c> and |1_c>.
///
/// The shift flips the coin as it moves the walker: the |1_c> amplitude at j
/// lands on j+1 as |0_c>, and the |0_c> amplitude at j lands on j-1 as |1_c>.
/// This is not the textbook shift; the closed forms for the XXH family
/// (for example S = sqrt(2) after 3 steps) depend on it.
///
/// Invariant: after t steps every amplitude outside [-t, t] is exactly zero.
class WalkerState {
   public:
    /// Localized initial state in a window wide enough for `max_steps` steps.
    /// Throws std::invalid_argument if max_steps < 1.
    static WalkerState prepare(const InitialState &initial, int max_steps);

    int window_radius() const {
        return radius_;
    }
    int step_count() const {
        return steps_;
    }

    /// Amplitude of |position, 0_c>. Zero outside the window.
    Amplitude amp0(int position) const;
    /// Amplitude of |position, 1_c>. Zero outside the window.
    Amplitude amp1(int position) const;

    /// Amplitudes over the full window, index 0 is position -window_radius().
    std::span<const Amplitude> coin0() const {
        return amp0_;
    }
    std::span<const Amplitude> coin1() const {
        return amp1_;
    }

    /// Total probability.
    double norm_squared() const;

    /// Mixes the coin at every site: (a0, a1) <- coin (a0, a1).
    void apply_coin(const CoinOperator &coin);
    /// Coin-flipping shift. Advances step_count, since it is what widens the support.
    /// Throws std::out_of_range when step_count() == window_radius().
    void apply_shift();
    /// apply_coin followed by apply_shift.
    void step(const CoinOperator &coin);

   private:
    WalkerState(int radius, std::vector<Amplitude> amp0, std::vector<Amplitude> amp1)
        : radius_(radius), amp0_(std::move(amp0)), amp1_(std::move(amp1)) {
    }

    int radius_ = 0;
    int steps_ = 0;
    std::vector<Amplitude> amp0_;
    std::vector<Amplitude> amp1_;
};

/// Runs `steps` steps of `sequence` from `initial`, calling visit(state)
/// after each step (state.step_count() is 1..steps).
template <typename Visitor>
void evolve(const InitialState &initial, const CoinSequence &sequence, int steps, Visitor &&visit) {
    WalkerState state = WalkerState::prepare(initial, steps);
    for (int t = 1; t <= steps; t++) {
        state.step(sequence.coin_at(t));
        visit(static_cast<const WalkerState &>(state));
    }
}

/// Snapshot of the state after every step.
std::vector<WalkerState> evolve(const InitialState &initial, const CoinSequence &sequence, int steps);

inline constexpr int MAX_DENSE_REFERENCE_STEPS = 200;

/// Output of dense_reference_evolve, laid out as position (x) coin:
/// entry 2 * (position + radius) + coin.
struct DenseState {
    int radius = 0;
    std::vector<Amplitude> vec;

    Amplitude amp(int position, int coin) const {
        return vec[static_cast<size_t>(2 * (position + radius) + coin)];
    }
};

/// Slow reference path: builds the full (2P)x(2P) step operators
/// S (I (x) C), with S = roll(+1) (x) |0><1| + roll(-1) (x) |1><0| on a
/// periodic lattice of P = 2 steps + 1 sites, and multiplies them out.
/// Only meant as a test oracle for WalkerState. Throws std::out_of_range for
/// steps > MAX_DENSE_REFERENCE_STEPS and std::invalid_argument for steps < 1.
DenseState dense_reference_evolve(const InitialState &initial, const CoinSequence &sequence, int steps);

}  // namespace qwalk

#endif
