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

#ifndef QWALK_EXPERIMENTS_H
#define QWALK_EXPERIMENTS_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qwalk/entanglement.h"
#include "qwalk/sequences.h"
#include "qwalk/walk.h"

namespace qwalk {

// Every experiment here is a pure function of its arguments. `threads` only
// bounds the worker count (0 = hardware concurrency) and never changes a result:
// per-sample work is independent and reductions run in sample-index order.

/// Sample `index` of the stream for `seed`: theta uniform on [0, pi), phi uniform on [0, 2 pi).
/// Each index has its own generator, so a sample does not depend on how many were drawn before it.
InitialState sample_initial_state(uint64_t seed, uint64_t index);

/// Samples 0..count-1. Throws std::invalid_argument if count < 1.
std::vector<InitialState> sample_initial_states(int count, uint64_t seed);

struct TrajectoryPoint {
    int t = 0;
    double mean_s = 0;
    /// Sample standard deviation (n - 1 denominator; 0 for a single sample).
    double std_s = 0;
};

struct AverageTrajectory {
    std::string sequence_label;
    int samples_per_point = 0;
    uint64_t seed = 0;
    std::vector<TrajectoryPoint> points;
};

/// Mean Schmidt norm at t = 1..steps over one fixed set of random initial states.
/// Each sample is evolved once and its S recorded at every step.
AverageTrajectory average_schmidt(
    const CoinSequence &sequence, int steps, int samples, uint64_t seed, unsigned threads = 0);

/// Default first step included in a logarithmic fit: every point.
inline constexpr int DEFAULT_FIT_T_MIN = 1;
inline constexpr int MIN_FIT_POINTS = 5;

struct FitPrediction {
    int t = 0;
    double schmidt = 0;
    /// schmidt / sqrt(2), clipped to [1/sqrt(2), 1].
    double ratio = 0;
};

/// Least-squares fit of mean S ~ slope * ln(t) + intercept.
struct FitResult {
    double slope = 0;
    double intercept = 0;
    int t_min = 0;
    int t_max = 0;
    size_t points_used = 0;
    double residual_rms = 0;
    std::vector<FitPrediction> extrapolation;

    double predict(int t) const;
};

/// Fits the points with t >= t_min. Throws std::invalid_argument when fewer
/// than MIN_FIT_POINTS qualify or every qualifying t is the same.
FitResult log_fit(const AverageTrajectory &trajectory, int t_min, std::span<const int> extrapolate_to);

/// theta_i = pi i / (n - 1) for i = 0..n-1 (both poles included).
std::vector<double> theta_axis(int n);
/// phi_j = 2 pi j / n for j = 0..n-1 (2 pi excluded since it duplicates 0).
std::vector<double> phi_axis(int n);

struct GridResult {
    std::string sequence_label;
    int t = 0;
    std::vector<double> theta_axis;
    std::vector<double> phi_axis;
    /// Row-major: values[i * phi_axis.size() + j] is S at (theta_axis[i], phi_axis[j]).
    std::vector<double> values;

    double at(size_t theta_index, size_t phi_index) const {
        return values[theta_index * phi_axis.size() + phi_index];
    }
};

/// S after t steps on the regular (theta, phi) grid. Throws std::invalid_argument
/// if either axis has fewer than 2 points.
GridResult grid_schmidt(const CoinSequence &sequence, int t, int theta_steps, int phi_steps, unsigned threads = 0);

struct ParrondoReport {
    std::string combined_label;
    std::string a_label;
    std::string b_label;
    int t = 0;
    int samples = 0;
    uint64_t seed = 0;
    double mean_combined = 0;
    double mean_a = 0;
    double mean_b = 0;
    double margin_over_a = 0;
    double margin_over_b = 0;
    /// True iff the combined sequence strictly beats both single-coin sequences.
    bool parrondo = false;
};

/// Compares a two-coin sequence against its single-coin parts on a shared sample set.
/// Throws std::invalid_argument if `a` or `b` is not a single-coin sequence.
ParrondoReport parrondo_check(
    const CoinSequence &combined, const CoinSequence &a, const CoinSequence &b, int t, int samples, uint64_t seed,
    unsigned threads = 0);

inline constexpr double PHASE_INDEPENDENCE_TOLERANCE = 1e-10;

struct PhaseCertificate {
    std::string sequence_label;
    /// max_deviation[t - 1] = max over the grid of |S(t, theta, phi) - S(t, theta, phi_0)|, phi_0 = 0.
    std::vector<double> max_deviation;

    double worst() const;
    bool certified(double tolerance = PHASE_INDEPENDENCE_TOLERANCE) const;
};

PhaseCertificate phase_independence_certificate(
    const CoinSequence &sequence, int t_max, int theta_samples, int phi_samples, unsigned threads = 0);

struct ComparisonRow {
    std::string sequence_label;
    int t = 0;
    int rank = 0;
    double mean_s = 0;
    double std_s = 0;
    double mean_ratio = 0;
};

struct ComparisonTable {
    int samples = 0;
    uint64_t seed = 0;
    std::vector<ComparisonRow> rows;
};

/// Ranks candidates by mean S at step t, all on the same sample set. Descending
/// mean; means equal to 12 significant digits are ordered by label.
ComparisonTable rank_sequences(
    std::span<const CoinSequence> candidates, int t, int samples, uint64_t seed, unsigned threads = 0);

/// rank_sequences for each step in `t_list` (sorted, deduplicated) from a single
/// evolution per sample. Rows are grouped by ascending t.
ComparisonTable compare_sequences(
    std::span<const CoinSequence> candidates, std::span<const int> t_list, int samples, uint64_t seed,
    unsigned threads = 0);

}  // namespace qwalk

#endif
