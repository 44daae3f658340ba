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

#include "qwalk/experiments.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qwalk/parallel.h"

namespace qwalk {

namespace {

constexpr size_t SAMPLE_BLOCK = 1024;

void require_positive(int value, const char *what) {
    if (value < 1) {
        throw std::invalid_argument(std::string(what) + " must be at least 1, got " + std::to_string(value));
    }
}

/// Welford accumulator; fed in sample-index order so results are reproducible.
struct RunningStats {
    size_t n = 0;
    double mean = 0;
    double m2 = 0;

    void push(double x) {
        n++;
        double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }
    double stddev() const {
        return n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0;
    }
};

/// stats[k][m]: statistics of S for sequence k at step tracked[m] over the sample set.
/// `tracked` must be ascending and within [1, max_t].
std::vector<std::vector<RunningStats>> sampled_statistics(
    std::span<const CoinSequence> sequences, std::span<const int> tracked, int samples, uint64_t seed,
    unsigned threads) {
    require_positive(samples, "samples");
    const size_t num_seqs = sequences.size();
    const size_t num_tracked = tracked.size();
    const int max_t = tracked.empty() ? 0 : tracked.back();
    std::vector<std::vector<RunningStats>> stats(num_seqs, std::vector<RunningStats>(num_tracked));
    if (max_t < 1) {
        return stats;
    }

    const size_t stride = num_seqs * num_tracked;
    std::vector<double> block_values(SAMPLE_BLOCK * stride);
    for (size_t block_start = 0; block_start < static_cast<size_t>(samples); block_start += SAMPLE_BLOCK) {
        size_t block_size = std::min(SAMPLE_BLOCK, static_cast<size_t>(samples) - block_start);
        parallel_for(block_size, threads, [&](size_t i) {
            InitialState init = sample_initial_state(seed, block_start + i);
            double *out = block_values.data() + i * stride;
            for (size_t k = 0; k < num_seqs; k++) {
                size_t m = 0;
                evolve(init, sequences[k], max_t, [&](const WalkerState &s) {
                    if (m < num_tracked && s.step_count() == tracked[m]) {
                        out[k * num_tracked + m] = schmidt_norm(reduced_density(s));
                        m++;
                    }
                });
            }
        });
        for (size_t i = 0; i < block_size; i++) {
            const double *row = block_values.data() + i * stride;
            for (size_t k = 0; k < num_seqs; k++) {
                for (size_t m = 0; m < num_tracked; m++) {
                    stats[k][m].push(row[k * num_tracked + m]);
                }
            }
        }
    }
    return stats;
}

/// Rounds to 12 significant digits, the precision results are reported at.
double reported_value(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", x);
    return std::strtod(buf, nullptr);
}

double clipped_ratio(double s) {
    return std::clamp(s / std::numbers::sqrt2, 1 / std::numbers::sqrt2, 1.0);
}

}  // namespace

InitialState sample_initial_state(uint64_t seed, uint64_t index) {
    std::seed_seq seq{
        static_cast<uint32_t>(seed),
        static_cast<uint32_t>(seed >> 32),
        static_cast<uint32_t>(index),
        static_cast<uint32_t>(index >> 32),
    };
    std::mt19937_64 engine(seq);
    double u_theta = std::generate_canonical<double, 53>(engine);
    double u_phi = std::generate_canonical<double, 53>(engine);
    // generate_canonical may round up to exactly 1.0.
    if (u_phi >= 1.0) {
        u_phi = 0.0;
    }
    return {std::numbers::pi * std::min(u_theta, 1.0), 2 * std::numbers::pi * u_phi};
}

std::vector<InitialState> sample_initial_states(int count, uint64_t seed) {
    require_positive(count, "count");
    std::vector<InitialState> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; i++) {
        out.push_back(sample_initial_state(seed, static_cast<uint64_t>(i)));
    }
    return out;
}

AverageTrajectory average_schmidt(
    const CoinSequence &sequence, int steps, int samples, uint64_t seed, unsigned threads) {
    require_positive(steps, "steps");
    require_positive(samples, "samples");
    std::vector<int> tracked(static_cast<size_t>(steps));
    for (int t = 1; t <= steps; t++) {
        tracked[static_cast<size_t>(t - 1)] = t;
    }
    auto stats = sampled_statistics(std::span(&sequence, 1), tracked, samples, seed, threads);

    AverageTrajectory out;
    out.sequence_label = sequence.label();
    out.samples_per_point = samples;
    out.seed = seed;
    out.points.reserve(tracked.size());
    for (size_t m = 0; m < tracked.size(); m++) {
        out.points.push_back({tracked[m], stats[0][m].mean, stats[0][m].stddev()});
    }
    return out;
}

double FitResult::predict(int t) const {
    return slope * std::log(static_cast<double>(t)) + intercept;
}

FitResult log_fit(const AverageTrajectory &trajectory, int t_min, std::span<const int> extrapolate_to) {
    std::vector<double> xs;
    std::vector<double> ys;
    int t_lo = 0;
    int t_hi = 0;
    for (const auto &p : trajectory.points) {
        if (p.t >= t_min && p.t >= 1) {
            if (xs.empty()) {
                t_lo = p.t;
            }
            t_hi = std::max(t_hi, p.t);
            t_lo = std::min(t_lo, p.t);
            xs.push_back(std::log(static_cast<double>(p.t)));
            ys.push_back(p.mean_s);
        }
    }
    if (xs.size() < static_cast<size_t>(MIN_FIT_POINTS)) {
        throw std::invalid_argument(
            "logarithmic fit needs at least " + std::to_string(MIN_FIT_POINTS) + " points with t >= " +
            std::to_string(t_min) + ", found " + std::to_string(xs.size()));
    }
    const auto n = static_cast<double>(xs.size());
    double x_mean = 0;
    double y_mean = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        x_mean += xs[k];
        y_mean += ys[k];
    }
    x_mean /= n;
    y_mean /= n;
    double sxx = 0;
    double sxy = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        sxx += (xs[k] - x_mean) * (xs[k] - x_mean);
        sxy += (xs[k] - x_mean) * (ys[k] - y_mean);
    }
    if (sxx == 0) {
        throw std::invalid_argument("logarithmic fit needs at least two distinct steps");
    }

    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = y_mean - fit.slope * x_mean;
    fit.t_min = t_lo;
    fit.t_max = t_hi;
    fit.points_used = xs.size();
    double ss = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        double r = ys[k] - (fit.slope * xs[k] + fit.intercept);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / n);
    for (int t : extrapolate_to) {
        require_positive(t, "extrapolation step");
        double s = fit.predict(t);
        fit.extrapolation.push_back({t, s, clipped_ratio(s)});
    }
    return fit;
}

std::vector<double> theta_axis(int n) {
    if (n < 2) {
        throw std::invalid_argument("theta axis needs at least 2 points");
    }
    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) {
        out[static_cast<size_t>(i)] = std::numbers::pi * i / (n - 1);
    }
    return out;
}

std::vector<double> phi_axis(int n) {
    if (n < 2) {
        throw std::invalid_argument("phi axis needs at least 2 points");
    }
    std::vector<double> out(static_cast<size_t>(n));
    for (int j = 0; j < n; j++) {
        out[static_cast<size_t>(j)] = 2 * std::numbers::pi * j / n;
    }
    return out;
}

GridResult grid_schmidt(const CoinSequence &sequence, int t, int theta_steps, int phi_steps, unsigned threads) {
    require_positive(t, "t");
    GridResult g;
    g.sequence_label = sequence.label();
    g.t = t;
    g.theta_axis = theta_axis(theta_steps);
    g.phi_axis = phi_axis(phi_steps);
    g.values.resize(g.theta_axis.size() * g.phi_axis.size());
    parallel_for(g.values.size(), threads, [&](size_t cell) {
        size_t i = cell / g.phi_axis.size();
        size_t j = cell % g.phi_axis.size();
        WalkerState s = WalkerState::prepare({g.theta_axis[i], g.phi_axis[j]}, t);
        for (int step = 1; step <= t; step++) {
            s.step(sequence.coin_at(step));
        }
        g.values[cell] = schmidt_norm(reduced_density(s));
    });
    return g;
}

ParrondoReport parrondo_check(
    const CoinSequence &combined, const CoinSequence &a, const CoinSequence &b, int t, int samples, uint64_t seed,
    unsigned threads) {
    require_positive(t, "t");
    if (a.primitive_period() != 1 || b.primitive_period() != 1) {
        throw std::invalid_argument(
            "parrondo check compares against single-coin sequences, got '" + a.label() + "' and '" + b.label() +
            "'");
    }
    std::vector<CoinSequence> seqs{combined, a, b};
    std::vector<int> tracked{t};
    auto stats = sampled_statistics(seqs, tracked, samples, seed, threads);

    ParrondoReport r;
    r.combined_label = combined.label();
    r.a_label = a.label();
    r.b_label = b.label();
    r.t = t;
    r.samples = samples;
    r.seed = seed;
    r.mean_combined = stats[0][0].mean;
    r.mean_a = stats[1][0].mean;
    r.mean_b = stats[2][0].mean;
    r.margin_over_a = r.mean_combined - r.mean_a;
    r.margin_over_b = r.mean_combined - r.mean_b;
    r.parrondo = r.margin_over_a > 0 && r.margin_over_b > 0;
    return r;
}

double PhaseCertificate::worst() const {
    double w = 0;
    for (double d : max_deviation) {
        w = std::max(w, d);
    }
    return w;
}

bool PhaseCertificate::certified(double tolerance) const {
    return worst() < tolerance;
}

PhaseCertificate phase_independence_certificate(
    const CoinSequence &sequence, int t_max, int theta_samples, int phi_samples, unsigned threads) {
    require_positive(t_max, "t_max");
    auto thetas = theta_axis(theta_samples);
    auto phis = phi_axis(phi_samples);
    const auto steps = static_cast<size_t>(t_max);

    // Per theta row: deviation of every phi column from the phi_0 column, per step.
    std::vector<std::vector<double>> row_dev(thetas.size(), std::vector<double>(steps, 0.0));
    parallel_for(thetas.size(), threads, [&](size_t i) {
        std::vector<double> reference = schmidt_series({thetas[i], phis[0]}, sequence, t_max);
        for (size_t j = 1; j < phis.size(); j++) {
            std::vector<double> series = schmidt_series({thetas[i], phis[j]}, sequence, t_max);
            for (size_t k = 0; k < steps; k++) {
                row_dev[i][k] = std::max(row_dev[i][k], std::abs(series[k] - reference[k]));
            }
        }
    });

    PhaseCertificate cert;
    cert.sequence_label = sequence.label();
    cert.max_deviation.assign(steps, 0.0);
    for (const auto &row : row_dev) {
        for (size_t k = 0; k < steps; k++) {
            cert.max_deviation[k] = std::max(cert.max_deviation[k], row[k]);
        }
    }
    return cert;
}

ComparisonTable compare_sequences(
    std::span<const CoinSequence> candidates, std::span<const int> t_list, int samples, uint64_t seed,
    unsigned threads) {
    if (candidates.empty()) {
        throw std::invalid_argument("need at least one candidate sequence");
    }
    if (t_list.empty()) {
        throw std::invalid_argument("need at least one step to compare at");
    }
    std::vector<int> tracked(t_list.begin(), t_list.end());
    std::sort(tracked.begin(), tracked.end());
    tracked.erase(std::unique(tracked.begin(), tracked.end()), tracked.end());
    require_positive(tracked.front(), "t");
    auto stats = sampled_statistics(candidates, tracked, samples, seed, threads);

    ComparisonTable table;
    table.samples = samples;
    table.seed = seed;
    for (size_t m = 0; m < tracked.size(); m++) {
        std::vector<ComparisonRow> rows;
        for (size_t k = 0; k < candidates.size(); k++) {
            double mean = stats[k][m].mean;
            rows.push_back({candidates[k].label(), tracked[m], 0, mean, stats[k][m].stddev(), clipped_ratio(mean)});
        }
        std::sort(rows.begin(), rows.end(), [](const ComparisonRow &x, const ComparisonRow &y) {
            double kx = reported_value(x.mean_s);
            double ky = reported_value(y.mean_s);
            if (kx != ky) {
                return kx > ky;
            }
            return x.sequence_label < y.sequence_label;
        });
        for (size_t r = 0; r < rows.size(); r++) {
            rows[r].rank = static_cast<int>(r + 1);
            table.rows.push_back(std::move(rows[r]));
        }
    }
    return table;
}

ComparisonTable rank_sequences(
    std::span<const CoinSequence> candidates, int t, int samples, uint64_t seed, unsigned threads) {
    return compare_sequences(candidates, std::span(&t, 1), samples, seed, threads);
}

}  // namespace qwalk
