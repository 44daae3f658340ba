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

#include "qwalk/entanglement.h"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "reference_walker.h"

using namespace qwalk;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double sqrt2 = std::numbers::sqrt2;

EntanglementRecord record_of(double pop0, Amplitude coherence) {
    EntanglementRecord r;
    r.pop0 = pop0;
    r.pop1 = 1 - pop0;
    r.coherence = coherence;
    complete_spectrum(r);
    return r;
}

void check_record_invariants(const EntanglementRecord &r) {
    ASSERT_NEAR(r.pop0 + r.pop1, 1, 1e-12);
    ASSERT_NEAR(r.eigen_minus + r.eigen_plus, 1, 1e-12);
    ASSERT_GE(r.eigen_minus, 0);
    ASSERT_LE(r.eigen_plus, 1);
    ASSERT_GE(r.schmidt_norm, 1 - 1e-12);
    ASSERT_LE(r.schmidt_norm, sqrt2 + 1e-12);
    double bloch_len = std::hypot(r.bloch[0], r.bloch[1], r.bloch[2]);
    ASSERT_LE(bloch_len, 0.5 + 1e-12);
    ASSERT_NEAR(r.eigen_plus, 0.5 + bloch_len, 1e-12);
    ASSERT_NEAR(r.eigen_minus, 0.5 - bloch_len, 1e-12);
    // Squared Schmidt coefficients sum to one.
    double lp = std::sqrt(r.eigen_plus);
    double lm = std::sqrt(r.eigen_minus);
    ASSERT_NEAR(lp * lp + lm * lm, 1, 1e-12);
}

}  // namespace

TEST(entanglement, reduced_density_product_state) {
    auto r = reduced_density(WalkerState::prepare({0, 0}, 1));
    EXPECT_EQ(r.pop0, 1);
    EXPECT_EQ(r.pop1, 0);
    EXPECT_EQ(r.coherence, Amplitude(0));
    EXPECT_EQ(r.step, 0);
}

TEST(entanglement, reduced_density_disjoint_support) {
    // H step from the pole: 1/sqrt2 |1, 0_c> + 1/sqrt2 |-1, 1_c>.
    auto states = evolve({0, 0}, CoinSequence::parse("H"), 1);
    auto r = analyze(states[0]);
    EXPECT_NEAR(r.pop0, 0.5, 1e-15);
    EXPECT_NEAR(r.pop1, 0.5, 1e-15);
    EXPECT_EQ(r.coherence, Amplitude(0));
    EXPECT_NEAR(r.schmidt_norm, sqrt2, 1e-15);
    EXPECT_EQ(r.step, 1);
}

TEST(entanglement, xxh_step_four_coherence) {
    // By hand, position 0 holds amp0 = -b/sqrt2, amp1 = a/sqrt2 and every other
    // site has a single coin component, so coherence = -b conj(a) / 2.
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 20; k++) {
        InitialState init{pi * u(rng), 2 * pi * u(rng)};
        auto r = analyze(evolve(init, CoinSequence::parse("XXH"), 4).back());
        Amplitude expected = -std::polar(std::sin(init.theta) / 4, init.phi);
        EXPECT_NEAR(r.coherence.real(), expected.real(), 1e-14);
        EXPECT_NEAR(r.coherence.imag(), expected.imag(), 1e-14);
        EXPECT_NEAR(std::abs(r.coherence), std::sin(init.theta) / 4, 1e-14);
        EXPECT_NEAR(r.pop0, 0.5, 1e-14);
    }
}

TEST(entanglement, schmidt_norm_reference_points) {
    EXPECT_NEAR(record_of(0.5, 0).schmidt_norm, sqrt2, 1e-15);
    EXPECT_NEAR(record_of(1, 0).schmidt_norm, 1, 1e-15);
    EXPECT_NEAR(record_of(0, 0).schmidt_norm, 1, 1e-15);
    auto r = record_of(0.5, 0.25);
    EXPECT_NEAR(r.eigen_plus, 0.75, 1e-15);
    EXPECT_NEAR(r.eigen_minus, 0.25, 1e-15);
    EXPECT_NEAR(r.schmidt_norm, 0.5 + std::sqrt(3.0) / 2, 1e-15);
    EXPECT_NEAR(schmidt_norm(r), r.schmidt_norm, 0);
}

TEST(entanglement, bloch_vector_components) {
    auto r = record_of(0.7, Amplitude(0.1, -0.2));
    EXPECT_DOUBLE_EQ(r.bloch[0], 0.1);
    EXPECT_DOUBLE_EQ(r.bloch[1], -0.2);
    EXPECT_NEAR(r.bloch[2], 0.2, 1e-15);
}

TEST(entanglement, clamps_radicand_noise) {
    // Slightly super-normalized coherence must not produce NaN.
    auto r = record_of(0.5, 0.5 + 1e-16);
    EXPECT_FALSE(std::isnan(r.schmidt_norm));
    EXPECT_NEAR(r.schmidt_norm, 1, 1e-7);
    EXPECT_GE(r.eigen_minus, 0);
}

TEST(entanglement, invariants_along_random_walks) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 30; trial++) {
        std::vector<CoinName> pattern;
        for (size_t k = 0, n = 1 + rng() % 4; k < n; k++) {
            pattern.push_back(ALL_COIN_NAMES[rng() % 4]);
        }
        CoinSequence seq(pattern);
        InitialState init{pi * u(rng), 2 * pi * u(rng)};
        oracle::ReferenceWalker ref(init.theta, init.phi);
        for (const auto &r : trace_entanglement(init, seq, 30)) {
            check_record_invariants(r);
            ref.step(seq.coin_at(r.step));
            ASSERT_NEAR(r.schmidt_norm, ref.schmidt_norm(), 1e-12);
        }
    }
}

TEST(entanglement, closed_form_table) {
    InitialState init{1.1, 0.7};
    double s1 = (std::sqrt(1 - std::cos(1.1)) + std::sqrt(1 + std::cos(1.1))) / sqrt2;
    EXPECT_DOUBLE_EQ(closed_form_schmidt(ClosedFormFamily::XXH, 1, init), s1);
    EXPECT_DOUBLE_EQ(closed_form_schmidt(ClosedFormFamily::XXH, 2, init), s1);
    EXPECT_DOUBLE_EQ(closed_form_schmidt(ClosedFormFamily::XXH, 3, init), sqrt2);
    EXPECT_DOUBLE_EQ(closed_form_schmidt(ClosedFormFamily::XXH, 5, init), sqrt2);
    EXPECT_NEAR(closed_form_schmidt(ClosedFormFamily::SingleH, 1, {pi / 2, 0}), 1, 1e-15);
    EXPECT_NEAR(closed_form_schmidt(ClosedFormFamily::SingleH, 1, {0, 0}), sqrt2, 1e-15);
    EXPECT_DOUBLE_EQ(
        closed_form_schmidt(ClosedFormFamily::SingleF, 1, init), closed_form_schmidt(ClosedFormFamily::SingleM, 1, init));
    // 6-step value at theta = pi/2: (sqrt5 + sqrt3) / (2 sqrt2).
    EXPECT_NEAR(
        closed_form_schmidt(ClosedFormFamily::XXH, 6, {pi / 2, 0.3}), (std::sqrt(5.0) + std::sqrt(3.0)) / (2 * sqrt2),
        1e-15);
    EXPECT_THROW(closed_form_schmidt(ClosedFormFamily::XXH, 7, init), std::out_of_range);
    EXPECT_THROW(closed_form_schmidt(ClosedFormFamily::XXH, 0, init), std::out_of_range);
    EXPECT_THROW(closed_form_schmidt(ClosedFormFamily::SingleH, 2, init), std::out_of_range);
}

TEST(entanglement, simulation_matches_closed_forms) {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 200; k++) {
        InitialState init{pi * u(rng), 2 * pi * u(rng)};
        for (const char *label : {"XXH", "XXF", "XXM"}) {
            auto series = schmidt_series(init, CoinSequence::parse(label), 6);
            for (int t = 1; t <= 6; t++) {
                ASSERT_NEAR(series[static_cast<size_t>(t - 1)], closed_form_schmidt(ClosedFormFamily::XXH, t, init), 1e-10)
                    << label << " t=" << t;
            }
        }
        EXPECT_NEAR(schmidt_series(init, CoinSequence::parse("H"), 1)[0], closed_form_schmidt(ClosedFormFamily::SingleH, 1, init), 1e-10);
        EXPECT_NEAR(schmidt_series(init, CoinSequence::parse("F"), 1)[0], closed_form_schmidt(ClosedFormFamily::SingleF, 1, init), 1e-10);
        EXPECT_NEAR(schmidt_series(init, CoinSequence::parse("M"), 1)[0], closed_form_schmidt(ClosedFormFamily::SingleM, 1, init), 1e-10);
    }
}

TEST(entanglement, single_step_examples) {
    auto h = trace_entanglement({0, 0}, CoinSequence::parse("H"), 1);
    EXPECT_NEAR(h[0].schmidt_norm, sqrt2, 1e-15);
    EXPECT_NEAR(h[0].pop0, 0.5, 1e-15);
    EXPECT_EQ(h[0].coherence, Amplitude(0));

    // X twice: step-2 Schmidt norm equals step-1.
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 20; k++) {
        auto s = schmidt_series({pi * u(rng), 2 * pi * u(rng)}, CoinSequence::parse("X"), 2);
        EXPECT_NEAR(s[0], s[1], 1e-14);
    }

    auto xxh = schmidt_series({pi / 2, 0.3}, CoinSequence::parse("XXH"), 6);
    EXPECT_NEAR(xxh[5], (std::sqrt(5.0) + std::sqrt(3.0)) / (2 * sqrt2), 1e-12);
    EXPECT_NEAR(xxh[5], 1.4029, 5e-5);
}

TEST(entanglement, phase_shift_relation_between_single_coin_walks) {
    // Simulated relation for all t: S_F(phi) = S_H(phi + pi/2), S_M(phi) = S_H(phi - pi/2).
    // At t = 1, 2 the mirrored shifts also hold because S_H depends on |cos phi| there.
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> u(0, 1);
    for (int k = 0; k < 10; k++) {
        double theta = pi * u(rng);
        double phi = 2 * pi * u(rng);
        auto f = schmidt_series(InitialState::make(theta, phi), CoinSequence::parse("F"), 50);
        auto m = schmidt_series(InitialState::make(theta, phi), CoinSequence::parse("M"), 50);
        auto h_plus = schmidt_series(InitialState::make(theta, phi + pi / 2), CoinSequence::parse("H"), 50);
        auto h_minus = schmidt_series(InitialState::make(theta, phi - pi / 2), CoinSequence::parse("H"), 50);
        for (size_t t = 0; t < 50; t++) {
            ASSERT_NEAR(f[t], h_plus[t], 1e-10) << "t=" << t + 1;
            ASSERT_NEAR(m[t], h_minus[t], 1e-10) << "t=" << t + 1;
        }
        for (size_t t = 0; t < 2; t++) {
            ASSERT_NEAR(f[t], h_minus[t], 1e-10);
            ASSERT_NEAR(m[t], h_plus[t], 1e-10);
        }
    }
}
