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

#ifndef QWALK_SEQUENCES_H
#define QWALK_SEQUENCES_H

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/coins.h"

namespace qwalk {

/// A deterministic periodic coin sequence. Step 1 uses pattern()[0], so
/// "XXH" applies X at steps 1 and 2, H at step 3, and then repeats.
class CoinSequence {
   public:
    /// Throws std::invalid_argument on an empty pattern.
    explicit CoinSequence(std::vector<CoinName> pattern);

    /// Grammar: one or more of [HFMXhfmx], optionally followed by "...".
    static CoinSequence parse(std::string_view label);

    const std::vector<CoinName> &pattern() const {
        return pattern_;
    }
    size_t period() const {
        return pattern_.size();
    }
    /// Length of the shortest block whose repetition generates the same stream ("HXHX" -> 2).
    size_t primitive_period() const;

    /// Canonical label: uppercase symbols without an ellipsis.
    std::string label() const;

    CoinName name_at(int step_index) const;
    /// Coin applied at 1-based `step_index`. Throws std::invalid_argument if step_index < 1.
    const CoinOperator &coin_at(int step_index) const;

    bool operator==(const CoinSequence &other) const {
        return pattern_ == other.pattern_;
    }

   private:
    std::vector<CoinName> pattern_;
    std::vector<CoinOperator> coins_;
};

inline constexpr int MAX_ENUMERATION_PERIOD = 6;

/// Every primitive pattern of length 1..max_period over `alphabet`, ordered
/// by length and then by alphabet position. Patterns that are repetitions of
/// a shorter block ("HH", "HXHX") are dropped since they generate the same
/// stream. Rotations are kept: the walk starts at step 1, so "HX" and "XH"
/// differ. Throws std::out_of_range if max_period > MAX_ENUMERATION_PERIOD.
std::vector<CoinSequence> enumerate_patterns(std::span<const CoinName> alphabet, int max_period);

}  // namespace qwalk

#endif
