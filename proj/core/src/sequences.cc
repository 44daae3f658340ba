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

#include "qwalk/sequences.h"

#include <algorithm>
#include <stdexcept>

namespace qwalk {

CoinSequence::CoinSequence(std::vector<CoinName> pattern) : pattern_(std::move(pattern)) {
    if (pattern_.empty()) {
        throw std::invalid_argument("coin sequence must contain at least one coin");
    }
    coins_.reserve(pattern_.size());
    for (CoinName n : pattern_) {
        coins_.push_back(named_coin(n));
    }
}

CoinSequence CoinSequence::parse(std::string_view label) {
    std::string_view body = label;
    if (body.ends_with("...")) {
        body.remove_suffix(3);
    }
    if (body.empty()) {
        throw std::invalid_argument("empty coin sequence '" + std::string(label) + "'");
    }
    std::vector<CoinName> pattern;
    pattern.reserve(body.size());
    for (char c : body) {
        try {
            pattern.push_back(parse_coin_name(c));
        } catch (const std::invalid_argument &) {
            throw std::invalid_argument(
                "illegal symbol '" + std::string(1, c) + "' in coin sequence '" + std::string(label) +
                "'; expected letters from H, F, M, X optionally followed by '...'");
        }
    }
    return CoinSequence(std::move(pattern));
}

size_t CoinSequence::primitive_period() const {
    size_t n = pattern_.size();
    for (size_t p = 1; p < n; p++) {
        if (n % p != 0) {
            continue;
        }
        bool repeats = true;
        for (size_t k = p; k < n && repeats; k++) {
            repeats = pattern_[k] == pattern_[k - p];
        }
        if (repeats) {
            return p;
        }
    }
    return n;
}

std::string CoinSequence::label() const {
    std::string out;
    out.reserve(pattern_.size());
    for (CoinName n : pattern_) {
        out.push_back(coin_symbol(n));
    }
    return out;
}

CoinName CoinSequence::name_at(int step_index) const {
    if (step_index < 1) {
        throw std::invalid_argument("step index is 1-based");
    }
    return pattern_[static_cast<size_t>(step_index - 1) % pattern_.size()];
}

const CoinOperator &CoinSequence::coin_at(int step_index) const {
    if (step_index < 1) {
        throw std::invalid_argument("step index is 1-based");
    }
    return coins_[static_cast<size_t>(step_index - 1) % coins_.size()];
}

std::vector<CoinSequence> enumerate_patterns(std::span<const CoinName> alphabet, int max_period) {
    if (max_period > MAX_ENUMERATION_PERIOD) {
        throw std::out_of_range(
            "max period " + std::to_string(max_period) + " exceeds the enumeration guard of " +
            std::to_string(MAX_ENUMERATION_PERIOD));
    }
    std::vector<CoinName> letters;
    for (CoinName n : alphabet) {
        if (std::find(letters.begin(), letters.end(), n) == letters.end()) {
            letters.push_back(n);
        }
    }
    std::vector<CoinSequence> out;
    if (letters.empty()) {
        return out;
    }
    for (int len = 1; len <= max_period; len++) {
        // Odometer over alphabet positions; the last digit varies fastest.
        std::vector<size_t> digits(static_cast<size_t>(len), 0);
        while (true) {
            std::vector<CoinName> pattern;
            pattern.reserve(digits.size());
            for (size_t d : digits) {
                pattern.push_back(letters[d]);
            }
            CoinSequence seq(std::move(pattern));
            if (seq.primitive_period() == seq.period()) {
                out.push_back(std::move(seq));
            }
            int k = len - 1;
            while (k >= 0 && ++digits[static_cast<size_t>(k)] == letters.size()) {
                digits[static_cast<size_t>(k)] = 0;
                k--;
            }
            if (k < 0) {
                break;
            }
        }
    }
    return out;
}

}  // namespace qwalk
