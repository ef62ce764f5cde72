// Copyright 2026 The noisymagic Authors
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

#include "noisymagic/bits.h"

#include <stdexcept>
#include <utility>

namespace noisymagic {

BitVec BitVec::from_string(std::string_view text) {
    BitVec result(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            result.set(k, true);
        } else if (text[k] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return result;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec length mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVec operator^(BitVec a, const BitVec &b) {
    a ^= b;
    return a;
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVec::dot(const BitVec &other) const {
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

std::string BitVec::str() const {
    std::string out(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if ((*this)[k]) {
            out[k] = '1';
        }
    }
    return out;
}

size_t first_set_bit(const BitVec &v) {
    auto words = v.words();
    for (size_t w = 0; w < words.size(); w++) {
        if (words[w]) {
            return w * 64 + std::countr_zero(words[w]);
        }
    }
    return v.size();
}

std::vector<BitVec> gf2_rref(std::vector<BitVec> rows) {
    if (rows.empty()) {
        return rows;
    }
    size_t cols = rows[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows.size(); c++) {
        size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][c]) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r][c]) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }
    rows.resize(rank);
    return rows;
}

size_t gf2_rank(std::vector<BitVec> rows) {
    return gf2_rref(std::move(rows)).size();
}

}  // namespace noisymagic
