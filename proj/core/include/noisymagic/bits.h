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

#ifndef NOISYMAGIC_BITS_H
#define NOISYMAGIC_BITS_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace noisymagic {

inline size_t words_for_bits(size_t num_bits) {
    return (num_bits + 63) / 64;
}

/// Fixed-length bit string packed into 64-bit words.
///
/// Bit k lives in word k / 64 at position k % 64. Padding bits past size()
/// are always zero, so word-level comparisons and popcounts are exact.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits) : num_bits_(num_bits), words_(words_for_bits(num_bits), 0) {
    }

    /// Parses a string of '0'/'1' characters; character k becomes bit k.
    static BitVec from_string(std::string_view text);

    size_t size() const {
        return num_bits_;
    }
    bool operator[](size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    BitVec &operator^=(const BitVec &other);
    bool operator==(const BitVec &other) const = default;

    size_t popcount() const;
    bool any() const;
    /// Parity of the bitwise AND.
    bool dot(const BitVec &other) const;

    std::span<uint64_t> words() {
        return words_;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

    /// Character k is '0' or '1' according to bit k.
    std::string str() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

BitVec operator^(BitVec a, const BitVec &b);

/// Rank over GF(2) of the given rows (all of equal length).
size_t gf2_rank(std::vector<BitVec> rows);

/// Reduced row-echelon form over GF(2). Zero rows are dropped, and the
/// remaining rows are ordered by pivot column.
std::vector<BitVec> gf2_rref(std::vector<BitVec> rows);

/// Index of the lowest set bit, or size() when the vector is zero.
size_t first_set_bit(const BitVec &v);

}  // namespace noisymagic

#endif
