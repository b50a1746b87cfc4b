// Copyright 2026 dqmland authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dqmland {

/// Fixed-width binary solution vector. Variable i is stored at bit i of a
/// 64-bit word, so the integer value of a bitstring is sum(b_i * 2^i) and
/// ascending integer order starts from the all-zero string. The text form
/// writes variable 0 first: "1000" is the string with only variable 0 set.
class Bitstring {
 public:
    static constexpr int kMaxSize = 64;

    Bitstring() = default;

    Bitstring(std::uint64_t word, int size) : word_(word), size_(size) {
        if (size < 0 || size > kMaxSize) {
            throw std::invalid_argument("bitstring size must be in [0, 64]");
        }
        if (size < kMaxSize) {
            word_ &= (std::uint64_t{1} << size) - 1;
        }
    }

    static Bitstring zeros(int size) { return Bitstring(0, size); }

    static Bitstring parse(std::string_view text) {
        if (text.size() > static_cast<std::size_t>(kMaxSize)) {
            throw std::invalid_argument("bitstring longer than 64 variables");
        }
        std::uint64_t word = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1') {
                word |= std::uint64_t{1} << i;
            } else if (text[i] != '0') {
                throw std::invalid_argument("bitstring may contain only '0' and '1'");
            }
        }
        return Bitstring(word, static_cast<int>(text.size()));
    }

    int size() const { return size_; }
    std::uint64_t word() const { return word_; }

    bool bit(int i) const {
        check_index(i);
        return (word_ >> i) & 1u;
    }

    Bitstring with_flip(int i) const {
        check_index(i);
        return Bitstring(word_ ^ (std::uint64_t{1} << i), size_);
    }

    int popcount() const { return __builtin_popcountll(word_); }

    /// Contiguous slice [offset, offset + length) as its own bitstring.
    Bitstring slice(int offset, int length) const {
        if (offset < 0 || length < 0 || offset + length > size_) {
            throw std::invalid_argument("bitstring slice out of range");
        }
        return Bitstring(word_ >> offset, length);
    }

    std::string str() const {
        std::string out(static_cast<std::size_t>(size_), '0');
        for (int i = 0; i < size_; ++i) {
            if (bit(i)) out[static_cast<std::size_t>(i)] = '1';
        }
        return out;
    }

    friend bool operator==(const Bitstring&, const Bitstring&) = default;
    friend auto operator<=>(const Bitstring& a, const Bitstring& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.word_ <=> b.word_;
    }

 private:
    void check_index(int i) const {
        if (i < 0 || i >= size_) {
            throw std::invalid_argument("bit index " + std::to_string(i) +
                                        " out of range for size " + std::to_string(size_));
        }
    }

    std::uint64_t word_ = 0;
    int size_ = 0;
};

}  // namespace dqmland
