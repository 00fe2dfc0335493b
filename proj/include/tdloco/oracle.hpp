#pragma once

// Brute-force ground truth for small lengths. Nothing here uses the
// cardinality recursion or the index formula.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tdloco/symbols.hpp"

namespace tdloco::oracle {

inline constexpr int kMaxLength = 10;

// Visits every length-m GF(4) word without a^2 0 a^2 in lexicographic order.
// Words are produced by an odometer over all 4^m words with substring
// rejection. Throws std::invalid_argument unless 1 <= m <= kMaxLength.
void for_each_word(int m, const std::function<void(std::span<const Gf4Symbol>)>& visit);

std::vector<std::vector<Gf4Symbol>> enumerate(int m);
std::uint64_t count(int m);

// Zero-based position of word in the sorted list. Throws
// std::invalid_argument if the word is not in the list.
std::uint64_t rank(std::span<const Gf4Symbol> word,
                   std::span<const std::vector<Gf4Symbol>> sorted);
std::uint64_t rank(std::span<const Gf4Symbol> word);

struct GroupCounts {
  std::uint64_t starts_low = 0;      // first symbol in {0, 1, a}
  std::uint64_t starts_a2_nz = 0;    // a^2 followed by a nonzero symbol
  std::uint64_t starts_a2_zero = 0;  // a^2 0, then anything allowed
  std::uint64_t total() const { return starts_low + starts_a2_nz + starts_a2_zero; }
};

// Throws std::invalid_argument unless 4 <= m <= kMaxLength.
GroupCounts group_counts(int m);

}  // namespace tdloco::oracle
