#include "tdloco/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdloco::oracle {

namespace {

void check_range(int m, int lo) {
  if (m < lo || m > kMaxLength) {
    throw std::invalid_argument("oracle length " + std::to_string(m) +
                                " outside [" + std::to_string(lo) + ", " +
                                std::to_string(kMaxLength) + "]");
  }
}

}  // namespace

void for_each_word(int m, const std::function<void(std::span<const Gf4Symbol>)>& visit) {
  check_range(m, 1);
  std::vector<int> digits(m, 0);
  std::vector<Gf4Symbol> word(m);
  while (true) {
    for (int k = 0; k < m; ++k) word[k] = Gf4Symbol(digits[k]);
    if (!contains_forbidden(word)) visit(word);
    int k = m - 1;
    while (k >= 0 && digits[k] == 3) digits[k--] = 0;
    if (k < 0) return;
    ++digits[k];
  }
}

std::vector<std::vector<Gf4Symbol>> enumerate(int m) {
  std::vector<std::vector<Gf4Symbol>> out;
  for_each_word(m, [&](std::span<const Gf4Symbol> w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

std::uint64_t count(int m) {
  std::uint64_t n = 0;
  for_each_word(m, [&](std::span<const Gf4Symbol>) { ++n; });
  return n;
}

std::uint64_t rank(std::span<const Gf4Symbol> word,
                   std::span<const std::vector<Gf4Symbol>> sorted) {
  const auto less = [](const std::vector<Gf4Symbol>& a, std::span<const Gf4Symbol> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), word, less);
  if (it == sorted.end() || !std::equal(it->begin(), it->end(), word.begin(), word.end())) {
    throw std::invalid_argument("word is not a constrained word: " + format_symbols(word));
  }
  return static_cast<std::uint64_t>(it - sorted.begin());
}

std::uint64_t rank(std::span<const Gf4Symbol> word) {
  const auto all = enumerate(static_cast<int>(word.size()));
  return rank(word, all);
}

GroupCounts group_counts(int m) {
  check_range(m, 4);
  GroupCounts g;
  for_each_word(m, [&](std::span<const Gf4Symbol> w) {
    if (w[0] != Gf4Symbol::alpha2()) {
      ++g.starts_low;
    } else if (w[1] != Gf4Symbol::zero()) {
      ++g.starts_a2_nz;
    } else {
      ++g.starts_a2_zero;
    }
  });
  return g;
}

}  // namespace tdloco::oracle
