#pragma once

// Cardinalities and derived parameters of the a^2 0 a^2-avoiding GF(4) code.
//
// N(m) counts length-m words with no a^2 0 a^2 substring:
//   N(0) = 1, N(1) = 4, N(2) = 16,
//   N(i) = 4 N(i-1) - N(i-2) + 3 N(i-3)   for i >= 3.
// All counts are exact; N(265) already has ~160 decimal digits.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tdloco {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt cardinality(int m);
// N(m) - 2: the all-zero and all-a^2 words are excluded for self-clocking.
BigInt clocked_cardinality(int m);
// floor(log2(N(m) - 2)) bits; requires m >= 2.
int message_length(int m);
// Longest run of identical symbols in a bridged stream: 2m - 1.
int k_eff(int m);

// s_c / (m+1) + 1 information bits per coded symbol, and that divided by 3.
Rational rate(int m);
Rational normalized_rate(int m);

// Decimal rendering of an exact rational, rounded half away from zero.
std::string format_fixed(const Rational& value, int places);

/// Per-length tables shared by the encoder and decoder. Immutable once
/// constructed.
class CodeParams {
 public:
  // Throws std::invalid_argument for m < 2 (the codec needs m >= 2).
  explicit CodeParams(int m);

  int m() const { return m_; }
  // N(i) for 0 <= i <= m.
  const BigInt& card(int i) const;
  // Correction added to a symbol's contribution when its left neighbour is
  // a^2 and it is nonzero: sum_{j>=0, i-2j>0} (-1)^(j+1) N(i-2j-1).
  // Never positive. Defined for 0 <= i < m.
  const BigInt& inner_sum(int i) const;
  int message_length() const { return s_c_; }
  // Number of selection bits per frame (one per codeword symbol + bridge).
  int selection_length() const { return m_ + 1; }
  int frame_bits() const { return s_c_ + m_ + 1; }

 private:
  int m_;
  int s_c_;
  std::vector<BigInt> card_;
  std::vector<BigInt> inner_sum_;
};

inline const BigInt& inner_sum(int i, const CodeParams& params) {
  return params.inner_sum(i);
}

}  // namespace tdloco
