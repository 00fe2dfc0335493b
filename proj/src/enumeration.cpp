#include "tdloco/enumeration.hpp"

#include <stdexcept>

namespace tdloco {

namespace {

std::vector<BigInt> cardinality_table(int m) {
  std::vector<BigInt> n(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    switch (i) {
      case 0: n[i] = 1; break;
      case 1: n[i] = 4; break;
      // 4*4 - 1 + 3*(1/3); the fractional N(-1) never enters integer math.
      case 2: n[i] = 16; break;
      default: n[i] = 4 * n[i - 1] - n[i - 2] + 3 * n[i - 3];
    }
  }
  return n;
}

int floor_log2(const BigInt& v) {
  return static_cast<int>(boost::multiprecision::msb(v));
}

}  // namespace

BigInt cardinality(int m) {
  if (m < 0) throw std::invalid_argument("cardinality: m must be >= 0");
  return cardinality_table(m).back();
}

BigInt clocked_cardinality(int m) {
  if (m < 1) throw std::invalid_argument("clocked_cardinality: m must be >= 1");
  return cardinality(m) - 2;
}

int message_length(int m) {
  if (m < 2) throw std::invalid_argument("message_length: m must be >= 2");
  return floor_log2(clocked_cardinality(m));
}

int k_eff(int m) {
  if (m < 1) throw std::invalid_argument("k_eff: m must be >= 1");
  return 2 * m - 1;
}

Rational rate(int m) {
  return Rational(message_length(m), m + 1) + 1;
}

Rational normalized_rate(int m) { return rate(m) / 3; }

std::string format_fixed(const Rational& value, int places) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = value < 0;
  const Rational mag = negative ? Rational(-value) : value;
  // round(|v| * 10^places) with halves going up
  BigInt num = numerator(mag) * scale * 2 + denominator(mag);
  BigInt scaled = num / (denominator(mag) * 2);
  std::string digits = scaled.str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out = negative && scaled != 0 ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return out;
}

CodeParams::CodeParams(int m) : m_(m) {
  if (m < 2) throw std::invalid_argument("CodeParams: m must be >= 2");
  card_ = cardinality_table(m);
  s_c_ = floor_log2(card_[m] - 2);
  // inner_sum(i) = -N(i-1) - inner_sum(i-2), empty for i <= 0
  inner_sum_.resize(m);
  for (int i = 1; i < m; ++i) {
    inner_sum_[i] = -card_[i - 1];
    if (i >= 2) inner_sum_[i] -= inner_sum_[i - 2];
  }
}

const BigInt& CodeParams::card(int i) const {
  if (i < 0 || i > m_) throw std::out_of_range("CodeParams::card index");
  return card_[i];
}

const BigInt& CodeParams::inner_sum(int i) const {
  if (i < 0 || i >= m_) throw std::out_of_range("CodeParams::inner_sum index");
  return inner_sum_[i];
}

}  // namespace tdloco
