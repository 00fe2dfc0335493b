#include "tdloco/codec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tdloco/errors.hpp"

namespace tdloco {

namespace {

constexpr int kAlpha2 = 3;

void check_length(std::size_t got, const CodeParams& params, const char* what) {
  if (got != static_cast<std::size_t>(params.m())) {
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(params.m()) + " symbols, got " +
                                std::to_string(got));
  }
}

}  // namespace

bool is_clocked(std::span<const Gf4Symbol> word) {
  if (word.empty()) return false;
  const auto first = word.front();
  if (first != Gf4Symbol::zero() && first != Gf4Symbol::alpha2()) return true;
  return !std::all_of(word.begin(), word.end(),
                      [first](Gf4Symbol s) { return s == first; });
}

BigInt index_of(std::span<const Gf4Symbol> word, const CodeParams& params) {
  check_length(word.size(), params, "index_of");
  if (contains_forbidden(word)) throw ConstraintError("not a codeword");
  const int m = params.m();
  BigInt g = 0;
  int left = 0;  // level of c_{i+1}; c_m is 0
  for (int pos = 0; pos < m; ++pos) {
    const int i = m - 1 - pos;
    const int a = word[pos].level();
    if (a != 0) {
      g += a * params.card(i);
      if (left == kAlpha2) g += params.inner_sum(i);
    }
    left = a;
  }
  return g;
}

Codeword codeword_of(const BigInt& g, const CodeParams& params) {
  const int m = params.m();
  if (g < 1 || g > params.card(m) - 2) {
    throw RangeError("index " + g.str() + " outside [1, N(m)-2]");
  }
  Codeword word;
  word.reserve(m);
  BigInt residual = g;
  int left = 0;
  for (int i = m - 1; i >= 0; --i) {
    // After an a^2, a nonzero symbol here skips fewer words than v * N(i):
    // shift the residual by -inner_sum(i) (>= 0) to compare on that scale.
    BigInt shifted = left == kAlpha2 ? residual - params.inner_sum(i) : residual;
    const BigInt& n = params.card(i);
    int v = 0;
    if (shifted >= n) {
      v = shifted >= 3 * n ? 3 : shifted >= 2 * n ? 2 : 1;
      residual = shifted - v * n;
    }
    word.push_back(Gf4Symbol(v));
    left = v;
  }
  return word;
}

BigInt bits_to_integer(std::span<const std::uint8_t> bits) {
  BigInt v = 0;
  for (auto b : bits) {
    if (b > 1) throw std::invalid_argument("bit value must be 0 or 1");
    v <<= 1;
    v += b;
  }
  return v;
}

Bits integer_to_bits(const BigInt& value, int width) {
  if (value < 0 || (value != 0 && static_cast<int>(boost::multiprecision::msb(value)) >= width)) {
    throw std::invalid_argument("value does not fit in " + std::to_string(width) + " bits");
  }
  Bits out(static_cast<std::size_t>(width), 0);
  for (int k = 0; k < width; ++k) {
    out[width - 1 - k] = boost::multiprecision::bit_test(value, k) ? 1 : 0;
  }
  return out;
}

Codeword encode_message(std::span<const std::uint8_t> message,
                        const CodeParams& params) {
  if (message.size() != static_cast<std::size_t>(params.message_length())) {
    throw std::invalid_argument("message must have " +
                                std::to_string(params.message_length()) +
                                " bits, got " + std::to_string(message.size()));
  }
  return codeword_of(bits_to_integer(message) + 1, params);
}

Bits decode_codeword(std::span<const Gf4Symbol> word, const CodeParams& params) {
  const BigInt g = index_of(word, params);
  const BigInt limit = BigInt(1) << params.message_length();
  if (g < 1 || g > limit) throw RangeError("index out of message range");
  return integer_to_bits(g - 1, params.message_length());
}

}  // namespace tdloco
