#pragma once

// Lexicographic index <-> codeword mapping and the message encoder/decoder.
//
// Codewords are stored most significant symbol first: word[0] is c_{m-1},
// word[m-1] is c_0. The index of a word is its zero-based rank among all
// length-m words avoiding a^2 0 a^2 in lexicographic order:
//
//   g(c) = sum_i [ a_i N(i) + [a_{i+1} = 3 and a_i != 0] inner_sum(i) ]
//
// with a_i the level of c_i and a_m = 0.

#include <cstdint>
#include <span>
#include <vector>

#include "tdloco/enumeration.hpp"
#include "tdloco/symbols.hpp"

namespace tdloco {

using Codeword = std::vector<Gf4Symbol>;
using Bits = std::vector<std::uint8_t>;  // one 0/1 value per element

// Throws std::invalid_argument on a length mismatch and ConstraintError if
// the word contains the forbidden pattern.
BigInt index_of(std::span<const Gf4Symbol> word, const CodeParams& params);

// Inverse of index_of on the self-clocked range 1 <= g <= N(m) - 2.
// Throws RangeError outside it.
Codeword codeword_of(const BigInt& g, const CodeParams& params);

// The message is read big-endian and mapped to index value + 1, so 0^m is
// skipped and (a^2)^m (index N(m)-1 > 2^s_c) is never reached.
// Throws std::invalid_argument unless the message has exactly s_c bits.
Codeword encode_message(std::span<const std::uint8_t> message,
                        const CodeParams& params);

// Throws ConstraintError ("not a codeword") or RangeError ("index out of
// message range") for words that no message encodes to.
Bits decode_codeword(std::span<const Gf4Symbol> word, const CodeParams& params);

bool is_clocked(std::span<const Gf4Symbol> word);

// Big-endian conversions used by the message path.
BigInt bits_to_integer(std::span<const std::uint8_t> bits);
Bits integer_to_bits(const BigInt& value, int width);

}  // namespace tdloco
