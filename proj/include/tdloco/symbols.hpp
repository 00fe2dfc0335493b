#pragma once

// Code alphabets and the mappings between them.
//
// GF(4) = {0, 1, a, a^2} carries the constrained code. Every GF(4) symbol
// stands for a pair of GF(8) symbols; one free selection bit picks the pair
// member. A GF(8) symbol is written as one 3-bit grid column.
//
// Symbols are identified by their integer level: 0 for the zero element and
// (power + 1) for a power of the primitive element, so the unit is level 1.
// Ordering by level is the lexicographic symbol order 0 < 1 < a < a^2.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tdloco {

class Gf4Symbol {
 public:
  constexpr Gf4Symbol() = default;
  // Throws std::invalid_argument unless 0 <= level <= 3.
  explicit Gf4Symbol(int level);

  constexpr int level() const { return level_; }

  static constexpr Gf4Symbol zero() { return Gf4Symbol(Raw{0}); }
  static constexpr Gf4Symbol one() { return Gf4Symbol(Raw{1}); }
  static constexpr Gf4Symbol alpha() { return Gf4Symbol(Raw{2}); }
  static constexpr Gf4Symbol alpha2() { return Gf4Symbol(Raw{3}); }

  friend constexpr auto operator<=>(Gf4Symbol, Gf4Symbol) = default;

 private:
  struct Raw {
    std::uint8_t v;
  };
  constexpr explicit Gf4Symbol(Raw r) : level_(r.v) {}
  std::uint8_t level_ = 0;
};

class Gf8Symbol {
 public:
  constexpr Gf8Symbol() = default;
  // Throws std::invalid_argument unless 0 <= level <= 7.
  explicit Gf8Symbol(int level);

  constexpr int level() const { return level_; }

  static constexpr Gf8Symbol zero() { return Gf8Symbol(Raw{0}); }
  static constexpr Gf8Symbol one() { return Gf8Symbol(Raw{1}); }
  // beta^k for k = 1..6; throws std::invalid_argument otherwise.
  static Gf8Symbol beta_power(int k);

  friend constexpr auto operator<=>(Gf8Symbol, Gf8Symbol) = default;

 private:
  struct Raw {
    std::uint8_t v;
  };
  constexpr explicit Gf8Symbol(Raw r) : level_(r.v) {}
  std::uint8_t level_ = 0;
};

constexpr int level_of(Gf4Symbol c) { return c.level(); }
constexpr int level_of(Gf8Symbol s) { return s.level(); }

/// Three cells of one grid column, top track first.
struct Column {
  std::array<std::uint8_t, 3> bits{};

  constexpr std::uint8_t top() const { return bits[0]; }
  constexpr std::uint8_t middle() const { return bits[1]; }
  constexpr std::uint8_t bottom() const { return bits[2]; }

  friend constexpr bool operator==(const Column&, const Column&) = default;
};

// Big-endian 3-bit expansion of the symbol level (top cell = MSB).
Column column_of(Gf8Symbol s);
// Throws std::invalid_argument if a cell is not 0 or 1.
Gf8Symbol symbol_of(const Column& col);

/// GF(4) projection of a GF(8) symbol plus the bit that selects it within
/// its pair. Pairs (first, second): {b, b^4} -> 0, {1, b^5} -> 1,
/// {b^2, b^3} -> a, {0, b^6} -> a^2. Selection bit 0 picks the first.
struct Demapped {
  Gf4Symbol symbol;
  std::uint8_t selection = 0;

  friend constexpr bool operator==(const Demapped&, const Demapped&) = default;
};

Demapped demap(Gf8Symbol s);
// Throws std::invalid_argument if selection is not 0 or 1.
Gf8Symbol remap(Gf4Symbol c, int selection);

using Pattern3 = std::array<int, 3>;

/// Forbidden length-3 patterns, as symbol levels.
struct ForbiddenSets {
  // {0 b 0, b^6 b^4 b^6}
  static constexpr std::array<Pattern3, 2> q8{{{0, 2, 0}, {7, 5, 7}}};
  // {a^2 0 a^2}
  static constexpr Pattern3 q4{3, 0, 3};
};

bool contains_forbidden(std::span<const Gf4Symbol> seq);

// Display forms: "0","1","a","a2" and "0","1","b1".."b6".
std::string to_string(Gf4Symbol c);
std::string to_string(Gf8Symbol s);
// Throw ParseError on unknown tokens.
Gf4Symbol parse_gf4(std::string_view token);
Gf8Symbol parse_gf8(std::string_view token);

// Whitespace-separated symbol tokens.
std::string format_symbols(std::span<const Gf4Symbol> seq);
std::vector<Gf4Symbol> parse_symbols(std::string_view text);

}  // namespace tdloco
