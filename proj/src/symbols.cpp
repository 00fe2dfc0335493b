#include "tdloco/symbols.hpp"

#include <sstream>
#include <stdexcept>

#include "tdloco/errors.hpp"

namespace tdloco {

namespace {

// kPairs[gf4 level][selection] = gf8 level
constexpr std::array<std::array<int, 2>, 4> kPairs{{
    {2, 5},  // {b, b^4}   -> 0
    {1, 6},  // {1, b^5}   -> 1
    {3, 4},  // {b^2, b^3} -> a
    {0, 7},  // {0, b^6}   -> a^2
}};

constexpr std::array<std::string_view, 4> kGf4Names{"0", "1", "a", "a2"};
constexpr std::array<std::string_view, 8> kGf8Names{"0",  "1",  "b1", "b2",
                                                    "b3", "b4", "b5", "b6"};

}  // namespace

Gf4Symbol::Gf4Symbol(int level) : level_(static_cast<std::uint8_t>(level)) {
  if (level < 0 || level > 3) {
    throw std::invalid_argument("GF(4) level out of range: " +
                                std::to_string(level));
  }
}

Gf8Symbol::Gf8Symbol(int level) : level_(static_cast<std::uint8_t>(level)) {
  if (level < 0 || level > 7) {
    throw std::invalid_argument("GF(8) level out of range: " +
                                std::to_string(level));
  }
}

Gf8Symbol Gf8Symbol::beta_power(int k) {
  if (k < 1 || k > 6) {
    throw std::invalid_argument("beta power must be in 1..6");
  }
  return Gf8Symbol(k + 1);
}

Column column_of(Gf8Symbol s) {
  const int v = s.level();
  return Column{{static_cast<std::uint8_t>((v >> 2) & 1),
                 static_cast<std::uint8_t>((v >> 1) & 1),
                 static_cast<std::uint8_t>(v & 1)}};
}

Gf8Symbol symbol_of(const Column& col) {
  int v = 0;
  for (auto b : col.bits) {
    if (b > 1) throw std::invalid_argument("column cell is not a bit");
    v = (v << 1) | b;
  }
  return Gf8Symbol(v);
}

Demapped demap(Gf8Symbol s) {
  for (int c = 0; c < 4; ++c) {
    for (int sel = 0; sel < 2; ++sel) {
      if (kPairs[c][sel] == s.level()) {
        return Demapped{Gf4Symbol(c), static_cast<std::uint8_t>(sel)};
      }
    }
  }
  throw std::logic_error("unreachable: GF(8) pairing is total");
}

Gf8Symbol remap(Gf4Symbol c, int selection) {
  if (selection != 0 && selection != 1) {
    throw std::invalid_argument("selection bit must be 0 or 1");
  }
  return Gf8Symbol(kPairs[c.level()][selection]);
}

bool contains_forbidden(std::span<const Gf4Symbol> seq) {
  const auto& q = ForbiddenSets::q4;
  for (std::size_t i = 2; i < seq.size(); ++i) {
    if (seq[i - 2].level() == q[0] && seq[i - 1].level() == q[1] &&
        seq[i].level() == q[2]) {
      return true;
    }
  }
  return false;
}

std::string to_string(Gf4Symbol c) { return std::string(kGf4Names[c.level()]); }
std::string to_string(Gf8Symbol s) { return std::string(kGf8Names[s.level()]); }

Gf4Symbol parse_gf4(std::string_view token) {
  for (int i = 0; i < 4; ++i) {
    if (kGf4Names[i] == token) return Gf4Symbol(i);
  }
  throw ParseError("unknown GF(4) symbol '" + std::string(token) + "'");
}

Gf8Symbol parse_gf8(std::string_view token) {
  for (int i = 0; i < 8; ++i) {
    if (kGf8Names[i] == token) return Gf8Symbol(i);
  }
  throw ParseError("unknown GF(8) symbol '" + std::string(token) + "'");
}

std::string format_symbols(std::span<const Gf4Symbol> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += to_string(seq[i]);
  }
  return out;
}

std::vector<Gf4Symbol> parse_symbols(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Gf4Symbol> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_gf4(tok));
  return out;
}

}  // namespace tdloco
