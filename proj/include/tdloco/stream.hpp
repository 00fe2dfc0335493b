#pragma once

// Bridged, self-clocked symbol streams: codeword, bridge, codeword, bridge...
// Every frame is m codeword symbols plus one bridging symbol; the final frame
// is closed with a 0 bridge.

#include <optional>
#include <span>
#include <vector>

#include "tdloco/codec.hpp"
#include "tdloco/symbols.hpp"

namespace tdloco {

struct SymbolStream {
  std::vector<Gf4Symbol> symbols;
  std::size_t frame_length = 0;  // m + 1, or 0 for an empty stream
};

// a^2 when both neighbours are a^2, otherwise 0.
Gf4Symbol bridge_symbol(Gf4Symbol prev_rms, Gf4Symbol next_lms);

// Throws std::invalid_argument on mixed lengths and ConstraintError for a
// word that is not a self-clocked codeword.
SymbolStream assemble(std::span<const Codeword> codewords);

// Throws FramingError if the length is not a multiple of m + 1 and
// ConstraintError if a recovered word contains the forbidden pattern.
std::vector<Codeword> disassemble(std::span<const Gf4Symbol> stream, int m);

/// Incremental assembler. A frame can only be closed once the next
/// codeword's first symbol is known, so push() returns the previous frame.
class StreamAssembler {
 public:
  explicit StreamAssembler(int m);

  // Returns the completed frame of the previously pushed codeword, if any.
  std::optional<std::vector<Gf4Symbol>> push(Codeword word);
  // Flushes the held codeword with a 0 bridge.
  std::optional<std::vector<Gf4Symbol>> finish();

 private:
  int m_;
  std::optional<Codeword> pending_;
};

// Longest run of identical consecutive symbols.
std::size_t max_run_length(std::span<const Gf4Symbol> seq);

}  // namespace tdloco
