#pragma once

// Writing coded frames onto a multi-track medium.
//
// Tracks come in groups of three that a wide head reads together. Within a
// group, each GF(8) symbol occupies one column (top, middle, bottom track).
// Groups are independent streams; cross-group interference is ignored.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tdloco/codec.hpp"
#include "tdloco/enumeration.hpp"
#include "tdloco/symbols.hpp"

namespace tdloco {

/// One message plus the selection bits for its m codeword symbols and its
/// bridge symbol.
struct Frame {
  Bits message;     // s_c bits
  Bits selections;  // m + 1 bits

  friend bool operator==(const Frame&, const Frame&) = default;
};

// Symbol-level mapping: GF(4) symbol + selection bit -> GF(8) -> column.
// Throws std::invalid_argument when the two lengths differ.
std::vector<Column> write_symbols(std::span<const Gf4Symbol> symbols,
                                  std::span<const std::uint8_t> selections);

struct DemappedSymbols {
  std::vector<Gf4Symbol> symbols;
  Bits selections;
};
DemappedSymbols read_symbols(std::span<const Column> columns);

// Encodes, bridges, and maps a sequence of frames onto m+1 columns each.
// Throws std::invalid_argument for a malformed frame.
std::vector<Column> write_group(std::span<const Frame> frames,
                                const CodeParams& params);
// Throws FramingError, ConstraintError, or RangeError on bad input.
std::vector<Frame> read_group(std::span<const Column> columns,
                              const CodeParams& params);

class Grid {
 public:
  Grid() = default;
  // Throws std::invalid_argument unless tracks is a positive multiple of 3.
  Grid(int tracks, int width);

  int tracks() const { return tracks_; }
  int width() const { return width_; }
  int groups() const { return tracks_ / 3; }

  std::uint8_t at(int track, int col) const { return cells_[index(track, col)]; }
  void set(int track, int col, std::uint8_t bit);

  Column column(int group, int col) const;
  void set_column(int group, int col, const Column& c);

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int track, int col) const;

  int tracks_ = 0;
  int width_ = 0;
  std::vector<std::uint8_t> cells_;
};

// Group g lands on tracks 3g, 3g+1, 3g+2. Throws std::invalid_argument if
// tracks != 3 * groups.size() or the groups have different widths.
Grid write_grid(std::span<const std::vector<Column>> groups, int tracks);
std::vector<std::vector<Column>> read_grid(const Grid& grid);

Grid encode_grid(std::span<const std::vector<Frame>> frames_per_group,
                 int tracks, const CodeParams& params);
std::vector<std::vector<Frame>> decode_grid(const Grid& grid,
                                            const CodeParams& params);

struct SisViolation {
  int group = 0;
  int column = 0;  // center column of the offending 3x3 window

  friend bool operator==(const SisViolation&, const SisViolation&) = default;
};

// Square-isolation windows centered on a group's middle track: the center
// cell differs from all eight neighbours, which agree with each other.
std::vector<SisViolation> scan_sis(const Grid& grid);

std::size_t max_column_run(std::span<const Column> columns);

// Text form: one line per track of '0'/'1' characters.
void write_grid_text(std::ostream& out, const Grid& grid);
// Throws ParseError on ragged lines, foreign characters, or a track count
// that is not a positive multiple of 3.
Grid read_grid_text(std::istream& in);

// Bytes are expanded most significant bit first.
Bits bytes_to_bits(std::span<const std::uint8_t> bytes);
// A trailing partial byte is zero-padded.
std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits);

struct CarvedFrames {
  std::vector<Frame> frames;
  std::size_t residual_bits = 0;
};
// Cuts a bitstream into whole (s_c + m + 1)-bit frames: message bits first,
// then selection bits. Leftover bits are counted, not padded.
CarvedFrames carve_frames(std::span<const std::uint8_t> bits,
                          const CodeParams& params);
Bits flatten_frames(std::span<const Frame> frames);

}  // namespace tdloco
