#include "tdloco/grid.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "tdloco/errors.hpp"
#include "tdloco/stream.hpp"

namespace tdloco {

std::vector<Column> write_symbols(std::span<const Gf4Symbol> symbols,
                                  std::span<const std::uint8_t> selections) {
  if (symbols.size() != selections.size()) {
    throw std::invalid_argument("need one selection bit per symbol");
  }
  std::vector<Column> out;
  out.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    out.push_back(column_of(remap(symbols[i], selections[i])));
  }
  return out;
}

DemappedSymbols read_symbols(std::span<const Column> columns) {
  DemappedSymbols out;
  out.symbols.reserve(columns.size());
  out.selections.reserve(columns.size());
  for (const auto& col : columns) {
    const auto d = demap(symbol_of(col));
    out.symbols.push_back(d.symbol);
    out.selections.push_back(d.selection);
  }
  return out;
}

std::vector<Column> write_group(std::span<const Frame> frames,
                                const CodeParams& params) {
  std::vector<Codeword> words;
  words.reserve(frames.size());
  Bits selections;
  selections.reserve(frames.size() * params.selection_length());
  for (const auto& f : frames) {
    if (f.selections.size() != static_cast<std::size_t>(params.selection_length())) {
      throw std::invalid_argument("frame needs " +
                                  std::to_string(params.selection_length()) +
                                  " selection bits");
    }
    words.push_back(encode_message(f.message, params));
    selections.insert(selections.end(), f.selections.begin(), f.selections.end());
  }
  const auto stream = assemble(words);
  return write_symbols(stream.symbols, selections);
}

std::vector<Frame> read_group(std::span<const Column> columns,
                              const CodeParams& params) {
  const std::size_t frame = static_cast<std::size_t>(params.m()) + 1;
  if (columns.size() % frame != 0) {
    throw FramingError("column count " + std::to_string(columns.size()) +
                       " is not a multiple of " + std::to_string(frame));
  }
  const auto demapped = read_symbols(columns);
  const auto words = disassemble(demapped.symbols, params.m());
  std::vector<Frame> out;
  out.reserve(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto sel = demapped.selections.begin() + static_cast<std::ptrdiff_t>(k * frame);
    out.push_back(Frame{decode_codeword(words[k], params),
                        Bits(sel, sel + static_cast<std::ptrdiff_t>(frame))});
  }
  return out;
}

Grid::Grid(int tracks, int width) : tracks_(tracks), width_(width) {
  if (tracks <= 0 || tracks % 3 != 0) {
    throw std::invalid_argument("track count must be a positive multiple of 3, got " +
                                std::to_string(tracks));
  }
  if (width < 0) throw std::invalid_argument("negative grid width");
  cells_.assign(static_cast<std::size_t>(tracks) * width, 0);
}

std::size_t Grid::index(int track, int col) const {
  if (track < 0 || track >= tracks_ || col < 0 || col >= width_) {
    throw std::out_of_range("grid cell out of range");
  }
  return static_cast<std::size_t>(track) * width_ + col;
}

void Grid::set(int track, int col, std::uint8_t bit) {
  if (bit > 1) throw std::invalid_argument("grid cell must be 0 or 1");
  cells_[index(track, col)] = bit;
}

Column Grid::column(int group, int col) const {
  return Column{{at(3 * group, col), at(3 * group + 1, col), at(3 * group + 2, col)}};
}

void Grid::set_column(int group, int col, const Column& c) {
  for (int k = 0; k < 3; ++k) set(3 * group + k, col, c.bits[k]);
}

Grid write_grid(std::span<const std::vector<Column>> groups, int tracks) {
  if (tracks <= 0 || tracks % 3 != 0 ||
      static_cast<std::size_t>(tracks) != 3 * groups.size()) {
    throw std::invalid_argument("track count " + std::to_string(tracks) +
                                " does not match " + std::to_string(groups.size()) +
                                " track groups");
  }
  const std::size_t width = groups.front().size();
  for (const auto& g : groups) {
    if (g.size() != width) throw std::invalid_argument("track groups differ in width");
  }
  Grid grid(tracks, static_cast<int>(width));
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (std::size_t j = 0; j < width; ++j) {
      grid.set_column(static_cast<int>(g), static_cast<int>(j), groups[g][j]);
    }
  }
  return grid;
}

std::vector<std::vector<Column>> read_grid(const Grid& grid) {
  std::vector<std::vector<Column>> out(static_cast<std::size_t>(grid.groups()));
  for (int g = 0; g < grid.groups(); ++g) {
    out[g].reserve(static_cast<std::size_t>(grid.width()));
    for (int j = 0; j < grid.width(); ++j) out[g].push_back(grid.column(g, j));
  }
  return out;
}

Grid encode_grid(std::span<const std::vector<Frame>> frames_per_group,
                 int tracks, const CodeParams& params) {
  std::vector<std::vector<Column>> groups;
  groups.reserve(frames_per_group.size());
  for (const auto& frames : frames_per_group) {
    groups.push_back(write_group(frames, params));
  }
  return write_grid(groups, tracks);
}

std::vector<std::vector<Frame>> decode_grid(const Grid& grid,
                                            const CodeParams& params) {
  std::vector<std::vector<Frame>> out;
  for (const auto& columns : read_grid(grid)) {
    out.push_back(read_group(columns, params));
  }
  return out;
}

std::vector<SisViolation> scan_sis(const Grid& grid) {
  std::vector<SisViolation> out;
  for (int g = 0; g < grid.groups(); ++g) {
    const int top = 3 * g;
    for (int j = 1; j + 1 < grid.width(); ++j) {
      const std::uint8_t center = grid.at(top + 1, j);
      bool isolated = true;
      for (int r = top; r < top + 3 && isolated; ++r) {
        for (int c = j - 1; c <= j + 1; ++c) {
          if (r == top + 1 && c == j) continue;
          if (grid.at(r, c) == center) {
            isolated = false;
            break;
          }
        }
      }
      if (isolated) out.push_back(SisViolation{g, j});
    }
  }
  return out;
}

std::size_t max_column_run(std::span<const Column> columns) {
  std::size_t best = 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    run = (i > 0 && columns[i] == columns[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

void write_grid_text(std::ostream& out, const Grid& grid) {
  for (int t = 0; t < grid.tracks(); ++t) {
    std::string line(static_cast<std::size_t>(grid.width()), '0');
    for (int j = 0; j < grid.width(); ++j) {
      if (grid.at(t, j)) line[j] = '1';
    }
    out << line << '\n';
  }
}

Grid read_grid_text(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.size() % 3 != 0) {
    throw ParseError("grid must have a positive multiple of 3 tracks, got " +
                     std::to_string(lines.size()));
  }
  const std::size_t width = lines.front().size();
  Grid grid(static_cast<int>(lines.size()), static_cast<int>(width));
  for (std::size_t t = 0; t < lines.size(); ++t) {
    if (lines[t].size() != width) {
      throw ParseError("track " + std::to_string(t) + " has length " +
                       std::to_string(lines[t].size()) + ", expected " +
                       std::to_string(width));
    }
    for (std::size_t j = 0; j < width; ++j) {
      const char ch = lines[t][j];
      if (ch != '0' && ch != '1') {
        throw ParseError("unexpected character in grid at track " +
                         std::to_string(t) + ", column " + std::to_string(j));
      }
      grid.set(static_cast<int>(t), static_cast<int>(j), ch == '1');
    }
  }
  return grid;
}

Bits bytes_to_bits(std::span<const std::uint8_t> bytes) {
  Bits out;
  out.reserve(bytes.size() * 8);
  for (auto b : bytes) {
    for (int k = 7; k >= 0; --k) out.push_back((b >> k) & 1);
  }
  return out;
}

std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

CarvedFrames carve_frames(std::span<const std::uint8_t> bits,
                          const CodeParams& params) {
  const auto frame_bits = static_cast<std::size_t>(params.frame_bits());
  const auto s_c = static_cast<std::size_t>(params.message_length());
  CarvedFrames out;
  const std::size_t whole = bits.size() / frame_bits;
  out.frames.reserve(whole);
  for (std::size_t k = 0; k < whole; ++k) {
    const auto at = bits.begin() + static_cast<std::ptrdiff_t>(k * frame_bits);
    out.frames.push_back(Frame{Bits(at, at + static_cast<std::ptrdiff_t>(s_c)),
                               Bits(at + static_cast<std::ptrdiff_t>(s_c),
                                    at + static_cast<std::ptrdiff_t>(frame_bits))});
  }
  out.residual_bits = bits.size() - whole * frame_bits;
  return out;
}

Bits flatten_frames(std::span<const Frame> frames) {
  Bits out;
  for (const auto& f : frames) {
    out.insert(out.end(), f.message.begin(), f.message.end());
    out.insert(out.end(), f.selections.begin(), f.selections.end());
  }
  return out;
}

}  // namespace tdloco
