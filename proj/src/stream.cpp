#include "tdloco/stream.hpp"

#include <stdexcept>
#include <string>

#include "tdloco/errors.hpp"

namespace tdloco {

namespace {

void check_codeword(const Codeword& w, int m) {
  if (static_cast<int>(w.size()) != m) {
    throw std::invalid_argument("codeword length " + std::to_string(w.size()) +
                                " does not match m = " + std::to_string(m));
  }
  if (contains_forbidden(w)) throw ConstraintError("not a codeword");
  if (!is_clocked(w)) throw ConstraintError("codeword is not self-clocked");
}

std::vector<Gf4Symbol> close_frame(const Codeword& w, Gf4Symbol bridge) {
  std::vector<Gf4Symbol> frame(w);
  frame.push_back(bridge);
  return frame;
}

}  // namespace

Gf4Symbol bridge_symbol(Gf4Symbol prev_rms, Gf4Symbol next_lms) {
  if (prev_rms == Gf4Symbol::alpha2() && next_lms == Gf4Symbol::alpha2()) {
    return Gf4Symbol::alpha2();
  }
  return Gf4Symbol::zero();
}

StreamAssembler::StreamAssembler(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("StreamAssembler: m must be >= 1");
}

std::optional<std::vector<Gf4Symbol>> StreamAssembler::push(Codeword word) {
  check_codeword(word, m_);
  std::optional<std::vector<Gf4Symbol>> out;
  if (pending_) {
    out = close_frame(*pending_, bridge_symbol(pending_->back(), word.front()));
  }
  pending_ = std::move(word);
  return out;
}

std::optional<std::vector<Gf4Symbol>> StreamAssembler::finish() {
  if (!pending_) return std::nullopt;
  auto out = close_frame(*pending_, Gf4Symbol::zero());
  pending_.reset();
  return out;
}

SymbolStream assemble(std::span<const Codeword> codewords) {
  SymbolStream out;
  if (codewords.empty()) return out;
  const int m = static_cast<int>(codewords.front().size());
  out.frame_length = static_cast<std::size_t>(m) + 1;
  out.symbols.reserve(codewords.size() * out.frame_length);
  StreamAssembler assembler(m);
  auto append = [&](const std::optional<std::vector<Gf4Symbol>>& frame) {
    if (frame) out.symbols.insert(out.symbols.end(), frame->begin(), frame->end());
  };
  for (const auto& w : codewords) append(assembler.push(w));
  append(assembler.finish());
  return out;
}

std::vector<Codeword> disassemble(std::span<const Gf4Symbol> stream, int m) {
  if (m < 1) throw std::invalid_argument("disassemble: m must be >= 1");
  const std::size_t frame = static_cast<std::size_t>(m) + 1;
  if (stream.size() % frame != 0) {
    throw FramingError("stream length " + std::to_string(stream.size()) +
                       " is not a multiple of " + std::to_string(frame));
  }
  std::vector<Codeword> out;
  out.reserve(stream.size() / frame);
  for (std::size_t at = 0; at < stream.size(); at += frame) {
    Codeword w(stream.begin() + at, stream.begin() + at + m);
    if (contains_forbidden(w)) {
      throw ConstraintError("corrupted frame " + std::to_string(at / frame) +
                            ": forbidden pattern");
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::size_t max_run_length(std::span<const Gf4Symbol> seq) {
  std::size_t best = 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    run = (i > 0 && seq[i] == seq[i - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

}  // namespace tdloco
