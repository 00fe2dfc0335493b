// Acceptance suite: each criterion prints one PASS/FAIL line. Exit status is
// the number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tdloco/capacity.hpp"
#include "tdloco/codec.hpp"
#include "tdloco/enumeration.hpp"
#include "tdloco/grid.hpp"
#include "tdloco/oracle.hpp"
#include "tdloco/stream.hpp"

using namespace tdloco;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects sub-check failures for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s;
    for (std::size_t i = 0; i < failures_.size() && i < 6; ++i) {
      s += (i ? "; " : "") + failures_[i];
    }
    if (failures_.size() > 6) s += "; ... (" + std::to_string(failures_.size()) + " total)";
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

Bits random_bits(std::mt19937_64& rng, int n) {
  Bits b(static_cast<std::size_t>(n));
  for (auto& v : b) v = static_cast<std::uint8_t>(rng() & 1);
  return b;
}

std::string str(const BigInt& v) { return v.str(); }

// 1. Cardinalities.
void cardinalities(Check& c) {
  const int expected[] = {16, 63, 248, 977, 3849};
  for (int m = 2; m <= 6; ++m) {
    c.expect(cardinality(m) == expected[m - 2],
             "N(" + std::to_string(m) + ") = " + str(cardinality(m)));
  }
  const auto t0 = Clock::now();
  for (int m = 1; m <= 10; ++m) {
    const auto n = oracle::count(m);
    c.expect(BigInt(n) == cardinality(m),
             "|enumerate(" + std::to_string(m) + ")| = " + std::to_string(n));
  }
  const double dt = seconds_since(t0);
  c.expect(dt < 30.0, "brute force took " + std::to_string(dt) + " s");
}

// 2. Index rule.
void index_rule(Check& c) {
  const BigInt g = index_of(parse_symbols("1 a2 1 a2 a 0"), CodeParams(6));
  c.expect(g == 1824, "index_of(1 a2 1 a2 a 0) = " + str(g));
  const auto t0 = Clock::now();
  for (int m = 2; m <= 8; ++m) {
    const CodeParams p(m);
    const auto words = oracle::enumerate(m);
    for (std::size_t r = 0; r < words.size(); ++r) {
      if (index_of(words[r], p) != r) {
        c.expect(false, "rank mismatch at m=" + std::to_string(m) + " word " +
                            format_symbols(words[r]));
        break;
      }
    }
  }
  const double dt = seconds_since(t0);
  c.expect(dt < 120.0, "rank check took " + std::to_string(dt) + " s");
}

// 3. Codec bijection and large-m roundtrips.
void codec_bijection(Check& c) {
  const auto t0 = Clock::now();
  for (int m = 2; m <= 8; ++m) {
    const CodeParams p(m);
    const BigInt top = p.card(m) - 2;
    for (BigInt g = 1; g <= top; ++g) {
      if (index_of(codeword_of(g, p), p) != g) {
        c.expect(false, "index_of(codeword_of(" + str(g) + ")) != g at m=" + std::to_string(m));
        break;
      }
    }
  }
  std::mt19937_64 rng(20211);
  for (int m : {24, 33, 39, 66, 88, 265}) {
    const CodeParams p(m);
    int bad = 0;
    for (int t = 0; t < 10000; ++t) {
      const Bits b = random_bits(rng, p.message_length());
      const auto w = encode_message(b, p);
      if (!is_clocked(w) || contains_forbidden(w) || decode_codeword(w, p) != b) ++bad;
    }
    c.expect(bad == 0, std::to_string(bad) + " roundtrip failures at m=" + std::to_string(m));
  }
  const double dt = seconds_since(t0);
  c.expect(dt < 120.0, "codec checks took " + std::to_string(dt) + " s");
}

// 4. Message lengths and rates, compared at 4 decimals.
void message_lengths(Check& c) {
  struct Row {
    int m;
    int s_c;
    const char* rate;
    const char* normalized;
  };
  const Row rows[] = {
      {24, 47, "2.8800", "0.9600"},  {33, 65, "2.9118", "0.9706"},
      {39, 77, "2.9250", "0.9750"},  {66, 130, "2.9403", "0.9801"},
      {88, 174, "2.9550", "0.9850"}, {265, 524, "2.9700", "0.9900"},
  };
  for (const auto& r : rows) {
    const std::string m = "m=" + std::to_string(r.m);
    c.expect(message_length(r.m) == r.s_c,
             m + " s_c " + std::to_string(message_length(r.m)) + " != " + std::to_string(r.s_c));
    const auto rate4 = format_fixed(rate(r.m), 4);
    c.expect(rate4 == r.rate, m + " R " + rate4 + " != " + r.rate);
    const auto norm4 = format_fixed(normalized_rate(r.m), 4);
    c.expect(norm4 == r.normalized, m + " R_n " + norm4 + " != " + r.normalized);
  }
}

// 5. Capacities.
void capacity_values(Check& c) {
  const auto caps = capacities();
  auto near = [&](double got, double want, const std::string& what) {
    std::ostringstream s;
    s << what << " = " << got << ", expected " << want;
    c.expect(std::abs(got - want) <= 1e-3, s.str());
  };
  near(caps.q8.capacity_bits, 2.9944, "log2 lambda(T)");
  near(caps.q8.normalized, 0.9981, "C^n");
  near(caps.q4.capacity_bits, 1.9780, "log2 lambda(T')");
  near(caps.q4.normalized, 0.9927, "C^n_overall");

  const std::vector<Pattern3> q4{ForbiddenSets::q4};
  const double l16 = dominant_eigenvalue(build_constraint_adjacency(4, q4));
  const double l64 = dominant_eigenvalue(build_constraint_adjacency(8, ForbiddenSets::q8));
  c.expect(std::abs(l16 - caps.q4.lambda) <= 1e-6 * caps.q4.lambda,
           "16-state Perron root " + std::to_string(l16));
  c.expect(std::abs(l64 - caps.q8.lambda) <= 1e-6 * caps.q8.lambda,
           "64-state Perron root " + std::to_string(l64));
}

// 6. Rate of the unconstrained-length code approaches C'.
void capacity_achieving(Check& c) {
  const auto t0 = Clock::now();
  const BigInt n = cardinality(1000);
  const int top = static_cast<int>(boost::multiprecision::msb(n));
  const BigInt head = n >> (top - 52);
  const double per_symbol = (std::log2(head.convert_to<double>()) + (top - 52)) / 1000.0;
  const double dt = seconds_since(t0);
  c.expect(std::abs(per_symbol - 1.9780) < 0.01,
           "log2 N(1000)/1000 = " + std::to_string(per_symbol));
  c.expect(dt < 1.0, "took " + std::to_string(dt) + " s");
}

// 7. Bridge identity.
void bridge_identity(Check& c) {
  const CodeParams p(101);
  for (int i = 2; i <= 100; ++i) {
    c.expect(p.card(i) + p.inner_sum(i) == 3 * p.card(i - 1),
             "identity fails at i=" + std::to_string(i));
  }
}

// 8. No SIS pattern in anything the writer produces.
void system_soundness(Check& c) {
  // Exhaustive: every ordered pair of clocked codewords, every pair of
  // selection patterns.
  for (int m = 2; m <= 4; ++m) {
    std::vector<Codeword> words;
    for (auto& w : oracle::enumerate(m)) {
      if (is_clocked(w)) words.push_back(std::move(w));
    }
    const int width = 2 * (m + 1);
    const std::uint32_t patterns = 1u << width;
    std::vector<std::vector<Column>> groups(1, std::vector<Column>(width));
    Grid grid = write_grid(groups, 3);
    Bits selections(static_cast<std::size_t>(width));
    std::uint64_t grids = 0;
    std::uint64_t violations = 0;
    for (const auto& a : words) {
      for (const auto& b : words) {
        const auto stream = assemble(std::vector<Codeword>{a, b});
        for (std::uint32_t sel = 0; sel < patterns; ++sel) {
          for (int j = 0; j < width; ++j) selections[j] = (sel >> j) & 1;
          const auto cols = write_symbols(stream.symbols, selections);
          for (int j = 0; j < width; ++j) grid.set_column(0, j, cols[j]);
          violations += scan_sis(grid).size();
          ++grids;
        }
      }
    }
    c.expect(violations == 0, std::to_string(violations) + " violations over " +
                                  std::to_string(grids) + " grids at m=" + std::to_string(m));
  }

  // Randomized: 10^4 frames per length, through the full frame pipeline.
  std::mt19937_64 rng(88);
  for (int m : {5, 6, 7, 8, 24}) {
    const CodeParams p(m);
    int frames_done = 0;
    std::uint64_t violations = 0;
    bool runs_ok = true;
    bool roundtrip_ok = true;
    while (frames_done < 10000) {
      const int groups = 1 + static_cast<int>(rng() % 3);
      const int per_group = 1 + static_cast<int>(rng() % 8);
      std::vector<std::vector<Frame>> layout(groups);
      for (auto& g : layout) {
        for (int k = 0; k < per_group; ++k) {
          g.push_back(Frame{random_bits(rng, p.message_length()),
                            random_bits(rng, p.selection_length())});
        }
      }
      const Grid grid = encode_grid(layout, 3 * groups, p);
      violations += scan_sis(grid).size();
      for (const auto& cols : read_grid(grid)) {
        runs_ok = runs_ok && max_column_run(cols) <= static_cast<std::size_t>(k_eff(m));
      }
      roundtrip_ok = roundtrip_ok && decode_grid(grid, p) == layout;
      frames_done += groups * per_group;
    }
    const std::string at = " at m=" + std::to_string(m);
    c.expect(violations == 0, std::to_string(violations) + " violations" + at);
    c.expect(runs_ok, "column run exceeds 2m-1" + at);
    c.expect(roundtrip_ok, "grid roundtrip failed" + at);
  }

  // Tightness: 1 0^(m-1) then 0^(m-1) 1 with equal selections.
  for (int m = 2; m <= 6; ++m) {
    const CodeParams p(m);
    Codeword tail(m, Gf4Symbol::zero());
    tail[0] = Gf4Symbol::one();
    const BigInt g = index_of(tail, p);
    const std::vector<Frame> frames{
        Frame{integer_to_bits(g - 1, p.message_length()), Bits(m + 1, 0)},
        Frame{Bits(p.message_length(), 0), Bits(m + 1, 0)}};
    const auto cols = write_group(frames, p);
    const auto run = max_column_run(cols);
    c.expect(run == static_cast<std::size_t>(2 * m - 1),
             "witness run " + std::to_string(run) + " at m=" + std::to_string(m));
    const auto grid = write_grid(std::vector<std::vector<Column>>{cols}, 3);
    c.expect(scan_sis(grid).empty(), "witness grid has violations at m=" + std::to_string(m));
  }
}

// 9. Worked grid example.
void grid_fixture(Check& c) {
  const auto word = parse_symbols("1 a2 a a2 0");
  const Bits sel{1, 0, 1, 1, 0};
  const std::vector<Column> expected{
      {{1, 1, 0}}, {{0, 0, 0}}, {{1, 0, 0}}, {{1, 1, 1}}, {{0, 1, 0}}};
  const auto cols = write_symbols(word, sel);
  c.expect(cols == expected, "columns differ from the worked example");
  const Grid grid = write_grid(std::vector<std::vector<Column>>{cols}, 3);
  const auto back = read_symbols(read_grid(grid)[0]);
  c.expect(back.symbols == word, "read back " + format_symbols(back.symbols));
  c.expect(back.selections == sel, "selection bits differ");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "cardinalities and brute-force counts", cardinalities},
      {2, "index rule vs brute-force rank", index_rule},
      {3, "codec bijection and large-m roundtrips", codec_bijection},
      {4, "message lengths and rates", message_lengths},
      {5, "capacities and De Bruijn cross-check", capacity_values},
      {6, "capacity-achieving rate at m=1000", capacity_achieving},
      {7, "bridge identity", bridge_identity},
      {8, "SIS soundness and run-length bound", system_soundness},
      {9, "worked grid example", grid_fixture},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto t0 = Clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (check.ok() ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.name
         << " (" << seconds_since(t0) << " s)";
    if (!check.ok()) line << " -- " << check.summary();
    std::cout << line.str() << std::endl;
    if (!check.ok()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed;
}
