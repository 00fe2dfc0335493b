#include "tdloco/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <sstream>

#include "tdloco/capacity.hpp"
#include "tdloco/codec.hpp"
#include "tdloco/enumeration.hpp"
#include "tdloco/errors.hpp"
#include "tdloco/grid.hpp"
#include "tdloco/oracle.hpp"

namespace tdloco::cli {

namespace {

std::string fixed4(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << v;
  return s.str();
}

int cmd_capacity(std::ostream& out) {
  const auto caps = capacities();
  out << "Q8 (GF(8), 2 forbidden patterns): lambda = " << fixed4(caps.q8.lambda)
      << ", C = " << fixed4(caps.q8.capacity_bits)
      << ", C_normalized = " << fixed4(caps.q8.normalized) << '\n';
  out << "Q4 (GF(4) + selection bit):       lambda = " << fixed4(caps.q4.lambda)
      << ", C = " << fixed4(caps.q4.capacity_bits)
      << ", C_normalized_overall = " << fixed4(caps.q4.normalized) << '\n';
  std::ostringstream pct;
  pct << std::fixed << std::setprecision(2) << caps.reported_gap() * 100;
  out << "gap: " << fixed4(caps.reported_gap()) << " (" << pct.str() << "%)\n";
  return kOk;
}

int cmd_params(int m, std::ostream& out) {
  const CodeParams params(m);
  out << "m = " << m << '\n'
      << "N(m) = " << params.card(m) << '\n'
      << "N_c(m) = " << clocked_cardinality(m) << '\n'
      << "s_c = " << params.message_length() << '\n'
      << "k_eff = " << k_eff(m) << '\n'
      << "R = " << format_fixed(rate(m), 4) << '\n'
      << "R_normalized = " << format_fixed(normalized_rate(m), 4) << '\n';
  return kOk;
}

int cmd_tables(const std::vector<int>& lengths, const std::string& format,
               std::ostream& out) {
  for (int m : lengths) {
    if (m < 2) throw std::invalid_argument("table lengths must be >= 2");
  }
  if (format == "csv") {
    out << "m, s_c, R, R_normalized\n";
    for (int m : lengths) {
      out << m << ", " << message_length(m) << ", " << format_fixed(rate(m), 4)
          << ", " << format_fixed(normalized_rate(m), 4) << '\n';
    }
    return kOk;
  }
  out << std::left << std::setw(10) << "m" << std::setw(12) << "s_c"
      << std::setw(10) << "R" << "R_normalized\n";
  for (int m : lengths) {
    out << std::setw(10) << m << std::setw(12) << message_length(m)
        << std::setw(10) << format_fixed(rate(m), 4)
        << format_fixed(normalized_rate(m), 4) << '\n';
  }
  const auto caps = capacities();
  out << std::setw(10) << "capacity" << std::setw(12) << "-"
      << std::setw(10) << fixed4(caps.q4.capacity_bits + 1)
      << fixed4(caps.q4.normalized) << '\n';
  return kOk;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int cmd_encode(int m, int tracks, const std::string& in_path,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  const CodeParams params(m);
  if (tracks <= 0 || tracks % 3 != 0) {
    throw std::invalid_argument("--tracks must be a positive multiple of 3");
  }
  const std::size_t groups = static_cast<std::size_t>(tracks) / 3;
  const auto bits = bytes_to_bits(read_file(in_path));
  auto carved = carve_frames(bits, params);
  const std::size_t per_group = carved.frames.size() / groups;
  if (per_group == 0) {
    throw Error("input holds " + std::to_string(bits.size()) +
                " bits, fewer than one " + std::to_string(params.frame_bits()) +
                "-bit frame per track group");
  }
  std::vector<std::vector<Frame>> layout(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    const auto first = carved.frames.begin() + static_cast<std::ptrdiff_t>(g * per_group);
    layout[g].assign(first, first + static_cast<std::ptrdiff_t>(per_group));
  }
  const std::size_t used = groups * per_group * static_cast<std::size_t>(params.frame_bits());
  const std::size_t residual = bits.size() - used;
  if (residual > 0) {
    err << "warning: " << residual << " residual input bits not encoded\n";
  }
  const Grid grid = encode_grid(layout, tracks, params);
  std::ofstream file(out_path);
  if (!file) throw Error("cannot write " + out_path);
  write_grid_text(file, grid);
  out << "encoded " << groups * per_group << " frames (" << used << " bits) into "
      << grid.tracks() << "x" << grid.width() << " grid; residual bits: " << residual
      << '\n';
  return kOk;
}

Grid load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_grid_text(in);
}

int cmd_decode(int m, const std::string& in_path, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  const CodeParams params(m);
  const auto groups = decode_grid(load_grid(in_path), params);
  Bits bits;
  std::size_t frames = 0;
  for (const auto& g : groups) {
    const auto flat = flatten_frames(g);
    bits.insert(bits.end(), flat.begin(), flat.end());
    frames += g.size();
  }
  if (bits.size() % 8 != 0) {
    err << "warning: " << bits.size() % 8
        << " trailing bits do not fill a byte; last byte is zero-padded\n";
  }
  const auto bytes = bits_to_bytes(bits);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error("cannot write " + out_path);
  file.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
  out << "decoded " << frames << " frames (" << bits.size() << " bits, "
      << bytes.size() << " bytes)\n";
  return kOk;
}

int cmd_scan(const std::string& in_path, std::ostream& out) {
  const auto violations = scan_sis(load_grid(in_path));
  for (const auto& v : violations) {
    out << "violation: group " << v.group << ", column " << v.column << '\n';
  }
  out << violations.size() << " violations\n";
  return violations.empty() ? kOk : kDataError;
}

int cmd_verify(int max_m, std::ostream& out) {
  if (max_m < 1 || max_m > oracle::kMaxLength) {
    throw std::invalid_argument("--max-m must be in [1, " +
                                std::to_string(oracle::kMaxLength) + "]");
  }
  bool ok = true;
  auto report = [&](int m, const std::string& what, bool pass) {
    out << "m=" << m << ' ' << what << ": " << (pass ? "ok" : "FAILED") << '\n';
    ok = ok && pass;
  };
  for (int m = 1; m <= max_m; ++m) {
    const auto words = oracle::enumerate(m);
    report(m, "cardinality", BigInt(words.size()) == cardinality(m));
    if (m < 2) continue;
    const CodeParams params(m);
    bool ranks = true;
    for (std::size_t r = 0; r < words.size() && ranks; ++r) {
      ranks = index_of(words[r], params) == r;
    }
    report(m, "index rule", ranks);
    bool bijection = true;
    for (std::size_t g = 1; g + 1 < words.size() && bijection; ++g) {
      bijection = codeword_of(g, params) == words[g];
    }
    report(m, "codec bijection", bijection);
    if (m >= 4) {
      const auto gc = oracle::group_counts(m);
      const BigInt n1 = cardinality(m - 1), n2 = cardinality(m - 2),
                   n3 = cardinality(m - 3);
      report(m, "group counts",
             gc.starts_low == 3 * n1 && gc.starts_a2_nz == n1 - n2 &&
                 gc.starts_a2_zero == 3 * n3);
    }
  }
  out << (ok ? "verification passed" : "verification FAILED") << '\n';
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constrained codes for two-dimensional magnetic recording", "tdloco"};
  app.require_subcommand(1);

  int m = 0;
  int tracks = 3;
  int max_m = 8;
  std::vector<int> lengths{24, 33, 39, 66, 88, 265};
  std::string format = "csv";
  std::string in_path;
  std::string out_path;

  auto* capacity = app.add_subcommand("capacity", "Capacity of both constraints and their gap");
  auto* params = app.add_subcommand("params", "Parameters of one code length");
  params->add_option("--m", m, "Codeword length in symbols")->required();
  auto* tables = app.add_subcommand("tables", "Message lengths and rates");
  tables->add_option("--m", lengths, "Comma-separated codeword lengths")->delimiter(',');
  tables->add_option("--format", format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));
  auto* encode = app.add_subcommand("encode", "Encode a file into a grid");
  encode->add_option("--m", m)->required();
  encode->add_option("--tracks", tracks, "Track count, a multiple of 3");
  encode->add_option("--in", in_path)->required();
  encode->add_option("--out", out_path)->required();
  auto* decode = app.add_subcommand("decode", "Decode a grid back into a file");
  decode->add_option("--m", m)->required();
  decode->add_option("--in", in_path)->required();
  decode->add_option("--out", out_path)->required();
  auto* scan = app.add_subcommand("scan", "List square-isolation patterns in a grid");
  scan->add_option("--in", in_path)->required();
  auto* verify = app.add_subcommand("verify", "Check closed forms against brute force");
  verify->add_option("--max-m", max_m, "Largest length to check (<= 10)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*capacity) return cmd_capacity(out);
    if (*params) return cmd_params(m, out);
    if (*tables) return cmd_tables(lengths, format, out);
    if (*encode) return cmd_encode(m, tracks, in_path, out_path, out, err);
    if (*decode) return cmd_decode(m, in_path, out_path, out, err);
    if (*scan) return cmd_scan(in_path, out);
    if (*verify) return cmd_verify(max_m, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace tdloco::cli
