#ifndef GRIESMER_GCODE_HPP
#define GRIESMER_GCODE_HPP

// Text format for codes over GF(p^f), extension ".gcode":
//   GCODE 1
//   field p=<p> f=<f> mod=<c0,c1,...,cf>
//   code k=<k> n=<n>
//   k rows of n space-separated element encodings in [0, q)
// The modulus lists little-endian coefficients and must be monic.  Writing
// is canonical (single spaces, trailing newline); parsing is strict and
// names the first offending line, so a canonical file round-trips
// byte-identically.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "griesmer/code.hpp"
#include "griesmer/field.hpp"

namespace griesmer {

inline std::string write_gcode(const LinearCode& C) {
  const FieldSpec& F = *C.field();
  std::string out = "GCODE 1\n";
  out += "field p=" + std::to_string(F.p) + " f=" + std::to_string(F.f) + " mod=";
  for (std::size_t i = 0; i < F.modulus.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(F.modulus[i]);
  }
  out += "\ncode k=" + std::to_string(C.k()) + " n=" + std::to_string(C.n()) + "\n";
  for (int r = 0; r < C.k(); ++r) {
    for (int c = 0; c < C.n(); ++c) {
      if (c) out += ' ';
      out += std::to_string(C.gen().at(r, c));
    }
    out += '\n';
  }
  return out;
}

namespace detail {

[[noreturn]] inline void gcode_fail(std::size_t line_no, const std::string& why) {
  throw error("gcode line " + std::to_string(line_no) + ": " + why);
}

inline bool eat(const std::string& s, std::size_t& pos, const char* lit) {
  const std::size_t len = std::char_traits<char>::length(lit);
  if (s.compare(pos, len, lit) != 0) return false;
  pos += len;
  return true;
}

// Plain digits, at most 12 of them: every legal value in the format is far
// below that, and the cap keeps conversion overflow-free.
inline bool eat_int(const std::string& s, std::size_t& pos, long long& out) {
  std::size_t digits = 0;
  long long value = 0;
  while (pos + digits < s.size() && s[pos + digits] >= '0' && s[pos + digits] <= '9') {
    if (++digits > 12) return false;
    value = value * 10 + (s[pos + digits - 1] - '0');
  }
  if (digits == 0) return false;
  pos += digits;
  out = value;
  return true;
}

}  // namespace detail

inline LinearCode parse_gcode(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', start), text.size());
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();  // final newline

  if (lines.empty() || lines[0] != "GCODE 1") {
    detail::gcode_fail(1, "expected header 'GCODE 1'");
  }

  if (lines.size() < 2) detail::gcode_fail(2, "missing field line");
  long long p = 0, f = 0;
  std::vector<int> modulus;
  {
    const std::string& s = lines[1];
    std::size_t pos = 0;
    const auto bad = [&]() {
      detail::gcode_fail(2, "expected 'field p=<p> f=<f> mod=<c0,c1,...,cf>'");
    };
    if (!detail::eat(s, pos, "field p=") || !detail::eat_int(s, pos, p)) bad();
    if (!detail::eat(s, pos, " f=") || !detail::eat_int(s, pos, f)) bad();
    if (!detail::eat(s, pos, " mod=")) bad();
    long long c = 0;
    if (!detail::eat_int(s, pos, c)) bad();
    modulus.push_back(static_cast<int>(c));
    while (pos < s.size() && s[pos] == ',') {
      ++pos;
      if (!detail::eat_int(s, pos, c)) bad();
      modulus.push_back(static_cast<int>(c));
    }
    if (pos != s.size()) bad();
  }

  if (lines.size() < 3) detail::gcode_fail(3, "missing code line");
  long long k = 0, n = 0;
  {
    const std::string& s = lines[2];
    std::size_t pos = 0;
    const auto bad = [&]() { detail::gcode_fail(3, "expected 'code k=<k> n=<n>'"); };
    if (!detail::eat(s, pos, "code k=") || !detail::eat_int(s, pos, k)) bad();
    if (!detail::eat(s, pos, " n=") || !detail::eat_int(s, pos, n)) bad();
    if (pos != s.size()) bad();
  }
  if (k < 1 || k > 64) detail::gcode_fail(3, "k out of range [1, 64]");
  if (n < 1 || n > 1'000'000) detail::gcode_fail(3, "n out of range [1, 10^6]");

  Field field;
  try {
    field = make_field(static_cast<int>(p), static_cast<int>(f), modulus);
  } catch (const error& e) {
    detail::gcode_fail(2, e.what());
  }
  const FieldSpec& F = *field;

  if (lines.size() < 3 + static_cast<std::size_t>(k)) {
    detail::gcode_fail(lines.size() + 1, "missing row line (expected " +
                                             std::to_string(k) + " rows)");
  }
  if (lines.size() > 3 + static_cast<std::size_t>(k)) {
    detail::gcode_fail(4 + k, "unexpected extra line");
  }

  FqMatrix gen(field, static_cast<int>(k), static_cast<int>(n));
  for (long long r = 0; r < k; ++r) {
    const std::size_t line_no = 4 + r;
    const std::string& s = lines[3 + r];
    std::size_t pos = 0;
    for (long long c = 0; c < n; ++c) {
      if (c > 0 && !detail::eat(s, pos, " ")) {
        detail::gcode_fail(line_no, "expected " + std::to_string(n) +
                                        " space-separated entries");
      }
      long long v = 0;
      if (!detail::eat_int(s, pos, v)) {
        detail::gcode_fail(line_no, "expected " + std::to_string(n) +
                                        " space-separated entries");
      }
      if (v >= F.q) {
        detail::gcode_fail(line_no, "element " + std::to_string(v) +
                                        " out of range [0, " + std::to_string(F.q) + ")");
      }
      gen.at(static_cast<int>(r), static_cast<int>(c)) = static_cast<Elem>(v);
    }
    if (pos != s.size()) detail::gcode_fail(line_no, "trailing characters after row");
  }

  return LinearCode(field, gen);
}

inline LinearCode read_gcode_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_gcode(buffer.str());
  } catch (const error& e) {
    throw error(path + ": " + e.what());
  }
}

inline void write_gcode_file(const LinearCode& C, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write '" + path + "'");
  out << write_gcode(C);
  out.flush();
  if (!out) throw error("failed while writing '" + path + "'");
}

}  // namespace griesmer

#endif  // GRIESMER_GCODE_HPP
