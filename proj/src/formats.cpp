#include "ramsey/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {
namespace {

class Cursor {
 public:
  Cursor(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }
  bool starts_with(std::string_view w) {
    skip_space();
    return text_.substr(pos_, w.size()) == w;
  }
  int integer() {
    skip_space();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(v);
  }
  std::string_view token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column()); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

int hex_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

Certificate parse_mathematica(Cursor& cur) {
  Certificate cert;
  cur.expect_word("CirculantGraph");
  cur.expect('[');
  cert.order = cur.integer();
  cur.expect(',');
  cur.expect('{');
  while (!cur.peek('}')) {
    cert.connection_set.push_back(cur.integer());
    if (cur.peek(',')) cur.expect(',');
  }
  cur.expect('}');
  cur.expect(']');
  return cert;
}

}  // namespace

std::string to_hex(const BitMask& bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out((bits.size() + 3) / 4, '0');
  for (std::size_t d = 0; d < out.size(); ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t i = 4 * d + static_cast<std::size_t>(b);
      if (i < bits.size() && bits.test(i)) v |= 1 << b;
    }
    out[d] = kDigits[v];
  }
  return out;
}

BitMask from_hex(std::string_view hex, std::size_t len) {
  if (hex.size() != (len + 3) / 4)
    throw ParseError("expected " + std::to_string((len + 3) / 4) + " hex digits, got " + std::to_string(hex.size()), 0,
                     0);
  BitMask bits(len);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const int v = hex_value(hex[d]);
    if (v < 0) throw ParseError(std::string("invalid hex digit '") + hex[d] + "'", 0, 0);
    for (int b = 0; b < 4; ++b) {
      if (!((v >> b) & 1)) continue;
      const std::size_t i = 4 * d + static_cast<std::size_t>(b);
      if (i >= len) throw ParseError("hex sets a bit beyond the coloring length", 0, 0);
      bits.set(i);
    }
  }
  return bits;
}

std::string format_certificate(const Certificate& cert) {
  std::string s = "circulant " + std::to_string(cert.order) + " :";
  for (int p : cert.connection_set) s += " " + std::to_string(p);
  return s;
}

std::string format_distance(const DistanceColoring& c) {
  if (!c.complete()) throw UsageError("only complete colorings have a distance line");
  return "distance " + std::to_string(c.order()) + " : " + to_hex(c.colors());
}

Certificate parse_certificate(std::string_view line, int line_no) {
  Cursor cur(line, line_no);
  Certificate cert;
  if (cur.starts_with("CirculantGraph")) {
    cert = parse_mathematica(cur);
  } else {
    cur.expect_word("circulant");
    cert.order = cur.integer();
    cur.expect(':');
    while (!cur.done()) cert.connection_set.push_back(cur.integer());
  }
  if (!cur.done()) cur.fail("trailing characters");
  // Jumps above N/2 name the same distance class as N - p; published lists
  // occasionally carry both.
  for (int& p : cert.connection_set) {
    if (p < 1 || p >= cert.order)
      throw ParseError("distance " + std::to_string(p) + " outside 1.." + std::to_string(cert.order - 1), line_no, 1);
    p = std::min(p, cert.order - p);
  }
  std::sort(cert.connection_set.begin(), cert.connection_set.end());
  cert.connection_set.erase(std::unique(cert.connection_set.begin(), cert.connection_set.end()),
                            cert.connection_set.end());
  try {
    cert.validate();
  } catch (const UsageError& e) {
    throw ParseError(e.what(), line_no, 1);
  }
  return cert;
}

DistanceColoring parse_distance(std::string_view line, int line_no) {
  Cursor cur(line, line_no);
  cur.expect_word("distance");
  const int order = cur.integer();
  if (order < 2) cur.fail("order must be at least 2");
  cur.expect(':');
  const int col = cur.column();
  const std::string_view hex = cur.token();
  if (!cur.done()) cur.fail("trailing characters");
  try {
    return DistanceColoring(order, from_hex(hex, static_cast<std::size_t>(order - 1)));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line_no, col);
  }
}

std::vector<ColoringRecord> read_records(std::istream& in) {
  std::vector<ColoringRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view v = line;
    if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    if (v.empty()) continue;
    if (v.starts_with("distance"))
      out.emplace_back(parse_distance(v, line_no));
    else
      out.emplace_back(parse_certificate(v, line_no));
  }
  return out;
}

std::vector<ColoringRecord> read_records_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_records(in);
}

DistanceColoring record_coloring(const ColoringRecord& r) {
  if (const auto* cert = std::get_if<Certificate>(&r)) return from_certificate(*cert);
  return std::get<DistanceColoring>(r);
}

}  // namespace ramsey
