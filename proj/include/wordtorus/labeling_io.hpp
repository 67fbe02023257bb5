#pragma once

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordtorus/torus.hpp"

namespace wordtorus {

/// Parse failure with 1-based line/column of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace io_detail {

inline std::string read_line(std::istream& in, int& line_no, bool& eof) {
  std::string s;
  if (!std::getline(in, s)) {
    eof = true;
    return s;
  }
  ++line_no;
  if (!s.empty() && s.back() == '\r') s.pop_back();  // tolerate CRLF input
  eof = false;
  return s;
}

}  // namespace io_detail

/**
 * @brief Read a labeling from the `torus v1` text format.
 *
 * Format:
 *   torus v1
 *   dims: n1 n2 ... nd
 *   alphabet: <letters>       (concatenated, distinct)
 *   <body>                    (lines of n_d letters, row-major, last
 *                              coordinate fastest; blank lines ignored)
 */
inline Labeling read_labeling(std::istream& in) {
  int line_no = 0;
  bool eof = false;

  std::string header = io_detail::read_line(in, line_no, eof);
  if (eof) throw ParseError(1, 1, "empty input, expected 'torus v1'");
  if (header != "torus v1") throw ParseError(line_no, 1, "expected 'torus v1' header");

  std::string dims_line = io_detail::read_line(in, line_no, eof);
  if (eof) throw ParseError(line_no + 1, 1, "missing 'dims:' line");
  const std::string dims_prefix = "dims:";
  if (dims_line.rfind(dims_prefix, 0) != 0) {
    throw ParseError(line_no, 1, "expected 'dims:' line");
  }
  std::vector<int> dims;
  {
    std::istringstream ds(dims_line.substr(dims_prefix.size()));
    long long v = 0;
    while (ds >> v) dims.push_back(static_cast<int>(v));
    if (!ds.eof()) {
      throw ParseError(line_no, static_cast<int>(dims_prefix.size()) + 1,
                       "dims must be space-separated decimal integers");
    }
    if (dims.empty()) {
      throw ParseError(line_no, static_cast<int>(dims_prefix.size()) + 1,
                       "dims line lists no sides");
    }
  }
  TorusShape shape = [&] {
    try {
      return TorusShape(dims);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, static_cast<int>(dims_prefix.size()) + 1, e.what());
    }
  }();

  std::string alpha_line = io_detail::read_line(in, line_no, eof);
  if (eof) throw ParseError(line_no + 1, 1, "missing 'alphabet:' line");
  const std::string alpha_prefix = "alphabet: ";
  if (alpha_line.rfind(alpha_prefix, 0) != 0) {
    throw ParseError(line_no, 1, "expected 'alphabet: <letters>' line");
  }
  std::string alphabet = alpha_line.substr(alpha_prefix.size());
  if (alphabet.empty()) throw ParseError(line_no, static_cast<int>(alpha_prefix.size()) + 1, "alphabet is empty");
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    char c = alphabet[i];
    if (c == ' ' || c == '\t' || !std::isprint(static_cast<unsigned char>(c))) {
      throw ParseError(line_no, static_cast<int>(alpha_prefix.size() + i) + 1,
                       "alphabet letters must be printable and non-blank");
    }
    for (std::size_t j = i + 1; j < alphabet.size(); ++j) {
      if (alphabet[j] == c) {
        throw ParseError(line_no, static_cast<int>(alpha_prefix.size() + j) + 1,
                         std::string("duplicate alphabet letter '") + c + "'");
      }
    }
  }

  const std::int64_t n_total = shape.total_points();
  const int row_len = shape.dims().back();
  std::vector<std::uint8_t> cells;
  cells.reserve(static_cast<std::size_t>(n_total));

  // A line shorter than a row is tolerated only as the very last body line,
  // where the cell-count check reports the truncation.
  int short_line_no = 0;
  int short_line_len = -1;
  for (;;) {
    std::string body = io_detail::read_line(in, line_no, eof);
    if (eof) break;
    if (body.empty()) continue;  // blank separators between slices
    if (short_line_len >= 0 || static_cast<int>(body.size()) > row_len) {
      const int bad_line = short_line_len >= 0 ? short_line_no : line_no;
      const int bad_len =
          short_line_len >= 0 ? short_line_len : static_cast<int>(body.size());
      throw ParseError(bad_line, 1,
                       "body line has " + std::to_string(bad_len) +
                           " letters, expected " + std::to_string(row_len));
    }
    if (static_cast<int>(body.size()) < row_len) {
      short_line_no = line_no;
      short_line_len = static_cast<int>(body.size());
    }
    for (std::size_t i = 0; i < body.size(); ++i) {
      auto pos = alphabet.find(body[i]);
      if (pos == std::string::npos) {
        throw ParseError(line_no, static_cast<int>(i) + 1,
                         std::string("unknown letter '") + body[i] + "'");
      }
      cells.push_back(static_cast<std::uint8_t>(pos));
    }
    if (static_cast<std::int64_t>(cells.size()) > n_total) {
      throw ParseError(line_no, 1, "expected " + std::to_string(n_total) +
                                       " cells, found more");
    }
  }
  if (static_cast<std::int64_t>(cells.size()) != n_total) {
    throw ParseError(line_no + 1, 1,
                     "expected " + std::to_string(n_total) + " cells, found " +
                         std::to_string(cells.size()));
  }
  if (short_line_len >= 0) {
    throw ParseError(short_line_no, 1,
                     "body line has " + std::to_string(short_line_len) +
                         " letters, expected " + std::to_string(row_len));
  }
  return Labeling(shape, std::move(alphabet), std::move(cells));
}

inline Labeling read_labeling_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_labeling(in);
}

/// Write the canonical `torus v1` form: one blank line between successive
/// 2-D slices when d >= 3, none otherwise. read(write(l)) == l bit-exactly.
inline void write_labeling(std::ostream& out, const Labeling& l) {
  const TorusShape& shape = l.shape();
  out << "torus v1\n";
  out << "dims:";
  for (int n : shape.dims()) out << ' ' << n;
  out << '\n';
  out << "alphabet: " << l.alphabet() << '\n';

  const int d = shape.dim();
  const std::int64_t row_len = shape.dims()[d - 1];
  const std::int64_t slice_len = d >= 2 ? row_len * shape.dims()[d - 2] : row_len;
  const std::int64_t n_total = shape.total_points();
  for (std::int64_t start = 0; start < n_total; start += row_len) {
    if (d >= 3 && start > 0 && start % slice_len == 0) out << '\n';
    for (std::int64_t i = start; i < start + row_len; ++i) out << l.letter_at(i);
    out << '\n';
  }
}

inline std::string write_labeling_to_string(const Labeling& l) {
  std::ostringstream out;
  write_labeling(out, l);
  return out.str();
}

}  // namespace wordtorus
