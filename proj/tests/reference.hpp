// Test-only reference implementations, kept deliberately naive and independent
// of the production counting/oracle paths: they walk points with advance()
// and recount from scratch every time. Expected values in the suites are
// frozen from these.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "wordtorus/counting.hpp"
#include "wordtorus/torus.hpp"
#include "wordtorus/word.hpp"

namespace testref {

inline std::int64_t naive_count_word(const wordtorus::Labeling& l,
                                     const wordtorus::Word& w) {
  using namespace wordtorus;
  const TorusShape& shape = l.shape();
  std::int64_t count = 0;
  for (std::int64_t xf = 0; xf < shape.total_points(); ++xf) {
    Point x{shape.coords_of(xf)};
    for (const Direction& y : all_directions(shape)) {
      bool match = true;
      for (int t = 0; t < w.length() && match; ++t) {
        match = l.letter_at(advance(x, y, t, shape)) == w.at(t);
      }
      if (match) ++count;
    }
  }
  return count;
}

inline std::int64_t naive_count_pairs(const wordtorus::Labeling& l,
                                      const std::set<char>& s1,
                                      const std::set<char>& s2) {
  using namespace wordtorus;
  const TorusShape& shape = l.shape();
  std::int64_t count = 0;
  for (std::int64_t xf = 0; xf < shape.total_points(); ++xf) {
    Point x{shape.coords_of(xf)};
    if (!s1.count(l.letter_at(x))) continue;
    for (const Direction& y : all_directions(shape)) {
      if (s2.count(l.letter_at(advance(x, y, 1, shape)))) ++count;
    }
  }
  return count;
}

struct NaiveScan {
  std::int64_t max_count = -1;
  std::vector<std::string> argmax;  // cell strings, odometer order
};

/// Full enumeration with per-labeling naive recount; tiny shapes only.
inline NaiveScan naive_brute_force(const wordtorus::Word& w,
                                   const wordtorus::TorusShape& shape) {
  using namespace wordtorus;
  const std::string alphabet = w.distinct_letters();
  const std::int64_t n = shape.total_points();
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n), 0);
  NaiveScan out;
  for (;;) {
    Labeling l(shape, alphabet, cells);
    std::int64_t c = naive_count_word(l, w);
    if (c > out.max_count) {
      out.max_count = c;
      out.argmax.assign(1, l.cell_string());
    } else if (c == out.max_count) {
      out.argmax.push_back(l.cell_string());
    }
    std::int64_t i = n - 1;
    while (i >= 0 && cells[static_cast<std::size_t>(i)] == alphabet.size() - 1) {
      cells[static_cast<std::size_t>(i--)] = 0;
    }
    if (i < 0) break;
    ++cells[static_cast<std::size_t>(i)];
  }
  return out;
}

/// Directed cut of a 0/1 mask (bit i = 1 when flat cell i is in the locus).
inline std::int64_t naive_cut(const wordtorus::TorusShape& shape, std::uint64_t mask) {
  using namespace wordtorus;
  std::int64_t cut = 0;
  for (std::int64_t xf = 0; xf < shape.total_points(); ++xf) {
    if (!((mask >> xf) & 1)) continue;
    Point x{shape.coords_of(xf)};
    for (const Direction& y : all_directions(shape)) {
      std::int64_t nf = shape.flat_index(advance(x, y, 1, shape).coords);
      cut += ((mask >> nf) & 1) == 0;
    }
  }
  return cut;
}

}  // namespace testref
