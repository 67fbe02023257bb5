#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wordtorus/torus.hpp"
#include "wordtorus/word.hpp"

namespace wordtorus {

/// Result of count_word. by_direction follows all_directions order and is
/// filled only on request; its entries sum to word_count.
struct OccurrenceCount {
  std::int64_t word_count = 0;
  std::optional<std::vector<std::int64_t>> by_direction;
};

/// One witness: the start point and direction of a spelling.
struct Occurrence {
  Point start;
  Direction direction;
};

namespace counting_detail {

// One wrap-around step of coords along steps. Steps are in {-1,0,1} so a
// single compare per coordinate suffices.
inline void step_coords(std::vector<int>& coords, const std::vector<int>& steps,
                        const std::vector<int>& dims) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    int v = coords[i] + steps[i];
    if (v == dims[i]) v = 0;
    if (v < 0) v = dims[i] - 1;
    coords[i] = v;
  }
}

inline void increment_odometer(std::vector<int>& coords, const std::vector<int>& dims,
                               bool& done) {
  int i = static_cast<int>(coords.size()) - 1;
  while (i >= 0 && coords[i] == dims[i] - 1) coords[i--] = 0;
  if (i < 0) {
    done = true;
  } else {
    ++coords[i];
  }
}

// Word letters translated to alphabet indices; index -1 marks a letter the
// alphabet lacks (no occurrence can exist then).
inline std::vector<int> word_letter_indices(const Labeling& l, const Word& w) {
  std::vector<int> idx(static_cast<std::size_t>(w.length()));
  for (int t = 0; t < w.length(); ++t) idx[static_cast<std::size_t>(t)] = l.letter_index(w.at(t));
  return idx;
}

}  // namespace counting_detail

/**
 * @brief Count occurrences of w: pairs (x, y) of a start point and a king-move
 * direction such that x, x+y, ..., x+(r-1)y carry the letters of w in order.
 *
 * Every (x, y) pair counts once, so a point set spelling a palindromic word in
 * both directions contributes once per spelling direction.
 */
inline OccurrenceCount count_word(const Labeling& l, const Word& w,
                                  bool with_breakdown = false) {
  const TorusShape& shape = l.shape();
  const std::vector<int>& dims = shape.dims();
  const std::vector<Direction> dirs = all_directions(shape);
  const std::vector<int> widx = counting_detail::word_letter_indices(l, w);
  const int r = w.length();
  const auto& cells = l.cells();

  OccurrenceCount result;
  if (with_breakdown) result.by_direction.emplace(dirs.size(), 0);

  for (int t = 0; t < r; ++t) {
    if (widx[static_cast<std::size_t>(t)] < 0) return result;  // letter absent: zero
  }

  std::vector<int> x(dims.size(), 0);
  std::vector<int> c(dims.size());
  bool done = shape.total_points() == 0;
  while (!done) {
    if (cells[static_cast<std::size_t>(shape.flat_index(x))] ==
        static_cast<std::uint8_t>(widx[0])) {
      for (std::size_t di = 0; di < dirs.size(); ++di) {
        c = x;
        bool match = true;
        for (int t = 1; t < r; ++t) {
          counting_detail::step_coords(c, dirs[di].steps, dims);
          if (cells[static_cast<std::size_t>(shape.flat_index(c))] !=
              static_cast<std::uint8_t>(widx[static_cast<std::size_t>(t)])) {
            match = false;
            break;
          }
        }
        if (match) {
          ++result.word_count;
          if (result.by_direction) (*result.by_direction)[di] += 1;
        }
      }
    }
    counting_detail::increment_odometer(x, dims, done);
  }
  return result;
}

/**
 * @brief List every occurrence of w in deterministic order: start point major
 * (flat index order), then direction in all_directions order.
 */
inline std::vector<Occurrence> enumerate_occurrences(const Labeling& l, const Word& w) {
  const TorusShape& shape = l.shape();
  const std::vector<int>& dims = shape.dims();
  const std::vector<Direction> dirs = all_directions(shape);
  const std::vector<int> widx = counting_detail::word_letter_indices(l, w);
  const int r = w.length();
  const auto& cells = l.cells();

  std::vector<Occurrence> out;
  for (int t = 0; t < r; ++t) {
    if (widx[static_cast<std::size_t>(t)] < 0) return out;
  }

  std::vector<int> x(dims.size(), 0);
  std::vector<int> c(dims.size());
  bool done = shape.total_points() == 0;
  while (!done) {
    for (std::size_t di = 0; di < dirs.size(); ++di) {
      c = x;
      bool match = true;
      for (int t = 0; t < r; ++t) {
        if (cells[static_cast<std::size_t>(shape.flat_index(c))] !=
            static_cast<std::uint8_t>(widx[static_cast<std::size_t>(t)])) {
          match = false;
          break;
        }
        if (t + 1 < r) counting_detail::step_coords(c, dirs[di].steps, dims);
      }
      if (match) out.push_back(Occurrence{Point{x}, dirs[di]});
    }
    counting_detail::increment_odometer(x, dims, done);
  }
  return out;
}

/**
 * @brief Ordered adjacent-pair count: pairs (x, x+y) over all points x and all
 * 3^d - 1 directions y with letter(x) in s1 and letter(x+y) in s2.
 *
 * The direction set is closed under negation, so count_pairs(s1, s2) ==
 * count_pairs(s2, s1), and summing over a partition of the alphabet gives
 * N * (3^d - 1).
 */
inline std::int64_t count_pairs(const Labeling& l, const std::set<char>& s1,
                                const std::set<char>& s2) {
  const TorusShape& shape = l.shape();
  const std::vector<int>& dims = shape.dims();
  const std::vector<Direction> dirs = all_directions(shape);
  const auto& cells = l.cells();

  std::vector<char> in1(l.alphabet().size(), 0), in2(l.alphabet().size(), 0);
  for (char ch : s1) {
    int i = l.letter_index(ch);
    if (i >= 0) in1[static_cast<std::size_t>(i)] = 1;
  }
  for (char ch : s2) {
    int i = l.letter_index(ch);
    if (i >= 0) in2[static_cast<std::size_t>(i)] = 1;
  }

  std::int64_t count = 0;
  std::vector<int> x(dims.size(), 0);
  std::vector<int> c(dims.size());
  bool done = shape.total_points() == 0;
  while (!done) {
    if (in1[cells[static_cast<std::size_t>(shape.flat_index(x))]]) {
      for (const Direction& y : dirs) {
        c = x;
        counting_detail::step_coords(c, y.steps, dims);
        if (in2[cells[static_cast<std::size_t>(shape.flat_index(c))]]) ++count;
      }
    }
    counting_detail::increment_odometer(x, dims, done);
  }
  return count;
}

inline std::set<char> letter_set(const std::string& letters) {
  return std::set<char>(letters.begin(), letters.end());
}

}  // namespace wordtorus
