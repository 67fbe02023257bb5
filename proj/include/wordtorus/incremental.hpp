#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordtorus/counting.hpp"
#include "wordtorus/torus.hpp"
#include "wordtorus/word.hpp"

namespace wordtorus {

/**
 * @brief Precomputed occurrence windows of a word on a torus.
 *
 * A window is a (start point, direction) pair; win_cells lists the r flat
 * cell indices it reads. For each cell, entries list the windows containing
 * it together with the single letter the cell must carry for that window to
 * spell the word. Windows that need two different letters at one cell (small
 * tori, long words) can never match and are dropped entirely.
 *
 * This is the table behind both the exhaustive odometer scan and the local
 * search delta evaluation.
 */
class WindowTable {
 public:
  WindowTable(const TorusShape& shape, const Word& w)
      : n_cells_(shape.total_points()), word_length_(w.length()) {
    const std::string alphabet = w.distinct_letters();
    word_letters_.resize(static_cast<std::size_t>(word_length_));
    for (int t = 0; t < word_length_; ++t) {
      word_letters_[static_cast<std::size_t>(t)] =
          static_cast<std::uint8_t>(alphabet.find(w.at(t)));
    }

    const std::vector<Direction> dirs = all_directions(shape);
    const std::int64_t n_windows_all = n_cells_ * static_cast<std::int64_t>(dirs.size());
    if (n_windows_all * word_length_ > (std::int64_t{1} << 28)) {
      throw std::invalid_argument("window table too large for this shape");
    }

    // entry lists per cell, then flattened
    std::vector<std::vector<std::pair<std::int32_t, std::uint8_t>>> per_cell(
        static_cast<std::size_t>(n_cells_));
    win_cells_.reserve(static_cast<std::size_t>(n_windows_all * word_length_));

    std::vector<int> x(static_cast<std::size_t>(shape.dim()), 0);
    std::vector<int> c(static_cast<std::size_t>(shape.dim()));
    bool done = false;
    std::int32_t win_id = 0;
    std::vector<std::int32_t> window(static_cast<std::size_t>(word_length_));
    std::vector<std::pair<std::int32_t, std::uint8_t>> requirements;
    while (!done) {
      for (const Direction& y : dirs) {
        c = x;
        for (int t = 0; t < word_length_; ++t) {
          window[static_cast<std::size_t>(t)] =
              static_cast<std::int32_t>(shape.flat_index(c));
          if (t + 1 < word_length_) counting_detail::step_coords(c, y.steps, shape.dims());
        }
        // collapse duplicate cells; conflicting requirements make the window
        // unsatisfiable and it is skipped
        requirements.clear();
        bool feasible = true;
        for (int t = 0; t < word_length_ && feasible; ++t) {
          std::int32_t cell = window[static_cast<std::size_t>(t)];
          std::uint8_t need = word_letters_[static_cast<std::size_t>(t)];
          bool found = false;
          for (auto& req : requirements) {
            if (req.first == cell) {
              found = true;
              if (req.second != need) feasible = false;
            }
          }
          if (!found) requirements.push_back({cell, need});
        }
        if (!feasible) continue;
        for (int t = 0; t < word_length_; ++t) {
          win_cells_.push_back(window[static_cast<std::size_t>(t)]);
        }
        for (auto& req : requirements) {
          per_cell[static_cast<std::size_t>(req.first)].push_back({win_id, req.second});
        }
        ++win_id;
      }
      counting_detail::increment_odometer(x, shape.dims(), done);
    }
    n_windows_ = win_id;

    cell_offsets_.resize(static_cast<std::size_t>(n_cells_) + 1, 0);
    std::size_t total_entries = 0;
    for (std::int64_t i = 0; i < n_cells_; ++i) {
      total_entries += per_cell[static_cast<std::size_t>(i)].size();
      cell_offsets_[static_cast<std::size_t>(i) + 1] = static_cast<std::int64_t>(total_entries);
    }
    entry_window_.reserve(total_entries);
    entry_letter_.reserve(total_entries);
    for (std::int64_t i = 0; i < n_cells_; ++i) {
      for (auto& e : per_cell[static_cast<std::size_t>(i)]) {
        entry_window_.push_back(e.first);
        entry_letter_.push_back(e.second);
      }
    }
  }

  std::int64_t cell_count() const { return n_cells_; }
  std::int64_t window_count() const { return n_windows_; }
  int word_length() const { return word_length_; }
  const std::vector<std::uint8_t>& word_letters() const { return word_letters_; }

  bool spelled(std::int32_t win, const std::vector<std::uint8_t>& cells) const {
    const std::int32_t* wc = &win_cells_[static_cast<std::size_t>(win) *
                                         static_cast<std::size_t>(word_length_)];
    for (int t = 0; t < word_length_; ++t) {
      if (cells[static_cast<std::size_t>(wc[t])] !=
          word_letters_[static_cast<std::size_t>(t)]) {
        return false;
      }
    }
    return true;
  }

  std::int64_t entries_begin(std::int64_t cell) const {
    return cell_offsets_[static_cast<std::size_t>(cell)];
  }
  std::int64_t entries_end(std::int64_t cell) const {
    return cell_offsets_[static_cast<std::size_t>(cell) + 1];
  }
  std::int32_t entry_window(std::int64_t e) const {
    return entry_window_[static_cast<std::size_t>(e)];
  }
  std::uint8_t entry_letter(std::int64_t e) const {
    return entry_letter_[static_cast<std::size_t>(e)];
  }

 private:
  std::int64_t n_cells_;
  std::int64_t n_windows_ = 0;
  int word_length_;
  std::vector<std::uint8_t> word_letters_;
  std::vector<std::int32_t> win_cells_;      // n_windows * r
  std::vector<std::int64_t> cell_offsets_;   // n_cells + 1
  std::vector<std::int32_t> entry_window_;
  std::vector<std::uint8_t> entry_letter_;
};

/**
 * @brief Running occurrence count under single-cell letter changes.
 *
 * Invariant: a matched window incident to a changed cell always unmatches
 * (its required letter there was the old one), so the update per window is a
 * cheap flag flip; only windows whose requirement equals the new letter need
 * a full spell check.
 */
class IncrementalCounter {
 public:
  explicit IncrementalCounter(const WindowTable& table)
      : table_(&table),
        cells_(static_cast<std::size_t>(table.cell_count()), 0),
        matched_(static_cast<std::size_t>(table.window_count()), 0) {}

  void reset(const std::vector<std::uint8_t>& cells) {
    cells_ = cells;
    count_ = 0;
    for (std::int32_t win = 0; win < static_cast<std::int32_t>(table_->window_count());
         ++win) {
      bool m = table_->spelled(win, cells_);
      matched_[static_cast<std::size_t>(win)] = m ? 1 : 0;
      count_ += m ? 1 : 0;
    }
  }

  /// Change one cell's letter and return the new total count.
  std::int64_t set_cell(std::int64_t cell, std::uint8_t letter) {
    const std::uint8_t old = cells_[static_cast<std::size_t>(cell)];
    if (old == letter) return count_;
    cells_[static_cast<std::size_t>(cell)] = letter;
    const std::int64_t end = table_->entries_end(cell);
    for (std::int64_t e = table_->entries_begin(cell); e < end; ++e) {
      const std::int32_t win = table_->entry_window(e);
      if (matched_[static_cast<std::size_t>(win)]) {
        matched_[static_cast<std::size_t>(win)] = 0;
        --count_;
      } else if (table_->entry_letter(e) == letter && table_->spelled(win, cells_)) {
        matched_[static_cast<std::size_t>(win)] = 1;
        ++count_;
      }
    }
    return count_;
  }

  std::int64_t count() const { return count_; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }
  std::uint8_t cell(std::int64_t i) const { return cells_[static_cast<std::size_t>(i)]; }

 private:
  const WindowTable* table_;
  std::vector<std::uint8_t> cells_;
  std::vector<std::uint8_t> matched_;
  std::int64_t count_ = 0;
};

}  // namespace wordtorus
