#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wordtorus/constructions.hpp"
#include "wordtorus/counting.hpp"
#include "wordtorus/incremental.hpp"
#include "wordtorus/spectral.hpp"
#include "wordtorus/torus.hpp"
#include "wordtorus/word.hpp"

namespace wordtorus {

inline constexpr std::int64_t kScanGuard = 100'000'000;  // labelings / signings
inline constexpr std::int64_t kArgmaxCap = 100'000;      // stored maximizers

/// Exhaustive-scan result. argmax_cells lists maximizers in enumeration order
/// (base-|alphabet| odometer over the flat cell array), complete exactly when
/// argmax_count <= kArgmaxCap and the scan ran in full-argmax mode.
struct ExtremalReport {
  explicit ExtremalReport(TorusShape s) : shape(std::move(s)) {}

  TorusShape shape;
  std::string word;
  std::string alphabet;
  std::int64_t max_count = 0;
  std::int64_t argmax_count = 0;
  std::vector<std::string> argmax_cells;
  bool argmax_complete = false;
  std::string argmax_sample;
  SpectralBound bound;       // the 3^{d-1} N / (r-1) route
  bool attained = false;     // exact rational-bound equality
  std::optional<bool> all_argmax_are_ps;
  std::int64_t scanned = 0;
};

namespace oracle_detail {

inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp,
                                std::int64_t guard) {
  std::int64_t v = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (v > guard / base) return -1;
    v *= base;
  }
  return v;
}

inline void decode_odometer(std::int64_t index, std::int64_t base,
                            std::vector<std::uint8_t>& digits) {
  for (std::int64_t i = static_cast<std::int64_t>(digits.size()) - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index % base);
    index /= base;
  }
}

struct WorkerResult {
  std::int64_t best = -1;
  std::int64_t argmax_count = 0;
  std::vector<std::vector<std::uint8_t>> argmax;
  std::vector<std::uint8_t> first_argmax;
};

inline void scan_range(const WindowTable& table, std::int64_t base,
                       std::int64_t begin, std::int64_t end, bool keep_list,
                       WorkerResult& out) {
  if (begin >= end) return;
  const std::int64_t n_cells = table.cell_count();
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(n_cells));
  decode_odometer(begin, base, digits);
  IncrementalCounter counter(table);
  counter.reset(digits);

  auto consider = [&] {
    const std::int64_t c = counter.count();
    if (c > out.best) {
      out.best = c;
      out.argmax_count = 1;
      out.first_argmax = counter.cells();
      out.argmax.clear();
      if (keep_list) out.argmax.push_back(counter.cells());
    } else if (c == out.best) {
      ++out.argmax_count;
      if (keep_list && static_cast<std::int64_t>(out.argmax.size()) < kArgmaxCap) {
        out.argmax.push_back(counter.cells());
      }
    }
  };

  consider();
  for (std::int64_t idx = begin + 1; idx < end; ++idx) {
    // odometer bump with carries, each digit change applied incrementally
    std::int64_t i = n_cells - 1;
    while (digits[static_cast<std::size_t>(i)] == base - 1) {
      digits[static_cast<std::size_t>(i)] = 0;
      counter.set_cell(i, 0);
      --i;
    }
    ++digits[static_cast<std::size_t>(i)];
    counter.set_cell(i, digits[static_cast<std::size_t>(i)]);
    consider();
  }
}

}  // namespace oracle_detail

/**
 * @brief Exact maximum of count_word over every labeling of the shape by the
 * word's letters, by exhaustive odometer scan with incremental recount.
 *
 * Deterministic for any worker count: ranges partition the odometer order and
 * the merge keeps that order. Guarded to |alphabet|^N <= 1e8.
 */
inline ExtremalReport brute_force(const Word& w, const TorusShape& shape,
                                  bool values_only = false, int workers = 1) {
  const std::string alphabet = w.distinct_letters();
  const std::int64_t base = static_cast<std::int64_t>(alphabet.size());
  const std::int64_t total =
      oracle_detail::checked_pow(base, shape.total_points(), kScanGuard);
  if (total < 0) {
    const std::int64_t max_cells = static_cast<std::int64_t>(
        std::floor(std::log(static_cast<double>(kScanGuard)) /
                   std::log(static_cast<double>(base))));
    throw std::invalid_argument(
        "search space " + std::to_string(base) + "^" +
        std::to_string(shape.total_points()) + " exceeds the 1e8 scan guard; " +
        "at alphabet size " + std::to_string(base) +
        " the largest feasible torus has " + std::to_string(max_cells) + " cells");
  }

  const WindowTable table(shape, w);
  const int n_workers =
      static_cast<int>(std::min<std::int64_t>(std::max(workers, 1), total));
  std::vector<oracle_detail::WorkerResult> results(static_cast<std::size_t>(n_workers));
  const bool keep_list = !values_only;

  if (n_workers == 1) {
    oracle_detail::scan_range(table, base, 0, total, keep_list, results[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(n_workers));
    for (int k = 0; k < n_workers; ++k) {
      const std::int64_t begin = total * k / n_workers;
      const std::int64_t end = total * (k + 1) / n_workers;
      threads.emplace_back([&table, base, begin, end, keep_list, &results, k] {
        oracle_detail::scan_range(table, base, begin, end, keep_list,
                                  results[static_cast<std::size_t>(k)]);
      });
    }
    for (auto& t : threads) t.join();
  }

  ExtremalReport report(shape);
  report.word = w.letters();
  report.alphabet = alphabet;
  report.scanned = total;
  std::int64_t best = -1;
  for (const auto& r : results) best = std::max(best, r.best);
  report.max_count = best;
  for (const auto& r : results) {
    if (r.best != best) continue;
    report.argmax_count += r.argmax_count;
    if (report.argmax_sample.empty() && !r.first_argmax.empty()) {
      std::string s(r.first_argmax.size(), ' ');
      for (std::size_t i = 0; i < r.first_argmax.size(); ++i) s[i] = alphabet[r.first_argmax[i]];
      report.argmax_sample = s;
    }
    if (keep_list) {
      for (const auto& cells : r.argmax) {
        if (static_cast<std::int64_t>(report.argmax_cells.size()) >= kArgmaxCap) break;
        std::string s(cells.size(), ' ');
        for (std::size_t i = 0; i < cells.size(); ++i) s[i] = alphabet[cells[i]];
        report.argmax_cells.push_back(std::move(s));
      }
    }
  }
  report.argmax_complete = keep_list && report.argmax_count <= kArgmaxCap;

  report.bound = word_bound(w, shape, /*sharp=*/false);
  report.attained = attains_exact_bound(report.max_count, w, shape);
  if (report.argmax_complete) {
    bool all_ps = true;
    for (const std::string& cells : report.argmax_cells) {
      std::vector<std::uint8_t> idx(cells.size());
      for (std::size_t i = 0; i < cells.size(); ++i) {
        idx[i] = static_cast<std::uint8_t>(alphabet.find(cells[i]));
      }
      Labeling l(shape, alphabet, std::move(idx));
      if (!is_generalized_ps(l, w).is_member) {
        all_ps = false;
        break;
      }
    }
    report.all_argmax_are_ps = all_ps;
  }
  return report;
}

/// A parity-stripe locus: the cells with x_axis = parity (mod 2).
struct StripeLocus {
  int axis = 0;  // 0-based
  int parity = 0;
};

/// Result of the exhaustive two-coloring scan for the pair count maximum.
struct PairScanReport {
  explicit PairScanReport(TorusShape s) : shape(std::move(s)) {}

  TorusShape shape;
  std::int64_t max_pairs = 0;
  std::int64_t maximizer_count = 0;
  std::vector<std::string> maximizer_cells;  // 'A' on the locus, '.' off it
  std::vector<std::optional<StripeLocus>> maximizer_stripes;
  bool all_maximizers_are_stripes = false;
  PairBound bound;
  bool attained = false;
  std::int64_t scanned = 0;
};

namespace oracle_detail {

struct PairWorkerResult {
  std::int64_t best = -1;
  std::int64_t count = 0;
  std::vector<std::uint64_t> masks;
};

inline void scan_pairs_range(const std::vector<std::int32_t>& neighbors,
                             std::int64_t n_cells, std::int64_t degree,
                             std::uint64_t begin, std::uint64_t end,
                             PairWorkerResult& out) {
  if (begin >= end) return;
  std::uint64_t mask = begin ^ (begin >> 1);  // Gray code of the range start
  std::vector<std::uint8_t> in(static_cast<std::size_t>(n_cells), 0);
  for (std::int64_t i = 0; i < n_cells; ++i) {
    in[static_cast<std::size_t>(i)] = (mask >> i) & 1;
  }
  // directed cut = pairs (x, x+y) with x in the locus and x+y outside
  std::int64_t cut = 0;
  for (std::int64_t x = 0; x < n_cells; ++x) {
    if (!in[static_cast<std::size_t>(x)]) continue;
    for (std::int64_t k = 0; k < degree; ++k) {
      cut += in[static_cast<std::size_t>(
                 neighbors[static_cast<std::size_t>(x * degree + k)])] == 0;
    }
  }

  auto consider = [&] {
    if (cut > out.best) {
      out.best = cut;
      out.count = 1;
      out.masks.assign(1, mask);
    } else if (cut == out.best) {
      ++out.count;
      if (static_cast<std::int64_t>(out.masks.size()) < kArgmaxCap) {
        out.masks.push_back(mask);
      }
    }
  };

  consider();
  for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
    const int bit = static_cast<int>(__builtin_ctzll(idx));
    const std::int64_t c = static_cast<std::int64_t>(bit);
    std::int64_t deg_in = 0;
    for (std::int64_t k = 0; k < degree; ++k) {
      deg_in += in[static_cast<std::size_t>(
          neighbors[static_cast<std::size_t>(c * degree + k)])];
    }
    if (in[static_cast<std::size_t>(c)]) {
      in[static_cast<std::size_t>(c)] = 0;
      cut += 2 * deg_in - degree;
    } else {
      in[static_cast<std::size_t>(c)] = 1;
      cut += degree - 2 * deg_in;
    }
    mask ^= std::uint64_t{1} << bit;
    consider();
  }
}

}  // namespace oracle_detail

/**
 * @brief Exact maximum of the directed cut (the odd-to-even pair count) over
 * all 2^N two-colorings, with the full maximizer set.
 *
 * Gray-code enumeration, one O(3^d) cut update per signing. Maximizers are
 * reported sorted by mask value so the output is canonical for any worker
 * count.
 */
inline PairScanReport brute_force_pairs(const TorusShape& shape, int workers = 1) {
  const std::int64_t n_cells = shape.total_points();
  if (n_cells >= 27) {
    throw std::invalid_argument("pair scan guard: 2^N exceeds 1e8 for N >= 27");
  }
  const std::uint64_t total = std::uint64_t{1} << n_cells;
  const std::int64_t degree = shape.direction_count();

  // flat neighbor table, all_directions order
  std::vector<std::int32_t> neighbors(
      static_cast<std::size_t>(n_cells * degree));
  {
    const std::vector<Direction> dirs = all_directions(shape);
    std::vector<int> x(static_cast<std::size_t>(shape.dim()), 0);
    std::vector<int> c(static_cast<std::size_t>(shape.dim()));
    bool done = false;
    std::int64_t flat = 0;
    while (!done) {
      for (std::int64_t k = 0; k < degree; ++k) {
        c = x;
        counting_detail::step_coords(c, dirs[static_cast<std::size_t>(k)].steps,
                                     shape.dims());
        neighbors[static_cast<std::size_t>(flat * degree + k)] =
            static_cast<std::int32_t>(shape.flat_index(c));
      }
      counting_detail::increment_odometer(x, shape.dims(), done);
      ++flat;
    }
  }

  const int n_workers = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(workers, 1)), total));
  std::vector<oracle_detail::PairWorkerResult> results(
      static_cast<std::size_t>(n_workers));
  if (n_workers == 1) {
    oracle_detail::scan_pairs_range(neighbors, n_cells, degree, 0, total, results[0]);
  } else {
    std::vector<std::thread> threads;
    for (int k = 0; k < n_workers; ++k) {
      const std::uint64_t begin = total / n_workers * k +
                                  std::min<std::uint64_t>(k, total % n_workers);
      const std::uint64_t end = total / n_workers * (k + 1) +
                                std::min<std::uint64_t>(k + 1, total % n_workers);
      threads.emplace_back([&, begin, end, k] {
        oracle_detail::scan_pairs_range(neighbors, n_cells, degree, begin, end,
                                        results[static_cast<std::size_t>(k)]);
      });
    }
    for (auto& t : threads) t.join();
  }

  PairScanReport report(shape);
  report.scanned = static_cast<std::int64_t>(total);
  std::int64_t best = -1;
  for (const auto& r : results) best = std::max(best, r.best);
  report.max_pairs = best;
  std::vector<std::uint64_t> masks;
  for (const auto& r : results) {
    if (r.best != best) continue;
    report.maximizer_count += r.count;
    masks.insert(masks.end(), r.masks.begin(), r.masks.end());
  }
  std::sort(masks.begin(), masks.end());
  if (static_cast<std::int64_t>(masks.size()) > kArgmaxCap) masks.resize(kArgmaxCap);

  // stripe masks for structure detection
  std::vector<std::pair<std::uint64_t, StripeLocus>> stripes;
  for (int axis = 0; axis < shape.dim(); ++axis) {
    for (int parity = 0; parity < 2; ++parity) {
      std::uint64_t m = 0;
      std::vector<int> x(static_cast<std::size_t>(shape.dim()), 0);
      bool done = false;
      std::int64_t flat = 0;
      while (!done) {
        if ((x[static_cast<std::size_t>(axis)] & 1) == parity) {
          m |= std::uint64_t{1} << flat;
        }
        counting_detail::increment_odometer(x, shape.dims(), done);
        ++flat;
      }
      stripes.push_back({m, StripeLocus{axis, parity}});
    }
  }

  report.all_maximizers_are_stripes = true;
  for (std::uint64_t m : masks) {
    std::string s(static_cast<std::size_t>(n_cells), '.');
    for (std::int64_t i = 0; i < n_cells; ++i) {
      if ((m >> i) & 1) s[static_cast<std::size_t>(i)] = 'A';
    }
    report.maximizer_cells.push_back(std::move(s));
    std::optional<StripeLocus> found;
    for (const auto& [sm, locus] : stripes) {
      if (sm == m) {
        found = locus;
        break;
      }
    }
    if (!found) report.all_maximizers_are_stripes = false;
    report.maximizer_stripes.push_back(found);
  }
  if (report.maximizer_count > static_cast<std::int64_t>(masks.size())) {
    report.all_maximizers_are_stripes = false;  // unseen maximizers: unknown
  }

  report.bound = pair_bound(shape, /*sharp=*/false);
  report.attained =
      report.max_pairs == pow3(shape.dim() - 1) * shape.total_points();
  return report;
}

/// Census of labelings satisfying the two structural consequences of
/// extremality: even-position letters fill one parity of an axis, and letters
/// are constant on each (axis coordinate, transverse parity class) slot.
struct ConstrainedScanReport {
  explicit ConstrainedScanReport(TorusShape s) : shape(std::move(s)) {}

  TorusShape shape;
  std::string word;
  std::string alphabet;
  std::int64_t scanned = 0;
  std::int64_t family_max = 0;
  std::int64_t word_bound = 0;
  std::vector<std::string> attainer_cells;  // deduped, deterministic order
  std::int64_t attainer_count = 0;
};

/**
 * @brief Enumerate the constrained family and return every member attaining
 * the word bound. Feasible where the full scan is not (the slot count grows
 * like n * 2^{d-1} instead of N).
 */
inline ConstrainedScanReport constrained_extremal_scan(const Word& w,
                                                       const TorusShape& shape) {
  if (!w.admissible()) {
    throw std::invalid_argument("word is not admissible: '" + w.letters() + "'");
  }
  const int period = 2 * w.length() - 2;
  {
    bool any = false;
    for (int n : shape.dims()) any |= (n % period == 0);
    if (!any) {
      throw std::invalid_argument("no side is divisible by " + std::to_string(period));
    }
  }

  const std::string alphabet = w.distinct_letters();
  std::string odd_letters, even_letters;
  for (char c : alphabet) {
    if (w.odd_set().count(c)) odd_letters.push_back(c);
    if (w.even_set().count(c)) even_letters.push_back(c);
  }

  ConstrainedScanReport report(shape);
  report.word = w.letters();
  report.alphabet = alphabet;
  report.word_bound = word_bound(w, shape, /*sharp=*/false).word_bound;

  std::set<std::string> attainers;
  for (int axis = 0; axis < shape.dim(); ++axis) {
    const int n_axis = shape.dims()[static_cast<std::size_t>(axis)];
    const int classes = 1 << (shape.dim() - 1);
    for (int parity = 0; parity < 2; ++parity) {
      // slot (h, class) -> letters allowed by the parity split
      std::vector<const std::string*> slot_letters(
          static_cast<std::size_t>(n_axis) * static_cast<std::size_t>(classes));
      for (int h = 0; h < n_axis; ++h) {
        const std::string* side = ((h & 1) == parity) ? &odd_letters : &even_letters;
        for (int cls = 0; cls < classes; ++cls) {
          slot_letters[static_cast<std::size_t>(h * classes + cls)] = side;
        }
      }
      double combos = 1.0;
      for (const auto* s : slot_letters) combos *= static_cast<double>(s->size());
      if (combos > static_cast<double>(kScanGuard)) {
        throw std::invalid_argument("constrained census exceeds the 1e8 scan guard");
      }

      // precomputed slot of each cell
      std::vector<std::int32_t> cell_slot(
          static_cast<std::size_t>(shape.total_points()));
      {
        std::vector<int> x(static_cast<std::size_t>(shape.dim()), 0);
        bool done = false;
        std::int64_t flat = 0;
        while (!done) {
          cell_slot[static_cast<std::size_t>(flat)] = static_cast<std::int32_t>(
              x[static_cast<std::size_t>(axis)] * classes +
              construction_detail::transverse_class(x, axis));
          counting_detail::increment_odometer(x, shape.dims(), done);
          ++flat;
        }
      }

      std::vector<int> choice(slot_letters.size(), 0);
      std::vector<std::uint8_t> cells(static_cast<std::size_t>(shape.total_points()));
      bool done = false;
      while (!done) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          char letter = (*slot_letters[static_cast<std::size_t>(
              cell_slot[i])])[static_cast<std::size_t>(
              choice[static_cast<std::size_t>(cell_slot[i])])];
          cells[i] = static_cast<std::uint8_t>(alphabet.find(letter));
        }
        Labeling l(shape, alphabet, cells);
        const std::int64_t count = count_word(l, w).word_count;
        report.family_max = std::max(report.family_max, count);
        ++report.scanned;
        if (count == report.word_bound) attainers.insert(l.cell_string());

        int i = static_cast<int>(choice.size()) - 1;
        while (i >= 0 &&
               choice[static_cast<std::size_t>(i)] ==
                   static_cast<int>(slot_letters[static_cast<std::size_t>(i)]->size()) - 1) {
          choice[static_cast<std::size_t>(i--)] = 0;
        }
        if (i < 0) {
          done = true;
        } else {
          ++choice[static_cast<std::size_t>(i)];
        }
      }
    }
  }

  report.attainer_cells.assign(attainers.begin(), attainers.end());
  report.attainer_count = static_cast<std::int64_t>(report.attainer_cells.size());
  return report;
}

}  // namespace wordtorus
