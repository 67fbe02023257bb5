#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wordtorus/constructions.hpp"
#include "wordtorus/counting.hpp"
#include "wordtorus/incremental.hpp"
#include "wordtorus/rng.hpp"
#include "wordtorus/spectral.hpp"
#include "wordtorus/torus.hpp"
#include "wordtorus/word.hpp"

namespace wordtorus {

/// Seeded local-search configuration. Identical configs give identical
/// results, bit for bit, for any worker count.
struct SearchConfig {
  std::uint64_t seed = 0;
  int restarts = 1;
  int max_plateau_moves = 64;
  enum class Init { kRandom, kPsTruncated } init = Init::kRandom;
  int workers = 1;
};

struct SearchResult {
  explicit SearchResult(Labeling l) : best(std::move(l)) {}

  Labeling best;
  std::int64_t best_count = 0;
  int best_restart = 0;
  SpectralBound bound;
  std::int64_t gap = 0;  // bound.word_bound - best_count
  std::uint64_t trace_hash = 0;
  std::vector<std::int64_t> restart_counts;
};

namespace search_detail {

struct RestartOutcome {
  std::vector<std::uint8_t> cells;
  std::int64_t count = -1;
  std::uint64_t trace = 0;
};

inline std::vector<std::uint8_t> initial_cells(const Word& w, const TorusShape& shape,
                                               SearchConfig::Init init,
                                               SplitMix64& rng) {
  const std::size_t n = static_cast<std::size_t>(shape.total_points());
  const std::size_t n_letters = w.distinct_letters().size();
  std::vector<std::uint8_t> cells(n);
  if (init == SearchConfig::Init::kRandom) {
    for (auto& c : cells) c = static_cast<std::uint8_t>(rng.next_below(n_letters));
    return cells;
  }
  // Stripe pattern written along the longest axis even when its length is
  // incompatible with the period; the wrap seam is the search's problem.
  const std::string cycle = back_and_forth_pattern(w);
  const std::string alphabet = w.distinct_letters();
  int axis = 0;
  for (int a = 1; a < shape.dim(); ++a) {
    if (shape.dims()[static_cast<std::size_t>(a)] >
        shape.dims()[static_cast<std::size_t>(axis)]) {
      axis = a;
    }
  }
  std::vector<int> x(static_cast<std::size_t>(shape.dim()), 0);
  bool done = false;
  std::int64_t flat = 0;
  while (!done) {
    char letter = cycle[static_cast<std::size_t>(
        x[static_cast<std::size_t>(axis)] % static_cast<int>(cycle.size()))];
    cells[static_cast<std::size_t>(flat)] =
        static_cast<std::uint8_t>(alphabet.find(letter));
    counting_detail::increment_odometer(x, shape.dims(), done);
    ++flat;
  }
  return cells;
}

inline RestartOutcome run_restart(const WindowTable& table, const Word& w,
                                  const TorusShape& shape, const SearchConfig& cfg,
                                  int restart_index) {
  SplitMix64 rng(mix64(cfg.seed, static_cast<std::uint64_t>(restart_index)));
  const std::size_t n_letters = w.distinct_letters().size();
  const std::int64_t n_cells = shape.total_points();

  IncrementalCounter counter(table);
  counter.reset(initial_cells(w, shape, cfg.init, rng));

  RestartOutcome out;
  out.trace = mix64(0x73746172ULL, static_cast<std::uint64_t>(restart_index));

  std::vector<std::int64_t> moves(static_cast<std::size_t>(n_cells) * n_letters);
  for (std::size_t i = 0; i < moves.size(); ++i) moves[i] = static_cast<std::int64_t>(i);

  std::int64_t current = counter.count();
  int plateau_left = cfg.max_plateau_moves;
  for (;;) {
    // fresh seeded scan order each pass: first improvement, seeded tie-break
    for (std::size_t i = moves.size(); i > 1; --i) {
      std::swap(moves[i - 1], moves[static_cast<std::size_t>(rng.next_below(i))]);
    }
    bool improved = false;
    std::int64_t sideways = -1;
    for (std::int64_t m : moves) {
      const std::int64_t cell = m / static_cast<std::int64_t>(n_letters);
      const std::uint8_t letter =
          static_cast<std::uint8_t>(m % static_cast<std::int64_t>(n_letters));
      const std::uint8_t old = counter.cell(cell);
      if (letter == old) continue;
      const std::int64_t after = counter.set_cell(cell, letter);
      if (after > current) {
        current = after;
        plateau_left = cfg.max_plateau_moves;
        out.trace = mix64(out.trace, static_cast<std::uint64_t>(m));
        improved = true;
        break;
      }
      if (after == current && sideways < 0) sideways = m;
      counter.set_cell(cell, old);  // revert
    }
    if (improved) continue;
    if (sideways >= 0 && plateau_left > 0) {
      const std::int64_t cell = sideways / static_cast<std::int64_t>(n_letters);
      const std::uint8_t letter =
          static_cast<std::uint8_t>(sideways % static_cast<std::int64_t>(n_letters));
      counter.set_cell(cell, letter);
      --plateau_left;
      out.trace = mix64(out.trace, static_cast<std::uint64_t>(sideways) ^
                                       0x8000000000000000ULL);
      continue;
    }
    break;
  }

  out.cells = counter.cells();
  out.count = current;
  out.trace = mix64(out.trace, static_cast<std::uint64_t>(current));
  return out;
}

}  // namespace search_detail

/**
 * @brief Plateau-tolerant first-improvement hill climbing with seeded
 * restarts over single-cell letter moves.
 *
 * The merge rule is fixed (highest count, then lowest restart index) and
 * per-restart streams derive from seed + restart index, so any scheduling of
 * the restarts reproduces the serial result. The returned count is recomputed
 * from scratch and never exceeds the spectral word bound.
 */
inline SearchResult local_search(const Word& w, const TorusShape& shape,
                                 const SearchConfig& cfg) {
  if (cfg.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (!w.admissible()) {
    throw std::invalid_argument("word is not admissible: '" + w.letters() + "'");
  }
  const WindowTable table(shape, w);
  const std::string alphabet = w.distinct_letters();

  std::vector<search_detail::RestartOutcome> outcomes(
      static_cast<std::size_t>(cfg.restarts));
  const int n_workers = std::max(1, std::min(cfg.workers, cfg.restarts));
  if (n_workers == 1) {
    for (int k = 0; k < cfg.restarts; ++k) {
      outcomes[static_cast<std::size_t>(k)] =
          search_detail::run_restart(table, w, shape, cfg, k);
    }
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < n_workers; ++t) {
      threads.emplace_back([&, t] {
        for (int k = t; k < cfg.restarts; k += n_workers) {
          outcomes[static_cast<std::size_t>(k)] =
              search_detail::run_restart(table, w, shape, cfg, k);
        }
      });
    }
    for (auto& th : threads) th.join();
  }

  int best_restart = 0;
  for (int k = 1; k < cfg.restarts; ++k) {
    if (outcomes[static_cast<std::size_t>(k)].count >
        outcomes[static_cast<std::size_t>(best_restart)].count) {
      best_restart = k;
    }
  }

  Labeling best(shape, alphabet, outcomes[static_cast<std::size_t>(best_restart)].cells);
  const std::int64_t recount = count_word(best, w).word_count;
  if (recount != outcomes[static_cast<std::size_t>(best_restart)].count) {
    throw std::logic_error("incremental count diverged from full recount");
  }

  SearchResult result(std::move(best));
  result.best_count = recount;
  result.best_restart = best_restart;
  result.bound = word_bound(w, shape, /*sharp=*/false);
  if (result.best_count > result.bound.word_bound) {
    throw std::logic_error("search count exceeds the spectral bound");
  }
  result.gap = result.bound.word_bound - result.best_count;
  result.trace_hash = 0x77669955aa33cc11ULL;
  for (const auto& o : outcomes) {
    result.trace_hash = mix64(result.trace_hash, o.trace);
    result.restart_counts.push_back(o.count);
  }
  return result;
}

}  // namespace wordtorus
