#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordtorus/counting.hpp"
#include "wordtorus/torus.hpp"
#include "wordtorus/word.hpp"

namespace wordtorus {

/**
 * @brief Cyclic back-and-forth sequence of a word: w1 w2 ... wr w(r-1) ... w2,
 * of period exactly 2r-2. Striped extremal labelings repeat it along an axis.
 */
inline std::string back_and_forth_pattern(const Word& w) {
  std::string cycle = w.letters();
  for (int i = w.length() - 2; i >= 1; --i) cycle.push_back(w.at(i));
  return cycle;
}

/// True when the cyclic sequence has no nontrivial rotational symmetry, i.e.
/// its minimal period equals its length. Holds for every admissible word.
inline bool pattern_period_exact(const std::string& cycle) {
  const int p = static_cast<int>(cycle.size());
  for (int q = 1; q < p; ++q) {
    if (p % q != 0) continue;
    bool periodic = true;
    for (int i = 0; i < p && periodic; ++i) periodic = cycle[static_cast<std::size_t>(i)] == cycle[static_cast<std::size_t>((i + q) % p)];
    if (periodic) return false;
  }
  return true;
}

/**
 * @brief Parameters of a generalized Patchell-Spiro labeling.
 *
 * axis: the striping coordinate (0-based). parity: residue mod 2 of the
 * hyperplanes carrying odd-position letters. phases: one even residue mod
 * 2r-2 per transverse parity class; classes are indexed by the parities of
 * the non-axis coordinates in ascending coordinate order, first coordinate
 * most significant.
 */
struct PSParams {
  int axis = 0;
  int parity = 0;
  std::vector<int> phases;

  bool operator==(const PSParams& o) const {
    return axis == o.axis && parity == o.parity && phases == o.phases;
  }
};

namespace construction_detail {

inline int transverse_class(const std::vector<int>& coords, int axis) {
  int idx = 0;
  for (int j = 0; j < static_cast<int>(coords.size()); ++j) {
    if (j == axis) continue;
    idx = idx * 2 + (coords[static_cast<std::size_t>(j)] & 1);
  }
  return idx;
}

inline void validate_ps_params(const Word& w, const TorusShape& shape,
                               const PSParams& p) {
  if (!w.admissible()) {
    throw std::invalid_argument("word is not admissible: '" + w.letters() + "'");
  }
  if (p.axis < 0 || p.axis >= shape.dim()) {
    throw std::invalid_argument("axis out of range");
  }
  const int period = 2 * w.length() - 2;
  if (shape.dims()[static_cast<std::size_t>(p.axis)] % period != 0) {
    throw std::invalid_argument(
        "axis length " + std::to_string(shape.dims()[static_cast<std::size_t>(p.axis)]) +
        " is not divisible by " + std::to_string(period));
  }
  if (p.parity != 0 && p.parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  const std::size_t classes = std::size_t{1} << (shape.dim() - 1);
  if (p.phases.size() != classes) {
    throw std::invalid_argument("need one phase per transverse parity class (" +
                                std::to_string(classes) + ")");
  }
  for (int ph : p.phases) {
    if (ph < 0 || ph >= period || ph % 2 != 0) {
      throw std::invalid_argument("phases must be even residues modulo " +
                                  std::to_string(period));
    }
  }
}

}  // namespace construction_detail

/**
 * @brief The striped extremal labeling of w for the given parameters.
 *
 * Cell x receives cycle[(x_axis - parity + phase(class(x))) mod (2r-2)] where
 * cycle is the back-and-forth pattern. Phases are even, so odd-position
 * letters land exactly on the hyperplanes x_axis = parity (mod 2).
 */
inline Labeling build_ps_word(const Word& w, const TorusShape& shape, const PSParams& p) {
  construction_detail::validate_ps_params(w, shape, p);
  const std::string cycle = back_and_forth_pattern(w);
  const int period = static_cast<int>(cycle.size());
  const std::string alphabet = w.distinct_letters();

  std::vector<std::uint8_t> cells(static_cast<std::size_t>(shape.total_points()));
  std::vector<int> x(static_cast<std::size_t>(shape.dim()), 0);
  bool done = false;
  std::int64_t flat = 0;
  while (!done) {
    const int cls = construction_detail::transverse_class(x, p.axis);
    int pos = (x[static_cast<std::size_t>(p.axis)] - p.parity +
               p.phases[static_cast<std::size_t>(cls)]) % period;
    if (pos < 0) pos += period;
    const char letter = cycle[static_cast<std::size_t>(pos)];
    cells[static_cast<std::size_t>(flat)] =
        static_cast<std::uint8_t>(alphabet.find(letter));
    counting_detail::increment_odometer(x, shape.dims(), done);
    ++flat;
  }
  return Labeling(shape, alphabet, std::move(cells));
}

/**
 * @brief The CAT-specific construction in its congruence form: A on the
 * hyperplanes x_axis = parity (mod 2); on the other hyperplanes, C where
 * x_axis = eps(class) + parity (mod 4) and T where x_axis = eps(class) + 2 +
 * parity (mod 4), with eps(class) in {1,3}.
 *
 * This is the same family as build_ps_word for the word CAT, under
 * phase = (1 - 2*parity - eps) mod 4 and parity flipped between conventions
 * (here `parity` locates the A hyperplanes, not the odd-letter ones).
 */
inline Labeling build_ps_cat(const TorusShape& shape, int axis, int parity,
                             const std::vector<int>& eps_map) {
  if (axis < 0 || axis >= shape.dim()) throw std::invalid_argument("axis out of range");
  if (shape.dims()[static_cast<std::size_t>(axis)] % 4 != 0) {
    throw std::invalid_argument("axis length must be divisible by 4");
  }
  if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  const std::size_t classes = std::size_t{1} << (shape.dim() - 1);
  if (eps_map.size() != classes) {
    throw std::invalid_argument("need one eps per transverse parity class");
  }
  for (int e : eps_map) {
    if (e != 1 && e != 3) throw std::invalid_argument("eps values must be 1 or 3");
  }

  const std::string alphabet = "CAT";
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(shape.total_points()));
  std::vector<int> x(static_cast<std::size_t>(shape.dim()), 0);
  bool done = false;
  std::int64_t flat = 0;
  while (!done) {
    const int h = x[static_cast<std::size_t>(axis)];
    std::uint8_t letter;
    if ((h & 1) == parity) {
      letter = 1;  // A
    } else {
      const int cls = construction_detail::transverse_class(x, axis);
      const int eps = eps_map[static_cast<std::size_t>(cls)];
      letter = ((h - parity - eps) % 4 + 4) % 4 == 0 ? std::uint8_t{0}   // C
                                                     : std::uint8_t{2}; // T
    }
    cells[static_cast<std::size_t>(flat)] = letter;
    counting_detail::increment_odometer(x, shape.dims(), done);
    ++flat;
  }
  return Labeling(shape, alphabet, std::move(cells));
}

/// One enumerated family member with its parameters and occurrence count.
struct FamilyMember {
  PSParams params;
  Labeling labeling;
  std::int64_t count = 0;
};

/**
 * @brief Every striped labeling of w on this shape: all axes whose length is
 * divisible by 2r-2, both parities, all per-class phase assignments;
 * bit-exact duplicates removed, each member tagged with its count.
 *
 * For CAT the family size is d * 2^(2^(d-1)+1) when every axis qualifies.
 */
inline std::vector<FamilyMember> enumerate_ps_family(
    const Word& w, const TorusShape& shape, std::int64_t max_members = 1 << 20) {
  if (!w.admissible()) {
    throw std::invalid_argument("word is not admissible: '" + w.letters() + "'");
  }
  const int period = 2 * w.length() - 2;
  std::vector<int> axes;
  for (int a = 0; a < shape.dim(); ++a) {
    if (shape.dims()[static_cast<std::size_t>(a)] % period == 0) axes.push_back(a);
  }
  if (axes.empty()) {
    throw std::invalid_argument("no side is divisible by " + std::to_string(period));
  }

  const int phase_choices = w.length() - 1;  // even residues mod 2r-2
  const std::size_t classes = std::size_t{1} << (shape.dim() - 1);
  double combos = static_cast<double>(axes.size()) * 2.0;
  for (std::size_t i = 0; i < classes; ++i) combos *= phase_choices;
  if (combos > static_cast<double>(max_members)) {
    throw std::invalid_argument("phase family too large to enumerate");
  }

  std::vector<FamilyMember> family;
  std::set<std::string> seen;
  for (int axis : axes) {
    for (int parity : {0, 1}) {
      std::vector<int> phase_idx(classes, 0);
      bool done = false;
      while (!done) {
        PSParams p;
        p.axis = axis;
        p.parity = parity;
        p.phases.resize(classes);
        for (std::size_t c = 0; c < classes; ++c) p.phases[c] = 2 * phase_idx[c];
        Labeling l = build_ps_word(w, shape, p);
        if (seen.insert(l.cell_string()).second) {
          std::int64_t count = count_word(l, w).word_count;
          family.push_back(FamilyMember{p, std::move(l), count});
        }
        // odometer over phase indices
        int i = static_cast<int>(classes) - 1;
        while (i >= 0 && phase_idx[static_cast<std::size_t>(i)] == phase_choices - 1) {
          phase_idx[static_cast<std::size_t>(i--)] = 0;
        }
        if (i < 0) {
          done = true;
        } else {
          ++phase_idx[static_cast<std::size_t>(i)];
        }
      }
    }
  }
  return family;
}

/// Membership verdict for the striped family, with the witnessing parameters
/// and whether the labeling's count attains the exact spectral bound.
struct PSMembership {
  bool is_member = false;
  std::optional<PSParams> params;
  bool attains_bound = false;
};

/**
 * @brief Decide whether a labeling is a generalized Patchell-Spiro labeling of
 * w, deriving the witnessing parameters directly (no family enumeration, so
 * this stays exact in every dimension).
 */
inline PSMembership is_generalized_ps(const Labeling& l, const Word& w) {
  PSMembership out;
  {
    const std::int64_t count = count_word(l, w).word_count;
    out.attains_bound = count * (w.length() - 1) ==
                        pow3(l.shape().dim() - 1) * l.shape().total_points();
  }
  if (!w.admissible()) return out;

  const TorusShape& shape = l.shape();
  const std::string cycle = back_and_forth_pattern(w);
  const int period = static_cast<int>(cycle.size());

  // Every cell must carry a letter of w.
  for (std::uint8_t c : l.cells()) {
    char letter = l.alphabet()[c];
    if (w.letters().find(letter) == std::string::npos) return out;
  }

  const auto in_even_set = [&](char letter) { return w.even_set().count(letter) > 0; };

  std::vector<int> x(static_cast<std::size_t>(shape.dim()), 0);
  for (int axis = 0; axis < shape.dim(); ++axis) {
    if (shape.dims()[static_cast<std::size_t>(axis)] % period != 0) continue;

    // The even-position letters must fill exactly one parity of this axis.
    // Derive the candidate parity from the origin cell.
    const bool origin_even = in_even_set(l.letter_at(std::int64_t{0}));
    const int parity = origin_even ? 1 : 0;  // odd-letter hyperplane residue

    bool locus_ok = true;
    std::fill(x.begin(), x.end(), 0);
    bool done = false;
    std::int64_t flat = 0;
    while (!done && locus_ok) {
      const bool is_even_letter = in_even_set(l.letter_at(flat));
      const bool on_even_side =
          (x[static_cast<std::size_t>(axis)] & 1) != (parity & 1);
      locus_ok = (is_even_letter == on_even_side);
      counting_detail::increment_odometer(x, shape.dims(), done);
      ++flat;
    }
    if (!locus_ok) continue;

    // Per class, find the (unique) even phase reproducing the cells.
    const std::size_t classes = std::size_t{1} << (shape.dim() - 1);
    std::vector<int> phases(classes, -1);
    bool all_classes_ok = true;
    for (std::size_t cls = 0; cls < classes && all_classes_ok; ++cls) {
      bool found = false;
      for (int ph = 0; ph < period && !found; ph += 2) {
        bool match = true;
        std::fill(x.begin(), x.end(), 0);
        done = false;
        flat = 0;
        while (!done && match) {
          if (construction_detail::transverse_class(x, axis) ==
              static_cast<int>(cls)) {
            int pos = (x[static_cast<std::size_t>(axis)] - parity + ph) % period;
            if (pos < 0) pos += period;
            match = l.letter_at(flat) == cycle[static_cast<std::size_t>(pos)];
          }
          counting_detail::increment_odometer(x, shape.dims(), done);
          ++flat;
        }
        if (match) {
          phases[cls] = ph;
          found = true;
        }
      }
      all_classes_ok = found;
    }
    if (!all_classes_ok) continue;

    PSParams p{axis, parity, phases};
    Labeling rebuilt = build_ps_word(w, shape, p);
    if (rebuilt.cell_string() == l.cell_string()) {
      out.is_member = true;
      out.params = p;
      return out;
    }
  }
  return out;
}

}  // namespace wordtorus
