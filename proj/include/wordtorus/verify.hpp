#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "wordtorus/counting.hpp"
#include "wordtorus/rng.hpp"
#include "wordtorus/spectral.hpp"
#include "wordtorus/torus.hpp"
#include "wordtorus/word.hpp"

namespace wordtorus {

inline constexpr double kParsevalTol = 1e-9;
inline constexpr double kExpansionTol = 1e-6;
inline constexpr double kEigenResidualTol = 1e-9;

/// Seeded uniform labeling; the sampler is pinned (splitmix64, modulo) so a
/// (shape, alphabet, seed) triple names one labeling forever.
inline Labeling random_labeling(const TorusShape& shape, const std::string& alphabet,
                                SplitMix64& rng) {
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(shape.total_points()));
  for (auto& c : cells) {
    c = static_cast<std::uint8_t>(rng.next_below(alphabet.size()));
  }
  return Labeling(shape, alphabet, std::move(cells));
}

/**
 * @brief Result of the randomized cross-module identity suite.
 *
 * The checks are theorems, so every failure counter must be zero and every
 * residual under its pinned tolerance; all_pass summarizes that.
 */
struct VerifyReport {
  std::vector<int> dims;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t quadratic_identity_failures = 0;  // exact integer identity
  std::int64_t subword_violations = 0;           // #(w) <= #(OE)/(r-1)
  double parseval_max_residual = 0.0;
  double expansion_max_residual = 0.0;
  double eigen_max_residual = 0.0;
  double tensor_residual = 0.0;
  double pair_bound = 0.0;
  double sharp_pair_bound = 0.0;
  bool sharp_strictly_below = false;
  bool all_pass = false;
};

/**
 * @brief Run the identity suite on seeded random CAT labelings.
 *
 * Per trial: the integer identity (3^d - 1) N - f^T M f == 4 (#(AC) + #(AT))
 * with f the A-signing, Parseval for f, the spectral expansion of f^T M f,
 * and the subword inequality #(CAT) <= (#(AC) + #(AT)) / 2. Once per shape:
 * the eigensystem residual sweep.
 */
inline VerifyReport run_identity_suite(const TorusShape& shape, std::int64_t trials,
                                       std::uint64_t seed) {
  const Word cat("CAT");
  const std::string alphabet = "CAT";
  const std::int64_t n_total = shape.total_points();
  const std::int64_t degree_total = (pow3(shape.dim()) - 1) * n_total;

  VerifyReport report;
  report.dims = shape.dims();
  report.trials = trials;
  report.seed = seed;

  SplitMix64 rng(seed);
  for (std::int64_t t = 0; t < trials; ++t) {
    Labeling l = random_labeling(shape, alphabet, rng);
    Signing f = Signing::from_labeling(l, {'A'});

    const std::int64_t qf = quadratic_form(f);
    const std::int64_t ac = count_pairs(l, {'A'}, {'C'});
    const std::int64_t at = count_pairs(l, {'A'}, {'T'});
    if (degree_total - qf != 4 * (ac + at)) ++report.quadratic_identity_failures;

    const auto coeffs = character_coefficients(f);
    report.parseval_max_residual =
        std::max(report.parseval_max_residual, parseval_residual(coeffs));
    report.expansion_max_residual =
        std::max(report.expansion_max_residual,
                 std::abs(static_cast<double>(qf) - spectral_expansion(coeffs, shape)));

    const std::int64_t cats = count_word(l, cat).word_count;
    if (2 * cats > ac + at) ++report.subword_violations;
  }

  const EigensystemReport eigen = verify_eigensystem(shape);
  report.eigen_max_residual = eigen.max_residual;
  report.tensor_residual = eigen.tensor_residual;

  report.pair_bound = pair_bound(shape, /*sharp=*/false).value;
  report.sharp_pair_bound = pair_bound(shape, /*sharp=*/true).value;
  report.sharp_strictly_below = report.sharp_pair_bound < report.pair_bound - 1e-12;

  report.all_pass = report.quadratic_identity_failures == 0 &&
                    report.subword_violations == 0 &&
                    report.parseval_max_residual < kParsevalTol &&
                    report.expansion_max_residual < kExpansionTol &&
                    report.eigen_max_residual < kEigenResidualTol &&
                    report.tensor_residual < kEigenResidualTol;
  return report;
}

}  // namespace wordtorus
