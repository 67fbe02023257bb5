#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wordtorus/counting.hpp"
#include "wordtorus/rng.hpp"
#include "wordtorus/torus.hpp"
#include "wordtorus/word.hpp"

namespace wordtorus {

/**
 * @brief A +-1 function on the torus (two-coloring), the f of the
 * quadratic-form argument.
 */
class Signing {
 public:
  Signing(TorusShape shape, std::vector<std::int8_t> values)
      : shape_(std::move(shape)), values_(std::move(values)) {
    if (static_cast<std::int64_t>(values_.size()) != shape_.total_points()) {
      throw std::invalid_argument("signing size does not match torus size");
    }
    for (std::int8_t v : values_) {
      if (v != 1 && v != -1) throw std::invalid_argument("signing values must be +-1");
    }
  }

  /// +1 at cells whose letter lies in plus_letters, -1 elsewhere.
  static Signing from_labeling(const Labeling& l, const std::set<char>& plus_letters) {
    std::vector<std::int8_t> v(l.cells().size());
    std::vector<std::int8_t> plus(l.alphabet().size(), -1);
    for (char ch : plus_letters) {
      int i = l.letter_index(ch);
      if (i >= 0) plus[static_cast<std::size_t>(i)] = 1;
    }
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = plus[l.cells()[i]];
    return Signing(l.shape(), std::move(v));
  }

  const TorusShape& shape() const { return shape_; }
  const std::vector<std::int8_t>& values() const { return values_; }

 private:
  TorusShape shape_;
  std::vector<std::int8_t> values_;
};

/// Eigenvalue of the king-move adjacency operator at frequency y:
/// -1 + prod_j (1 + 2 cos(2 pi y_j / n_j)).
inline double eigenvalue(const std::vector<int>& freq, const TorusShape& shape) {
  if (static_cast<int>(freq.size()) != shape.dim()) {
    throw std::invalid_argument("frequency dimension mismatch");
  }
  double prod = 1.0;
  for (int j = 0; j < shape.dim(); ++j) {
    double k = static_cast<double>(freq[static_cast<std::size_t>(j)]);
    double n = static_cast<double>(shape.dims()[static_cast<std::size_t>(j)]);
    prod *= 1.0 + 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
  }
  return -1.0 + prod;
}

/// Equivalent multiplicity form for the symmetric torus: with b_k the number
/// of coordinates of y equal to k, -1 + prod_k (1 + 2 cos(2 pi k / n))^{b_k}.
inline double eigenvalue_bk(const std::vector<int>& freq, const TorusShape& shape) {
  if (!shape.symmetric()) {
    throw std::invalid_argument("b_k eigenvalue form requires a symmetric shape");
  }
  const int n = shape.dims()[0];
  std::vector<int> b(static_cast<std::size_t>(n), 0);
  for (int k : freq) {
    if (k < 0 || k >= n) throw std::invalid_argument("frequency entry out of range");
    ++b[static_cast<std::size_t>(k)];
  }
  double prod = 1.0;
  for (int k = 0; k < n; ++k) {
    double factor = 1.0 + 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
    for (int i = 0; i < b[static_cast<std::size_t>(k)]; ++i) prod *= factor;
  }
  return -1.0 + prod;
}

struct LambdaMin {
  double value = 0.0;
  std::vector<std::vector<int>> frequencies;  // all attaining y, flat order
  bool exact_case = false;  // value == -1 - 3^{d-1}, i.e. some side is even
};

/**
 * @brief Exact spectrum minimum by full scan over all N frequencies.
 *
 * When some side is even the minimum is exactly -(1 + 3^{d-1}), attained by
 * the frequencies with one coordinate n_i/2 and the rest zero; otherwise it
 * is strictly larger.
 */
inline LambdaMin lambda_min(const TorusShape& shape,
                            std::int64_t max_points = std::int64_t{1} << 26) {
  if (shape.total_points() > max_points) {
    throw std::invalid_argument("shape too large for spectrum scan");
  }
  constexpr double kTieTol = 1e-9;
  LambdaMin out;
  out.value = std::numeric_limits<double>::infinity();
  std::vector<int> y(static_cast<std::size_t>(shape.dim()), 0);
  bool done = false;
  while (!done) {
    double lam = eigenvalue(y, shape);
    if (lam < out.value - kTieTol) {
      out.value = lam;
      out.frequencies.clear();
      out.frequencies.push_back(y);
    } else if (lam <= out.value + kTieTol) {
      out.frequencies.push_back(y);
    }
    counting_detail::increment_odometer(y, shape.dims(), done);
  }
  const double even_case = -1.0 - static_cast<double>(pow3(shape.dim() - 1));
  out.exact_case = std::abs(out.value - even_case) <= kTieTol;
  return out;
}

/// f^T M f = sum over ordered adjacent pairs of f(x) f(x+y); exact integer.
inline std::int64_t quadratic_form(const Signing& f) {
  const TorusShape& shape = f.shape();
  const std::vector<int>& dims = shape.dims();
  const std::vector<Direction> dirs = all_directions(shape);
  const auto& values = f.values();

  std::int64_t total = 0;
  std::vector<int> x(dims.size(), 0);
  std::vector<int> c(dims.size());
  bool done = false;
  while (!done) {
    int fx = values[static_cast<std::size_t>(shape.flat_index(x))];
    std::int64_t row = 0;
    for (const Direction& y : dirs) {
      c = x;
      counting_detail::step_coords(c, y.steps, dims);
      row += values[static_cast<std::size_t>(shape.flat_index(c))];
    }
    total += fx * row;
    counting_detail::increment_odometer(x, dims, done);
  }
  return total;
}

namespace spectral_detail {

// Twiddle tables: tw[j][m] = exp(-2 pi i m / n_j).
inline std::vector<std::vector<std::complex<double>>> twiddles(const TorusShape& shape) {
  std::vector<std::vector<std::complex<double>>> tw(static_cast<std::size_t>(shape.dim()));
  for (int j = 0; j < shape.dim(); ++j) {
    int n = shape.dims()[static_cast<std::size_t>(j)];
    tw[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
      double ang = -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
      tw[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] =
          std::complex<double>(std::cos(ang), std::sin(ang));
    }
  }
  return tw;
}

}  // namespace spectral_detail

/**
 * @brief Character (Fourier) coefficients of a signing, a_y = (1/N) sum_x
 * f(x) conj(chi_y(x)), indexed by the flat index of the frequency y.
 *
 * Direct O(N^2 d) sum; guarded to desk scale.
 */
inline std::vector<std::complex<double>> character_coefficients(
    const Signing& f, std::int64_t max_points = 10000) {
  const TorusShape& shape = f.shape();
  if (shape.total_points() > max_points) {
    throw std::invalid_argument("shape too large for character transform");
  }
  const std::int64_t n_total = shape.total_points();
  const auto tw = spectral_detail::twiddles(shape);
  const auto& values = f.values();

  std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(n_total));
  std::vector<int> y(static_cast<std::size_t>(shape.dim()), 0);
  bool ydone = false;
  std::int64_t yflat = 0;
  while (!ydone) {
    std::complex<double> acc(0.0, 0.0);
    std::vector<int> x(static_cast<std::size_t>(shape.dim()), 0);
    bool xdone = false;
    std::int64_t xflat = 0;
    while (!xdone) {
      std::complex<double> chi_conj(1.0, 0.0);
      for (int j = 0; j < shape.dim(); ++j) {
        std::int64_t m = (static_cast<std::int64_t>(y[static_cast<std::size_t>(j)]) *
                          x[static_cast<std::size_t>(j)]) %
                         shape.dims()[static_cast<std::size_t>(j)];
        chi_conj *= tw[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
      }
      acc += static_cast<double>(values[static_cast<std::size_t>(xflat)]) * chi_conj;
      counting_detail::increment_odometer(x, shape.dims(), xdone);
      ++xflat;
    }
    coeffs[static_cast<std::size_t>(yflat)] = acc / static_cast<double>(n_total);
    counting_detail::increment_odometer(y, shape.dims(), ydone);
    ++yflat;
  }
  return coeffs;
}

/// |sum_y |a_y|^2 - 1|; zero for every +-1 signing up to rounding.
inline double parseval_residual(const std::vector<std::complex<double>>& coeffs) {
  double s = 0.0;
  for (const auto& a : coeffs) s += std::norm(a);
  return std::abs(s - 1.0);
}

/// N * sum_y |a_y|^2 lambda_y, the spectral route to the quadratic form.
inline double spectral_expansion(const std::vector<std::complex<double>>& coeffs,
                                 const TorusShape& shape) {
  double s = 0.0;
  std::vector<int> y(static_cast<std::size_t>(shape.dim()), 0);
  bool done = false;
  std::int64_t yflat = 0;
  while (!done) {
    s += std::norm(coeffs[static_cast<std::size_t>(yflat)]) * eigenvalue(y, shape);
    counting_detail::increment_odometer(y, shape.dims(), done);
    ++yflat;
  }
  return s * static_cast<double>(shape.total_points());
}

/**
 * @brief Upper bounds on pair and word counts obtained from the spectrum.
 *
 * pair_bound bounds the count of ordered odd-to-even-letter adjacent pairs;
 * dividing by r-1 and flooring bounds the word count. Without `sharp` the
 * bound is 3^{d-1} N, valid for every shape; with `sharp` it is
 * ((3^d - 1) N - lambda_min N) / 4, which coincides with the former exactly
 * when some side is even and is strictly smaller otherwise.
 */
struct SpectralBound {
  double pair_bound = 0.0;
  std::int64_t word_bound = 0;
  double lambda_min = 0.0;
  bool exact_case = false;        // lambda_min == -1 - 3^{d-1} attained
  bool sharp = false;             // computed from the scanned lambda_min
  bool equality_possible = false; // some side divisible by 2r-2
  int word_length = 0;
};

inline constexpr double kFloorSlack = 1e-6;

struct PairBound {
  double value = 0.0;
  double lambda_min = 0.0;
  bool exact_case = false;
  bool sharp = false;
};

inline PairBound pair_bound(const TorusShape& shape, bool sharp) {
  PairBound out;
  out.sharp = sharp;
  const double n_total = static_cast<double>(shape.total_points());
  if (sharp) {
    LambdaMin lm = lambda_min(shape);
    out.lambda_min = lm.value;
    out.exact_case = lm.exact_case;
    out.value =
        ((static_cast<double>(pow3(shape.dim())) - 1.0) * n_total - lm.value * n_total) / 4.0;
  } else {
    out.lambda_min = -1.0 - static_cast<double>(pow3(shape.dim() - 1));
    out.exact_case = false;
    for (int n : shape.dims()) out.exact_case |= (n % 2 == 0);
    out.value = static_cast<double>(pow3(shape.dim() - 1)) * n_total;
  }
  return out;
}

inline SpectralBound word_bound(const Word& w, const TorusShape& shape, bool sharp) {
  if (!w.admissible()) {
    throw std::invalid_argument("word is not admissible: '" + w.letters() + "'");
  }
  PairBound pb = pair_bound(shape, sharp);
  SpectralBound out;
  out.pair_bound = pb.value;
  out.lambda_min = pb.lambda_min;
  out.exact_case = pb.exact_case;
  out.sharp = sharp;
  out.word_length = w.length();
  out.word_bound = static_cast<std::int64_t>(
      std::floor(pb.value / static_cast<double>(w.length() - 1) + kFloorSlack));
  const int period = 2 * w.length() - 2;
  for (int n : shape.dims()) out.equality_possible |= (n % period == 0);
  return out;
}

/// Exact word-count attainment test: max*(r-1) == 3^{d-1} N as integers.
/// This is stricter than matching the floored word_bound at shapes where the
/// rational bound is not an integer.
inline bool attains_exact_bound(std::int64_t count, const Word& w, const TorusShape& shape) {
  return count * (w.length() - 1) == pow3(shape.dim() - 1) * shape.total_points();
}

/**
 * @brief Residual report for the closed-form eigensystem.
 *
 * Checks every character against the neighbor-sweep operator, the tensor
 * factorization against per-axis cycle sweeps, and (symmetric shapes) the two
 * algebraic eigenvalue forms against each other.
 */
struct EigensystemReport {
  std::int64_t frequency_count = 0;
  double max_residual = 0.0;        // max_y ||M chi_y - lambda_y chi_y||_inf
  double tensor_residual = 0.0;     // neighbor sweep vs per-axis composition
  double bk_form_max_diff = 0.0;    // symmetric shapes only
  double lambda_max = 0.0;
  LambdaMin min;
  std::vector<double> spectrum;     // sorted ascending
};

inline EigensystemReport verify_eigensystem(const TorusShape& shape,
                                            std::int64_t max_points = 10000) {
  if (shape.total_points() > max_points) {
    throw std::invalid_argument("shape too large for eigensystem sweep");
  }
  const std::int64_t n_total = shape.total_points();
  const int d = shape.dim();
  const std::vector<Direction> dirs = all_directions(shape);
  const auto tw = spectral_detail::twiddles(shape);

  EigensystemReport report;
  report.frequency_count = n_total;
  report.spectrum.reserve(static_cast<std::size_t>(n_total));

  // chi values for one frequency, refreshed per y.
  std::vector<std::complex<double>> chi(static_cast<std::size_t>(n_total));

  std::vector<int> y(static_cast<std::size_t>(d), 0);
  bool ydone = false;
  while (!ydone) {
    const double lam = eigenvalue(y, shape);
    report.spectrum.push_back(lam);
    if (shape.symmetric()) {
      report.bk_form_max_diff =
          std::max(report.bk_form_max_diff, std::abs(lam - eigenvalue_bk(y, shape)));
    }

    std::vector<int> x(static_cast<std::size_t>(d), 0);
    bool xdone = false;
    std::int64_t xflat = 0;
    while (!xdone) {
      std::complex<double> v(1.0, 0.0);
      for (int j = 0; j < d; ++j) {
        std::int64_t m = (static_cast<std::int64_t>(y[static_cast<std::size_t>(j)]) *
                          x[static_cast<std::size_t>(j)]) %
                         shape.dims()[static_cast<std::size_t>(j)];
        v *= std::conj(tw[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)]);
      }
      chi[static_cast<std::size_t>(xflat)] = v;
      counting_detail::increment_odometer(x, shape.dims(), xdone);
      ++xflat;
    }

    std::fill(x.begin(), x.end(), 0);
    xdone = false;
    xflat = 0;
    std::vector<int> c(static_cast<std::size_t>(d));
    while (!xdone) {
      std::complex<double> sweep(0.0, 0.0);
      for (const Direction& dir : dirs) {
        c = x;
        counting_detail::step_coords(c, dir.steps, shape.dims());
        sweep += chi[static_cast<std::size_t>(shape.flat_index(c))];
      }
      double res = std::abs(sweep - lam * chi[static_cast<std::size_t>(xflat)]);
      report.max_residual = std::max(report.max_residual, res);
      counting_detail::increment_odometer(x, shape.dims(), xdone);
      ++xflat;
    }

    counting_detail::increment_odometer(y, shape.dims(), ydone);
  }

  std::sort(report.spectrum.begin(), report.spectrum.end());
  report.lambda_max = static_cast<double>(pow3(d)) - 1.0;
  report.min = lambda_min(shape);

  // Tensor factorization: a neighbor sweep must agree with the d-fold
  // composition of (cycle + identity) sweeps minus the input, on any vector.
  SplitMix64 rng(0x746f727573ULL);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<double> v(static_cast<std::size_t>(n_total));
    for (double& t : v) t = rng.next() % 2 == 0 ? 1.0 : -1.0;

    std::vector<double> direct(static_cast<std::size_t>(n_total), 0.0);
    std::vector<int> x(static_cast<std::size_t>(d), 0);
    std::vector<int> c(static_cast<std::size_t>(d));
    bool done = false;
    std::int64_t xflat = 0;
    while (!done) {
      double s = 0.0;
      for (const Direction& dir : dirs) {
        c = x;
        counting_detail::step_coords(c, dir.steps, shape.dims());
        s += v[static_cast<std::size_t>(shape.flat_index(c))];
      }
      direct[static_cast<std::size_t>(xflat)] = s;
      counting_detail::increment_odometer(x, shape.dims(), done);
      ++xflat;
    }

    std::vector<double> composed = v;
    std::vector<double> next(static_cast<std::size_t>(n_total));
    for (int axis = 0; axis < d; ++axis) {
      std::vector<int> steps(static_cast<std::size_t>(d), 0);
      std::fill(x.begin(), x.end(), 0);
      done = false;
      xflat = 0;
      while (!done) {
        double s = composed[static_cast<std::size_t>(xflat)];
        for (int sgn : {-1, 1}) {
          c = x;
          steps[static_cast<std::size_t>(axis)] = sgn;
          counting_detail::step_coords(c, steps, shape.dims());
          s += composed[static_cast<std::size_t>(shape.flat_index(c))];
        }
        next[static_cast<std::size_t>(xflat)] = s;
        counting_detail::increment_odometer(x, shape.dims(), done);
        ++xflat;
      }
      composed.swap(next);
    }
    for (std::int64_t i = 0; i < n_total; ++i) {
      double diff = std::abs(direct[static_cast<std::size_t>(i)] -
                             (composed[static_cast<std::size_t>(i)] -
                              v[static_cast<std::size_t>(i)]));
      report.tensor_residual = std::max(report.tensor_residual, diff);
    }
  }
  return report;
}

}  // namespace wordtorus
