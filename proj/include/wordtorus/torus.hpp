#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordtorus {

inline std::int64_t pow3(int e) {
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) v *= 3;
  return v;
}

/**
 * @brief Shape of a discrete torus (Z/n1 Z) x ... x (Z/nd Z).
 *
 * Guards: 1 <= d <= kMaxDim, every side >= 3, total points <= 2^31.
 * Sides of length 2 are rejected because +1 and -1 steps coincide there and
 * the 3^d - 1 king-move directions would silently collapse.
 */
class TorusShape {
 public:
  static constexpr int kMaxDim = 8;
  static constexpr std::int64_t kMaxPoints = std::int64_t{1} << 31;

  explicit TorusShape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty() || static_cast<int>(dims_.size()) > kMaxDim) {
      throw std::invalid_argument("torus dimension must be between 1 and " +
                                  std::to_string(kMaxDim));
    }
    total_ = 1;
    for (int n : dims_) {
      if (n < 3) throw std::invalid_argument("every torus side must be >= 3");
      total_ *= n;
      if (total_ > kMaxPoints) {
        throw std::invalid_argument("torus has more than 2^31 points");
      }
    }
    strides_.assign(dims_.size(), 1);
    for (int i = static_cast<int>(dims_.size()) - 2; i >= 0; --i) {
      strides_[i] = strides_[i + 1] * dims_[i + 1];
    }
  }

  int dim() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  std::int64_t total_points() const { return total_; }

  /// Number of king-move directions, 3^d - 1.
  std::int64_t direction_count() const {
    std::int64_t c = 1;
    for (int i = 0; i < dim(); ++i) c *= 3;
    return c - 1;
  }

  bool symmetric() const {
    return std::all_of(dims_.begin(), dims_.end(),
                       [&](int n) { return n == dims_[0]; });
  }

  // Row-major flat index, last coordinate varying fastest.
  std::int64_t flat_index(const std::vector<int>& coords) const {
    std::int64_t f = 0;
    for (int i = 0; i < dim(); ++i) f += strides_[i] * coords[i];
    return f;
  }

  std::vector<int> coords_of(std::int64_t flat) const {
    std::vector<int> c(dims_.size());
    for (int i = dim() - 1; i >= 0; --i) {
      c[i] = static_cast<int>(flat % dims_[i]);
      flat /= dims_[i];
    }
    return c;
  }

  const std::vector<std::int64_t>& strides() const { return strides_; }

  bool operator==(const TorusShape& o) const { return dims_ == o.dims_; }
  bool operator!=(const TorusShape& o) const { return !(*this == o); }

 private:
  std::vector<int> dims_;
  std::vector<std::int64_t> strides_;
  std::int64_t total_ = 0;
};

/// A point of the torus, coordinates reduced to [0, n_i).
struct Point {
  std::vector<int> coords;

  bool operator==(const Point& o) const { return coords == o.coords; }
  bool operator!=(const Point& o) const { return coords != o.coords; }
};

/// A king-move direction: a vector in {-1,0,1}^d, not all zero.
struct Direction {
  std::vector<int> steps;

  bool operator==(const Direction& o) const { return steps == o.steps; }
  bool operator!=(const Direction& o) const { return steps != o.steps; }
};

inline Direction negate(const Direction& y) {
  Direction r = y;
  for (int& s : r.steps) s = -s;
  return r;
}

inline void validate_point(const Point& p, const TorusShape& shape) {
  if (static_cast<int>(p.coords.size()) != shape.dim()) {
    throw std::invalid_argument("point dimension mismatch");
  }
  for (int i = 0; i < shape.dim(); ++i) {
    if (p.coords[i] < 0 || p.coords[i] >= shape.dims()[i]) {
      throw std::invalid_argument("point coordinate out of range");
    }
  }
}

inline void validate_direction(const Direction& y, const TorusShape& shape) {
  if (static_cast<int>(y.steps.size()) != shape.dim()) {
    throw std::invalid_argument("direction dimension mismatch");
  }
  bool nonzero = false;
  for (int s : y.steps) {
    if (s < -1 || s > 1) throw std::invalid_argument("direction step not in {-1,0,1}");
    nonzero |= (s != 0);
  }
  if (!nonzero) throw std::invalid_argument("direction must be nonzero");
}

/// p + t*y with coordinatewise wrap-around.
inline Point advance(const Point& p, const Direction& y, std::int64_t t,
                     const TorusShape& shape) {
  Point r = p;
  for (int i = 0; i < shape.dim(); ++i) {
    std::int64_t n = shape.dims()[i];
    std::int64_t v = (r.coords[i] + t * y.steps[i]) % n;
    if (v < 0) v += n;
    r.coords[i] = static_cast<int>(v);
  }
  return r;
}

/**
 * @brief All 3^d - 1 king-move directions in odometer order over {-1,0,+1}^d
 * (last coordinate fastest, values ordered -1, 0, +1), zero skipped.
 *
 * The order is part of the contract: direction-indexed breakdowns and witness
 * listings use it.
 */
inline std::vector<Direction> all_directions(const TorusShape& shape) {
  const int d = shape.dim();
  std::vector<Direction> out;
  out.reserve(static_cast<std::size_t>(shape.direction_count()));
  std::vector<int> v(d, -1);
  for (;;) {
    bool zero = std::all_of(v.begin(), v.end(), [](int s) { return s == 0; });
    if (!zero) out.push_back(Direction{v});
    int i = d - 1;
    while (i >= 0 && v[i] == 1) v[i--] = -1;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

/**
 * @brief A total labeling of a torus by letters of an ordered alphabet.
 *
 * Cells are stored flat in row-major order with the last coordinate varying
 * fastest, so a 2-D labeling prints exactly as it is read on the page.
 * Letters are single bytes, case-sensitive, distinct within the alphabet.
 */
class Labeling {
 public:
  Labeling(TorusShape shape, std::string alphabet, std::vector<std::uint8_t> cells)
      : shape_(std::move(shape)),
        alphabet_(std::move(alphabet)),
        cells_(std::move(cells)) {
    if (alphabet_.empty() || alphabet_.size() > 255) {
      throw std::invalid_argument("alphabet must have 1..255 letters");
    }
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      for (std::size_t j = i + 1; j < alphabet_.size(); ++j) {
        if (alphabet_[i] == alphabet_[j]) {
          throw std::invalid_argument("alphabet letters must be distinct");
        }
      }
    }
    if (static_cast<std::int64_t>(cells_.size()) != shape_.total_points()) {
      throw std::invalid_argument("cell count does not match torus size");
    }
    for (std::uint8_t c : cells_) {
      if (c >= alphabet_.size()) {
        throw std::invalid_argument("cell letter index out of range");
      }
    }
  }

  /// Uniform labeling with the alphabet's first letter everywhere.
  static Labeling filled(const TorusShape& shape, std::string alphabet,
                         std::uint8_t letter_index = 0) {
    std::vector<std::uint8_t> cells(
        static_cast<std::size_t>(shape.total_points()), letter_index);
    return Labeling(shape, std::move(alphabet), std::move(cells));
  }

  const TorusShape& shape() const { return shape_; }
  const std::string& alphabet() const { return alphabet_; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  char letter_at(std::int64_t flat) const {
    return alphabet_[cells_[static_cast<std::size_t>(flat)]];
  }
  char letter_at(const Point& p) const { return letter_at(shape_.flat_index(p.coords)); }

  /// Index of a letter in the alphabet, or -1 when absent.
  int letter_index(char letter) const {
    auto pos = alphabet_.find(letter);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
  }

  void set_letter(std::int64_t flat, std::uint8_t letter_index) {
    if (letter_index >= alphabet_.size()) {
      throw std::invalid_argument("letter index out of range");
    }
    cells_[static_cast<std::size_t>(flat)] = letter_index;
  }

  /// Cells as a letter string, flat order. Canonical form used for dedup.
  std::string cell_string() const {
    std::string s(cells_.size(), ' ');
    for (std::size_t i = 0; i < cells_.size(); ++i) s[i] = alphabet_[cells_[i]];
    return s;
  }

  bool operator==(const Labeling& o) const {
    return shape_ == o.shape_ && alphabet_ == o.alphabet_ && cells_ == o.cells_;
  }

 private:
  TorusShape shape_;
  std::string alphabet_;
  std::vector<std::uint8_t> cells_;
};

}  // namespace wordtorus
