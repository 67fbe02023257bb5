#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wordtorus {

/// Admissibility verdict for a word (see check_word).
struct WordVerdict {
  bool all_distinct = false;
  bool parity_ok = false;  // condition (1): odd/even letter sets disjoint
  bool pair_ok = false;    // condition (2): no repeated unordered adjacent pair
  std::optional<std::pair<char, char>> offending_pair;  // first repeat, scan order
  bool admissible = false;  // parity_ok && pair_ok
};

/**
 * @brief A finite word of length r >= 2 with its parity split.
 *
 * odd_set / even_set are the letters at odd / even positions (1-indexed).
 * They are computed from positions and may intersect; disjointness is a
 * verdict, not a constructor precondition. The verdict is computed eagerly
 * so downstream code can gate on admissible() without recomputation.
 */
class Word {
 public:
  explicit Word(std::string letters) : letters_(std::move(letters)) {
    if (letters_.size() < 2) {
      throw std::invalid_argument("word must have at least 2 letters");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      ((i % 2 == 0) ? odd_set_ : even_set_).insert(letters_[i]);
    }
    compute_verdict();
  }

  const std::string& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  char at(int i) const { return letters_[static_cast<std::size_t>(i)]; }

  const std::set<char>& odd_set() const { return odd_set_; }
  const std::set<char>& even_set() const { return even_set_; }

  const WordVerdict& verdict() const { return verdict_; }
  bool admissible() const { return verdict_.admissible; }

  /// Distinct letters in first-occurrence order; the natural alphabet for
  /// exhaustive scans over labelings of this word.
  std::string distinct_letters() const {
    std::string a;
    for (char c : letters_) {
      if (a.find(c) == std::string::npos) a.push_back(c);
    }
    return a;
  }

  Word reversed() const {
    return Word(std::string(letters_.rbegin(), letters_.rend()));
  }

  bool operator==(const Word& o) const { return letters_ == o.letters_; }

 private:
  void compute_verdict() {
    WordVerdict v;
    v.all_distinct =
        std::set<char>(letters_.begin(), letters_.end()).size() == letters_.size();

    v.parity_ok = true;
    for (char c : odd_set_) {
      if (even_set_.count(c)) {
        v.parity_ok = false;
        break;
      }
    }

    // Condition (2) reads adjacent pairs unordered, so a forward occurrence
    // and its reversal collide.
    v.pair_ok = true;
    std::map<std::pair<char, char>, std::pair<char, char>> first_form;
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
      char a = letters_[i], b = letters_[i + 1];
      std::pair<char, char> key = {std::min(a, b), std::max(a, b)};
      auto it = first_form.find(key);
      if (it != first_form.end()) {
        v.pair_ok = false;
        v.offending_pair = it->second;  // report the pair as it first appeared
        break;
      }
      first_form.emplace(key, std::make_pair(a, b));
    }

    v.admissible = v.parity_ok && v.pair_ok;
    verdict_ = v;
  }

  std::string letters_;
  std::set<char> odd_set_;
  std::set<char> even_set_;
  WordVerdict verdict_;
};

/// Check both admissibility conditions: (1) no letter at both parities,
/// (2) no unordered adjacent pair repeated.
inline WordVerdict check_word(const Word& w) { return w.verdict(); }

inline WordVerdict check_word(const std::string& letters) {
  return Word(letters).verdict();
}

}  // namespace wordtorus
