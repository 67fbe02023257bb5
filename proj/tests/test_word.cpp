#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "wordtorus/rng.hpp"
#include "wordtorus/word.hpp"

using namespace wordtorus;

TEST_CASE("verdicts for the named words", "[word]") {
  {
    Word w("CAT");
    CHECK(w.verdict().all_distinct);
    CHECK(w.verdict().admissible);
    CHECK(w.odd_set() == std::set<char>{'C', 'T'});
    CHECK(w.even_set() == std::set<char>{'A'});
  }
  {
    Word w("FELINE");
    CHECK_FALSE(w.verdict().all_distinct);
    CHECK(w.verdict().parity_ok);
    CHECK(w.verdict().pair_ok);
    CHECK(w.verdict().admissible);
    CHECK(w.distinct_letters() == "FELIN");
  }
  {
    Word w("ELEPHANT");
    CHECK(w.verdict().parity_ok);  // E at 1,3; no letter on both parities
    CHECK_FALSE(w.verdict().pair_ok);
    REQUIRE(w.verdict().offending_pair.has_value());
    CHECK(w.verdict().offending_pair->first == 'E');
    CHECK(w.verdict().offending_pair->second == 'L');
    CHECK_FALSE(w.verdict().admissible);
  }
  {
    Word w("AA");
    CHECK_FALSE(w.verdict().parity_ok);
    CHECK(w.verdict().pair_ok);  // only one adjacent pair
    CHECK_FALSE(w.verdict().admissible);
    CHECK_FALSE(w.verdict().offending_pair.has_value());
  }
  CHECK(check_word("LION").admissible);
  CHECK(check_word("TIGER").admissible);
  CHECK_THROWS_AS(Word("A"), std::invalid_argument);
}

TEST_CASE("all-distinct words are always admissible", "[word]") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 2 + static_cast<int>(rng.next_below(9));
    std::string letters = "ABCDEFGHIJKLMNOP";
    // seeded partial shuffle, take a prefix
    for (std::size_t i = letters.size(); i > 1; --i) {
      std::swap(letters[i - 1], letters[rng.next_below(i)]);
    }
    Word w(letters.substr(0, static_cast<std::size_t>(r)));
    CHECK(w.verdict().all_distinct);
    CHECK(w.verdict().admissible);
  }
}

TEST_CASE("verdicts are invariant under letter renaming", "[word]") {
  SplitMix64 rng(11);
  const std::string pool = "ABCDE";
  for (int trial = 0; trial < 300; ++trial) {
    int r = 2 + static_cast<int>(rng.next_below(7));
    std::string letters;
    for (int i = 0; i < r; ++i) letters.push_back(pool[rng.next_below(pool.size())]);

    std::string image = "VWXYZ";
    for (std::size_t i = image.size(); i > 1; --i) {
      std::swap(image[i - 1], image[rng.next_below(i)]);
    }
    std::string renamed = letters;
    for (char& c : renamed) c = image[static_cast<std::size_t>(pool.find(c))];

    WordVerdict a = check_word(letters);
    WordVerdict b = check_word(renamed);
    CHECK(a.all_distinct == b.all_distinct);
    CHECK(a.parity_ok == b.parity_ok);
    CHECK(a.pair_ok == b.pair_ok);
    CHECK(a.admissible == b.admissible);
    CHECK(a.offending_pair.has_value() == b.offending_pair.has_value());
  }
}

TEST_CASE("reversal preserves pair_ok always, admissibility for odd r", "[word]") {
  SplitMix64 rng(17);
  const std::string pool = "ABCD";
  for (int trial = 0; trial < 300; ++trial) {
    int r = 2 + static_cast<int>(rng.next_below(7));
    std::string letters;
    for (int i = 0; i < r; ++i) letters.push_back(pool[rng.next_below(pool.size())]);
    Word w(letters);
    Word rev = w.reversed();
    CHECK(w.verdict().pair_ok == rev.verdict().pair_ok);
    if (r % 2 == 1 && w.verdict().admissible) CHECK(rev.verdict().admissible);
  }
}

TEST_CASE("offending pair reports the first repeat in scan order", "[word]") {
  // pairs: AB BC CB -> {B,C} repeats, first seen as (B,C)
  WordVerdict v = check_word("ABCB");
  REQUIRE(v.offending_pair.has_value());
  CHECK(v.offending_pair->first == 'B');
  CHECK(v.offending_pair->second == 'C');
}
