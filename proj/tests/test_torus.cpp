#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "wordtorus/labeling_io.hpp"
#include "wordtorus/rng.hpp"
#include "wordtorus/torus.hpp"
#include "wordtorus/verify.hpp"

using namespace wordtorus;

TEST_CASE("advance wraps coordinatewise", "[torus]") {
  TorusShape s44({4, 4});
  CHECK(advance(Point{{0, 0}}, Direction{{1, 1}}, 2, s44) == Point{{2, 2}});
  CHECK(advance(Point{{3, 0}}, Direction{{1, -1}}, 1, s44) == Point{{0, 3}});
  TorusShape s4({4});
  CHECK(advance(Point{{0}}, Direction{{-1}}, 2, s4) == Point{{2}});
}

TEST_CASE("advance composes and inverts", "[torus]") {
  SplitMix64 rng(42);
  for (const auto& dims : {std::vector<int>{4}, {3, 5}, {3, 3, 4}}) {
    TorusShape shape(dims);
    const auto dirs = all_directions(shape);
    for (int trial = 0; trial < 50; ++trial) {
      Point p{shape.coords_of(static_cast<std::int64_t>(
          rng.next_below(static_cast<std::uint64_t>(shape.total_points()))))};
      const Direction& y = dirs[rng.next_below(dirs.size())];
      int t = 1 + static_cast<int>(rng.next_below(7));
      CHECK(advance(p, y, t, shape) ==
            advance(advance(p, y, 1, shape), y, t - 1, shape));
      CHECK(advance(advance(p, y, 1, shape), negate(y), 1, shape) == p);
    }
  }
}

TEST_CASE("all_directions enumerates 3^d - 1 vectors, negation-closed", "[torus]") {
  CHECK(all_directions(TorusShape({4})) ==
        std::vector<Direction>{Direction{{-1}}, Direction{{1}}});
  CHECK(all_directions(TorusShape({4, 4})).size() == 8);
  CHECK(all_directions(TorusShape({3, 3, 3})).size() == 26);

  for (const auto& dims : {std::vector<int>{4, 4}, {3, 3, 3}}) {
    auto dirs = all_directions(TorusShape(dims));
    for (const auto& y : dirs) {
      CHECK(std::count(dirs.begin(), dirs.end(), y) == 1);
      CHECK(std::count(dirs.begin(), dirs.end(), negate(y)) == 1);
    }
  }
}

TEST_CASE("shape guards", "[torus]") {
  CHECK_THROWS_AS(TorusShape({}), std::invalid_argument);
  CHECK_THROWS_AS(TorusShape(std::vector<int>(9, 3)), std::invalid_argument);
  CHECK_THROWS_AS(TorusShape({2, 4}), std::invalid_argument);  // degenerate side
  CHECK_THROWS_AS(TorusShape({1}), std::invalid_argument);
  CHECK_THROWS_AS(TorusShape({2048, 2048, 1024}), std::invalid_argument);  // 2^32
  CHECK(TorusShape({3}).direction_count() == 2);
  CHECK(TorusShape({2048, 1024, 1024}).total_points() == std::int64_t{1} << 31);
}

TEST_CASE("flat indexing is row-major, last coordinate fastest", "[torus]") {
  TorusShape s({3, 4, 5});
  CHECK(s.flat_index({0, 0, 0}) == 0);
  CHECK(s.flat_index({0, 0, 1}) == 1);
  CHECK(s.flat_index({0, 1, 0}) == 5);
  CHECK(s.flat_index({1, 0, 0}) == 20);
  for (std::int64_t f = 0; f < s.total_points(); ++f) {
    CHECK(s.flat_index(s.coords_of(f)) == f);
  }
}

TEST_CASE("labeling guards", "[torus]") {
  TorusShape s({4});
  CHECK_THROWS_AS(Labeling(s, "CAT", {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Labeling(s, "CAT", {0, 1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Labeling(s, "CAC", {0, 1, 2, 0}), std::invalid_argument);
  Labeling l(s, "CAT", {0, 1, 2, 1});
  CHECK(l.cell_string() == "CATA");
  CHECK(l.letter_index('T') == 2);
  CHECK(l.letter_index('X') == -1);
}

TEST_CASE("labeling file round-trips", "[torus]") {
  Labeling l = read_labeling_from_string("torus v1\ndims: 4\nalphabet: CAT\nCATA\n");
  CHECK(l.cell_string() == "CATA");
  CHECK(l.shape().dims() == std::vector<int>{4});
  CHECK(write_labeling_to_string(l) == "torus v1\ndims: 4\nalphabet: CAT\nCATA\n");

  // surplus cells are rejected too
  CHECK_THROWS_AS(
      read_labeling_from_string("torus v1\ndims: 4\nalphabet: CAT\nCATA\nCATA\n"),
      ParseError);

  SplitMix64 rng(7);
  for (const auto& dims : {std::vector<int>{4}, {3, 3}, {3, 3, 3}, {4, 5}, {3, 3, 3, 3}}) {
    TorusShape shape(dims);
    Labeling r = random_labeling(shape, "CAT", rng);
    Labeling back = read_labeling_from_string(write_labeling_to_string(r));
    CHECK(back == r);
  }
}

TEST_CASE("d >= 3 files separate slices with one blank line", "[torus]") {
  TorusShape s({3, 3, 3});
  Labeling l = Labeling::filled(s, "AB");
  std::string text = write_labeling_to_string(l);
  CHECK(text.find("AAA\nAAA\nAAA\n\nAAA") != std::string::npos);
  CHECK(read_labeling_from_string(text) == l);
}

TEST_CASE("parser reports line and column", "[torus]") {
  auto expect_error = [](const std::string& text, int line, const std::string& what) {
    try {
      read_labeling_from_string(text);
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(std::string(e.what()).find(what) != std::string::npos);
    }
  };
  expect_error("torus v2\n", 1, "torus v1");
  expect_error("torus v1\nsize: 4\n", 2, "dims");
  expect_error("torus v1\ndims: 4\nletters: CAT\n", 3, "alphabet");
  expect_error("torus v1\ndims: 4\nalphabet: CAA\n", 3, "duplicate");
  expect_error("torus v1\ndims: 4\nalphabet: CAT\nCAXA\n", 4, "unknown letter 'X'");
  expect_error("torus v1\ndims: 4\nalphabet: CAT\nCATAC\n", 4, "5 letters, expected 4");
  // a short line mid-body is a structural error, reported at that line
  expect_error("torus v1\ndims: 8 8\nalphabet: CAT\nCATACAT\nCATACATA\n", 4,
               "7 letters, expected 8");
  // truncated 8x8 body: one letter missing at the very end
  std::string grid = "torus v1\ndims: 8 8\nalphabet: CAT\n";
  for (int i = 0; i < 7; ++i) grid += "CATACATA\n";
  grid += "CATACAT\n";
  expect_error(grid, 12, "expected 64 cells, found 63");
  // a full row missing entirely
  std::string missing_row = "torus v1\ndims: 8 8\nalphabet: CAT\n";
  for (int i = 0; i < 7; ++i) missing_row += "CATACATA\n";
  try {
    read_labeling_from_string(missing_row);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("expected 64 cells, found 56") != std::string::npos);
  }
  // exactly N cells but delivered with a broken final row: still rejected
  std::string reflowed = "torus v1\ndims: 8 8\nalphabet: CAT\n";
  for (int i = 0; i < 7; ++i) reflowed += "CATACATA\n";
  reflowed += "CATACAT\nA\n";
  expect_error(reflowed, 11, "7 letters, expected 8");
}

TEST_CASE("figure-style 8x8 file parses to 64 cells", "[torus]") {
  std::string text = "torus v1\ndims: 8 8\nalphabet: CAT\n";
  for (int i = 0; i < 8; ++i) text += "CATACATA\n";
  Labeling l = read_labeling_from_string(text);
  CHECK(l.shape().total_points() == 64);
  for (std::int64_t row = 0; row < 8; ++row) {
    CHECK(l.cell_string().substr(static_cast<std::size_t>(row * 8), 8) == "CATACATA");
  }
}
