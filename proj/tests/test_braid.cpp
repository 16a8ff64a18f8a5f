#include "generators.hpp"

#include "weave/braid.hpp"
#include "weave/errors.hpp"

#include <doctest.h>

#include <numeric>

using namespace weave;
using weave::testing::random_braid;
using weave::testing::random_letter;

namespace {

// Follow each strand through the letters one at a time and count the loops.
int traced_components(const BraidWord& b) {
  const int k = b.strands();
  std::vector<bool> seen(k, false);
  int loops = 0;
  for (int start = 0; start < k; ++start) {
    if (seen[start]) continue;
    ++loops;
    int pos = start;
    while (!seen[pos]) {
      seen[pos] = true;
      for (int j : b.letters()) {
        const int g = std::abs(j) - 1;
        if (pos == g) pos = g + 1;
        else if (pos == g + 1) pos = g;
      }
    }
  }
  return loops;
}

}  // namespace

TEST_CASE("weaving words") {
  CHECK(weaving_word(3, 2).letters() == std::vector<int>{1, -2, 1, -2});
  CHECK(weaving_word(4, 1).letters() == std::vector<int>{1, -2, 3});
  CHECK(weaving_word(5, 2).length() == 8);
  CHECK(weaving_word(2, 3).letters() == std::vector<int>{1, 1, 1});
  CHECK(weaving_word(3, 4).strands() == 3);

  CHECK(writhe(weaving_word(3, 2)) == 0);
  CHECK(writhe(weaving_word(4, 2)) == 2);
  CHECK(writhe(weaving_word(2, 5)) == 5);

  CHECK_THROWS_AS(weaving_word(1, 2), DomainError);
  CHECK_THROWS_AS(weaving_word(3, 0), DomainError);
  CHECK_THROWS_AS(weaving_word(-3, 2), DomainError);
}

TEST_CASE("component count is gcd(p, n)") {
  CHECK(component_count(weaving_word(3, 2)) == 1);
  CHECK(component_count(weaving_word(2, 2)) == 2);
  CHECK(component_count(weaving_word(4, 2)) == 2);
  CHECK(component_count(weaving_word(3, 3)) == 3);
  CHECK(component_count(BraidWord(4)) == 4);

  for (int p = 2; p <= 12; ++p)
    for (int n = 1; n <= 12; ++n) {
      const BraidWord w = weaving_word(p, n);
      CAPTURE(p);
      CAPTURE(n);
      CHECK(component_count(w) == std::gcd(p, n));
      CHECK(traced_components(w) == std::gcd(p, n));
    }
  for (int k = 0; k < 200; ++k) {
    const BraidWord b = random_braid(6, 15);
    CHECK(component_count(b) == traced_components(b));
  }
}

TEST_CASE("strand permutation") {
  CHECK(strand_permutation(BraidWord(3, {1})) == std::vector<int>{1, 0, 2});
  CHECK(strand_permutation(BraidWord(3, {1, 2})) == std::vector<int>{2, 0, 1});
  CHECK(strand_permutation(BraidWord(3, {1, -1})) == std::vector<int>{0, 1, 2});
}

TEST_CASE("mirror, conjugate and stabilize") {
  const BraidWord b(3, {1, -2});
  CHECK(mirror(b) == BraidWord(3, {-1, 2}));
  CHECK(writhe(mirror(b)) == -writhe(b));
  CHECK(conjugate(b, 2) == BraidWord(3, {2, 1, -2, -2}));
  CHECK(stabilize(b, 1) == BraidWord(4, {1, -2, 3}));
  CHECK(stabilize(b, -1) == BraidWord(4, {1, -2, -3}));
  CHECK_THROWS_AS(stabilize(b, 0), DomainError);
  CHECK_THROWS_AS(conjugate(b, 3), DomainError);
  CHECK_THROWS_AS(conjugate(b, 0), DomainError);

  for (int k = 0; k < 100; ++k) {
    const BraidWord r = random_braid();
    const int g = random_letter(r.strands());
    CHECK(component_count(conjugate(r, g)) == component_count(r));
    CHECK(component_count(stabilize(r, 1)) == component_count(r));
    CHECK(component_count(stabilize(r, -1)) == component_count(r));
    CHECK(writhe(conjugate(r, g)) == writhe(r));
    CHECK(mirror(mirror(r)) == r);
  }
}

TEST_CASE("BraidWord validates letters") {
  CHECK_THROWS_AS(BraidWord(0), DomainError);
  CHECK_THROWS_AS(BraidWord(3, {3}), DomainError);
  CHECK_THROWS_AS(BraidWord(3, {0}), DomainError);
  CHECK_THROWS_AS(BraidWord(2, {-2}), DomainError);
  CHECK_NOTHROW(BraidWord(1));
}

TEST_CASE("parse and format") {
  CHECK(parse_braid("3; 1 -2 1 -2") == weaving_word(3, 2));
  CHECK(parse_braid("  2 ;1   1 ") == BraidWord(2, {1, 1}));
  CHECK(parse_braid("4; +1 -3") == BraidWord(4, {1, -3}));
  CHECK(parse_braid("2;") == BraidWord(2));
  CHECK(format_braid(weaving_word(3, 2)) == "3; 1 -2 1 -2");
  CHECK(format_braid(BraidWord(2)) == "2;");

  for (int k = 0; k < 100; ++k) {
    const BraidWord r = random_braid();
    CHECK(parse_braid(format_braid(r)) == r);
  }
}

TEST_CASE("parse errors") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_braid(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no ParseError for " << text);
    return 0;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("3 1 2") == 2);
  CHECK(position_of("3; 1 x") == 5);
  CHECK(position_of("3; 1 3") == 5);
  CHECK(position_of("3; 0") == 3);
  CHECK(position_of("3; 1,2") == 4);
  CHECK_THROWS_AS(parse_braid("0;"), DomainError);
}
