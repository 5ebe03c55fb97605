#include <catch2/catch_amalgamated.hpp>

#include "ordsum/bicolor.hpp"
#include "ordsum/expr.hpp"
#include "ordsum/gen.hpp"
#include "ordsum/selftest.hpp"

using namespace ordsum;

TEST_CASE("bi-coloring validation") {
  BiColoring ones{2, 2, {1, 1, 1, 1}};
  CHECK(validate_bicoloring(ones));
  BiColoring stair{1, 2, {0, 1}};
  CHECK(validate_bicoloring(stair));
  BiColoring bad{2, 1, {0, 1}};
  CHECK_FALSE(validate_bicoloring(bad));
  BiColoring badrow{1, 2, {1, 0}};
  CHECK_FALSE(validate_bicoloring(badrow));
}

TEST_CASE("the induced sum linearizes the disjoint union") {
  BiColoring ones{2, 3, std::vector<std::uint8_t>(6, 1)};
  RealizedSum usual = sum_from_bicoloring(ones);
  CHECK(usual.type == term_from_nat(5));
  CHECK(usual.realization == "AABBB");

  BiColoring zeros{2, 3, std::vector<std::uint8_t>(6, 0)};
  RealizedSum reversed = sum_from_bicoloring(zeros);
  CHECK(reversed.type == term_from_nat(5));
  CHECK(reversed.realization == "BBBAA");

  BiColoring stair{1, 2, {0, 1}};
  RealizedSum s = sum_from_bicoloring(stair);
  CHECK(s.type == term_from_nat(3));
  CHECK(s.realization == "BAB");

  CHECK_THROWS_AS(sum_from_bicoloring(BiColoring{2, 1, {0, 1}}), std::domain_error);
}

TEST_CASE("extracting the coloring of a realization") {
  BiColoring usual = coloring_of_sum(2, 2, "AABB");
  CHECK(usual.p == std::vector<std::uint8_t>{1, 1, 1, 1});
  BiColoring reversed = coloring_of_sum(2, 2, "BBAA");
  CHECK(reversed.p == std::vector<std::uint8_t>{0, 0, 0, 0});
  BiColoring perfect = coloring_of_sum(2, 2, "ABAB");
  CHECK(perfect.at(0, 0) == 1);
  CHECK(perfect.at(0, 1) == 1);
  CHECK(perfect.at(1, 0) == 0);
  CHECK(perfect.at(1, 1) == 1);
  CHECK(validate_bicoloring(perfect));
  CHECK_THROWS_AS(coloring_of_sum(2, 2, "AAB"), std::invalid_argument);
  CHECK_THROWS_AS(coloring_of_sum(2, 2, "AAXB"), std::invalid_argument);
}

TEST_CASE("enumeration counts and round trips") {
  CHECK(enumerate_bicolorings(1, 1).size() == 2);
  CHECK(enumerate_bicolorings(1, 2).size() == 3);
  CHECK(enumerate_bicolorings(2, 2).size() == 6);
  CHECK_THROWS_AS(enumerate_bicolorings(7, 7), capacity_error);

  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n) {
      auto fast = enumerate_bicolorings(m, n);
      auto brute = oracle::bicolorings_bruteforce(m, n);
      REQUIRE(fast.size() == brute.size());
      CHECK(fast.size() == oracle::binomial(m + n, n));
      for (std::size_t i = 0; i < fast.size(); ++i) {
        CHECK(fast[i].p == brute[i].p);
        RealizedSum r = sum_from_bicoloring(fast[i]);
        CHECK(r.type == term_from_nat(m + n));
        CHECK(coloring_of_sum(m, n, r.realization).p == fast[i].p);
      }
    }
}

TEST_CASE("expression parsing matches the grammar") {
  CHECK(parse_term("w^2*3 + w*2 + 5") ==
        term_from_ordinal(parse_ordinal("w^2*3 + w*2 + 5")));
  CHECK(term_to_string(parse_term("Q(2) + Q")) == "Q(2) + Q");
  CHECK(term_to_string(parse_term("rev(w) + w")) == "rev(w) + w");
  CHECK(parse_term("(w + 1) + Q") == parse_term("w + 1 + Q"));
  CHECK(parse_term("Q(1)") == parse_term("Q"));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_term("w + ");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 5);
  }
  try {
    parse_term("Q(2");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.column == 4);
  }
  CHECK_THROWS_AS(parse_term("99999999999999999999"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("Q"), parse_error);
  CHECK_THROWS_AS(parse_descriptor("Wx"), parse_error);
  CHECK_THROWS_AS(parse_descriptor("perp(W"), parse_error);
}

TEST_CASE("round trip on generated normal values") {
  Gen g(43);
  for (int i = 0; i < 500; ++i) {
    OrderTerm t = g.term(4, 2);
    CHECK(parse_term(term_to_string(t)) == t);
  }
}

TEST_CASE("descriptor grammar round trips through rendering") {
  for (const char* d : {"W", "W*", "S", "P(w^2)", "genQ", "genOmegaQ", "genQ1",
                        "zero", "all", "perp(genQ)", "inv(W)",
                        "plus(W,genQ)", "times(S,W*)"})
    CHECK(descriptor_to_string(parse_descriptor(descriptor_to_string(parse_descriptor(d)))) ==
          descriptor_to_string(parse_descriptor(d)));
}
