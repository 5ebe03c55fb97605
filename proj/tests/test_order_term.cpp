#include <catch2/catch_amalgamated.hpp>

#include "ordsum/expr.hpp"
#include "ordsum/gen.hpp"
#include "ordsum/order_term.hpp"

using namespace ordsum;

namespace {
OrderTerm T(const char* s) { return parse_term(s); }
}  // namespace

TEST_CASE("normalize applies the rewrite rules") {
  CHECK(term_to_string(T("w + w")) == "w*2");
  CHECK(term_to_string(T("rev(3)")) == "3");
  CHECK(term_to_string(T("Q + 1 + Q")) == "Q");
  CHECK(term_to_string(T("Q(Q)")) == "Q");
  CHECK(term_to_string(T("rev(w + 1)")) == "1 + rev(w)");
  CHECK(term_to_string(T("rev(w) + 3")) == "rev(w)");
  CHECK(term_to_string(T("Q(2) + 2 + Q(2)")) == "Q(2)");
  CHECK(term_to_string(T("Q(2) + 1 + Q(2)")) == "Q(2) + 1 + Q(2)");
  CHECK(term_to_string(T("Q(rev(w)) + rev(w) + Q(rev(w))")) == "Q(rev(w))");
  CHECK(term_to_string(T("Q(w) + w + 1 + Q(w)")) == "Q(w) + w + 1 + Q(w)");
}

TEST_CASE("normalize is idempotent on random raw sequences") {
  Gen g(3);
  for (int i = 0; i < 300; ++i) {
    OrderTerm nf = normalize(g.raw_term(4, 1).blocks);
    CHECK(normalize(nf.blocks) == nf);
  }
}

TEST_CASE("term_add concatenates then normalizes") {
  CHECK(term_add(T("Q"), T("Q")) == T("Q"));
  CHECK(term_add(T("1"), T("w")) == T("w"));
  CHECK(term_add(T("w + Q(2)"), T("Q(2) + 1")) == T("w + Q(2) + 1"));
}

TEST_CASE("term_reverse swaps block kinds and flips order") {
  CHECK(term_reverse(T("w + Q")) == T("Q + rev(w)"));
  CHECK(term_reverse(T("w*2")) == term_rev_ordinal(parse_ordinal("w*2")));
  CHECK(term_reverse(T("Q(1,2)")) == T("Q(1,2)"));
}

TEST_CASE("term equality is normal-form equality") {
  CHECK(term_eq(T("w + w"), T("w*2")));
  CHECK_FALSE(term_eq(T("1 + Q"), T("Q")));
  CHECK(term_eq(T("Q + Q(2) + Q(2)"), T("Q + Q(2)")));
}

TEST_CASE("level-0 and level-1 sums reproduce their counterexamples") {
  OrderTerm Q = T("Q"), w = T("w"), one = T("1");
  CHECK(wlike_sum(0, wlike_sum(0, Q, w), one) == T("2 + Q + w"));
  CHECK(wlike_sum(0, Q, wlike_sum(0, w, one)) == T("1 + Q + w"));
  CHECK(wlike_sum(0, wlike_sum(0, Q, w), one) != wlike_sum(0, Q, wlike_sum(0, w, one)));

  CHECK(wlike_sum(1, wlike_sum(1, Q, T("w^2")), w) == T("w + Q + w^2"));
  CHECK(wlike_sum(1, Q, wlike_sum(1, T("w^2"), w)) == T("Q + w^2"));
}

TEST_CASE("the full ordinal-prefix sum shifts the whole prefix") {
  CHECK(wlike_sum(2, T("Q"), T("w^2")) == T("w^2 + Q"));
  CHECK(wlike_sum(2, T("Q"), T("w + 1 + Q(2)")) == T("w + 1 + Q + Q(2)"));
  CHECK(wlike_sum(2, T("w"), T("Q")) == T("w + Q"));
}

TEST_CASE("scattered-prefix sum") {
  CHECK(sum_s(T("rev(w)"), T("w + Q")) == T("w + rev(w) + Q"));
  CHECK(sum_s(T("w"), T("Q")) == T("w + Q"));
  CHECK(sum_s(T("Q(2)"), T("w")) == T("w + Q(2)"));
}

TEST_CASE("prefix-natural sum") {
  CHECK(sum_h(T("w^2 + Q"), T("w*3 + Q(2)")) == T("w^2 + w*3 + Q + Q(2)"));
  CHECK(sum_h(T("w"), T("w")) == T("w*2"));
  CHECK(sum_h(T("Q"), T("Q")) == T("Q"));
}

TEST_CASE("sum on orders that do not embed Z") {
  CHECK(wo_wostar_sum(hessenberg, T("w + rev(w)"), T("3")) == T("w + 3 + rev(w)"));
  CHECK(wo_wostar_sum(hessenberg, T("w + rev(w)"), T("w*2 + rev(w)")) ==
        T("w*3 + rev(w*2)"));
  CHECK(wo_wostar_sum(hessenberg, T("0"), T("w + 1 + rev(w)")) ==
        T("w + 1 + rev(w)"));
  CHECK_THROWS_AS(wo_wostar_sum(hessenberg, T("rev(w) + w"), T("1")),
                  std::domain_error);
  CHECK_THROWS_AS(wo_wostar_sum(hessenberg, T("Q"), T("1")), std::domain_error);

  // other good ordinal sums slot in as the inner operation
  CHECK(wo_wostar_sum(lcm_sum, T("w*3 + rev(w*2)"), T("w*2 + rev(w)")) ==
        T("w*3 + rev(w*2)"));
  CHECK(wo_wostar_sum(min_sum, T("w + 2 + rev(w)"), T("w + 3 + rev(w)")) ==
        T("w + 5 + rev(w)"));
  CHECK(wo_wostar_sum(fsplit_sum, T("w + rev(w)"), T("w + rev(w)")) ==
        T("w*2 + rev(w*2)"));
}

TEST_CASE("reverse combinator") {
  TermSum usual = [](const OrderTerm& a, const OrderTerm& b) {
    return term_add(a, b);
  };
  TermSum rc = reverse_combinator(usual);
  CHECK(rc(T("w"), T("Q")) == T("w + Q"));

  // on reversed well-orders, the reverse combinator of the natural sum
  // natural-sums the underlying ordinals
  TermSum rev_hess = reverse_combinator([](const OrderTerm& a, const OrderTerm& b) {
    return term_from_ordinal(
        hessenberg(*term_as_ordinal(a), *term_as_ordinal(b)));
  });
  CHECK(rev_hess(T("rev(w)"), T("rev(w)")) == T("rev(w*2)"));

  Gen g(9);
  TermSum twice = reverse_combinator(reverse_combinator(usual));
  for (int i = 0; i < 50; ++i) {
    OrderTerm a = g.term(), b = g.term();
    CHECK(twice(a, b) == usual(a, b));
  }
}

TEST_CASE("ordinal prefix accessor") {
  auto [v, rest] = term_ordinal_prefix(T("w*2 + 1 + Q + 5"));
  CHECK(v == parse_ordinal("w*2 + 1"));
  CHECK(rest == T("Q + 5"));
  CHECK(term_ordinal_prefix(T("Q")).first.is_zero());
}
