#include <catch2/catch_amalgamated.hpp>

#include "ordsum/complicated.hpp"
#include "ordsum/expr.hpp"

using namespace ordsum;

namespace {
OrderTerm T(const char* s) { return parse_term(s); }
}  // namespace

TEST_CASE("binary word encoding") {
  CHECK(encode_word(BinaryWord("")) == T("Q"));
  CHECK(encode_word(BinaryWord("0")) == T("Q + Q(2) + Q"));
  CHECK(encode_word(BinaryWord("01")) == T("Q + Q(2) + Q + Q(1,2) + Q"));
  CHECK_THROWS_AS(BinaryWord("012"), std::invalid_argument);
}

TEST_CASE("decoding inverts encoding and rejects other shapes") {
  CHECK(decode_word(T("Q")).bits.empty());
  CHECK(decode_word(T("Q + Q(1,2) + Q")).bits == "1");
  for (const char* w : {"", "0", "1", "0110", "111", "0000001"})
    CHECK(decode_word(encode_word(BinaryWord(w))).bits == w);
  CHECK_THROWS_AS(decode_word(T("w + Q")), std::domain_error);
  CHECK_THROWS_AS(decode_word(T("Q + Q(3) + Q")), std::domain_error);
  CHECK_THROWS_AS(decode_word(T("Q + Q(2)")), std::domain_error);
}

TEST_CASE("word witnesses verify as instances of a sum of Q with Q") {
  for (const char* w : {"", "0", "1", "01", "0110", "10101"}) {
    BinaryWord word(w);
    WitnessReport rep = verify_piece_witness(T("Q"), T("Q"), encode_word(word),
                                             make_word_witness(word));
    INFO(rep.message);
    CHECK(rep.ok);
  }
  CHECK_FALSE(verify_piece_witness(T("Q"), T("Q"), T("w"),
                                   make_word_witness(BinaryWord(""))));
  // a gap: blue side misses the only block
  PieceWitness gap;
  gap.red.push_back({0, SplitRule::whole});
  CHECK_FALSE(verify_piece_witness(T("Q"), T("0"), T("Q + Q(2) + Q"), gap));
  // wrong reassembled type
  PieceWitness wrong = make_word_witness(BinaryWord("0"));
  CHECK_FALSE(verify_piece_witness(T("Q(2)"), T("Q"), encode_word(BinaryWord("0")), wrong));
}

TEST_CASE("good sum tables") {
  OrderTerm q2 = T("Q(2) + Q"), q12 = T("Q(1,2) + Q");
  SumTable z2 = build_sum_table({{q2, q2, q2}, {q2, q12, q12}, {q12, q12, q2}});
  CHECK(check_good_table(z2).pass);

  OrderTerm e1 = T("2 + Q(2) + Q"), e2 = T("Q"), e3 = T("1 + Q + Q(2) + Q");
  SumTable canon = build_sum_table({{e1, e2, e3},
                                    {e1, e1, e1},
                                    {e1, e3, e3},
                                    {e3, e2, e3},
                                    {e3, e3, e3},
                                    {e2, e2, e2}});
  CHECK(check_good_table(canon).pass);

  // alternative table: still associative, so the report lists no violation
  SumTable alt = build_sum_table({{q2, q12, q12}, {q12, q12, q12}, {q2, q2, q12}});
  TableReport alt_rep = check_good_table(alt);
  CHECK(alt_rep.pass);

  // the "pick the third element" table fails associativity: (a+b)+b = a
  // while a+(b+b) = c
  OrderTerm a = T("1"), b = T("2"), c = T("3");
  SumTable bad = build_sum_table({{a, a, a}, {b, b, b}, {c, c, c},
                                  {a, b, c}, {a, c, b}, {b, c, a}});
  TableReport bad_rep = check_good_table(bad);
  CHECK_FALSE(bad_rep.pass);
  CHECK_FALSE(bad_rep.violations.empty());

  // missing entries are totality violations
  SumTable partial = build_sum_table({{a, a, a}, {a, b, b}});
  CHECK_FALSE(check_good_table(partial).pass);
}

TEST_CASE("semi-standard classification") {
  CHECK(semi_standard_classify(T("1"), T("w"), T("w + 1")) ==
        SemiStandardClass::reversed);
  CHECK(semi_standard_classify(T("w"), T("1"), T("w + 1")) ==
        SemiStandardClass::usual);
  CHECK(semi_standard_classify(T("2 + Q(2) + Q"), T("Q"), T("1 + Q + Q(2) + Q")) ==
        SemiStandardClass::neither);
  CHECK(semi_standard_classify(T("Q"), T("Q"), T("Q")) == SemiStandardClass::both);
}

TEST_CASE("group representations") {
  OrderTerm q2 = T("Q(2) + Q"), q12 = T("Q(1,2) + Q");
  SumTable z2 = build_sum_table({{q2, q2, q2}, {q2, q12, q12}, {q12, q12, q2}});
  TermSum table_sum = [&](const OrderTerm& x, const OrderTerm& y) {
    return z2.lookup(*z2.carrier_index(x), *z2.carrier_index(y))->result;
  };
  CHECK(verify_group_rep({{{0, 1}, {1, 0}}, {q2, q12}}, table_sum));
  CHECK(verify_group_rep({{{0}}, {T("Q")}}, [](const OrderTerm& x, const OrderTerm& y) {
    return term_add(x, y);
  }));
  CHECK_FALSE(verify_group_rep(
      {{{0, 1}, {1, 0}}, {T("w*2"), T("w")}},
      [](const OrderTerm& x, const OrderTerm& y) {
        return term_from_ordinal(hessenberg(*term_as_ordinal(x), *term_as_ordinal(y)));
      }));
  CHECK_THROWS_AS(verify_group_rep({{{0, 0}, {0, 0}}, {q2, q12}},
                                   [](const OrderTerm& x, const OrderTerm&) {
                                     return x;
                                   }),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_group_rep({{{0, 1}, {1, 0}}, {q2, q2}},
                                   [](const OrderTerm& x, const OrderTerm&) {
                                     return x;
                                   }),
                  std::invalid_argument);
}

TEST_CASE("no non-trivial group on ordinal samples") {
  std::vector<Ordinal> sample;
  for (std::uint64_t k = 0; k <= 2; ++k)
    for (std::uint64_t c = 1; c <= 3; ++c)
      sample.push_back(Ordinal::w_pow(Ordinal::from_nat(k), c));
  CHECK(no_group_ordinals_check(sample).pass);
  CHECK(no_group_ordinals_check({Ordinal{}}).pass);
  CHECK(no_group_ordinals_check({parse_ordinal("1"), parse_ordinal("2"),
                                 parse_ordinal("w"), parse_ordinal("w + 1"),
                                 parse_ordinal("w*2")})
            .pass);
}

TEST_CASE("free multiset sums") {
  Multiset m1{T("Q(2)")}, m2{T("Q(1,2)")};
  FreeMultisetSum f = free_multiset_sum(m1, m2);
  CHECK(f.encoded == encode_multiset({T("Q(2)"), T("Q(1,2)")}));
  CHECK(verify_piece_witness(encode_multiset(m1), encode_multiset(m2), f.encoded,
                             f.witness));

  FreeMultisetSum fid = free_multiset_sum(m1, {});
  CHECK(fid.encoded == encode_multiset(m1));
  CHECK(verify_piece_witness(encode_multiset(m1), T("Q"), fid.encoded, fid.witness));

  FreeMultisetSum fdup = free_multiset_sum({T("Q(2)")}, {T("Q(2)")});
  CHECK(fdup.encoded == T("Q + Q(2) + Q + Q(2) + Q"));

  CHECK_THROWS_AS(encode_multiset({T("Q")}), std::domain_error);
  CHECK_THROWS_AS(encode_multiset({T("w")}), std::domain_error);
}
