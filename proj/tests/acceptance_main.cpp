// Acceptance suite: one pass/fail line per criterion, full-scale samples.
// Usage: acceptance [CLI_PATH GOLDEN_DIR]
// The CLI golden-session criterion is skipped (and fails) when the two paths
// are not supplied. Exit code is the number of failed criteria.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ordsum/bicolor.hpp"
#include "ordsum/complicated.hpp"
#include "ordsum/expr.hpp"
#include "ordsum/gen.hpp"
#include "ordsum/instances.hpp"
#include "ordsum/selftest.hpp"
#include "ordsum/sgc.hpp"
#include "ordsum/shuffle.hpp"
#include "ordsum/sift.hpp"

using namespace ordsum;

namespace {

OrderTerm T(const char* s) { return parse_term(s); }
Ordinal O(const char* s) { return parse_ordinal(s); }
SgcDescriptor D(const char* s) { return parse_descriptor(s); }

struct Criterion {
  int number;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

// --- criterion 1: identity suite ------------------------------------

void criterion1(Criterion& c) {
  c.require(hessenberg(O("w*3"), O("w*2")) == O("w*5"), "w*3 # w*2");
  c.require(lcm_sum(O("w*3"), O("w*2")) == O("w*3"), "lcm left");
  c.require(lcm_sum(O("w*3"), O("w")) == O("w*3"), "lcm right");
  c.require(dynamic_sum(O("w^2*3 + w*2"), O("w^2*2 + w*4")) == O("w^2*3 + w*4"),
            "dynamic sum");
  c.require(fsplit_sum(O("w"), O("1")) == O("w") && fsplit_sum(O("w"), O("2")) == O("w"),
            "finite-split absorption");
  OrderTerm l0a = wlike_sum(0, wlike_sum(0, T("Q"), T("w")), T("1"));
  OrderTerm l0b = wlike_sum(0, T("Q"), wlike_sum(0, T("w"), T("1")));
  c.require(l0a == T("2 + Q + w") && l0b == T("1 + Q + w") && l0a != l0b,
            "level-0 counterexample");
  OrderTerm l1a = wlike_sum(1, wlike_sum(1, T("Q"), T("w^2")), T("w"));
  OrderTerm l1b = wlike_sum(1, T("Q"), wlike_sum(1, T("w^2"), T("w")));
  c.require(l1a == T("w + Q + w^2") && l1b == T("Q + w^2") && l1a != l1b,
            "level-1 counterexample");
  OrderTerm sw1 = simple_sum(D("W"), T("1"), T("w"));
  OrderTerm sw2 = simple_sum(D("W"), T("w"), T("1"));
  c.require(sw1 == T("w + 1") && sw2 == T("w") && sw1 != sw2,
            "simple sum over the well-orders");
  c.require(term_shuffle({T("Q")}) == T("Q"), "Q(Q) normalizes to Q");
}

// --- criterion 2: bounds on 1000 random pairs -----------------------------

void criterion2(Criterion& c) {
  Gen g(2024);
  for (int i = 0; i < 1000; ++i) {
    Ordinal a = g.ordinal(3, 4), b = g.ordinal(3, 4);
    InstanceSet s = enumerate_instances(a, b);
    Ordinal lo = min_sum(a, b), hi = hessenberg(a, b);
    bool ok = s.types.front() == lo && s.types.back() == hi;
    for (const Ordinal& x : s.types)
      if (x < lo || x > hi) ok = false;
    if (!ok) {
      c.require(false, "bounds failed for (" + ord_to_string(a) + ", " +
                           ord_to_string(b) + ")");
      return;
    }
  }
}

// --- criterion 3: instance-set facts ---------------------------------------

void criterion3(Criterion& c) {
  InstanceLimits lim{5, 8};
  for (std::uint64_t k = 1; k <= 3; ++k) {
    Ordinal p = Ordinal::w_pow(Ordinal::from_nat(k));
    auto types = enumerate_instances(p, p, lim).types;
    c.require(types == std::vector<Ordinal>{p, Ordinal::w_pow(Ordinal::from_nat(k), 2)},
              "instances(w^k, w^k)");
    for (std::uint64_t b = 0; b < k; ++b) {
      Ordinal q = Ordinal::w_pow(Ordinal::from_nat(b));
      auto mixed = enumerate_instances(p, q, lim).types;
      c.require(mixed == std::vector<Ordinal>{p, ord_add(p, q)},
                "instances(w^a, w^b), b < a");
    }
  }
  for (std::uint64_t q1 = 0; q1 <= 4; ++q1)
    for (std::uint64_t r1 = 0; r1 <= 4; ++r1)
      for (std::uint64_t q2 = 0; q2 <= 4; ++q2)
        for (std::uint64_t r2 = 0; r2 <= 4; ++r2) {
          Ordinal a = ord_add(Ordinal::w_pow(Ordinal::from_nat(1), q1),
                              Ordinal::from_nat(r1));
          Ordinal b = ord_add(Ordinal::w_pow(Ordinal::from_nat(1), q2),
                              Ordinal::from_nat(r2));
          if (enumerate_instances(a, b).types != degree1_instances_bruteforce(a, b)) {
            c.require(false, "degree-1 enumeration disagrees with merge plans at (" +
                                 ord_to_string(a) + ", " + ord_to_string(b) + ")");
            return;
          }
        }
}

// --- criterion 4: algebraic law suites -------------------------------------

void criterion4(Criterion& c) {
  Gen g(44);
  for (auto& [name, op] : std::vector<std::pair<std::string, OrdinalSum>>{
           {"hess", hessenberg},
           {"lcm", lcm_sum},
           {"dyn", dynamic_sum},
           {"min", min_sum},
           {"fsplit", fsplit_sum}}) {
    for (int i = 0; i < 1000; ++i) {
      Ordinal a = g.ordinal(3, 4), b = g.ordinal(3, 4);
      if (op(a, b) != op(b, a)) {
        c.require(false, name + " not commutative");
        break;
      }
    }
    for (int i = 0; i < 1000; ++i) {
      Ordinal a = g.ordinal(3, 4), b = g.ordinal(3, 4), x = g.ordinal(3, 4);
      if (op(op(a, b), x) != op(a, op(b, x))) {
        c.require(false, name + " not associative");
        break;
      }
    }
  }
  CarruthReport lcm = carruth_check(lcm_sum, {O("w"), O("w*2"), O("w*3")});
  c.require(!lcm.pass && lcm.axiom == 4 &&
                lcm.witness == std::vector<Ordinal>{O("w*3"), O("w*2"), O("w")},
            "lcm axiom-4 witness");
  CarruthReport fs = carruth_check(fsplit_sum, {O("1"), O("2"), O("w")});
  c.require(!fs.pass && fs.axiom == 4 &&
                fs.witness == std::vector<Ordinal>{O("w"), O("2"), O("1")},
            "fsplit axiom-4 witness");
}

// --- criterion 5: point-tracking counterexample patterns --------------------

void criterion5(Criterion& c) {
  auto str = [](const std::vector<char>& v) { return std::string(v.begin(), v.end()); };
  std::string left = str(lcm_merge_labels(MergeAssociation::left, 12));
  std::string right = str(lcm_merge_labels(MergeAssociation::right, 12));
  c.require(left == "ACBCACBCACBC", "left association pattern");
  c.require(right == "ABACABACABAC", "right association pattern");
  c.require(left != right, "patterns differ");
}

// --- criterion 6: SGC suite --------------------------------------------------

void criterion6(Criterion& c) {
  Gen g(66);
  for (const char* name : {"zero", "all", "W", "W*", "S", "P(w)", "P(w^2)",
                           "P(w^3)", "genQ"}) {
    SgcDescriptor d = D(name);
    for (int i = 0; i < 500; ++i) {
      OrderTerm a = g.term(), b = g.term(), x = g.term();
      if (simple_sum(d, simple_sum(d, a, b), x) != simple_sum(d, a, simple_sum(d, b, x))) {
        c.require(false, std::string(name) + " simple sum not associative");
        break;
      }
      // regularity: a second raw presentation of the same orders gives the
      // same sum
      OrderTerm a2 = normalize(g.denormalize(a));
      OrderTerm b2 = normalize(g.denormalize(b));
      if (a2 != a || b2 != b || simple_sum(d, a2, b2) != simple_sum(d, a, b)) {
        c.require(false, std::string(name) + " simple sum not regular");
        break;
      }
    }
  }
  for (int i = 0; i < 500; ++i) {
    OrderTerm a = g.term(), b = g.term();
    for (const char* name : {"W", "S", "genQ"}) {
      SgcDescriptor d = D(name);
      Decomposition da = sgc_decompose(d, a);
      if (term_add(da.left, da.right) != a ||
          sgc_decompose(d, da.left).left != da.left) {
        c.require(false, "rigidity fixpoint");
        break;
      }
      Decomposition db = sgc_decompose(d, b);
      Decomposition dc = sgc_decompose(d, term_add(a, b));
      bool case1 = dc.left == term_concat({da.left, da.right, db.left}) &&
                   dc.right == db.right;
      bool case2 = dc.left == da.left &&
                   dc.right == term_concat({da.right, db.left, db.right});
      if (!case1 && !case2) {
        c.require(false, "two-case corollary");
        break;
      }
    }
  }
  for (std::uint64_t x = 0; x <= 10; ++x)
    for (std::uint64_t y = 0; y <= 10; ++y) {
      SgcDescriptor l = sgc_principal_omega(Ordinal::from_nat(x));
      SgcDescriptor r = sgc_principal_omega(Ordinal::from_nat(y));
      bool ok = detail::principal_exponent(lattice_op(LatticeOpKind::plus, l, r)) ==
                    Ordinal::from_nat(std::min(x, y)) &&
                detail::principal_exponent(lattice_op(LatticeOpKind::times, l, r)) ==
                    Ordinal::from_nat(std::max(x, y)) &&
                detail::principal_exponent(lattice_op(LatticeOpKind::shuffle, l, r)) ==
                    Ordinal::from_nat(std::max(x, y));
      if (!ok) c.require(false, "principal lattice formulas");
    }
  c.require(descriptor_to_string(sgc_perp(sgc_perp(D("P(w^2)")))) == "P(w^2)",
            "perp involution");
  c.require(descriptor_to_string(sgc_perp(sgc_dual(D("genQ")))) == "inv(genQ)",
            "(C*)perp = C^-1 on descriptors");
  bool sampled = true;
  for (int i = 0; i < 200; ++i) {
    OrderTerm t = g.term();
    for (const char* name : {"W", "W*", "S", "genQ", "P(w)"}) {
      SgcDescriptor d = D(name);
      if (sgc_membership(sgc_perp(sgc_perp(d)), t) != sgc_membership(d, t))
        sampled = false;
      if (sgc_membership(sgc_perp(sgc_dual(d)), t) != sgc_membership(sgc_inverse(d), t))
        sampled = false;
    }
  }
  c.require(sampled, "involution identities sampled");
  c.require(sgc_membership(D("times(W*,plus(W,genQ))"), T("2 + Q")),
            "2 + Q in times(W*,plus(W,genQ))");
  c.require(!sgc_membership(D("genOmegaQ"), T("2 + Q")), "2 + Q not in genOmegaQ");
  c.require(sgc_membership(D("times(plus(P(w),S),W*)"), T("rev(w) + w")),
            "rev(w) + w in times(plus(P(w),S),W*)");
  // Faithful check of the stated non-membership. It does not hold: rev(w)+w
  // is scattered and has no maximal element, hence lies in times(S,W*) and
  // therefore in the join as a single piece. Expected to fail; the analysis
  // is recorded alongside the build notes.
  c.require(!sgc_membership(D("plus(P(w),times(S,W*))"), T("rev(w) + w")),
            "rev(w) + w not in plus(P(w),times(S,W*)) "
            "[known-unattainable: single-piece membership is genuine]");
}

// --- criterion 7: sifting ----------------------------------------------------

void criterion7(Criterion& c) {
  FiltrationScheme hess = hessenberg_scheme();
  Gen g(77);
  for (int i = 0; i < 1000; ++i) {
    Ordinal a = g.ordinal(3, 4), b = g.ordinal(3, 4);
    if (sifted_sum(hess, term_from_ordinal(a), term_from_ordinal(b)) !=
        term_from_ordinal(hessenberg(a, b))) {
      c.require(false, "scheme disagrees with the natural sum");
      break;
    }
  }
  int done = 0;
  while (done < 300) {
    OrderTerm a = term_add(term_from_ordinal(g.ordinal(3, 4)), g.term(2));
    OrderTerm b = term_add(term_from_ordinal(g.ordinal(3, 4)), g.term(2));
    if (sifted_sum(hess, a, b) != sum_h(a, b)) {
      c.require(false, "scheme disagrees with the prefix-natural sum on (" +
                           term_to_string(a) + ", " + term_to_string(b) + ")");
      break;
    }
    ++done;
  }
  std::vector<std::pair<OrderTerm, OrderTerm>> sample;
  for (int i = 0; i < 100; ++i)
    sample.emplace_back(term_from_ordinal(g.ordinal(3, 3)),
                        term_from_ordinal(g.ordinal(3, 3)));
  c.require(effectiveness_check(hess, sample).pass, "shipped scheme effective");
  FiltrationScheme degenerate;
  degenerate.levels.push_back({sgc_w(), level_sum_by_name("usual"), "usual"});
  c.require(effectiveness_check(degenerate, sample).pass,
            "degenerate scheme effective");
}

// --- criterion 8: shuffles ---------------------------------------------------

void criterion8(Criterion& c) {
  Gen g(88);
  for (int i = 0; i < 1000; ++i) {
    std::vector<OrderTerm> raw;
    std::uint64_t k = 1 + g.below(4);
    for (std::uint64_t j = 0; j < k; ++j) raw.push_back(g.raw_term(3, 1));
    ShuffleList canon = canonical_minimal_list(raw);
    std::vector<OrderTerm> again = canon.members;
    if (!detail::lists_structurally_equal(canonical_minimal_list(again), canon)) {
      c.require(false, "canonicalization not idempotent");
      break;
    }
  }
  std::vector<OrderTerm> pool = {T("1"), T("2"), T("3"), T("w"), T("rev(w)"),
                                 T("1 + Q(2) + 1"), T("w + 1")};
  auto rand_shuffle = [&]() {
    std::vector<OrderTerm> ms;
    std::uint64_t k = 1 + g.below(3);
    for (std::uint64_t j = 0; j < k; ++j) ms.push_back(pool[g.below(pool.size())]);
    return term_shuffle(ms);
  };
  for (int i = 0; i < 500; ++i) {
    OrderTerm a = rand_shuffle(), b = rand_shuffle(), x = rand_shuffle();
    if (shuffle_sum_S(a, b) != shuffle_sum_S(b, a)) {
      c.require(false, "shuffle sum not commutative");
      break;
    }
    if (shuffle_sum_S(shuffle_sum_S(a, b), x) != shuffle_sum_S(a, shuffle_sum_S(b, x))) {
      c.require(false, "shuffle sum not associative");
      break;
    }
  }
  for (int i = 0; i < 300; ++i) {
    std::vector<OrderTerm> base;
    std::uint64_t k = 1 + g.below(3);
    for (std::uint64_t j = 0; j < k; ++j) base.push_back(pool[g.below(pool.size())]);
    ShuffleList canon = canonical_minimal_list(base);
    std::vector<OrderTerm> raw = canon.members;
    raw.push_back(canon.members[g.below(canon.members.size())]);
    OrderTerm flank = canon.members[g.below(canon.members.size())];
    raw.push_back(term_add(flank, term_shuffle(canon.members)));
    ShuffleList canon2 = canonical_minimal_list(raw);
    if (!lists_equivalent(canon, canon2) ||
        !detail::lists_structurally_equal(canon, canon2)) {
      c.require(false, "equivalent lists canonicalize differently");
      break;
    }
  }
}

// --- criterion 9: complicated-class suite --------------------------------------

void criterion9(Criterion& c) {
  std::set<std::string> seen;
  std::uint64_t words = 0;
  bool roundtrip = true;
  for (int len = 0; len <= 10; ++len)
    for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
      std::string w;
      for (int i = 0; i < len; ++i) w += ((bits >> i) & 1) ? '1' : '0';
      OrderTerm enc = encode_word(BinaryWord(w));
      if (decode_word(enc).bits != w) roundtrip = false;
      seen.insert(term_to_string(enc));
      ++words;
    }
  c.require(roundtrip, "encode/decode round trip up to length 10");
  c.require(seen.size() == words, "encodings pairwise distinct");

  bool witnesses = true;
  for (int len = 0; len <= 8; ++len)
    for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
      std::string w;
      for (int i = 0; i < len; ++i) w += ((bits >> i) & 1) ? '1' : '0';
      BinaryWord word(w);
      if (!verify_piece_witness(T("Q"), T("Q"), encode_word(word),
                                make_word_witness(word)))
        witnesses = false;
    }
  c.require(witnesses, "witnesses verify up to length 8");

  OrderTerm q2 = T("Q(2) + Q"), q12 = T("Q(1,2) + Q");
  SumTable z2 = build_sum_table({{q2, q2, q2}, {q2, q12, q12}, {q12, q12, q2}});
  c.require(check_good_table(z2).pass, "Z/2Z table is good");
  OrderTerm e1 = T("2 + Q(2) + Q"), e2 = T("Q"), e3 = T("1 + Q + Q(2) + Q");
  SumTable canon_table = build_sum_table({{e1, e2, e3},
                                          {e1, e1, e1},
                                          {e1, e3, e3},
                                          {e3, e2, e3},
                                          {e3, e3, e3},
                                          {e2, e2, e2}});
  c.require(check_good_table(canon_table).pass, "canonical-regularity table is good");
  TermSum z2sum = [&](const OrderTerm& a, const OrderTerm& b) {
    return z2.lookup(*z2.carrier_index(a), *z2.carrier_index(b))->result;
  };
  c.require(verify_group_rep({{{0, 1}, {1, 0}}, {q2, q12}}, z2sum),
            "Z/2Z representation verifies");
  c.require(semi_standard_classify(e1, e2, e3) == SemiStandardClass::neither,
            "neither-classification");
  std::vector<Ordinal> sample;
  for (std::uint64_t k = 0; k <= 2; ++k)
    for (std::uint64_t cc = 1; cc <= 3; ++cc)
      sample.push_back(Ordinal::w_pow(Ordinal::from_nat(k), cc));
  c.require(no_group_ordinals_check(sample).pass, "no group on ordinal sample");

  std::vector<OrderTerm> gens = {T("Q(2)"), T("Q(3)"), T("Q(1,2)")};
  std::vector<Multiset> multisets;
  std::vector<std::uint64_t> counts(gens.size(), 0);
  auto rec = [&](auto&& self, std::size_t idx, std::uint64_t left) -> void {
    if (idx == gens.size()) {
      Multiset m;
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::uint64_t k = 0; k < counts[i]; ++k) m.push_back(gens[i]);
      multisets.push_back(std::move(m));
      return;
    }
    for (std::uint64_t k = 0; k <= left; ++k) {
      counts[idx] = k;
      self(self, idx + 1, left - k);
    }
    counts[idx] = 0;
  };
  rec(rec, 0, 5);
  std::set<std::string> codes;
  bool fm_wit = true;
  for (const Multiset& m : multisets) codes.insert(term_to_string(encode_multiset(m)));
  c.require(codes.size() == multisets.size(),
            "free multiset encodings injective for size <= 5 over 3 generators");
  Gen g(99);
  for (int i = 0; i < 200; ++i) {
    const Multiset& m1 = multisets[g.below(multisets.size())];
    const Multiset& m2 = multisets[g.below(multisets.size())];
    FreeMultisetSum f = free_multiset_sum(m1, m2);
    if (!verify_piece_witness(encode_multiset(m1), encode_multiset(m2), f.encoded,
                              f.witness))
      fm_wit = false;
  }
  c.require(fm_wit, "free multiset sums carry verifying witnesses");
}

// --- criterion 10: bi-colorings -----------------------------------------------

void criterion10(Criterion& c) {
  c.require(enumerate_bicolorings(1, 1).size() == 2, "count (1,1)");
  c.require(enumerate_bicolorings(1, 2).size() == 3, "count (1,2)");
  c.require(enumerate_bicolorings(2, 2).size() == 6, "count (2,2)");
  for (std::size_t m = 0; m <= 6; ++m)
    for (std::size_t n = 0; n <= 6; ++n) {
      auto fast = enumerate_bicolorings(m, n);
      auto brute = oracle::bicolorings_bruteforce(m, n);
      if (fast.size() != brute.size() ||
          fast.size() != oracle::binomial(m + n, n)) {
        c.require(false, "count mismatch at (" + std::to_string(m) + "," +
                             std::to_string(n) + ")");
        continue;
      }
      for (std::size_t i = 0; i < fast.size(); ++i) {
        if (fast[i].p != brute[i].p) c.require(false, "stream mismatch");
        if (sum_from_bicoloring(fast[i]).type != term_from_nat(m + n))
          c.require(false, "sum type is not m + n");
      }
    }
}

// --- criterion 11: CLI golden sessions and round-trip fuzzing -------------------

std::string run_cli(const std::string& cli, const std::vector<std::string>& args,
                    int& exit_code) {
  std::string cmd = "'" + cli + "'";
  for (const std::string& a : args) {
    std::string quoted = "'";
    for (char ch : a) quoted += (ch == '\'') ? std::string("'\\''") : std::string(1, ch);
    quoted += "'";
    cmd += " " + quoted;
  }
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return out;
}

struct Session {
  std::string name;
  std::vector<std::vector<std::string>> commands;
};

std::vector<Session> golden_sessions(const std::string& golden_dir) {
  return {
      {"session01_ord_sum",
       {{"ord-sum", "--op", "hess", "w*3", "w*2"},
        {"ord-sum", "--op", "lcm", "w*3", "w*2"},
        {"ord-sum", "--op", "dyn", "w^2*3 + w*2", "w^2*2 + w*4"},
        {"ord-sum", "--op", "min", "w*3 + 2", "w*3 + 5"},
        {"ord-sum", "--op", "fsplit", "w + 1", "w + 2"}}},
      {"session02_instances",
       {{"instances", "w", "w"},
        {"instances", "w^2", "w"},
        {"instances", "w*2", "w*3"},
        {"instances", "w^2 + 3", "w + 4"},
        {"instances", "w^9", "w"}}},
      {"session03_normalize_eq",
       {{"normalize", "Q(Q) + 1 + Q"},
        {"normalize", "rev(w + 1)"},
        {"normalize", "rev(w) + 3 + Q(2,1,2)"},
        {"normalize", "w +"},
        {"eq", "w + w", "w*2"},
        {"eq", "1 + Q", "Q"}}},
      {"session04_decompose",
       {{"decompose", "--class", "W", "w*2 + Q + 5"},
        {"decompose", "--class", "S", "w + rev(w) + Q(2) + 1"},
        {"decompose", "--class", "P(w^2)", "w^2*2 + w + 3 + Q"},
        {"decompose", "--class", "W*", "w*2 + 3"}}},
      {"session05_simple_sum",
       {{"simple-sum", "--class", "W", "1", "w"},
        {"simple-sum", "--class", "W", "w", "1"},
        {"simple-sum", "--class", "W", "Q", "w + Q"},
        {"simple-sum", "--class", "S", "Q", "w + rev(w) + Q(2)"}}},
      {"session06_sift",
       {{"sift", "--scheme", "hess", "w + 1", "w + 2"},
        {"sift", "--scheme", "hess", "w^2 + Q", "w*3 + Q(2)"},
        {"sift", "--scheme-file", golden_dir + "/hess_scheme.txt", "w + 1", "w + 2"}}},
      {"session07_shuffle_encode",
       {{"shuffle-sum", "Q(2)", "Q(1,2)"},
        {"shuffle-sum", "Q(2)", "Q(3)"},
        {"encode", "0110"},
        {"encode", ""},
        {"decode", "Q + Q(1,2) + Q"},
        {"decode", "w + Q"}}},
      {"session08_check_table",
       {{"check-table", golden_dir + "/z2_table.txt"},
        {"check-table", golden_dir + "/canonical_table.txt"},
        {"check-table", golden_dir + "/third_element_table.txt"}}},
      {"session09_bicolor",
       {{"bicolor", "enum", "1", "2"},
        {"bicolor", "enum", "2", "2", "--list"},
        {"bicolor", "enum", "4", "4"}}},
      {"session10_json_selftest",
       {{"--json", "ord-sum", "--op", "hess", "w*3", "w*2"},
        {"--json", "instances", "w", "w"},
        {"--json", "eq", "w + w", "w*2"},
        {"--json", "bicolor", "enum", "1", "1", "--list"},
        {"selftest", "bicolor"}}},
  };
}

std::string session_transcript(const std::string& cli, const Session& s,
                               const std::string& golden_dir) {
  std::ostringstream out;
  for (const auto& cmd : s.commands) {
    out << "$ ordsum";
    for (const std::string& a : cmd) {
      // keep transcripts location-independent
      std::string shown = a;
      if (shown.rfind(golden_dir, 0) == 0)
        shown = "<golden>" + shown.substr(golden_dir.size());
      if (shown.empty())
        shown = "\"\"";
      else if (shown.find(' ') != std::string::npos)
        shown = "\"" + shown + "\"";
      out << " " << shown;
    }
    out << "\n";
    int code = 0;
    out << run_cli(cli, cmd, code);
    out << "exit " << code << "\n";
  }
  return out.str();
}

void criterion11(Criterion& c, const std::string& cli, const std::string& golden_dir,
                 bool update) {
  if (cli.empty()) {
    c.require(false, "CLI path and golden directory not supplied");
    return;
  }
  for (const Session& s : golden_sessions(golden_dir)) {
    std::string transcript = session_transcript(cli, s, golden_dir);
    std::string path = golden_dir + "/" + s.name + ".txt";
    if (update) {
      std::ofstream out(path, std::ios::binary);
      out << transcript;
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    std::stringstream want;
    want << in.rdbuf();
    if (!in || want.str() != transcript)
      c.require(false, "golden mismatch: " + s.name);
  }
  Gen g(111);
  bool fuzz = true;
  for (int i = 0; i < 1000; ++i) {
    OrderTerm t = g.term(4, 2);
    if (parse_term(term_to_string(t)) != t) fuzz = false;
  }
  c.require(fuzz, "parse/render round trip on 1000 generated values");
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  std::string golden = argc > 2 ? argv[2] : "";
  bool update = argc > 3 && std::string(argv[3]) == "--update";

  std::vector<Criterion> criteria;
  const char* titles[] = {"worked-identity suite",
                          "instance bounds attained on 1000 random pairs",
                          "instance-set facts and merge-plan oracle agreement",
                          "algebraic law suites and axiom-4 witnesses",
                          "point-tracking counterexample label patterns",
                          "sum-generating class suite",
                          "sifting reproduces the natural sum",
                          "shuffle canonicalization and the shuffle sum",
                          "complicated-class suite",
                          "bi-coloring counts and types",
                          "CLI golden sessions and grammar fuzzing"};
  for (int i = 0; i < 11; ++i) {
    Criterion c;
    c.number = i + 1;
    c.title = titles[i];
    criteria.push_back(std::move(c));
  }
  criterion1(criteria[0]);
  criterion2(criteria[1]);
  criterion3(criteria[2]);
  criterion4(criteria[3]);
  criterion5(criteria[4]);
  criterion6(criteria[5]);
  criterion7(criteria[6]);
  criterion8(criteria[7]);
  criterion9(criteria[8]);
  criterion10(criteria[9]);
  criterion11(criteria[10], cli, golden, update);

  int failed = 0;
  for (const Criterion& c : criteria) {
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": "
              << c.title << "\n";
    for (const std::string& note : c.notes) std::cout << "     - " << note << "\n";
    failed += c.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed"
                            : std::to_string(failed) + " criterion(s) failed")
            << "\n";
  return failed;
}
