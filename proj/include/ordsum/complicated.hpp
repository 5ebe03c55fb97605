// complicated.hpp
// ---------------
// Desk-scale constructions around sums of Q with Q: binary words encoded as
// alternating spacer/code shuffles, piece witnesses showing the encodings
// are instances of a sum of two copies of Q, good-sum tables over finite
// carriers, group representation checks, the no-nontrivial-group facts for
// ordinals, and a finite free-multiset analogue of the carrier-extension
// construction.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordsum/instances.hpp"
#include "ordsum/order_term.hpp"

namespace ordsum {

// --- binary word encodings ----------------------------------------------------

struct BinaryWord {
  std::string bits;  // characters '0' / '1'

  explicit BinaryWord(std::string s = "") : bits(std::move(s)) {
    for (char c : bits)
      if (c != '0' && c != '1')
        throw std::invalid_argument("binary word may contain only 0 and 1");
  }
};

inline OrderTerm word_code(char bit) {
  if (bit == '0') return term_shuffle({term_from_nat(2)});
  return term_shuffle({term_from_nat(1), term_from_nat(2)});
}

// Q + sum over bits of (code + Q), with Q(2) for 0 and Q(1,2) for 1. The
// alternation is already normal: no rewrite rule fires across a code block.
inline OrderTerm encode_word(const BinaryWord& w) {
  std::vector<Block> blocks;
  OrderTerm q = term_q();
  blocks.insert(blocks.end(), q.blocks.begin(), q.blocks.end());
  for (char bit : w.bits) {
    OrderTerm code = word_code(bit);
    blocks.insert(blocks.end(), code.blocks.begin(), code.blocks.end());
    blocks.insert(blocks.end(), q.blocks.begin(), q.blocks.end());
  }
  OrderTerm t = normalize(blocks);
  if (t.blocks.size() != 2 * w.bits.size() + 1)
    throw std::logic_error("word encoding collapsed under normalization");
  return t;
}

inline BinaryWord decode_word(const OrderTerm& t) {
  auto is_q = [](const Block& b) {
    return b.kind == BlockKind::shuffle && b.list.members.size() == 1 &&
           b.list.members[0] == term_from_nat(1);
  };
  if (t.blocks.size() % 2 != 1)
    throw std::domain_error("decode: not an alternating spacer/code shape");
  std::string bits;
  for (std::size_t i = 0; i < t.blocks.size(); ++i) {
    if (i % 2 == 0) {
      if (!is_q(t.blocks[i]))
        throw std::domain_error("decode: expected a Q spacer at block " +
                                std::to_string(i));
      continue;
    }
    OrderTerm code;
    code.blocks.push_back(t.blocks[i]);
    if (code == word_code('0'))
      bits += '0';
    else if (code == word_code('1'))
      bits += '1';
    else
      throw std::domain_error("decode: block " + std::to_string(i) +
                              " is neither code shuffle");
  }
  return BinaryWord(bits);
}

// --- piece witnesses ------------------------------------------------------------

// The split-rule library is closed: an irrational cut of Q, a gap cut of any
// shuffle block into two copies, the successor/predecessor split of Q(2),
// the three-way split of Q(1,2), and whole-block assignment.
enum class SplitRule { whole, q_cut, boundary, q2_split, q12_split };

struct PieceRef {
  std::size_t block = 0;
  SplitRule rule = SplitRule::whole;
};

struct PieceWitness {
  std::vector<PieceRef> red, blue;  // pieces of the first / second summand
};

enum class PieceSide { red, blue };

// The order type the given side receives from a block under a split rule;
// nullopt when the rule does not apply to the block.
inline std::optional<OrderTerm> piece_type(const Block& b, SplitRule rule,
                                           PieceSide side) {
  (void)side;  // every shipped rule hands both sides the same type
  OrderTerm whole;
  whole.blocks.push_back(b);
  switch (rule) {
    case SplitRule::whole:
      return whole;
    case SplitRule::q_cut:
      if (whole == term_q()) return term_q();
      return std::nullopt;
    case SplitRule::boundary:
      if (b.kind == BlockKind::shuffle) return whole;
      return std::nullopt;
    case SplitRule::q2_split:
      if (whole == word_code('0')) return term_q();
      return std::nullopt;
    case SplitRule::q12_split:
      if (whole == word_code('1')) return term_q();
      return std::nullopt;
  }
  return std::nullopt;
}

struct WitnessReport {
  bool ok = true;
  std::string message = "ok";

  explicit operator bool() const { return ok; }
};

// Checks that the pieces partition the target block by block and that each
// summand's pieces, concatenated in target order, normalize to the claimed
// summand type.
inline WitnessReport verify_piece_witness(const OrderTerm& a, const OrderTerm& b,
                                          const OrderTerm& c,
                                          const PieceWitness& wit) {
  auto fail = [](std::string m) { return WitnessReport{false, std::move(m)}; };
  struct Claim {
    bool red = false, blue = false;
    SplitRule red_rule = SplitRule::whole, blue_rule = SplitRule::whole;
  };
  std::vector<Claim> claims(c.blocks.size());
  std::size_t prev;
  prev = 0;
  for (std::size_t i = 0; i < wit.red.size(); ++i) {
    const PieceRef& p = wit.red[i];
    if (p.block >= c.blocks.size()) return fail("red piece out of range");
    if (i > 0 && p.block <= prev) return fail("red pieces out of order");
    if (claims[p.block].red) return fail("red overlap at block " + std::to_string(p.block));
    claims[p.block].red = true;
    claims[p.block].red_rule = p.rule;
    prev = p.block;
  }
  prev = 0;
  for (std::size_t i = 0; i < wit.blue.size(); ++i) {
    const PieceRef& p = wit.blue[i];
    if (p.block >= c.blocks.size()) return fail("blue piece out of range");
    if (i > 0 && p.block <= prev) return fail("blue pieces out of order");
    if (claims[p.block].blue) return fail("blue overlap at block " + std::to_string(p.block));
    claims[p.block].blue = true;
    claims[p.block].blue_rule = p.rule;
    prev = p.block;
  }
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const Claim& cl = claims[i];
    if (!cl.red && !cl.blue)
      return fail("gap: block " + std::to_string(i) + " is uncovered");
    if (cl.red && cl.blue) {
      if (cl.red_rule != cl.blue_rule || cl.red_rule == SplitRule::whole)
        return fail("overlap: block " + std::to_string(i) + " claimed by both sides");
    } else {
      SplitRule r = cl.red ? cl.red_rule : cl.blue_rule;
      if (r != SplitRule::whole)
        return fail("split rule at block " + std::to_string(i) + " needs both sides");
    }
  }
  auto reassemble = [&](const std::vector<PieceRef>& refs,
                        PieceSide side) -> std::optional<OrderTerm> {
    std::vector<Block> blocks;
    for (const PieceRef& p : refs) {
      auto ty = piece_type(c.blocks[p.block], p.rule, side);
      if (!ty) return std::nullopt;
      blocks.insert(blocks.end(), ty->blocks.begin(), ty->blocks.end());
    }
    return normalize(std::move(blocks));
  };
  auto red_type = reassemble(wit.red, PieceSide::red);
  if (!red_type) return fail("type mismatch: a red split rule does not apply");
  auto blue_type = reassemble(wit.blue, PieceSide::blue);
  if (!blue_type) return fail("type mismatch: a blue split rule does not apply");
  if (*red_type != a)
    return fail("red pieces reassemble to " + term_to_string(*red_type) +
                ", expected " + term_to_string(a));
  if (*blue_type != b)
    return fail("blue pieces reassemble to " + term_to_string(*blue_type) +
                ", expected " + term_to_string(b));
  return {};
}

// Witness exhibiting encode_word(w) as an instance of a sum of Q and Q:
// spacers are cut at an irrational, code blocks split by their red/blue rule.
inline PieceWitness make_word_witness(const BinaryWord& w) {
  PieceWitness wit;
  const std::size_t blocks = 2 * w.bits.size() + 1;
  for (std::size_t i = 0; i < blocks; ++i) {
    SplitRule r;
    if (i % 2 == 0)
      r = SplitRule::q_cut;
    else
      r = w.bits[i / 2] == '0' ? SplitRule::q2_split : SplitRule::q12_split;
    wit.red.push_back({i, r});
    wit.blue.push_back({i, r});
  }
  return wit;
}

// --- sum tables -----------------------------------------------------------------

struct SumTableEntry {
  OrderTerm result;
  std::optional<PieceWitness> witness;
};

struct SumTable {
  std::vector<OrderTerm> carrier;  // sorted by the structural order, unique
  std::map<std::pair<std::size_t, std::size_t>, SumTableEntry> entries;

  std::optional<std::size_t> carrier_index(const OrderTerm& t) const {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), t, TermLess{});
    if (it != carrier.end() && *it == t)
      return static_cast<std::size_t>(it - carrier.begin());
    return std::nullopt;
  }

  const SumTableEntry* lookup(std::size_t i, std::size_t j) const {
    auto it = entries.find({std::min(i, j), std::max(i, j)});
    return it == entries.end() ? nullptr : &it->second;
  }
};

struct TableRow {
  OrderTerm lhs, rhs, result;
};

struct TableReport {
  bool pass = true;
  std::vector<std::string> violations;
};

inline SumTable build_sum_table(const std::vector<TableRow>& rows,
                                TableReport* conflicts = nullptr) {
  SumTable t;
  std::set<OrderTerm, TermLess> carrier;
  for (const TableRow& r : rows) {
    carrier.insert(r.lhs);
    carrier.insert(r.rhs);
  }
  t.carrier.assign(carrier.begin(), carrier.end());
  for (const TableRow& r : rows) {
    std::size_t i = *t.carrier_index(r.lhs);
    std::size_t j = *t.carrier_index(r.rhs);
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto it = t.entries.find(key);
    if (it != t.entries.end() && it->second.result != r.result) {
      if (conflicts) {
        conflicts->pass = false;
        conflicts->violations.push_back(
            "commutativity conflict: " + term_to_string(r.lhs) + " | " +
            term_to_string(r.rhs) + " given two results");
      }
      continue;
    }
    t.entries[key] = SumTableEntry{r.result, std::nullopt};
  }
  return t;
}

// Commutativity holds by unordered keys; the checks are totality on carrier
// pairs, associativity on every triple whose intermediates stay in the
// carrier, and witness validity where witnesses are attached.
inline TableReport check_good_table(const SumTable& t) {
  TableReport rep;
  const std::size_t n = t.carrier.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!t.lookup(i, j)) {
        rep.pass = false;
        rep.violations.push_back("missing entry: " + term_to_string(t.carrier[i]) +
                                 " | " + term_to_string(t.carrier[j]));
      }
  auto apply = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
    const SumTableEntry* e = t.lookup(i, j);
    if (!e) return std::nullopt;
    return t.carrier_index(e->result);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto ij = apply(i, j);
        auto jk = apply(j, k);
        if (!ij || !jk) continue;  // intermediate left the carrier
        const SumTableEntry* l = t.lookup(*ij, k);
        const SumTableEntry* r = t.lookup(i, *jk);
        if (!l || !r) continue;
        if (l->result != r->result) {
          rep.pass = false;
          rep.violations.push_back(
              "associativity violation at (" + term_to_string(t.carrier[i]) + ", " +
              term_to_string(t.carrier[j]) + ", " + term_to_string(t.carrier[k]) + ")");
        }
      }
  for (const auto& [key, entry] : t.entries) {
    if (!entry.witness) continue;
    WitnessReport w = verify_piece_witness(t.carrier[key.first], t.carrier[key.second],
                                           entry.result, *entry.witness);
    if (!w) {
      rep.pass = false;
      rep.violations.push_back("witness failure for " + term_to_string(t.carrier[key.first]) +
                               " | " + term_to_string(t.carrier[key.second]) + ": " + w.message);
    }
  }
  return rep;
}

// --- classification and groups ---------------------------------------------------

enum class SemiStandardClass { usual, reversed, both, neither };

inline SemiStandardClass semi_standard_classify(const OrderTerm& a,
                                                const OrderTerm& b,
                                                const OrderTerm& c) {
  bool u = c == term_add(a, b);
  bool r = c == term_add(b, a);
  if (u && r) return SemiStandardClass::both;
  if (u) return SemiStandardClass::usual;
  if (r) return SemiStandardClass::reversed;
  return SemiStandardClass::neither;
}

inline std::string semi_standard_name(SemiStandardClass c) {
  switch (c) {
    case SemiStandardClass::usual: return "usual";
    case SemiStandardClass::reversed: return "reversed";
    case SemiStandardClass::both: return "both";
    case SemiStandardClass::neither: return "neither";
  }
  return "?";
}

struct GroupRep {
  std::vector<std::vector<std::size_t>> table;  // table[g][h] = g * h
  std::vector<OrderTerm> phi;
};

inline void validate_group(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  auto bad = [](const std::string& m) { return std::invalid_argument("group table: " + m); };
  for (const auto& row : table) {
    if (row.size() != n) throw bad("not square");
    for (std::size_t v : row)
      if (v >= n) throw bad("value out of range");
  }
  std::optional<std::size_t> e;
  for (std::size_t g = 0; g < n; ++g) {
    bool id = true;
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] != h || table[h][g] != h) id = false;
    if (id) e = g;
  }
  if (!e) throw bad("no identity");
  for (std::size_t g = 0; g < n; ++g) {
    bool inverse = false;
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] == *e) inverse = true;
    if (!inverse) throw bad("missing inverse");
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[g][h]][k] != table[g][table[h][k]]) throw bad("not associative");
}

inline bool verify_group_rep(const GroupRep& rep, const TermSum& op) {
  validate_group(rep.table);
  if (rep.phi.size() != rep.table.size())
    throw std::invalid_argument("group representation: phi size mismatch");
  for (std::size_t i = 0; i < rep.phi.size(); ++i)
    for (std::size_t j = i + 1; j < rep.phi.size(); ++j)
      if (rep.phi[i] == rep.phi[j])
        throw std::invalid_argument("group representation: phi not injective");
  for (std::size_t g = 0; g < rep.table.size(); ++g)
    for (std::size_t h = 0; h < rep.table.size(); ++h)
      if (rep.phi[rep.table[g][h]] != op(rep.phi[g], rep.phi[h])) return false;
  return true;
}

struct NoGroupReport {
  bool pass = true;
  std::vector<std::string> violations;
};

// The engine behind the trivial-group fact on ordinals: every instance of a
// sum dominates both operands, so no injective two-element assignment can
// satisfy the identity and inverse equations under any choice of instances.
// Both halves are checked exhaustively over the sample.
inline NoGroupReport no_group_ordinals_check(const std::vector<Ordinal>& sample,
                                             const InstanceLimits& lim = {}) {
  NoGroupReport rep;
  std::map<std::pair<std::size_t, std::size_t>, InstanceSet> memo;
  auto inst = [&](std::size_t i, std::size_t j) -> const InstanceSet& {
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto it = memo.find(key);
    if (it == memo.end())
      it = memo.emplace(key, enumerate_instances(sample[key.first], sample[key.second], lim))
               .first;
    return it->second;
  };
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i; j < sample.size(); ++j) {
      const Ordinal& hi = std::max(sample[i], sample[j]);
      for (const Ordinal& g : inst(i, j).types)
        if (g < hi) {
          rep.pass = false;
          rep.violations.push_back("instance " + ord_to_string(g) + " of (" +
                                   ord_to_string(sample[i]) + ", " +
                                   ord_to_string(sample[j]) +
                                   ") below the larger operand");
        }
    }
  for (std::size_t e = 0; e < sample.size(); ++e)
    for (std::size_t a = 0; a < sample.size(); ++a) {
      if (e == a) continue;
      if (inst(e, e).contains(sample[e]) && inst(e, a).contains(sample[a]) &&
          inst(a, a).contains(sample[e])) {
        rep.pass = false;
        rep.violations.push_back("two-element group equations satisfiable with identity " +
                                 ord_to_string(sample[e]) + " and element " +
                                 ord_to_string(sample[a]));
      }
    }
  return rep;
}

// --- free multiset sums ------------------------------------------------------------

using Multiset = std::vector<OrderTerm>;  // kept sorted by the structural order

// Generators must be single non-Q shuffle blocks so that no rewrite rule
// fires across the spacer alternation; checked on entry.
inline void require_generator(const OrderTerm& g) {
  if (g.blocks.size() != 1 || g.blocks[0].kind != BlockKind::shuffle ||
      g == term_q())
    throw std::domain_error("free multiset generators must be non-Q shuffle blocks");
  OrderTerm probe = term_concat({term_q(), g, term_q()});
  if (probe.blocks.size() != 3)
    throw std::logic_error("generator collapses against the Q spacer");
}

inline Multiset multiset_sorted(Multiset m) {
  std::sort(m.begin(), m.end(), TermLess{});
  return m;
}

inline OrderTerm encode_multiset(const Multiset& m) {
  std::vector<Block> blocks;
  OrderTerm q = term_q();
  blocks.insert(blocks.end(), q.blocks.begin(), q.blocks.end());
  for (const OrderTerm& g : multiset_sorted(m)) {
    require_generator(g);
    blocks.push_back(g.blocks[0]);
    blocks.insert(blocks.end(), q.blocks.begin(), q.blocks.end());
  }
  return normalize(std::move(blocks));
}

struct FreeMultisetSum {
  OrderTerm encoded;
  PieceWitness witness;  // red reassembles encode(m1), blue encode(m2)
};

// encode(m1 union m2), with a witness assigning every generator group to its
// source multiset and splitting the leading spacer at an irrational.
inline FreeMultisetSum free_multiset_sum(const Multiset& m1, const Multiset& m2) {
  Multiset s1 = multiset_sorted(m1), s2 = multiset_sorted(m2);
  for (const OrderTerm& g : s1) require_generator(g);
  for (const OrderTerm& g : s2) require_generator(g);
  FreeMultisetSum out;
  out.witness.red.push_back({0, SplitRule::q_cut});
  out.witness.blue.push_back({0, SplitRule::q_cut});
  Multiset joint;
  std::size_t i = 0, j = 0, pos = 0;
  while (i < s1.size() || j < s2.size()) {
    bool take_first =
        j == s2.size() ||
        (i < s1.size() && term_cmp(s1[i], s2[j]) != Ordering::greater);
    const OrderTerm& g = take_first ? s1[i++] : s2[j++];
    joint.push_back(g);
    auto& side = take_first ? out.witness.red : out.witness.blue;
    side.push_back({2 * pos + 1, SplitRule::whole});
    side.push_back({2 * pos + 2, SplitRule::whole});
    ++pos;
  }
  out.encoded = encode_multiset(joint);
  return out;
}

}  // namespace ordsum
