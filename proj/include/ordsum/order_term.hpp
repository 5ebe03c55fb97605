// order_term.hpp
// --------------
// A term language for countable linear orders. A term is a finite sequence of
// blocks, each an ordinal, a reversed ordinal, or a rational shuffle
// Q(I1,...,Ik) over a canonical minimal member list. The fragment realizes
// finite orders, well-orders below epsilon_0, their reverses, Q itself, the
// shuffles, and all finite sums of these.
//
// normalize() rewrites any raw block sequence to a fixpoint of the rules
//   R1  drop empty blocks
//   R2  Ord(a) + Ord(b)        -> Ord(a + b)
//   R3  Rev(a) + Rev(b)        -> Rev(b + a)
//   R4  Rev(limit + n), n > 0  -> Ord(n) + Rev(limit)   (finite reversals
//                                 collapse to Ord entirely)
//   R5  shuffle member lists are canonicalized recursively
//   R6  Q(S) + Q(S')           -> Q(S)   when the lists are equivalent
//   R7  Q(S) + T + Q(S')       -> Q(S)   when S == S' and T is a single
//                                 block equal to a member of S
//   R8  Rev(x) + Ord(n), n < w -> Rev(x)  (n + x = x for infinite x, so the
//                                 reversed block absorbs a finite right
//                                 neighbour)
// applied leftmost to a fixpoint. Equality of normal forms is the
// isomorphism test used throughout the library; uniqueness on the fragment
// is a tested conjecture, exercised by a hand-verified pair library.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordsum/ordinal.hpp"

namespace ordsum {

enum class BlockKind { ord, rev, shuffle };

struct Block;

struct OrderTerm {
  std::vector<Block> blocks;

  bool empty() const { return blocks.empty(); }
};

struct ShuffleList {
  std::vector<OrderTerm> members;  // canonical: normalized, minimal, sorted
};

struct Block {
  BlockKind kind = BlockKind::ord;
  Ordinal value;     // ord / rev payload
  ShuffleList list;  // shuffle payload

  static Block ord(Ordinal a) { return Block{BlockKind::ord, std::move(a), {}}; }
  static Block rev(Ordinal a) { return Block{BlockKind::rev, std::move(a), {}}; }
  static Block shuffle(ShuffleList s) {
    return Block{BlockKind::shuffle, {}, std::move(s)};
  }
};

// --- structural total order -------------------------------------------------
// Tag order Ord < Rev < Shuffle, then field order; used for sorting shuffle
// member lists and as the cross-module tie-breaker.

inline Ordering term_cmp(const OrderTerm& a, const OrderTerm& b);

inline Ordering block_cmp(const Block& a, const Block& b) {
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) < static_cast<int>(b.kind)
               ? Ordering::less
               : Ordering::greater;
  if (a.kind != BlockKind::shuffle) return ord_cmp(a.value, b.value);
  const auto& xs = a.list.members;
  const auto& ys = b.list.members;
  const std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i) {
    Ordering c = term_cmp(xs[i], ys[i]);
    if (c != Ordering::equal) return c;
  }
  if (xs.size() == ys.size()) return Ordering::equal;
  return xs.size() < ys.size() ? Ordering::less : Ordering::greater;
}

inline Ordering term_cmp(const OrderTerm& a, const OrderTerm& b) {
  const std::size_t n = std::min(a.blocks.size(), b.blocks.size());
  for (std::size_t i = 0; i < n; ++i) {
    Ordering c = block_cmp(a.blocks[i], b.blocks[i]);
    if (c != Ordering::equal) return c;
  }
  if (a.blocks.size() == b.blocks.size()) return Ordering::equal;
  return a.blocks.size() < b.blocks.size() ? Ordering::less : Ordering::greater;
}

inline bool operator==(const OrderTerm& a, const OrderTerm& b) {
  return term_cmp(a, b) == Ordering::equal;
}
inline bool operator!=(const OrderTerm& a, const OrderTerm& b) {
  return !(a == b);
}

struct TermLess {
  bool operator()(const OrderTerm& a, const OrderTerm& b) const {
    return term_cmp(a, b) == Ordering::less;
  }
};

// --- normalization ----------------------------------------------------------

inline OrderTerm normalize(std::vector<Block> blocks);
inline ShuffleList canonical_minimal_list(const std::vector<OrderTerm>& raw);

namespace detail {

inline bool block_is_empty(const Block& b) {
  if (b.kind == BlockKind::shuffle) return b.list.members.empty();
  return b.value.is_zero();
}

inline bool lists_structurally_equal(const ShuffleList& a,
                                     const ShuffleList& b) {
  if (a.members.size() != b.members.size()) return false;
  for (std::size_t i = 0; i < a.members.size(); ++i)
    if (a.members[i] != b.members[i]) return false;
  return true;
}

inline bool is_list_member(const ShuffleList& s, const OrderTerm& t) {
  for (const OrderTerm& m : s.members)
    if (m == t) return true;
  return false;
}

// Rule sites for the top-level rewrite step; rule numbers follow the ledger
// above. Exposed for the confluence sampling tests.
struct RuleSite {
  int rule;
  std::size_t pos;
};

inline std::vector<RuleSite> rule_sites(const std::vector<Block>& bs) {
  std::vector<RuleSite> sites;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (block_is_empty(bs[i])) {
      sites.push_back({1, i});
      continue;
    }
    if (bs[i].kind == BlockKind::rev) {
      auto [lim, n] = limit_finite_split(bs[i].value);
      if (n > 0) sites.push_back({4, i});
    }
    if (i + 1 < bs.size()) {
      if (bs[i].kind == BlockKind::ord && bs[i + 1].kind == BlockKind::ord)
        sites.push_back({2, i});
      if (bs[i].kind == BlockKind::rev && bs[i + 1].kind == BlockKind::rev)
        sites.push_back({3, i});
      if (bs[i].kind == BlockKind::shuffle &&
          bs[i + 1].kind == BlockKind::shuffle &&
          lists_structurally_equal(bs[i].list, bs[i + 1].list))
        sites.push_back({6, i});
      if (bs[i].kind == BlockKind::rev && !bs[i].value.is_finite() &&
          bs[i + 1].kind == BlockKind::ord && bs[i + 1].value.is_finite())
        sites.push_back({8, i});
    }
    if (i + 2 < bs.size() && bs[i].kind == BlockKind::shuffle &&
        bs[i + 2].kind == BlockKind::shuffle &&
        bs[i + 1].kind != BlockKind::shuffle &&
        lists_structurally_equal(bs[i].list, bs[i + 2].list) &&
        !block_is_empty(bs[i + 1])) {
      OrderTerm mid;
      mid.blocks.push_back(bs[i + 1]);
      mid = normalize(mid.blocks);
      if (mid.blocks.size() == 1 && is_list_member(bs[i].list, mid))
        sites.push_back({7, i});
    }
  }
  return sites;
}

inline void apply_rule_at(std::vector<Block>& bs, const RuleSite& s) {
  const std::size_t i = s.pos;
  switch (s.rule) {
    case 1:
      bs.erase(bs.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    case 2:
      bs[i].value = ord_add(bs[i].value, bs[i + 1].value);
      bs.erase(bs.begin() + static_cast<std::ptrdiff_t>(i + 1));
      break;
    case 3:
      bs[i].value = ord_add(bs[i + 1].value, bs[i].value);
      bs.erase(bs.begin() + static_cast<std::ptrdiff_t>(i + 1));
      break;
    case 4: {
      auto [lim, n] = limit_finite_split(bs[i].value);
      bs[i].value = lim;
      bs.insert(bs.begin() + static_cast<std::ptrdiff_t>(i),
                Block::ord(Ordinal::from_nat(n)));
      break;
    }
    case 6:
      bs.erase(bs.begin() + static_cast<std::ptrdiff_t>(i + 1));
      break;
    case 7:
      bs.erase(bs.begin() + static_cast<std::ptrdiff_t>(i + 1),
               bs.begin() + static_cast<std::ptrdiff_t>(i + 3));
      break;
    case 8:
      bs.erase(bs.begin() + static_cast<std::ptrdiff_t>(i + 1));
      break;
    default:
      throw std::logic_error("unknown rewrite rule");
  }
}

}  // namespace detail

inline OrderTerm normalize(std::vector<Block> blocks) {
  for (Block& b : blocks)
    if (b.kind == BlockKind::shuffle)
      b.list = canonical_minimal_list(b.list.members);
  for (;;) {
    auto sites = detail::rule_sites(blocks);
    if (sites.empty()) break;
    detail::apply_rule_at(blocks, sites.front());
  }
  OrderTerm t;
  t.blocks = std::move(blocks);
  return t;
}

// Fixpoint of: normalize members, expand any member containing a shuffle
// block into the inner members plus its flanks, dedupe, sort. The resulting
// members are shuffle-free, which realizes the self-referential condensation
// symbolically on this fragment.
inline ShuffleList canonical_minimal_list(const std::vector<OrderTerm>& raw) {
  std::vector<OrderTerm> work;
  for (const OrderTerm& m : raw) {
    OrderTerm n = normalize(m.blocks);
    if (!n.empty()) work.push_back(std::move(n));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size(); ++i) {
      std::size_t s = work[i].blocks.size();
      for (std::size_t j = 0; j < work[i].blocks.size(); ++j)
        if (work[i].blocks[j].kind == BlockKind::shuffle) {
          s = j;
          break;
        }
      if (s == work[i].blocks.size()) continue;
      OrderTerm member = std::move(work[i]);
      work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
      OrderTerm left, right;
      left.blocks.assign(member.blocks.begin(),
                         member.blocks.begin() + static_cast<std::ptrdiff_t>(s));
      right.blocks.assign(
          member.blocks.begin() + static_cast<std::ptrdiff_t>(s + 1),
          member.blocks.end());
      for (const OrderTerm& inner : member.blocks[s].list.members)
        work.push_back(inner);
      if (!left.empty()) work.push_back(normalize(left.blocks));
      right = normalize(right.blocks);
      if (!right.empty()) work.push_back(right);
      changed = true;
      break;
    }
  }
  std::sort(work.begin(), work.end(), TermLess{});
  work.erase(std::unique(work.begin(), work.end()), work.end());
  return ShuffleList{std::move(work)};
}

// --- constructors and accessors ---------------------------------------------

inline OrderTerm term_zero() { return OrderTerm{}; }

inline OrderTerm term_from_ordinal(const Ordinal& a) {
  OrderTerm t;
  if (!a.is_zero()) t.blocks.push_back(Block::ord(a));
  return t;
}

inline OrderTerm term_from_nat(std::uint64_t n) {
  return term_from_ordinal(Ordinal::from_nat(n));
}

inline OrderTerm term_rev_ordinal(const Ordinal& a) {
  return normalize({Block::rev(a)});
}

// Q(I1,...,Ik); with no arguments, Q itself.
inline OrderTerm term_shuffle(const std::vector<OrderTerm>& members) {
  return normalize({Block::shuffle(ShuffleList{members})});
}

inline OrderTerm term_q() { return term_shuffle({term_from_nat(1)}); }

inline std::optional<Ordinal> term_as_ordinal(const OrderTerm& t) {
  if (t.empty()) return Ordinal{};
  if (t.blocks.size() == 1 && t.blocks[0].kind == BlockKind::ord)
    return t.blocks[0].value;
  return std::nullopt;
}

// A normal term has a least element iff it starts with an ordinal block.
inline bool term_has_least(const OrderTerm& t) {
  return !t.empty() && t.blocks[0].kind == BlockKind::ord;
}

inline bool term_has_greatest(const OrderTerm& t) {
  if (t.empty()) return false;
  const Block& b = t.blocks.back();
  if (b.kind == BlockKind::shuffle) return false;
  if (b.kind == BlockKind::rev) return true;  // top of a reversed limit
  return limit_finite_split(b.value).second > 0;
}

// Longest ordinal initial segment and the remainder; the remainder of a
// normal term never has a least element.
inline std::pair<Ordinal, OrderTerm> term_ordinal_prefix(const OrderTerm& t) {
  if (!term_has_least(t)) return {Ordinal{}, t};
  OrderTerm rest;
  rest.blocks.assign(t.blocks.begin() + 1, t.blocks.end());
  return {t.blocks[0].value, rest};
}

// Blocks before the first shuffle block, and the rest.
inline std::pair<OrderTerm, OrderTerm> term_scattered_split(const OrderTerm& t) {
  std::size_t s = t.blocks.size();
  for (std::size_t i = 0; i < t.blocks.size(); ++i)
    if (t.blocks[i].kind == BlockKind::shuffle) {
      s = i;
      break;
    }
  OrderTerm pre, post;
  pre.blocks.assign(t.blocks.begin(),
                    t.blocks.begin() + static_cast<std::ptrdiff_t>(s));
  post.blocks.assign(t.blocks.begin() + static_cast<std::ptrdiff_t>(s),
                     t.blocks.end());
  return {pre, post};
}

inline bool term_is_scattered(const OrderTerm& t) {
  for (const Block& b : t.blocks)
    if (b.kind == BlockKind::shuffle) return false;
  return true;
}

// --- basic operations ---------------------------------------------------------

inline OrderTerm term_add(const OrderTerm& a, const OrderTerm& b) {
  std::vector<Block> bs = a.blocks;
  bs.insert(bs.end(), b.blocks.begin(), b.blocks.end());
  return normalize(std::move(bs));
}

inline OrderTerm term_concat(std::initializer_list<OrderTerm> parts) {
  std::vector<Block> bs;
  for (const OrderTerm& p : parts)
    bs.insert(bs.end(), p.blocks.begin(), p.blocks.end());
  return normalize(std::move(bs));
}

inline OrderTerm term_reverse(const OrderTerm& a) {
  std::vector<Block> bs;
  for (std::size_t i = a.blocks.size(); i-- > 0;) {
    const Block& b = a.blocks[i];
    switch (b.kind) {
      case BlockKind::ord:
        bs.push_back(Block::rev(b.value));
        break;
      case BlockKind::rev:
        bs.push_back(Block::ord(b.value));
        break;
      case BlockKind::shuffle: {
        std::vector<OrderTerm> members;
        members.reserve(b.list.members.size());
        for (const OrderTerm& m : b.list.members)
          members.push_back(term_reverse(m));
        bs.push_back(Block::shuffle(ShuffleList{std::move(members)}));
        break;
      }
    }
  }
  return normalize(std::move(bs));
}

inline bool term_eq(const OrderTerm& a, const OrderTerm& b) { return a == b; }

using TermSum = std::function<OrderTerm(const OrderTerm&, const OrderTerm&)>;

// (a, b) -> reverse(s(reverse(b), reverse(a))); an involution on sums.
inline TermSum reverse_combinator(TermSum s) {
  return [s = std::move(s)](const OrderTerm& a, const OrderTerm& b) {
    return term_reverse(s(term_reverse(b), term_reverse(a)));
  };
}

// --- the ladder of example sums ----------------------------------------------

// level 0: shift one point of b in front whenever b has a least element.
// level 1: shift the maximal finite prefix, or a leading copy of omega.
// level 2: shift the full ordinal prefix (the remainder never has a least
//          element in normal form).
inline OrderTerm wlike_sum(int level, const OrderTerm& a, const OrderTerm& b) {
  if (level < 0 || level > 2) throw std::invalid_argument("wlike_sum level");
  if (!term_has_least(b)) return term_add(a, b);
  auto [v, rest] = term_ordinal_prefix(b);
  if (level == 0) {
    Ordinal remainder = v.is_finite() ? Ordinal::from_nat(v.finite_value() - 1) : v;
    return term_concat({term_from_nat(1), a, term_from_ordinal(remainder), rest});
  }
  if (level == 1) {
    if (v.is_finite())
      return term_concat({term_from_ordinal(v), a, rest});
    if (v == Ordinal::omega())
      return term_concat({term_from_ordinal(v), a, rest});
    return term_add(a, b);
  }
  return term_concat({term_from_ordinal(v), a, rest});
}

// Shift the longest scattered initial segment of b (everything before the
// first shuffle block) in front of a.
inline OrderTerm sum_s(const OrderTerm& a, const OrderTerm& b) {
  auto [bs, rest] = term_scattered_split(b);
  return term_concat({bs, a, rest});
}

// Natural-sum the two ordinal prefixes, then concatenate both remainders.
inline OrderTerm sum_h(const OrderTerm& a, const OrderTerm& b) {
  auto [g, arest] = term_ordinal_prefix(a);
  auto [t, brest] = term_ordinal_prefix(b);
  return term_concat({term_from_ordinal(hessenberg(t, g)), arest, brest});
}

// Sum on terms of shape alpha + beta* (the orders that do not embed Z),
// parameterized by a good ordinal sum for both directions.
inline OrderTerm wo_wostar_sum(const OrdinalSum& inner, const OrderTerm& a,
                               const OrderTerm& b) {
  auto split = [](const OrderTerm& t) {
    Ordinal alpha, beta;
    std::size_t i = 0;
    if (i < t.blocks.size() && t.blocks[i].kind == BlockKind::ord)
      alpha = t.blocks[i++].value;
    if (i < t.blocks.size() && t.blocks[i].kind == BlockKind::rev)
      beta = t.blocks[i++].value;
    if (i != t.blocks.size())
      throw std::domain_error("wo_wostar_sum: operand embeds Z or a shuffle");
    return std::pair<Ordinal, Ordinal>{alpha, beta};
  };
  auto [a1, b1] = split(a);
  auto [a2, b2] = split(b);
  auto [a1lim, n1] = limit_finite_split(a1);
  auto [a2lim, n2] = limit_finite_split(a2);
  // beta parts are limit ordinals in normal form; combine through the
  // reverse combinator, which for ordinal arguments is inner with the
  // operands swapped.
  return term_concat({term_from_ordinal(inner(a1lim, a2lim)),
                      term_from_nat(n1 + n2),
                      term_rev_ordinal(inner(b2, b1))});
}

// --- rendering ----------------------------------------------------------------

inline std::string term_to_string(const OrderTerm& t) {
  if (t.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < t.blocks.size(); ++i) {
    if (i > 0) s += " + ";
    const Block& b = t.blocks[i];
    switch (b.kind) {
      case BlockKind::ord:
        s += ord_to_string(b.value);
        break;
      case BlockKind::rev:
        s += "rev(" + ord_to_string(b.value) + ")";
        break;
      case BlockKind::shuffle: {
        const auto& ms = b.list.members;
        if (ms.size() == 1 && ms[0] == term_from_nat(1)) {
          s += "Q";
        } else {
          s += "Q(";
          for (std::size_t j = 0; j < ms.size(); ++j) {
            if (j > 0) s += ",";
            s += term_to_string(ms[j]);
          }
          s += ")";
        }
        break;
      }
    }
  }
  return s;
}

}  // namespace ordsum
