// sgc.hpp
// -------
// Sum-generating class descriptors over the term fragment. A descriptor is a
// symbolic class with a membership decision procedure and, for left
// descriptors, a longest-initial-segment decomposition. On top of these sit
// the simple sum B_L + A + B_R, the extension combinator that sums the two
// left parts with an inner sum, the involutions (perp, dual, inverse) with a
// simplification table, the sub-SGC lattice operations, and the
// non-commutativity witness recipe.
//
// Membership for composite plus/times descriptors is a bounded search over
// block-boundary and coefficient cuts; it is a semi-decision and raises
// capacity_error when the configured depth could have been the reason no
// partition was found.

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordsum/order_term.hpp"

namespace ordsum {

enum class SgcKind {
  zero,            // { empty }
  all,             // every order
  well_orders,     // <1>
  no_max,          // <1>* : orders without a maximal element
  scattered,       // S
  principal_omega, // <w^g>
  gen_q,           // <Q>
  gen_omega_q,     // <w, Q>
  gen_q_plus_1,    // <Q+1> = <1, Q>
  perp,
  dual,
  inverse,
  plus,
  times,
};

enum class Chirality { left, right };

struct SgcDescriptor {
  SgcKind kind = SgcKind::zero;
  Ordinal param;  // principal_omega exponent
  std::shared_ptr<const SgcDescriptor> a, b;
};

inline SgcDescriptor sgc_zero() { return {SgcKind::zero, {}, nullptr, nullptr}; }
inline SgcDescriptor sgc_all() { return {SgcKind::all, {}, nullptr, nullptr}; }
inline SgcDescriptor sgc_w() { return {SgcKind::well_orders, {}, nullptr, nullptr}; }
inline SgcDescriptor sgc_w_star() { return {SgcKind::no_max, {}, nullptr, nullptr}; }
inline SgcDescriptor sgc_scattered() { return {SgcKind::scattered, {}, nullptr, nullptr}; }
inline SgcDescriptor sgc_gen_q() { return {SgcKind::gen_q, {}, nullptr, nullptr}; }
inline SgcDescriptor sgc_gen_omega_q() { return {SgcKind::gen_omega_q, {}, nullptr, nullptr}; }
inline SgcDescriptor sgc_gen_q_plus_1() { return {SgcKind::gen_q_plus_1, {}, nullptr, nullptr}; }

// <w^g>; <w^0> is the class of well-orders itself.
inline SgcDescriptor sgc_principal_omega(const Ordinal& g) {
  if (g.is_zero()) return sgc_w();
  return {SgcKind::principal_omega, g, nullptr, nullptr};
}

inline Chirality sgc_chirality(const SgcDescriptor& c) {
  switch (c.kind) {
    case SgcKind::perp:
    case SgcKind::inverse: {
      Chirality in = sgc_chirality(*c.a);
      return in == Chirality::left ? Chirality::right : Chirality::left;
    }
    case SgcKind::dual:
      return sgc_chirality(*c.a);
    case SgcKind::plus:
    case SgcKind::times: {
      Chirality l = sgc_chirality(*c.a);
      if (l != sgc_chirality(*c.b))
        throw std::domain_error("plus/times require descriptors of the same chirality");
      return l;
    }
    default:
      return Chirality::left;
  }
}

enum class InvolutionKind { dual, perp, inverse };

// Symbolic constructor application with a simplification table: the three
// involutions commute, each is its own inverse, and (C*)^perp = C^-1.
inline SgcDescriptor involution(InvolutionKind k, const SgcDescriptor& c) {
  auto wrap = [&](SgcKind kk) {
    return SgcDescriptor{kk, {}, std::make_shared<SgcDescriptor>(c), nullptr};
  };
  switch (k) {
    case InvolutionKind::perp:
      switch (c.kind) {
        case SgcKind::zero: return sgc_all();
        case SgcKind::all: return sgc_zero();
        case SgcKind::perp: return *c.a;
        case SgcKind::dual: return involution(InvolutionKind::inverse, *c.a);
        default: return wrap(SgcKind::perp);
      }
    case InvolutionKind::dual:
      switch (c.kind) {
        case SgcKind::zero: return sgc_all();
        case SgcKind::all: return sgc_zero();
        case SgcKind::well_orders: return sgc_w_star();
        case SgcKind::no_max: return sgc_w();
        case SgcKind::dual: return *c.a;
        case SgcKind::perp: return involution(InvolutionKind::inverse, *c.a);
        case SgcKind::inverse: return involution(InvolutionKind::perp, *c.a);
        default: return wrap(SgcKind::dual);
      }
    case InvolutionKind::inverse:
      switch (c.kind) {
        case SgcKind::zero: return sgc_zero();
        case SgcKind::all: return sgc_all();
        case SgcKind::scattered: return sgc_scattered();
        case SgcKind::inverse: return *c.a;
        case SgcKind::dual: return involution(InvolutionKind::perp, *c.a);
        default: return wrap(SgcKind::inverse);
      }
  }
  throw std::logic_error("unreachable");
}

inline SgcDescriptor sgc_perp(const SgcDescriptor& c) {
  return involution(InvolutionKind::perp, c);
}
inline SgcDescriptor sgc_dual(const SgcDescriptor& c) {
  return involution(InvolutionKind::dual, c);
}
inline SgcDescriptor sgc_inverse(const SgcDescriptor& c) {
  return involution(InvolutionKind::inverse, c);
}

enum class LatticeOpKind { plus, times, shuffle };

namespace detail {
inline std::optional<Ordinal> principal_exponent(const SgcDescriptor& c) {
  if (c.kind == SgcKind::well_orders) return Ordinal{};
  if (c.kind == SgcKind::principal_omega) return c.param;
  return std::nullopt;
}
}  // namespace detail

// Principal inputs reduce in closed form: min exponent for plus, max for
// times and the shuffle sum. Other inputs stay symbolic (shuffle is
// rejected on them).
inline SgcDescriptor lattice_op(LatticeOpKind k, const SgcDescriptor& l,
                                const SgcDescriptor& r) {
  auto le = detail::principal_exponent(l);
  auto re = detail::principal_exponent(r);
  if (le && re) {
    switch (k) {
      case LatticeOpKind::plus:
        return sgc_principal_omega(std::min(*le, *re));
      case LatticeOpKind::times:
      case LatticeOpKind::shuffle:
        return sgc_principal_omega(std::max(*le, *re));
    }
  }
  if (k == LatticeOpKind::shuffle)
    throw std::domain_error("shuffle sum of non-principal descriptors is not decided here");
  if (sgc_chirality(l) != sgc_chirality(r))
    throw std::domain_error("plus/times require descriptors of the same chirality");
  return SgcDescriptor{k == LatticeOpKind::plus ? SgcKind::plus : SgcKind::times,
                       {},
                       std::make_shared<SgcDescriptor>(l),
                       std::make_shared<SgcDescriptor>(r)};
}

// --- membership and decomposition --------------------------------------------

struct Decomposition {
  OrderTerm left, right;
};

inline constexpr int kSgcSearchDepth = 8;

inline bool sgc_membership(const SgcDescriptor& c, const OrderTerm& t,
                           int depth = kSgcSearchDepth);
inline Decomposition sgc_decompose(const SgcDescriptor& c, const OrderTerm& t,
                                   int depth = kSgcSearchDepth);

namespace detail {

inline OrderTerm blocks_range(const OrderTerm& t, std::size_t from,
                              std::size_t to) {
  OrderTerm r;
  r.blocks.assign(t.blocks.begin() + static_cast<std::ptrdiff_t>(from),
                  t.blocks.begin() + static_cast<std::ptrdiff_t>(to));
  return r;
}

// All cuts t = prefix + rest at block boundaries and at CNF coefficient
// boundaries inside ordinal blocks, longest prefix first.
inline std::vector<std::pair<OrderTerm, OrderTerm>> term_cuts(const OrderTerm& t) {
  std::vector<std::pair<OrderTerm, OrderTerm>> out;
  for (std::size_t i = t.blocks.size() + 1; i-- > 0;) {
    if (i < t.blocks.size() && t.blocks[i].kind == BlockKind::ord) {
      // interior ordinal cuts, larger left part first (skip the trivial
      // full cut, produced by the boundary at i + 1)
      auto splits = ord_splits(t.blocks[i].value);
      for (std::size_t j = splits.size(); j-- > 0;) {
        const auto& [lo, hi] = splits[j];
        if (hi.is_zero() || lo.is_zero()) continue;
        OrderTerm prefix = blocks_range(t, 0, i);
        prefix.blocks.push_back(Block::ord(lo));
        OrderTerm rest;
        rest.blocks.push_back(Block::ord(hi));
        for (std::size_t m = i + 1; m < t.blocks.size(); ++m)
          rest.blocks.push_back(t.blocks[m]);
        out.emplace_back(normalize(prefix.blocks), normalize(rest.blocks));
      }
    }
    out.emplace_back(blocks_range(t, 0, i), blocks_range(t, i, t.blocks.size()));
  }
  // restore longest-first order across the mixed boundary/interior entries
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return term_cmp(x.first, y.first) == Ordering::greater;
  });
  return out;
}

inline Decomposition decompose_well_orders(const OrderTerm& t) {
  if (!t.empty() && t.blocks[0].kind == BlockKind::ord)
    return {term_from_ordinal(t.blocks[0].value), blocks_range(t, 1, t.blocks.size())};
  return {term_zero(), t};
}

inline Decomposition decompose_principal(const Ordinal& g, const OrderTerm& t) {
  if (t.empty() || t.blocks[0].kind != BlockKind::ord) return {term_zero(), t};
  const Ordinal& a = t.blocks[0].value;
  Ordinal hi, lo;
  for (const CnfTerm& term : a.terms)
    (term.exponent >= g ? hi : lo).terms.push_back(term);
  OrderTerm rest;
  if (!lo.is_zero()) rest.blocks.push_back(Block::ord(lo));
  for (std::size_t i = 1; i < t.blocks.size(); ++i)
    rest.blocks.push_back(t.blocks[i]);
  return {term_from_ordinal(hi), normalize(rest.blocks)};
}

inline Decomposition decompose_no_max(const OrderTerm& t) {
  if (t.empty()) return {term_zero(), term_zero()};
  const Block& last = t.blocks.back();
  OrderTerm body = blocks_range(t, 0, t.blocks.size() - 1);
  switch (last.kind) {
    case BlockKind::shuffle:
      return {t, term_zero()};
    case BlockKind::ord: {
      auto [lim, n] = limit_finite_split(last.value);
      if (n == 0) return {t, term_zero()};
      if (!lim.is_zero()) {
        OrderTerm left = body;
        left.blocks.push_back(Block::ord(lim));
        return {left, term_from_nat(n)};
      }
      Decomposition d = decompose_no_max(body);
      d.right = term_add(d.right, term_from_nat(n));
      return d;
    }
    case BlockKind::rev: {
      Decomposition d = decompose_no_max(body);
      OrderTerm tail;
      tail.blocks.push_back(last);
      d.right = term_add(d.right, tail);
      return d;
    }
  }
  throw std::logic_error("unreachable");
}

inline Decomposition decompose_scattered(const OrderTerm& t) {
  auto [pre, post] = term_scattered_split(t);
  return {pre, post};
}

inline bool block_is_q(const Block& b) {
  return b.kind == BlockKind::shuffle && b.list.members.size() == 1 &&
         b.list.members[0] == term_from_nat(1);
}

inline Decomposition decompose_gen_q(const OrderTerm& t) {
  if (t.empty()) return {term_zero(), term_zero()};
  if (block_is_q(t.blocks[0]))
    return {term_shuffle({term_from_nat(1)}), blocks_range(t, 1, t.blocks.size())};
  if (t.blocks[0].kind == BlockKind::ord && t.blocks[0].value == Ordinal::from_nat(1) &&
      t.blocks.size() >= 2 && block_is_q(t.blocks[1]))
    return {blocks_range(t, 0, 2), blocks_range(t, 2, t.blocks.size())};
  return {term_zero(), t};
}

// Greedy scan for sums of {w, Q, 1+Q}: ordinal blocks must have a finite
// tail of 0, or 1 immediately followed by a Q block; only plain Q shuffles
// are allowed.
inline Decomposition decompose_gen_omega_q(const OrderTerm& t) {
  std::size_t i = 0;
  OrderTerm partial;
  while (i < t.blocks.size()) {
    const Block& b = t.blocks[i];
    if (block_is_q(b)) {
      ++i;
      continue;
    }
    if (b.kind == BlockKind::ord) {
      auto [lim, n] = limit_finite_split(b.value);
      if (n == 0) {
        ++i;
        continue;
      }
      if (n == 1 && i + 1 < t.blocks.size() && block_is_q(t.blocks[i + 1])) {
        i += 2;
        continue;
      }
      if (!lim.is_zero()) partial = term_from_ordinal(lim);
      break;
    }
    break;
  }
  OrderTerm left = blocks_range(t, 0, i);
  OrderTerm rest = blocks_range(t, i, t.blocks.size());
  if (!partial.empty()) {
    left = term_add(left, partial);
    // remove the consumed limit part from the first remaining ordinal block
    auto [lim, n] = limit_finite_split(rest.blocks[0].value);
    (void)lim;
    rest.blocks[0] = Block::ord(Ordinal::from_nat(n));
    rest = normalize(rest.blocks);
  }
  return {left, rest};
}

inline Decomposition decompose_gen_q_plus_1(const OrderTerm& t) {
  std::size_t i = 0;
  while (i < t.blocks.size() &&
         (t.blocks[i].kind == BlockKind::ord || block_is_q(t.blocks[i])))
    ++i;
  return {blocks_range(t, 0, i), blocks_range(t, i, t.blocks.size())};
}

// Longest cut prefix accepted by the membership procedure; used for dual and
// composite descriptors. Sound for the shipped library at desk scale;
// interior cuts of shuffle and reversed blocks are not enumerated.
inline Decomposition decompose_generic(const SgcDescriptor& c, const OrderTerm& t,
                                       int depth) {
  for (const auto& [prefix, rest] : term_cuts(t))
    if (sgc_membership(c, prefix, depth)) return {prefix, rest};
  return {term_zero(), t};
}

struct PlusSearch {
  bool found = false;
  bool depth_hit = false;
};

inline void plus_search(const SgcDescriptor& x, const SgcDescriptor& y,
                        const OrderTerm& t, int depth, PlusSearch& st) {
  if (st.found) return;
  if (t.empty()) {
    st.found = true;
    return;
  }
  if (depth == 0) {
    st.depth_hit = true;
    return;
  }
  for (const auto& [prefix, rest] : term_cuts(t)) {
    if (prefix.empty()) continue;
    if (sgc_membership(x, prefix, depth - 1) ||
        sgc_membership(y, prefix, depth - 1)) {
      plus_search(x, y, rest, depth - 1, st);
      if (st.found) return;
    }
  }
}

}  // namespace detail

inline bool sgc_membership(const SgcDescriptor& c, const OrderTerm& t, int depth) {
  switch (c.kind) {
    case SgcKind::zero:
      return t.empty();
    case SgcKind::all:
      return true;
    case SgcKind::well_orders:
      return detail::decompose_well_orders(t).left == t;
    case SgcKind::no_max:
      return detail::decompose_no_max(t).left == t;
    case SgcKind::scattered:
      return term_is_scattered(t);
    case SgcKind::principal_omega:
      return detail::decompose_principal(c.param, t).left == t;
    case SgcKind::gen_q:
      return detail::decompose_gen_q(t).left == t;
    case SgcKind::gen_omega_q:
      return detail::decompose_gen_omega_q(t).left == t;
    case SgcKind::gen_q_plus_1:
      return detail::decompose_gen_q_plus_1(t).left == t;
    case SgcKind::inverse:
      return sgc_membership(*c.a, term_reverse(t), depth);
    case SgcKind::perp: {
      if (sgc_chirality(*c.a) == Chirality::left)
        return sgc_decompose(*c.a, t, depth).left.empty();
      // no non-empty final segment of t lies in the (right) inner class
      return sgc_decompose(involution(InvolutionKind::inverse, *c.a),
                           term_reverse(t), depth)
          .left.empty();
    }
    case SgcKind::dual: {
      if (sgc_chirality(*c.a) == Chirality::left)
        return sgc_decompose(*c.a, term_reverse(t), depth).left.empty();
      return sgc_decompose(involution(InvolutionKind::inverse, *c.a), t, depth)
          .left.empty();
    }
    case SgcKind::times:
      return sgc_membership(*c.a, t, depth) && sgc_membership(*c.b, t, depth);
    case SgcKind::plus: {
      detail::PlusSearch st;
      detail::plus_search(*c.a, *c.b, t, depth, st);
      if (st.found) return true;
      if (st.depth_hit)
        throw capacity_error("plus-descriptor membership exceeded the configured search depth");
      return false;
    }
  }
  throw std::logic_error("unreachable");
}

inline Decomposition sgc_decompose(const SgcDescriptor& c, const OrderTerm& t,
                                   int depth) {
  if (sgc_chirality(c) != Chirality::left)
    throw std::domain_error("decompose requires a left-chirality descriptor");
  switch (c.kind) {
    case SgcKind::zero:
      return {term_zero(), t};
    case SgcKind::all:
      return {t, term_zero()};
    case SgcKind::well_orders:
      return detail::decompose_well_orders(t);
    case SgcKind::no_max:
      return detail::decompose_no_max(t);
    case SgcKind::scattered:
      return detail::decompose_scattered(t);
    case SgcKind::principal_omega:
      return detail::decompose_principal(c.param, t);
    case SgcKind::gen_q:
      return detail::decompose_gen_q(t);
    case SgcKind::gen_omega_q:
      return detail::decompose_gen_omega_q(t);
    case SgcKind::gen_q_plus_1:
      return detail::decompose_gen_q_plus_1(t);
    default:
      return detail::decompose_generic(c, t, depth);
  }
}

// --- sums built from descriptors ----------------------------------------------

// The simple sum generated by c: A (+) B = B_L + A + B_R over the
// c-decomposition of B.
inline OrderTerm simple_sum(const SgcDescriptor& c, const OrderTerm& a,
                            const OrderTerm& b, int depth = kSgcSearchDepth) {
  Decomposition d = sgc_decompose(c, b, depth);
  return term_concat({d.left, a, d.right});
}

// Extends an inner sum on c to all terms: sum the two left parts with the
// inner sum and append both right parts.
inline TermSum sgc_extend(const SgcDescriptor& c, TermSum inner,
                          int depth = kSgcSearchDepth) {
  return [c, inner = std::move(inner), depth](const OrderTerm& a,
                                              const OrderTerm& b) {
    Decomposition da = sgc_decompose(c, a, depth);
    Decomposition db = sgc_decompose(c, b, depth);
    return term_concat({inner(da.left, db.left), da.right, db.right});
  };
}

struct CommutativityWitness {
  OrderTerm x, y;
  OrderTerm xy, yx;  // simple_sum(c, x, y) and simple_sum(c, y, x), distinct
};

// No simple sum is commutative: 1 and w distinguish when the class absorbs
// on the well-ordered side, 1 and w* otherwise.
inline CommutativityWitness commutativity_witness(const SgcDescriptor& c,
                                                  int depth = kSgcSearchDepth) {
  OrderTerm one = term_from_nat(1);
  OrderTerm w = term_from_ordinal(Ordinal::omega());
  OrderTerm wstar = term_rev_ordinal(Ordinal::omega());
  std::vector<std::pair<OrderTerm, OrderTerm>> candidates;
  if (sgc_membership(c, wstar, depth)) {
    candidates = {{wstar, one}, {one, w}};
  } else {
    candidates = {{one, w}, {wstar, one}};
  }
  for (const auto& [x, y] : candidates) {
    OrderTerm xy = simple_sum(c, x, y, depth);
    OrderTerm yx = simple_sum(c, y, x, depth);
    if (xy != yx) return {x, y, xy, yx};
  }
  throw std::logic_error("no commutativity witness found for descriptor");
}

// --- rendering ----------------------------------------------------------------

inline std::string descriptor_to_string(const SgcDescriptor& c) {
  switch (c.kind) {
    case SgcKind::zero: return "zero";
    case SgcKind::all: return "all";
    case SgcKind::well_orders: return "W";
    case SgcKind::no_max: return "W*";
    case SgcKind::scattered: return "S";
    case SgcKind::principal_omega:
      return "P(" + ord_to_string(Ordinal::w_pow(c.param)) + ")";
    case SgcKind::gen_q: return "genQ";
    case SgcKind::gen_omega_q: return "genOmegaQ";
    case SgcKind::gen_q_plus_1: return "genQ1";
    case SgcKind::perp: return "perp(" + descriptor_to_string(*c.a) + ")";
    case SgcKind::dual: return "dual(" + descriptor_to_string(*c.a) + ")";
    case SgcKind::inverse: return "inv(" + descriptor_to_string(*c.a) + ")";
    case SgcKind::plus:
      return "plus(" + descriptor_to_string(*c.a) + "," +
             descriptor_to_string(*c.b) + ")";
    case SgcKind::times:
      return "times(" + descriptor_to_string(*c.a) + "," +
             descriptor_to_string(*c.b) + ")";
  }
  throw std::logic_error("unreachable");
}

}  // namespace ordsum
