// shuffle.hpp
// -----------
// Canonical machinery for rational shuffles Q(I1,...,Ik): list equivalence,
// the extended-shuffle decomposition against a canonical base list, and the
// good shuffle sum, which unions canonical member lists.
//
// canonical_minimal_list itself lives in order_term.hpp since the normalizer
// depends on it.

#pragma once

#include <stdexcept>

#include "ordsum/order_term.hpp"

namespace ordsum {

// Mutual member-wise coverage up to term equality. On canonical lists this
// coincides with structural equality.
inline bool lists_equivalent(const ShuffleList& a, const ShuffleList& b) {
  auto covered = [](const ShuffleList& xs, const ShuffleList& ys) {
    for (const OrderTerm& x : xs.members) {
      bool found = false;
      for (const OrderTerm& y : ys.members)
        if (x == y) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

struct ExtendedShuffleSplit {
  enum class Kind { member, extended, neither } kind;
  OrderTerm left, right;  // set for Kind::extended; empty flanks allowed
};

// Relates a term against a canonical base list: either j is a member, or
// j = left + Q(base) + right with both flanks empty or members, or neither
// clause fits (an input outside the representable shuffle family).
inline ExtendedShuffleSplit extended_shuffle_decompose(const OrderTerm& j,
                                                       const ShuffleList& base) {
  OrderTerm t = normalize(j.blocks);
  for (const OrderTerm& m : base.members)
    if (t == m) return {ExtendedShuffleSplit::Kind::member, {}, {}};
  std::size_t s = t.blocks.size();
  for (std::size_t i = 0; i < t.blocks.size(); ++i)
    if (t.blocks[i].kind == BlockKind::shuffle) {
      s = i;
      break;
    }
  if (s == t.blocks.size())
    return {ExtendedShuffleSplit::Kind::neither, {}, {}};
  if (!lists_equivalent(t.blocks[s].list, base))
    return {ExtendedShuffleSplit::Kind::neither, {}, {}};
  OrderTerm left, right;
  left.blocks.assign(t.blocks.begin(),
                     t.blocks.begin() + static_cast<std::ptrdiff_t>(s));
  right.blocks.assign(t.blocks.begin() + static_cast<std::ptrdiff_t>(s + 1),
                      t.blocks.end());
  auto flank_ok = [&](const OrderTerm& f) {
    return f.empty() || detail::is_list_member(base, f);
  };
  if (flank_ok(left) && flank_ok(right))
    return {ExtendedShuffleSplit::Kind::extended, left, right};
  return {ExtendedShuffleSplit::Kind::neither, {}, {}};
}

// The good sum on shuffles: union of the canonical member lists.
inline OrderTerm shuffle_sum_S(const OrderTerm& a, const OrderTerm& b) {
  auto members_of = [](const OrderTerm& t) -> const ShuffleList& {
    if (t.blocks.size() != 1 || t.blocks[0].kind != BlockKind::shuffle)
      throw std::domain_error("shuffle_sum_S expects single shuffle blocks");
    return t.blocks[0].list;
  };
  std::vector<OrderTerm> joint = members_of(a).members;
  const auto& bm = members_of(b).members;
  joint.insert(joint.end(), bm.begin(), bm.end());
  return term_shuffle(joint);
}

}  // namespace ordsum
