// gen.hpp
// -------
// Seeded generators for property suites. Randomness goes through the raw
// mt19937_64 stream (no std distributions) so runs are reproducible across
// standard libraries.

#pragma once

#include <random>
#include <vector>

#include "ordsum/order_term.hpp"

namespace ordsum {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }
  bool coin() { return rng_() & 1; }

  // Random ordinal with finite exponents <= max_exp and coefficients in
  // [1, max_coeff]; may be zero.
  Ordinal ordinal(std::uint64_t max_exp, std::uint64_t max_coeff) {
    Ordinal r;
    for (std::uint64_t e = max_exp + 1; e-- > 0;) {
      if (coin()) continue;
      r.terms.push_back(
          CnfTerm{Ordinal::from_nat(e), 1 + below(max_coeff)});
      if (r.terms.size() >= 3 && coin()) break;
    }
    return r;
  }

  Ordinal nonzero_ordinal(std::uint64_t max_exp, std::uint64_t max_coeff) {
    for (;;) {
      Ordinal r = ordinal(max_exp, max_coeff);
      if (!r.is_zero()) return r;
    }
  }

  Block block(int shuffle_depth) {
    switch (below(shuffle_depth > 0 ? 3 : 2)) {
      case 0:
        return Block::ord(nonzero_ordinal(2, 3));
      case 1:
        return Block::rev(nonzero_ordinal(2, 3));
      default: {
        std::vector<OrderTerm> members;
        std::uint64_t k = 1 + below(3);
        for (std::uint64_t i = 0; i < k; ++i)
          members.push_back(raw_term(1 + below(2), shuffle_depth - 1));
        return Block::shuffle(ShuffleList{std::move(members)});
      }
    }
  }

  // Unnormalized block sequence; feed through normalize() for a fragment
  // term.
  OrderTerm raw_term(std::size_t max_blocks, int shuffle_depth = 1) {
    OrderTerm t;
    std::uint64_t k = below(max_blocks + 1);
    for (std::uint64_t i = 0; i < k; ++i) t.blocks.push_back(block(shuffle_depth));
    return t;
  }

  OrderTerm term(std::size_t max_blocks = 4, int shuffle_depth = 1) {
    return normalize(raw_term(max_blocks, shuffle_depth).blocks);
  }

  // A different raw presentation of the same order: applies a few inverse
  // rewrites (splitting ordinal blocks, duplicating shuffles, reattaching
  // absorbed material). normalize(denormalize(t)) == t by construction.
  std::vector<Block> denormalize(const OrderTerm& t, int rounds = 3) {
    std::vector<Block> bs = t.blocks;
    for (int r = 0; r < rounds && !bs.empty(); ++r) {
      std::size_t i = below(bs.size());
      Block& b = bs[i];
      switch (below(4)) {
        case 0:
          if (b.kind == BlockKind::ord) {
            auto splits = ord_splits(b.value);
            auto [l, rhs] = splits[below(splits.size())];
            if (!l.is_zero() && !rhs.is_zero()) {
              Block right = Block::ord(rhs);
              b.value = l;
              bs.insert(bs.begin() + static_cast<std::ptrdiff_t>(i + 1), right);
            }
          }
          break;
        case 1:
          if (b.kind == BlockKind::shuffle) {
            Block copy = b;
            bs.insert(bs.begin() + static_cast<std::ptrdiff_t>(i + 1), copy);
            if (coin() && !bs[i].list.members.empty()) {
              const OrderTerm& m = bs[i].list.members[below(bs[i].list.members.size())];
              if (m.blocks.size() == 1)
                bs.insert(bs.begin() + static_cast<std::ptrdiff_t>(i + 1),
                          m.blocks[0]);
            }
          }
          break;
        case 2:
          if (b.kind == BlockKind::rev)
            bs.insert(bs.begin() + static_cast<std::ptrdiff_t>(i + 1),
                      Block::ord(Ordinal::from_nat(1 + below(3))));
          break;
        default:
          bs.insert(bs.begin() + static_cast<std::ptrdiff_t>(i),
                    Block::ord(Ordinal{}));
          break;
      }
    }
    return bs;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ordsum
