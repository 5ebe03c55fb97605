// sift.hpp
// --------
// Finite decreasing filtrations of sum-generating classes with one sum per
// level, the layered decomposition of a term into level parts plus residue,
// and the sifted sum that recombines the parts level by level (deepest
// first) followed by the two residues.
//
// The shipped scheme filters by <w^a> with the usual sum at every level; on
// ordinal terms its sifted sum reproduces the natural sum, and on terms with
// an ordinal prefix it reproduces the prefix-natural sum. Fragment terms
// have bounded CNF degree, so the finite truncation loses nothing at desk
// scale; the truncation level is configuration.

#pragma once

#include <string>
#include <vector>

#include "ordsum/sgc.hpp"

namespace ordsum {

struct FiltrationLevel {
  SgcDescriptor cls;
  TermSum sum;
  std::string sum_name;
};

struct FiltrationScheme {
  std::vector<FiltrationLevel> levels;  // level 0 first (largest class)
};

// Level sums admitted by scheme configs.
inline TermSum level_sum_by_name(const std::string& name) {
  auto need_ordinal = [](const OrderTerm& t, const char* op) {
    auto v = term_as_ordinal(t);
    if (!v)
      throw std::domain_error(std::string(op) + " level sum expects ordinal parts, got " +
                              term_to_string(t));
    return *v;
  };
  if (name == "usual") return [](const OrderTerm& a, const OrderTerm& b) {
    return term_add(a, b);
  };
  if (name == "reversed") return [](const OrderTerm& a, const OrderTerm& b) {
    return term_add(b, a);
  };
  if (name == "hess")
    return [need_ordinal](const OrderTerm& a, const OrderTerm& b) {
      return term_from_ordinal(hessenberg(need_ordinal(a, "hess"), need_ordinal(b, "hess")));
    };
  if (name == "interleave-max")
    return [need_ordinal](const OrderTerm& a, const OrderTerm& b) {
      return term_from_ordinal(
          lcm_sum(need_ordinal(a, "interleave-max"), need_ordinal(b, "interleave-max")));
    };
  throw std::invalid_argument("unknown level sum: " + name);
}

// Levels <w^0> .. <w^max_degree>, usual sum at each level.
inline FiltrationScheme hessenberg_scheme(std::uint64_t max_degree = 8) {
  FiltrationScheme s;
  for (std::uint64_t d = 0; d <= max_degree; ++d)
    s.levels.push_back({sgc_principal_omega(Ordinal::from_nat(d)),
                        level_sum_by_name("usual"), "usual"});
  return s;
}

struct LevelParts {
  std::vector<OrderTerm> parts;  // parts[i] belongs to level i
  OrderTerm residue;             // the final segment outside level 0
};

// parts[i] is the difference between the longest initial segments in the
// level-i and level-(i+1) classes; the deepest level keeps its full prefix.
inline LevelParts level_parts(const FiltrationScheme& s, const OrderTerm& t) {
  LevelParts out;
  out.parts.resize(s.levels.size());
  Decomposition d0 = sgc_decompose(s.levels[0].cls, t);
  out.residue = d0.right;
  OrderTerm cur = d0.left;
  for (std::size_t i = 1; i < s.levels.size(); ++i) {
    Decomposition d = sgc_decompose(s.levels[i].cls, cur);
    out.parts[i - 1] = d.right;
    cur = d.left;
  }
  out.parts[s.levels.size() - 1] = cur;
  return out;
}

inline OrderTerm sifted_sum(const FiltrationScheme& s, const OrderTerm& a,
                            const OrderTerm& b) {
  LevelParts pa = level_parts(s, a);
  LevelParts pb = level_parts(s, b);
  std::vector<Block> blocks;
  for (std::size_t i = s.levels.size(); i-- > 0;) {
    OrderTerm part = s.levels[i].sum(pa.parts[i], pb.parts[i]);
    blocks.insert(blocks.end(), part.blocks.begin(), part.blocks.end());
  }
  blocks.insert(blocks.end(), pa.residue.blocks.begin(), pa.residue.blocks.end());
  blocks.insert(blocks.end(), pb.residue.blocks.begin(), pb.residue.blocks.end());
  return normalize(std::move(blocks));
}

struct EffectivenessReport {
  bool pass = true;
  std::vector<std::string> violations;
};

// Per pair and level: the level part of the sifted sum must equal the level
// sum of the operand parts, and the concatenation of all level contributions
// must stay in the level-0 class.
inline EffectivenessReport effectiveness_check(
    const FiltrationScheme& s,
    const std::vector<std::pair<OrderTerm, OrderTerm>>& sample) {
  EffectivenessReport rep;
  for (const auto& [a, b] : sample) {
    LevelParts pa = level_parts(s, a);
    LevelParts pb = level_parts(s, b);
    OrderTerm c = sifted_sum(s, a, b);
    LevelParts pc = level_parts(s, c);
    std::vector<Block> inner_blocks;
    for (std::size_t i = s.levels.size(); i-- > 0;) {
      OrderTerm expected = s.levels[i].sum(pa.parts[i], pb.parts[i]);
      inner_blocks.insert(inner_blocks.end(), expected.blocks.begin(),
                          expected.blocks.end());
      if (pc.parts[i] != expected) {
        rep.pass = false;
        rep.violations.push_back(
            "level " + std::to_string(i) + " part mismatch for (" +
            term_to_string(a) + ", " + term_to_string(b) + "): got " +
            term_to_string(pc.parts[i]) + ", expected " +
            term_to_string(expected));
      }
    }
    OrderTerm inner = normalize(std::move(inner_blocks));
    if (!sgc_membership(s.levels[0].cls, inner)) {
      rep.pass = false;
      rep.violations.push_back("inner concatenation left the level-0 class for (" +
                               term_to_string(a) + ", " + term_to_string(b) + ")");
    }
  }
  return rep;
}

// Sampled subclass check: deeper levels must be contained in shallower ones.
inline EffectivenessReport validate_filtration(const FiltrationScheme& s,
                                               const std::vector<OrderTerm>& sample) {
  EffectivenessReport rep;
  for (std::size_t i = 0; i + 1 < s.levels.size(); ++i)
    for (const OrderTerm& t : sample)
      if (sgc_membership(s.levels[i + 1].cls, t) &&
          !sgc_membership(s.levels[i].cls, t)) {
        rep.pass = false;
        rep.violations.push_back("level " + std::to_string(i + 1) +
                                 " is not contained in level " + std::to_string(i) +
                                 ": witness " + term_to_string(t));
      }
  return rep;
}

}  // namespace ordsum
