// instances.hpp
// -------------
// Enumeration of all isomorphism types that are instances of a sum of two
// ordinals, by recursive leading-degree analysis, together with the bounds
// report (min sum below, natural sum above, both attained) and the
// strong-indecomposability check.
//
// A separate brute-force enumeration over explicit merge plans covers the
// degree <= 1 case and serves as the oracle the recursion is validated
// against.

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordsum/ordinal.hpp"

namespace ordsum {

struct InstanceLimits {
  std::uint64_t max_exponent = 5;
  std::uint64_t max_coeff = 6;
};

struct InstanceSet {
  Ordinal left, right;
  std::vector<Ordinal> types;  // sorted, deduplicated

  bool contains(const Ordinal& g) const {
    return std::binary_search(types.begin(), types.end(), g);
  }
};

namespace detail {

inline void require_enumerable(const Ordinal& a, const InstanceLimits& lim) {
  for (const CnfTerm& t : a.terms) {
    if (!t.exponent.is_finite() || t.exponent.finite_value() > lim.max_exponent)
      throw capacity_error("instance enumeration: exponent above the configured bound in " +
                           ord_to_string(a));
    if (t.coeff > lim.max_coeff)
      throw capacity_error("instance enumeration: coefficient above the configured bound in " +
                           ord_to_string(a));
  }
}

// a with leading degree d peeled: returns (k, tail) with a = w^d * k + tail.
inline std::pair<std::uint64_t, Ordinal> peel_leading(const Ordinal& a) {
  Ordinal tail;
  tail.terms.assign(a.terms.begin() + 1, a.terms.end());
  return {a.terms[0].coeff, tail};
}

inline std::set<Ordinal> instance_types(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return {b};
  if (b.is_zero()) return {a};
  Ordering dc = ord_cmp(a.terms[0].exponent, b.terms[0].exponent);
  if (dc == Ordering::less) return instance_types(b, a);

  std::set<Ordinal> out;
  if (dc == Ordering::greater) {
    // Every piece of b placed below cofinal w^d material of a is absorbed;
    // only a final segment of b can outlive the last a-block.
    auto [k, tail] = peel_leading(a);
    Ordinal head = Ordinal::w_pow(a.terms[0].exponent, k);
    for (const Ordinal& b2 : ord_tails(b))
      for (const Ordinal& d : instance_types(tail, b2))
        out.insert(ord_add(head, d));
    return out;
  }

  const Ordinal& deg = a.terms[0].exponent;
  auto [k1, a_tail] = peel_leading(a);
  auto [k2, b_tail] = peel_leading(b);
  if (deg.is_zero()) {
    // Finite leading blocks are single points; nothing merges or absorbs.
    out.insert(Ordinal::from_nat(k1 + k2));
    return out;
  }
  std::uint64_t kmin = std::min(k1, k2), kmax = std::max(k1, k2);
  for (std::uint64_t m = 0; m <= kmin; ++m) {
    std::uint64_t c = k1 + k2 - m;
    (void)kmax;
    Ordinal head = Ordinal::w_pow(deg, c);
    for (const Ordinal& d : instance_types(a_tail, b_tail))
      out.insert(ord_add(head, d));
    if (k2 - m >= 1) {
      // a pure b-block can follow a's last block: an initial segment of
      // a's tail is absorbed beneath it.
      for (const auto& [cut, a2] : ord_splits(a_tail)) {
        (void)cut;
        for (const Ordinal& d : instance_types(a2, b_tail))
          out.insert(ord_add(head, d));
      }
    }
    if (k1 - m >= 1) {
      for (const auto& [cut, b2] : ord_splits(b_tail)) {
        (void)cut;
        for (const Ordinal& d : instance_types(a_tail, b2))
          out.insert(ord_add(head, d));
      }
    }
  }
  return out;
}

}  // namespace detail

inline InstanceSet enumerate_instances(const Ordinal& a, const Ordinal& b,
                                       const InstanceLimits& lim = {}) {
  detail::require_enumerable(a, lim);
  detail::require_enumerable(b, lim);
  std::set<Ordinal> types = detail::instance_types(a, b);
  if (!types.count(ord_add(a, b)) || !types.count(ord_add(b, a)))
    throw std::logic_error("instance enumeration lost a standard sum");
  InstanceSet s;
  s.left = a;
  s.right = b;
  s.types.assign(types.begin(), types.end());
  return s;
}

// --- degree <= 1 merge-plan brute force --------------------------------------

// Enumerates explicit plans for a = w*q1 + r1 and b = w*q2 + r2: result slots
// each take one omega-block per summand at most and every slot takes at least
// one; trailing unit points either survive at the end or are absorbed, which
// requires an omega-block of the other summand strictly after the absorbing
// summand's last block. At most one summand can absorb units in a single
// plan; the enumeration asserts this internally.
inline std::vector<Ordinal> degree1_instances_bruteforce(const Ordinal& a,
                                                         const Ordinal& b) {
  auto shape = [](const Ordinal& x) {
    std::uint64_t q = 0, r = 0;
    for (const CnfTerm& t : x.terms) {
      if (t.exponent.is_zero())
        r = t.coeff;
      else if (t.exponent.is_finite() && t.exponent.finite_value() == 1)
        q = t.coeff;
      else
        throw std::domain_error("degree1 oracle expects ordinals below w^2");
    }
    return std::pair<std::uint64_t, std::uint64_t>{q, r};
  };
  auto [q1, r1] = shape(a);
  auto [q2, r2] = shape(b);

  std::set<Ordinal> out;
  for (std::uint64_t c = std::max(q1, q2); c <= q1 + q2; ++c) {
    if (c == 0) {
      out.insert(Ordinal::from_nat(r1 + r2));
      continue;
    }
    for (std::uint64_t sa = 0; sa < (1u << c); ++sa) {
      if (static_cast<std::uint64_t>(__builtin_popcountll(sa)) != q1) continue;
      for (std::uint64_t sb = 0; sb < (1u << c); ++sb) {
        if (static_cast<std::uint64_t>(__builtin_popcountll(sb)) != q2)
          continue;
        if ((sa | sb) != (1u << c) - 1) continue;  // every slot gets a block
        auto last = [](std::uint64_t bits) {
          return bits == 0 ? -1 : 63 - __builtin_clzll(bits);
        };
        bool a_can_absorb = last(sb) > last(sa);
        bool b_can_absorb = last(sa) > last(sb);
        if (a_can_absorb && b_can_absorb)
          throw std::logic_error("merge plan: both summands absorbing");
        for (std::uint64_t ta = (a_can_absorb ? 0 : r1); ta <= r1; ++ta)
          for (std::uint64_t tb = (b_can_absorb ? 0 : r2); tb <= r2; ++tb)
            out.insert(ord_add(Ordinal::w_pow(Ordinal::from_nat(1), c),
                               Ordinal::from_nat(ta + tb)));
      }
    }
  }
  return {out.begin(), out.end()};
}

// --- bounds and indecomposability --------------------------------------------

struct BoundsReport {
  bool pass = true;
  Ordinal lower, upper;
  bool lower_attained = false, upper_attained = false;
  std::vector<Ordinal> out_of_range;
  std::string message;
};

// Every instance lies in [min_sum, hessenberg], and both ends are attained.
inline BoundsReport check_bounds(const Ordinal& a, const Ordinal& b,
                                 const InstanceLimits& lim = {}) {
  InstanceSet s = enumerate_instances(a, b, lim);
  BoundsReport rep;
  rep.lower = min_sum(a, b);
  rep.upper = hessenberg(a, b);
  for (const Ordinal& g : s.types) {
    if (g == rep.lower) rep.lower_attained = true;
    if (g == rep.upper) rep.upper_attained = true;
    if (g < rep.lower || g > rep.upper) rep.out_of_range.push_back(g);
  }
  rep.pass = rep.lower_attained && rep.upper_attained && rep.out_of_range.empty();
  rep.message = rep.pass
                    ? "pass: " + ord_to_string(rep.lower) + " <= instances <= " +
                          ord_to_string(rep.upper) + ", both attained"
                    : "bounds violated for (" + ord_to_string(a) + ", " +
                          ord_to_string(b) + ")";
  return rep;
}

struct StrongIndecReport {
  bool pass = true;
  Ordinal bad_left, bad_right;
  std::string message = "pass";
};

// For an additively indecomposable g: whenever g is an instance of a sum of a
// sample pair, one of the pair already equals g.
inline StrongIndecReport strong_indecomposable_check(
    const Ordinal& g, const std::vector<std::pair<Ordinal, Ordinal>>& sample,
    const InstanceLimits& lim = {}) {
  if (g.is_zero() || !is_additively_indecomposable(g))
    throw std::domain_error("strong_indecomposable_check expects an additively indecomposable ordinal");
  StrongIndecReport rep;
  for (const auto& [a, b] : sample) {
    InstanceSet s = enumerate_instances(a, b, lim);
    if (s.contains(g) && a != g && b != g) {
      rep.pass = false;
      rep.bad_left = a;
      rep.bad_right = b;
      rep.message = "counterexample: " + ord_to_string(g) +
                    " is an instance of a sum of " + ord_to_string(a) + " and " +
                    ord_to_string(b);
      return rep;
    }
  }
  return rep;
}

}  // namespace ordsum
