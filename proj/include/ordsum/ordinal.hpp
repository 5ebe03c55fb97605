// ordinal.hpp
// -----------
// Exact ordinal arithmetic below epsilon_0 in hereditary Cantor normal form.
//
// An ordinal is a strictly decreasing list of terms w^exponent * coefficient,
// where each exponent is itself an ordinal of the same kind and every
// coefficient is a positive natural. The empty list is 0.
//
// On top of the usual (non-commutative) sum this module provides a family of
// commutative, associative sums: the natural (Hessenberg) sum, the lcm sum,
// the dynamic sum, the min sum and the finite-split sum, together with a
// sample-relative checker for Carruth's natural-operation axioms and the
// label sequences produced by the positional lcm merge.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordsum {

// Raised when an operation exceeds a configured enumeration bound.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Ordering { less, equal, greater };

struct CnfTerm;

struct Ordinal {
  std::vector<CnfTerm> terms;  // strictly decreasing exponents, coeffs >= 1

  Ordinal() = default;

  bool is_zero() const { return terms.empty(); }
  bool is_finite() const;
  std::uint64_t finite_value() const;

  static Ordinal from_nat(std::uint64_t n);
  static Ordinal omega();
  static Ordinal w_pow(const Ordinal& exp, std::uint64_t coeff = 1);
};

struct CnfTerm {
  Ordinal exponent;
  std::uint64_t coeff = 1;
};

inline Ordering ord_cmp(const Ordinal& a, const Ordinal& b);

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return ord_cmp(a, b) == Ordering::equal;
}
inline bool operator!=(const Ordinal& a, const Ordinal& b) { return !(a == b); }
inline bool operator<(const Ordinal& a, const Ordinal& b) {
  return ord_cmp(a, b) == Ordering::less;
}
inline bool operator<=(const Ordinal& a, const Ordinal& b) {
  return ord_cmp(a, b) != Ordering::greater;
}
inline bool operator>(const Ordinal& a, const Ordinal& b) { return b < a; }
inline bool operator>=(const Ordinal& a, const Ordinal& b) { return b <= a; }

inline Ordering ord_cmp(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    Ordering e = ord_cmp(a.terms[i].exponent, b.terms[i].exponent);
    if (e != Ordering::equal) return e;
    if (a.terms[i].coeff != b.terms[i].coeff)
      return a.terms[i].coeff < b.terms[i].coeff ? Ordering::less
                                                 : Ordering::greater;
  }
  if (a.terms.size() == b.terms.size()) return Ordering::equal;
  return a.terms.size() < b.terms.size() ? Ordering::less : Ordering::greater;
}

inline bool Ordinal::is_finite() const {
  return terms.empty() || (terms.size() == 1 && terms[0].exponent.is_zero());
}

inline std::uint64_t Ordinal::finite_value() const {
  assert(is_finite());
  return terms.empty() ? 0 : terms[0].coeff;
}

inline Ordinal Ordinal::from_nat(std::uint64_t n) {
  Ordinal r;
  if (n > 0) r.terms.push_back(CnfTerm{Ordinal{}, n});
  return r;
}

inline Ordinal Ordinal::omega() {
  Ordinal r;
  r.terms.push_back(CnfTerm{from_nat(1), 1});
  return r;
}

inline Ordinal Ordinal::w_pow(const Ordinal& exp, std::uint64_t coeff) {
  Ordinal r;
  if (coeff > 0) r.terms.push_back(CnfTerm{exp, coeff});
  return r;
}

// Leading exponent; 0 for the zero ordinal.
inline Ordinal ord_degree(const Ordinal& a) {
  return a.is_zero() ? Ordinal{} : a.terms[0].exponent;
}

inline Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  Ordinal r;
  const Ordinal& lead = b.terms[0].exponent;
  std::size_t i = 0;
  while (i < a.terms.size() &&
         ord_cmp(a.terms[i].exponent, lead) == Ordering::greater) {
    r.terms.push_back(a.terms[i]);
    ++i;
  }
  r.terms.push_back(b.terms[0]);
  if (i < a.terms.size() && a.terms[i].exponent == lead)
    r.terms.back().coeff += a.terms[i].coeff;
  r.terms.insert(r.terms.end(), b.terms.begin() + 1, b.terms.end());
  return r;
}

// Natural sum: merge of the expanded CNF exponent multisets.
inline Ordinal hessenberg(const Ordinal& a, const Ordinal& b) {
  Ordinal r;
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    Ordering c;
    if (i == a.terms.size())
      c = Ordering::less;
    else if (j == b.terms.size())
      c = Ordering::greater;
    else
      c = ord_cmp(a.terms[i].exponent, b.terms[j].exponent);
    if (c == Ordering::greater)
      r.terms.push_back(a.terms[i++]);
    else if (c == Ordering::less)
      r.terms.push_back(b.terms[j++]);
    else {
      r.terms.push_back(CnfTerm{a.terms[i].exponent,
                                a.terms[i].coeff + b.terms[j].coeff});
      ++i, ++j;
    }
  }
  return r;
}

// Per-exponent maximum on the infinite part, sum of the finite parts.
inline Ordinal lcm_sum(const Ordinal& a, const Ordinal& b) {
  Ordinal r;
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    Ordering c;
    if (i == a.terms.size())
      c = Ordering::less;
    else if (j == b.terms.size())
      c = Ordering::greater;
    else
      c = ord_cmp(a.terms[i].exponent, b.terms[j].exponent);
    if (c == Ordering::greater)
      r.terms.push_back(a.terms[i++]);
    else if (c == Ordering::less)
      r.terms.push_back(b.terms[j++]);
    else {
      const CnfTerm& x = a.terms[i];
      const CnfTerm& y = b.terms[j];
      std::uint64_t k = x.exponent.is_zero() ? x.coeff + y.coeff
                                             : std::max(x.coeff, y.coeff);
      r.terms.push_back(CnfTerm{x.exponent, k});
      ++i, ++j;
    }
  }
  return r;
}

namespace detail {
inline Ordinal ord_suffix(const Ordinal& a, std::size_t from) {
  Ordinal r;
  r.terms.assign(a.terms.begin() + static_cast<std::ptrdiff_t>(from),
                 a.terms.end());
  return r;
}
}  // namespace detail

// Equal leading degrees take the larger coefficient and recurse on the tails
// (adding outright at degree 0); otherwise the larger-degree operand wins.
inline Ordinal dynamic_sum(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Ordering c = ord_cmp(a.terms[0].exponent, b.terms[0].exponent);
  if (c == Ordering::greater) return a;
  if (c == Ordering::less) return b;
  if (a.terms[0].exponent.is_zero())
    return Ordinal::from_nat(a.terms[0].coeff + b.terms[0].coeff);
  Ordinal head = Ordinal::w_pow(a.terms[0].exponent,
                                std::max(a.terms[0].coeff, b.terms[0].coeff));
  return ord_add(head,
                 dynamic_sum(detail::ord_suffix(a, 1), detail::ord_suffix(b, 1)));
}

// a = w*q + n with q the omega-quotient and n the finite part.
inline std::pair<Ordinal, std::uint64_t> omega_quotient(const Ordinal& a) {
  Ordinal q;
  std::uint64_t n = 0;
  for (const CnfTerm& t : a.terms) {
    if (t.exponent.is_zero()) {
      n = t.coeff;
    } else {
      // exponent e contributes w^x with 1 + x = e; x = e - 1 for finite e,
      // and x = e when e is infinite.
      Ordinal x = t.exponent;
      if (x.is_finite()) x = Ordinal::from_nat(x.finite_value() - 1);
      q.terms.push_back(CnfTerm{x, t.coeff});
    }
  }
  return {q, n};
}

inline Ordinal min_sum(const Ordinal& a, const Ordinal& b) {
  auto [qa, na] = omega_quotient(a);
  auto [qb, nb] = omega_quotient(b);
  if (qa != qb) return std::max(a, b, [](const Ordinal& x, const Ordinal& y) {
    return x < y;
  });
  return ord_add(a, Ordinal::from_nat(nb));
}

// Larger leading degree wins whole; equal leading degrees add coefficients
// and recurse on the tails.
inline Ordinal fsplit_sum(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Ordering c = ord_cmp(a.terms[0].exponent, b.terms[0].exponent);
  if (c == Ordering::greater) return a;
  if (c == Ordering::less) return b;
  Ordinal head = Ordinal::w_pow(a.terms[0].exponent,
                                a.terms[0].coeff + b.terms[0].coeff);
  return ord_add(head,
                 fsplit_sum(detail::ord_suffix(a, 1), detail::ord_suffix(b, 1)));
}

inline bool is_additively_indecomposable(const Ordinal& a) {
  if (a.is_zero())
    throw std::domain_error("additive indecomposability is defined for non-zero ordinals");
  return a.terms.size() == 1 && a.terms[0].coeff == 1;
}

// a = limit + n with n the finite CNF tail.
inline std::pair<Ordinal, std::uint64_t> limit_finite_split(const Ordinal& a) {
  if (!a.terms.empty() && a.terms.back().exponent.is_zero()) {
    Ordinal lim;
    lim.terms.assign(a.terms.begin(), a.terms.end() - 1);
    return {lim, a.terms.back().coeff};
  }
  return {a, 0};
}

// All final segments of a, i.e. every c with x + c = a for some x.
// Finite per ordinal: one cut per coefficient step plus the term suffixes.
inline std::vector<Ordinal> ord_tails(const Ordinal& a) {
  std::vector<Ordinal> out;
  out.push_back(Ordinal{});
  for (std::size_t i = a.terms.size(); i-- > 0;) {
    Ordinal suffix = detail::ord_suffix(a, i + 1);
    for (std::uint64_t j = 1; j <= a.terms[i].coeff; ++j)
      out.push_back(ord_add(Ordinal::w_pow(a.terms[i].exponent, j), suffix));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// All splits a = left + right at CNF coefficient granularity, as
// (left, right) pairs. Includes (0, a) and (a, 0).
inline std::vector<std::pair<Ordinal, Ordinal>> ord_splits(const Ordinal& a) {
  std::vector<std::pair<Ordinal, Ordinal>> out;
  for (std::size_t i = 0; i <= a.terms.size(); ++i) {
    Ordinal prefix;
    prefix.terms.assign(a.terms.begin(),
                        a.terms.begin() + static_cast<std::ptrdiff_t>(i));
    if (i == a.terms.size()) {
      out.emplace_back(prefix, Ordinal{});
      break;
    }
    Ordinal suffix = detail::ord_suffix(a, i + 1);
    for (std::uint64_t j = 0; j < a.terms[i].coeff; ++j) {
      Ordinal left = prefix;
      if (j > 0) left.terms.push_back(CnfTerm{a.terms[i].exponent, j});
      Ordinal right =
          ord_add(Ordinal::w_pow(a.terms[i].exponent, a.terms[i].coeff - j),
                  suffix);
      out.emplace_back(left, right);
    }
  }
  return out;
}

// --- rendering -------------------------------------------------------------

inline std::string ord_to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (i > 0) s += " + ";
    const CnfTerm& t = a.terms[i];
    if (t.exponent.is_zero()) {
      s += std::to_string(t.coeff);
      continue;
    }
    s += "w";
    if (!(t.exponent.is_finite() && t.exponent.finite_value() == 1)) {
      s += "^";
      bool simple = t.exponent.is_finite() ||
                    (t.exponent.terms.size() == 1 &&
                     t.exponent.terms[0].coeff == 1 &&
                     t.exponent.terms[0].exponent.is_finite() &&
                     t.exponent.terms[0].exponent.finite_value() == 1);
      if (simple)
        s += ord_to_string(t.exponent);
      else
        s += "(" + ord_to_string(t.exponent) + ")";
    }
    if (t.coeff != 1) s += "*" + std::to_string(t.coeff);
  }
  return s;
}

// --- Carruth's natural-operation axioms ------------------------------------

using OrdinalSum = std::function<Ordinal(const Ordinal&, const Ordinal&)>;

struct CarruthReport {
  bool pass = true;
  int axiom = 0;                  // 1..4 when pass is false
  std::vector<Ordinal> witness;   // the ordinals violating the axiom
  std::string message;
};

// Checks axioms 1-4 on the sample: commutativity on pairs, associativity on
// triples, 0 as identity, and the order-monotonicity iff on pairwise-distinct
// triples. A pass is sample-relative, never a proof.
inline CarruthReport carruth_check(const OrdinalSum& op,
                                   std::vector<Ordinal> sample) {
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  CarruthReport rep;
  auto fail = [&](int axiom, std::vector<Ordinal> w, std::string msg) {
    rep.pass = false;
    rep.axiom = axiom;
    rep.witness = std::move(w);
    rep.message = std::move(msg);
    return rep;
  };
  for (const Ordinal& a : sample)
    for (const Ordinal& b : sample)
      if (op(a, b) != op(b, a))
        return fail(1, {a, b},
                    "axiom-1 violation: " + ord_to_string(a) + ", " +
                        ord_to_string(b));
  for (const Ordinal& a : sample)
    for (const Ordinal& b : sample)
      for (const Ordinal& c : sample)
        if (op(op(a, b), c) != op(a, op(b, c)))
          return fail(2, {a, b, c},
                      "axiom-2 violation: " + ord_to_string(a) + ", " +
                          ord_to_string(b) + ", " + ord_to_string(c));
  for (const Ordinal& a : sample)
    if (op(a, Ordinal{}) != a || op(Ordinal{}, a) != a)
      return fail(3, {a}, "axiom-3 violation: " + ord_to_string(a));
  for (const Ordinal& g : sample)
    for (const Ordinal& a : sample)
      for (const Ordinal& b : sample) {
        if (g == a || g == b || a == b) continue;
        bool lhs = op(g, a) > op(g, b);
        bool rhs = a > b;
        if (lhs != rhs)
          return fail(4, {g, a, b},
                      "axiom-4 violation: g=" + ord_to_string(g) +
                          ", a=" + ord_to_string(a) + ", b=" + ord_to_string(b));
      }
  rep.message = "pass";
  return rep;
}

// --- positional lcm merge label sequences ----------------------------------

enum class MergeAssociation { left, right };

// First k labels of the standard embedding of ((w (+) w) (+) w) or
// (w (+) (w (+) w)) where (+) interleaves positionally with the left operand
// at even result positions. Summands are labelled A, B, C left to right.
inline std::vector<char> lcm_merge_labels(MergeAssociation assoc,
                                          std::size_t k) {
  std::vector<char> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (assoc == MergeAssociation::left) {
      if (i % 2 == 1)
        out.push_back('C');
      else
        out.push_back(i / 2 % 2 == 0 ? 'A' : 'B');
    } else {
      if (i % 2 == 0)
        out.push_back('A');
      else
        out.push_back(i / 2 % 2 == 0 ? 'B' : 'C');
    }
  }
  return out;
}

}  // namespace ordsum
