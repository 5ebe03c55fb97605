// expr.hpp
// --------
// Parser for the canonical term grammar and for class descriptors. The
// grammar mirrors the renderers in ordinal.hpp / order_term.hpp:
//
//   expr    := atom (' + ' atom)*
//   atom    := nat | omega | 'rev' '(' expr ')' | shuffle | '(' expr ')'
//   omega   := 'w' ('^' exp)? ('*' nat)?
//   exp     := nat | 'w' | '(' expr ')'          (must denote an ordinal)
//   shuffle := 'Q' ('(' expr (',' expr)* ')')?
//
// Parsed terms come back normalized, so parse . render is the identity on
// normal values.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordsum/order_term.hpp"
#include "ordsum/sgc.hpp"

namespace ordsum {

struct parse_error : std::invalid_argument {
  std::size_t line, column;
  parse_error(const std::string& what, std::size_t l, std::size_t c)
      : std::invalid_argument("line " + std::to_string(l) + ", column " +
                              std::to_string(c) + ": " + what),
        line(l),
        column(c) {}
};

inline constexpr std::uint64_t kMaxParsedNatural = 1000000000ull;

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : text_(text) {}

  OrderTerm parse_term() {
    skip_ws();
    OrderTerm t = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_is(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  std::uint64_t parse_nat() {
    if (pos_ >= text_.size() || !isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a natural number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > kMaxParsedNatural) fail("natural number exceeds the configured width");
      ++pos_;
    }
    return v;
  }

  Ordinal parse_exponent() {
    skip_ws();
    if (peek_is('(')) {
      ++pos_;
      OrderTerm t = parse_expr();
      skip_ws();
      expect(')');
      auto v = term_as_ordinal(t);
      if (!v) fail("exponent must be an ordinal");
      return *v;
    }
    if (peek_is('w')) {
      ++pos_;
      return Ordinal::omega();
    }
    return Ordinal::from_nat(parse_nat());
  }

  OrderTerm parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a term");
    char c = text_[pos_];
    if (isdigit(static_cast<unsigned char>(c)))
      return term_from_nat(parse_nat());
    if (text_.compare(pos_, 4, "rev(") == 0) {
      pos_ += 4;
      OrderTerm inner = parse_expr();
      skip_ws();
      expect(')');
      return term_reverse(inner);
    }
    if (c == 'w') {
      ++pos_;
      Ordinal exp = Ordinal::from_nat(1);
      if (eat('^')) exp = parse_exponent();
      std::uint64_t coeff = 1;
      skip_ws();
      if (eat('*')) {
        skip_ws();
        coeff = parse_nat();
      }
      return term_from_ordinal(Ordinal::w_pow(exp, coeff));
    }
    if (c == 'Q') {
      ++pos_;
      if (!peek_is('(')) return term_q();
      ++pos_;
      std::vector<OrderTerm> members;
      for (;;) {
        members.push_back(parse_expr());
        skip_ws();
        if (eat(',')) continue;
        expect(')');
        break;
      }
      return term_shuffle(members);
    }
    if (c == '(') {
      ++pos_;
      OrderTerm inner = parse_expr();
      skip_ws();
      expect(')');
      return inner;
    }
    fail("expected a term");
  }

  OrderTerm parse_expr() {
    OrderTerm t = parse_atom();
    for (;;) {
      skip_ws();
      if (!eat('+')) return t;
      t = term_add(t, parse_atom());
    }
  }
};

}  // namespace detail

inline OrderTerm parse_term(const std::string& text) {
  detail::ExprParser p(text);
  return p.parse_term();
}

inline Ordinal parse_ordinal(const std::string& text) {
  OrderTerm t = parse_term(text);
  auto v = term_as_ordinal(t);
  if (!v) throw parse_error("expected an ordinal expression", 1, 1);
  return *v;
}

// Descriptor syntax: W, W*, S, zero, all, genQ, genOmegaQ, genQ1,
// P(<ordinal>), perp(D), dual(D), inv(D), plus(D,D), times(D,D).
inline SgcDescriptor parse_descriptor(const std::string& text) {
  struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
      throw parse_error(msg, 1, pos + 1);
    }
    void skip_ws() {
      while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(const std::string& word) {
      skip_ws();
      if (s.compare(pos, word.size(), word) == 0) {
        pos += word.size();
        return true;
      }
      return false;
    }
    void expect(char c) {
      skip_ws();
      if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
      ++pos;
    }
    std::string parse_balanced() {
      // content up to the matching close paren at depth 0, comma-free
      std::string out;
      int depth = 0;
      while (pos < s.size()) {
        char c = s[pos];
        if (c == '(') ++depth;
        if (c == ')') {
          if (depth == 0) return out;
          --depth;
        }
        if (c == ',' && depth == 0) return out;
        out += c;
        ++pos;
      }
      fail("unterminated descriptor argument");
    }
    SgcDescriptor parse() {
      skip_ws();
      if (eat("perp(")) return close1(InvolutionKind::perp);
      if (eat("dual(")) return close1(InvolutionKind::dual);
      if (eat("inv(")) return close1(InvolutionKind::inverse);
      if (eat("plus(")) return close2(LatticeOpKind::plus);
      if (eat("times(")) return close2(LatticeOpKind::times);
      if (eat("P(")) {
        // the argument is the generator w^g; the class is keyed by g
        Ordinal gen = parse_ordinal(parse_balanced());
        expect(')');
        if (gen.is_zero() || !is_additively_indecomposable(gen))
          fail("P(...) expects an additively indecomposable generator");
        return sgc_principal_omega(gen.terms[0].exponent);
      }
      if (eat("W*")) return sgc_w_star();
      if (eat("W")) return sgc_w();
      if (eat("S")) return sgc_scattered();
      if (eat("genQ1")) return sgc_gen_q_plus_1();
      if (eat("genOmegaQ")) return sgc_gen_omega_q();
      if (eat("genQ")) return sgc_gen_q();
      if (eat("zero") || eat("0")) return sgc_zero();
      if (eat("all") || eat("LO")) return sgc_all();
      fail("expected a class descriptor");
    }
    SgcDescriptor close1(InvolutionKind k) {
      SgcDescriptor inner = parse();
      expect(')');
      return involution(k, inner);
    }
    SgcDescriptor close2(LatticeOpKind k) {
      SgcDescriptor l = parse();
      expect(',');
      SgcDescriptor r = parse();
      expect(')');
      return lattice_op(k, l, r);
    }
  };
  Parser p{text};
  SgcDescriptor d = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return d;
}

}  // namespace ordsum
