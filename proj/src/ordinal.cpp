#include "latkit/ordinal.hpp"

#include <cctype>
#include <cstddef>

#include "latkit/errors.hpp"

namespace latkit {

Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms.push_back({Ordinal{}, n});
  return o;
}

Ordinal Ordinal::omega() {
  Ordinal o;
  o.terms.push_back({Ordinal::nat(1), 1});
  return o;
}

bool Ordinal::is_finite() const {
  return terms.empty() || (terms.size() == 1 && terms[0].exponent.is_zero());
}

std::uint64_t Ordinal::finite_value() const {
  return terms.empty() ? 0 : terms[0].coeff;
}

OrdCmp ord_cmp(const Ordinal& a, const Ordinal& b) {
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    OrdCmp e = ord_cmp(a.terms[i].exponent, b.terms[i].exponent);
    if (e != OrdCmp::Equal) return e;
    if (a.terms[i].coeff != b.terms[i].coeff)
      return a.terms[i].coeff < b.terms[i].coeff ? OrdCmp::Less : OrdCmp::Greater;
  }
  if (a.terms.size() == b.terms.size()) return OrdCmp::Equal;
  return a.terms.size() < b.terms.size() ? OrdCmp::Less : OrdCmp::Greater;
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.terms[0].exponent;
  Ordinal out;
  std::size_t i = 0;
  while (i < a.terms.size() && ord_cmp(a.terms[i].exponent, lead) == OrdCmp::Greater) {
    out.terms.push_back(a.terms[i]);
    ++i;
  }
  Ordinal::Term merged = b.terms[0];
  if (i < a.terms.size() && ord_eq(a.terms[i].exponent, lead)) merged.coeff += a.terms[i].coeff;
  out.terms.push_back(merged);
  out.terms.insert(out.terms.end(), b.terms.begin() + 1, b.terms.end());
  return out;
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  Ordinal out;
  for (const auto& bt : b.terms) {
    Ordinal piece;
    if (bt.exponent.is_zero()) {
      // a * n: the leading coefficient scales, lower terms survive once.
      piece = a;
      piece.terms[0].coeff *= bt.coeff;
    } else {
      piece.terms.push_back({ord_add(a.terms[0].exponent, bt.exponent), bt.coeff});
    }
    out = ord_add(out, piece);
  }
  return out;
}

Ordinal ord_omega_pow(const Ordinal& a) {
  Ordinal o;
  o.terms.push_back({a, 1});
  return o;
}

bool is_power_of_omega(const Ordinal& a) {
  return a.terms.size() == 1 && a.terms[0].coeff == 1;
}

namespace {

// Shared scanner for literals and expressions.
struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  std::uint64_t number() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("expected a number in ordinal at position " + std::to_string(pos));
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      ++pos;
    }
    return v;
  }
};

Ordinal parse_literal(Scanner& sc);

// term := 'w' ['^' (nat | '(' literal ')')] ['*' nat] | nat
Ordinal::Term parse_literal_term(Scanner& sc) {
  Ordinal::Term t;
  if (sc.eat('w')) {
    t.exponent = Ordinal::nat(1);
    if (sc.eat('^')) {
      if (sc.eat('(')) {
        t.exponent = parse_literal(sc);
        if (!sc.eat(')')) throw ParseError("missing ')' in ordinal exponent");
      } else {
        t.exponent = Ordinal::nat(sc.number());
      }
    }
    if (sc.eat('*')) t.coeff = sc.number();
  } else {
    t.exponent = Ordinal{};
    t.coeff = sc.number();
  }
  if (t.coeff == 0) throw ParseError("ordinal coefficients must be >= 1");
  return t;
}

Ordinal parse_literal(Scanner& sc) {
  Ordinal out;
  out.terms.push_back(parse_literal_term(sc));
  while (sc.eat('+')) out.terms.push_back(parse_literal_term(sc));
  for (std::size_t i = 1; i < out.terms.size(); ++i) {
    if (ord_cmp(out.terms[i - 1].exponent, out.terms[i].exponent) != OrdCmp::Greater)
      throw ParseError("non-canonical ordinal literal: exponents must strictly decrease");
  }
  return out;
}

}  // namespace

Ordinal parse_ordinal(const std::string& text) {
  Scanner sc{text};
  if (sc.peek() == '0') {
    ++sc.pos;
    sc.skip_ws();
    if (sc.pos == text.size()) return Ordinal{};
    throw ParseError("unexpected input after 0");
  }
  Ordinal v = parse_literal(sc);
  sc.skip_ws();
  if (sc.pos != text.size())
    throw ParseError("unexpected trailing input in ordinal literal at position " +
                     std::to_string(sc.pos));
  return v;
}

namespace {

Ordinal eval_expr(Scanner& sc);

Ordinal eval_atom(Scanner& sc) {
  if (sc.eat('(')) {
    Ordinal v = eval_expr(sc);
    if (!sc.eat(')')) throw ParseError("missing ')' in ordinal expression");
    return v;
  }
  if (sc.eat('w')) return Ordinal::omega();
  return Ordinal::nat(sc.number());
}

Ordinal eval_pow(Scanner& sc) {
  Ordinal base = eval_atom(sc);
  if (!sc.eat('^')) return base;
  Ordinal expo = eval_pow(sc);  // right associative
  if (ord_eq(base, Ordinal::omega())) return ord_omega_pow(expo);
  if (base.is_finite() && expo.is_finite()) {
    std::uint64_t b = base.finite_value(), e = expo.finite_value(), v = 1;
    for (std::uint64_t i = 0; i < e; ++i) v *= b;
    return Ordinal::nat(v);
  }
  throw ParseError("exponentiation is supported for base w only");
}

Ordinal eval_prod(Scanner& sc) {
  Ordinal v = eval_pow(sc);
  while (sc.eat('*')) v = ord_mul(v, eval_pow(sc));
  return v;
}

Ordinal eval_expr(Scanner& sc) {
  Ordinal v = eval_prod(sc);
  while (sc.eat('+')) v = ord_add(v, eval_prod(sc));
  return v;
}

}  // namespace

Ordinal eval_ordinal_expr(const std::string& text) {
  Scanner sc{text};
  Ordinal v = eval_expr(sc);
  sc.skip_ws();
  if (sc.pos != text.size())
    throw ParseError("unexpected trailing input in ordinal expression at position " +
                     std::to_string(sc.pos));
  return v;
}

namespace {

void print_term(const Ordinal::Term& t, std::string& out) {
  if (t.exponent.is_zero()) {
    out += std::to_string(t.coeff);
    return;
  }
  out += "w";
  if (!ord_eq(t.exponent, Ordinal::nat(1))) {
    if (t.exponent.is_finite()) {
      out += "^" + std::to_string(t.exponent.finite_value());
    } else {
      out += "^(" + to_string(t.exponent) + ")";
    }
  }
  if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
}

}  // namespace

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (i) out += " + ";
    print_term(a.terms[i], out);
  }
  return out;
}

MindChangeCheck validate_mind_change(const std::vector<MindChangeStep>& steps) {
  if (steps.empty()) return {};
  if (steps[0].value != 0) return {false, 0, "first value must be 0"};
  for (std::size_t i = 1; i < steps.size(); ++i) {
    OrdCmp c = ord_cmp(steps[i].mark, steps[i - 1].mark);
    if (c == OrdCmp::Greater) return {false, i, "mark increased"};
    if (steps[i].value != steps[i - 1].value && c != OrdCmp::Less)
      return {false, i, "value changed without a strict mark decrease"};
  }
  return {};
}

}  // namespace latkit
