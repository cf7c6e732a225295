#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latkit {

/// Ordinal below epsilon_0 in Cantor normal form:
///   w^e1*c1 + w^e2*c2 + ... + w^ek*ck
/// with e1 > e2 > ... > ek (exponents are themselves ordinals) and ci >= 1.
/// Zero is the empty term list; the natural number n is w^0*n.
struct Ordinal {
  struct Term;
  std::vector<Term> terms;

  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();

  bool is_zero() const { return terms.empty(); }
  bool is_finite() const;
  std::uint64_t finite_value() const;  // pre: is_finite()
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coeff = 1;
};

enum class OrdCmp { Less, Equal, Greater };

OrdCmp ord_cmp(const Ordinal& a, const Ordinal& b);

inline bool ord_eq(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) == OrdCmp::Equal; }
inline bool ord_lt(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) == OrdCmp::Less; }
inline bool ord_le(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) != OrdCmp::Greater; }

/// Standard (non-commutative) ordinal sum, in canonical form.
Ordinal ord_add(const Ordinal& a, const Ordinal& b);

/// Standard ordinal product, in canonical form.
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);

/// w^a as a single canonical term.
Ordinal ord_omega_pow(const Ordinal& a);

/// True iff a = w^b for some b (single term, coefficient 1). 1 = w^0 counts.
bool is_power_of_omega(const Ordinal& a);

/// Literal syntax: `w^(E)*c` terms joined by `+`, e.g. "w^2*3 + w + 1", "w^(w)".
/// Rejects non-canonical input (bad exponent order, zero coefficients).
Ordinal parse_ordinal(const std::string& text);

/// Arithmetic expressions over ordinals with +, *, ^ and parentheses,
/// e.g. "w*2*w" evaluates to w^2. `^` requires base w (or finite base with
/// finite exponent).
Ordinal eval_ordinal_expr(const std::string& text);

std::string to_string(const Ordinal& a);

/// One stage of a computable approximation for a fixed argument: the guessed
/// value plus the ordinal mind-change mark.
struct MindChangeStep {
  std::int64_t value = 0;
  Ordinal mark;
};

struct MindChangeCheck {
  bool valid = true;
  std::size_t violation_index = 0;
  std::string reason;
};

/// Checks the three stepwise conditions on a mind-change sequence:
/// first value 0, marks non-increasing, value changes force strict decrease.
/// Violations are reported with the first offending index, never thrown.
MindChangeCheck validate_mind_change(const std::vector<MindChangeStep>& steps);

}  // namespace latkit
