#ifndef SUPERMALCEV_FORMULA_HPP
#define SUPERMALCEV_FORMULA_HPP

#include <algorithm>
#include <cctype>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"
#include "parity.hpp"

namespace supermalcev {

struct Formula;

/// Product tree over the slots of a formula.
///   slot     -> the slot's argument
///   alpha    -> alpha^power applied to args[0]
///   product  -> args[0] * args[1]
///   call     -> another formula (Jacobian, G) applied to args
struct Expr {
  enum class Kind { slot, alpha, product, call };
  Kind kind = Kind::slot;
  int slot = -1;
  unsigned power = 0;
  const Formula* callee = nullptr;
  std::vector<Expr> args;
};

/// coeff * (-1)^{sign} * expr. The source strings are kept for audit output.
struct Term {
  int coeff = 1;
  PairSet sign;
  Expr expr;
  std::string sign_text;
  std::string expr_text;
};

/// Signed sum of terms over named slots (e.g. "wxyz").
struct Formula {
  std::string name;
  std::string slots;
  std::vector<Term> terms;
  bool multilinear = false;  // every term uses each slot exactly once

  int arity() const { return static_cast<int>(slots.size()); }
};

/// Resolves a call name ("HJ", "J", "G") to a formula.
using FormulaLookup = std::function<const Formula*(std::string_view)>;

/// Parses the expression language used by the identity registry:
///   seq     := primary { primary }            juxtaposition = product, left-assoc
///   primary := slot-letter | "(" seq ")" | "A(" seq ")" | "A2(" seq ")"
///            | NAME "(" seq { "," seq } ")"   NAME resolved through `lookup`
/// Slot letters are lowercase; names and A/A2 are uppercase.
class ExprParser {
 public:
  ExprParser(std::string_view text, std::string_view slots, FormulaLookup lookup)
      : text_(text), slots_(slots), lookup_(std::move(lookup)) {}

  Expr parse() {
    Expr e = seq();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("expression \"" + std::string(text_) + "\" at " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  bool at_primary() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Expr seq() {
    if (!at_primary()) fail("expected operand");
    Expr acc = primary();
    while (at_primary()) {
      Expr rhs = primary();
      Expr prod;
      prod.kind = Expr::Kind::product;
      prod.args = {std::move(acc), std::move(rhs)};
      acc = std::move(prod);
    }
    return acc;
  }

  Expr primary() {
    skip_ws();
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = seq();
      expect(')');
      return inner;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      const auto idx = slots_.find(c);
      if (idx == std::string_view::npos) fail(std::string("unknown slot '") + c + "'");
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::slot;
      e.slot = static_cast<int>(idx);
      return e;
    }
    std::size_t end = pos_;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    const std::string_view name = text_.substr(pos_, end - pos_);
    pos_ = end;
    expect('(');
    std::vector<Expr> args{seq()};
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      args.push_back(seq());
      skip_ws();
    }
    expect(')');
    Expr e;
    if (name == "A" || name == "A2") {
      if (args.size() != 1) fail("alpha takes one argument");
      e.kind = Expr::Kind::alpha;
      e.power = name == "A" ? 1 : 2;
    } else {
      const Formula* f = lookup_ ? lookup_(name) : nullptr;
      if (f == nullptr) fail("unknown function '" + std::string(name) + "'");
      if (static_cast<int>(args.size()) != f->arity()) fail("wrong arity for '" + std::string(name) + "'");
      e.kind = Expr::Kind::call;
      e.callee = f;
    }
    e.args = std::move(args);
    return e;
  }

  std::string_view text_;
  std::string_view slots_;
  FormulaLookup lookup_;
  std::size_t pos_ = 0;
};

/// One row of a formula definition: {coefficient, sign exponent, expression}.
struct TermSpec {
  int coeff;
  std::string_view sign;
  std::string_view expr;
};

inline void count_slot_uses(const Expr& e, std::vector<int>& uses) {
  if (e.kind == Expr::Kind::slot) {
    ++uses[static_cast<std::size_t>(e.slot)];
    return;
  }
  for (const auto& a : e.args) count_slot_uses(a, uses);
}

inline Formula make_formula(std::string name, std::string slots, std::initializer_list<TermSpec> rows,
                            const FormulaLookup& lookup) {
  Formula f{std::move(name), std::move(slots), {}};
  for (const auto& r : rows) {
    Term t;
    t.coeff = r.coeff;
    t.sign = parse_exponent(r.sign, f.slots);
    t.expr = ExprParser(r.expr, f.slots, lookup).parse();
    t.sign_text = std::string(r.sign);
    t.expr_text = std::string(r.expr);
    f.terms.push_back(std::move(t));
  }
  f.multilinear = std::all_of(f.terms.begin(), f.terms.end(), [&](const Term& t) {
    std::vector<int> uses(f.slots.size());
    count_slot_uses(t.expr, uses);
    return std::all_of(uses.begin(), uses.end(), [](int u) { return u == 1; });
  });
  return f;
}

/// Structural parity: every leaf contributes its slot parity once.
inline Parity structural_parity(const Expr& e, std::span<const Parity> slot_parity) {
  if (e.kind == Expr::Kind::slot) return slot_parity[e.slot];
  Parity p;
  for (const auto& a : e.args) p = p + structural_parity(a, slot_parity);
  return p;
}

Element evaluate_formula(const Formula& f, const SuperAlgebra& alg, std::span<const Element> args,
                         std::span<const Parity> parities);

inline Element evaluate_expr(const Expr& e, const SuperAlgebra& alg, std::span<const Element> args,
                             std::span<const Parity> parities) {
  switch (e.kind) {
    case Expr::Kind::slot:
      return args[e.slot];
    case Expr::Kind::alpha: {
      Element inner = evaluate_expr(e.args[0], alg, args, parities);
      if (inner.is_zero()) return inner;
      return alg.apply_alpha(inner, e.power);
    }
    case Expr::Kind::product: {
      Element lhs = evaluate_expr(e.args[0], alg, args, parities);
      if (lhs.is_zero()) return lhs;
      Element rhs = evaluate_expr(e.args[1], alg, args, parities);
      if (rhs.is_zero()) return rhs;
      return alg.multiply(lhs, rhs);
    }
    case Expr::Kind::call: {
      std::vector<Element> inner;
      std::vector<Parity> inner_parity;
      inner.reserve(e.args.size());
      inner_parity.reserve(e.args.size());
      for (const auto& a : e.args) {
        inner.push_back(evaluate_expr(a, alg, args, parities));
        // A multilinear callee vanishes when any argument does.
        if (e.callee->multilinear && inner.back().is_zero()) return alg.zero();
        inner_parity.push_back(structural_parity(a, parities));
      }
      return evaluate_formula(*e.callee, alg, inner, inner_parity);
    }
  }
  return alg.zero();
}

/// Sum of coeff * koszul_sign * value over the terms, with the given slot
/// parities. Arguments are assumed homogeneous of those parities.
inline Element evaluate_formula(const Formula& f, const SuperAlgebra& alg, std::span<const Element> args,
                                std::span<const Parity> parities) {
  Element out = alg.zero();
  for (const auto& t : f.terms) {
    const int s = koszul_sign(t.sign, parities);
    const Element v = evaluate_expr(t.expr, alg, args, parities);
    out.add_scaled(Rational(t.coeff * s), v);
  }
  return out;
}

}  // namespace supermalcev

#endif  // SUPERMALCEV_FORMULA_HPP
