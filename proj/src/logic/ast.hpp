#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "../error.hpp"

namespace cyclo::logic {

enum class Sort : uint8_t { object, arrow, group };

const char* sort_name(Sort s);

/// Integer expression in exponent or range position: a literal, a (possibly
/// negated) index variable, or the symbolic index bound supplied at check
/// time.
struct IntExpr {
  enum class Kind : uint8_t { lit, var, neg_var, bound_sym };
  Kind kind = Kind::lit;
  int64_t lit = 0;
  std::string var;

  static IntExpr literal(int64_t v) { return IntExpr{Kind::lit, v, {}}; }
  static IntExpr variable(std::string name, bool negated) {
    return IntExpr{negated ? Kind::neg_var : Kind::var, 0, std::move(name)};
  }
  static IntExpr bound() { return IntExpr{Kind::bound_sym, 0, {}}; }
};

enum class TermKind : uint8_t { var, dom, cod, id, inv, comp, cyc, pow, one, mul };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind = TermKind::var;
  Sort sort = Sort::arrow;
  std::string var;            // kind == var
  std::vector<TermPtr> args;  // function arguments; comp/mul: {later, earlier}
  IntExpr exp;                // kind == pow

  static TermPtr make_var(std::string name, Sort sort);
  static TermPtr apply(TermKind fn, std::vector<TermPtr> args, IntExpr exp = IntExpr::literal(0));
};

enum class FormulaKind : uint8_t {
  truth,
  falsity,
  eq,
  neq,
  pred,
  conj,
  disj,
  exists,
  indexed_or,
  macro
};

enum class MacroName : uint8_t { L, Phi, Psi, PMin, Gen, DomEq };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// A macro atom keeps its name and argument groups so corpora stay compact
/// and structures may evaluate it natively; expansion recovers the plain
/// formula.
struct MacroApp {
  MacroName name = MacroName::L;
  int64_t param = 0;                         // subscript; 0 for PMin
  std::vector<std::vector<TermPtr>> groups;  // argument groups split by ';'
};

struct Formula {
  FormulaKind kind = FormulaKind::truth;
  std::string pred;                 // kind == pred: "P" or "T"
  std::vector<TermPtr> terms;       // eq/neq/pred arguments
  std::vector<FormulaPtr> children; // conj/disj
  std::vector<std::pair<std::string, Sort>> binders;  // exists
  std::string ivar;                 // indexed_or
  IntExpr lo, hi;                   // indexed_or range
  FormulaPtr body;                  // exists / indexed_or
  MacroApp macro;                   // kind == macro

  static FormulaPtr truth_();
  static FormulaPtr falsity_();
  static FormulaPtr eq(TermPtr a, TermPtr b);
  static FormulaPtr neq_(TermPtr a, TermPtr b);
  static FormulaPtr pred_(std::string name, std::vector<TermPtr> args);
  static FormulaPtr conj_(std::vector<FormulaPtr> children);
  static FormulaPtr disj_(std::vector<FormulaPtr> children);
  static FormulaPtr exists_(std::vector<std::pair<std::string, Sort>> binders, FormulaPtr body);
  static FormulaPtr indexed_or_(std::string ivar, IntExpr lo, IntExpr hi, FormulaPtr body);
  static FormulaPtr macro_(MacroApp app);
};

struct Sequent {
  std::string label;
  std::vector<std::pair<std::string, Sort>> context;
  FormulaPtr antecedent;
  FormulaPtr consequent;
};

std::string print_term(const Term& t);
std::string print_formula(const Formula& f);
std::string print_sequent(const Sequent& s);

/// Flattens nested conjunctions into a conjunct list (truth vanishes).
std::vector<FormulaPtr> conjuncts_of(const FormulaPtr& f);

/// Free variables of a term, appended in first-use order.
void collect_vars(const TermPtr& t, std::vector<std::string>& out);
void collect_vars(const FormulaPtr& f, std::vector<std::string>& out);

}  // namespace cyclo::logic
