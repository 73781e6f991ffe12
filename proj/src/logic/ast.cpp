#include "ast.hpp"

#include <algorithm>

namespace cyclo::logic {

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::object: return "O";
    case Sort::arrow: return "A";
    case Sort::group: return "G";
  }
  return "?";
}

TermPtr Term::make_var(std::string name, Sort sort) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::var;
  t->sort = sort;
  t->var = std::move(name);
  return t;
}

TermPtr Term::apply(TermKind fn, std::vector<TermPtr> args, IntExpr exp) {
  auto t = std::make_shared<Term>();
  t->kind = fn;
  t->args = std::move(args);
  t->exp = exp;
  switch (fn) {
    case TermKind::dom:
    case TermKind::cod:
      t->sort = Sort::object;
      break;
    case TermKind::id:
    case TermKind::cyc:
      t->sort = Sort::arrow;
      break;
    case TermKind::one:
      t->sort = Sort::group;
      break;
    case TermKind::inv:
    case TermKind::pow:
      t->sort = t->args.at(0)->sort;
      break;
    case TermKind::comp:
      t->sort = Sort::arrow;
      break;
    case TermKind::mul:
      t->sort = Sort::group;
      break;
    case TermKind::var:
      fail(Errc::invalid_argument, "apply cannot build a variable");
  }
  return t;
}

FormulaPtr Formula::truth_() {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::truth;
  return f;
}

FormulaPtr Formula::falsity_() {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::falsity;
  return f;
}

FormulaPtr Formula::eq(TermPtr a, TermPtr b) {
  require(a->sort == b->sort, Errc::sort_mismatch, "equality across sorts");
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::eq;
  f->terms = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::neq_(TermPtr a, TermPtr b) {
  require(a->sort == b->sort, Errc::sort_mismatch, "inequality across sorts");
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::neq;
  f->terms = {std::move(a), std::move(b)};
  return f;
}

FormulaPtr Formula::pred_(std::string name, std::vector<TermPtr> args) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::pred;
  f->pred = std::move(name);
  f->terms = std::move(args);
  return f;
}

FormulaPtr Formula::conj_(std::vector<FormulaPtr> children) {
  if (children.empty()) return truth_();
  if (children.size() == 1) return children[0];
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::conj;
  f->children = std::move(children);
  return f;
}

FormulaPtr Formula::disj_(std::vector<FormulaPtr> children) {
  if (children.empty()) return falsity_();
  if (children.size() == 1) return children[0];
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::disj;
  f->children = std::move(children);
  return f;
}

FormulaPtr Formula::exists_(std::vector<std::pair<std::string, Sort>> binders, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::exists;
  f->binders = std::move(binders);
  f->body = std::move(body);
  return f;
}

FormulaPtr Formula::indexed_or_(std::string ivar, IntExpr lo, IntExpr hi, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::indexed_or;
  f->ivar = std::move(ivar);
  f->lo = lo;
  f->hi = hi;
  f->body = std::move(body);
  return f;
}

FormulaPtr Formula::macro_(MacroApp app) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::macro;
  f->macro = std::move(app);
  return f;
}

namespace {

std::string print_int_expr(const IntExpr& e) {
  switch (e.kind) {
    case IntExpr::Kind::lit: return std::to_string(e.lit);
    case IntExpr::Kind::var: return e.var;
    case IntExpr::Kind::neg_var: return "-" + e.var;
    case IntExpr::Kind::bound_sym: return "B";
  }
  return "?";
}

const char* macro_str(MacroName m) {
  switch (m) {
    case MacroName::L: return "L";
    case MacroName::Phi: return "Phi";
    case MacroName::Psi: return "Psi";
    case MacroName::PMin: return "PMin";
    case MacroName::Gen: return "Gen";
    case MacroName::DomEq: return "DomEq";
  }
  return "?";
}

std::string print_operand(const Term& t) {
  const std::string s = print_term(t);
  if (t.kind == TermKind::comp || t.kind == TermKind::mul) return "(" + s + ")";
  return s;
}

bool atomic_formula(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::truth:
    case FormulaKind::falsity:
    case FormulaKind::eq:
    case FormulaKind::neq:
    case FormulaKind::pred:
    case FormulaKind::macro:
      return true;
    default:
      return false;
  }
}

std::string print_child(const Formula& f) {
  const std::string s = print_formula(f);
  return atomic_formula(f) ? s : "(" + s + ")";
}

}  // namespace

std::string print_term(const Term& t) {
  switch (t.kind) {
    case TermKind::var: return t.var;
    case TermKind::dom: return "dom(" + print_term(*t.args[0]) + ")";
    case TermKind::cod: return "cod(" + print_term(*t.args[0]) + ")";
    case TermKind::id: return "id(" + print_term(*t.args[0]) + ")";
    case TermKind::inv: return "inv(" + print_term(*t.args[0]) + ")";
    case TermKind::cyc: return "C(" + print_term(*t.args[0]) + ")";
    case TermKind::pow:
      return "pow(" + print_term(*t.args[0]) + ", " + print_int_expr(t.exp) + ")";
    case TermKind::one: return "one";
    case TermKind::comp:
      return print_operand(*t.args[0]) + " o " + print_operand(*t.args[1]);
    case TermKind::mul:
      return print_operand(*t.args[0]) + " * " + print_operand(*t.args[1]);
  }
  return "?";
}

std::string print_formula(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::truth: return "true";
    case FormulaKind::falsity: return "false";
    case FormulaKind::eq: return print_term(*f.terms[0]) + " = " + print_term(*f.terms[1]);
    case FormulaKind::neq: return print_term(*f.terms[0]) + " != " + print_term(*f.terms[1]);
    case FormulaKind::pred: {
      std::string s = f.pred + "(";
      for (size_t i = 0; i < f.terms.size(); ++i)
        s += (i ? ", " : "") + print_term(*f.terms[i]);
      return s + ")";
    }
    case FormulaKind::conj: {
      std::string s;
      for (size_t i = 0; i < f.children.size(); ++i)
        s += (i ? " /\\ " : "") + print_child(*f.children[i]);
      return s;
    }
    case FormulaKind::disj: {
      std::string s;
      for (size_t i = 0; i < f.children.size(); ++i)
        s += (i ? " \\/ " : "") + print_child(*f.children[i]);
      return s;
    }
    case FormulaKind::exists: {
      std::string s = "exists ";
      for (size_t i = 0; i < f.binders.size(); ++i)
        s += (i ? ", " : "") + f.binders[i].first + ":" + sort_name(f.binders[i].second);
      return s + " . " + print_child(*f.body);
    }
    case FormulaKind::indexed_or:
      return "OR " + f.ivar + " in " + print_int_expr(f.lo) + ".." + print_int_expr(f.hi) +
             " . " + print_child(*f.body);
    case FormulaKind::macro: {
      std::string s = macro_str(f.macro.name);
      if (f.macro.name != MacroName::PMin) s += "_" + std::to_string(f.macro.param);
      s += "(";
      for (size_t g = 0; g < f.macro.groups.size(); ++g) {
        if (g) s += "; ";
        for (size_t i = 0; i < f.macro.groups[g].size(); ++i)
          s += (i ? ", " : "") + print_term(*f.macro.groups[g][i]);
      }
      return s + ")";
    }
  }
  return "?";
}

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.context.size(); ++i)
    out += (i ? ", " : "") + s.context[i].first + ":" + sort_name(s.context[i].second);
  if (s.antecedent->kind != FormulaKind::truth) {
    if (!out.empty()) out += " ";
    out += "| " + print_formula(*s.antecedent) + " ";
  } else if (!out.empty()) {
    out += " ";
  }
  out += "|- " + print_formula(*s.consequent);
  return out;
}

std::vector<FormulaPtr> conjuncts_of(const FormulaPtr& f) {
  std::vector<FormulaPtr> out;
  if (f->kind == FormulaKind::truth) return out;
  if (f->kind == FormulaKind::conj) {
    for (const auto& c : f->children) {
      auto sub = conjuncts_of(c);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  out.push_back(f);
  return out;
}

void collect_vars(const TermPtr& t, std::vector<std::string>& out) {
  if (t->kind == TermKind::var) {
    if (std::find(out.begin(), out.end(), t->var) == out.end()) out.push_back(t->var);
    return;
  }
  for (const auto& a : t->args) collect_vars(a, out);
}

void collect_vars(const FormulaPtr& f, std::vector<std::string>& out) {
  for (const auto& t : f->terms) collect_vars(t, out);
  for (const auto& c : f->children) collect_vars(c, out);
  for (const auto& grp : f->macro.groups)
    for (const auto& t : grp) collect_vars(t, out);
  if (f->body) {
    std::vector<std::string> inner;
    collect_vars(f->body, inner);
    for (const auto& v : inner) {
      bool bound = false;
      for (const auto& b : f->binders) bound = bound || b.first == v;
      if (!bound && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
}

}  // namespace cyclo::logic
