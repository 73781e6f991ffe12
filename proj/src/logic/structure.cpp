#include "structure.hpp"

#include <algorithm>

namespace cyclo::logic {

std::string value_str(const Value& v) {
  switch (v.sort) {
    case Sort::object: return "x" + std::to_string(v.a);
    case Sort::arrow: return std::to_string(v.b) + "@" + std::to_string(v.a);
    case Sort::group: return v.q.str();
  }
  return "?";
}

std::vector<Value> Structure::arrows_from(int64_t obj, int64_t disp_bound,
                                          bool positive_only) const {
  (void)obj;
  (void)disp_bound;
  (void)positive_only;
  return {};
}

bool GroupoidStructure::supports_function(TermKind fn) const {
  switch (fn) {
    case TermKind::dom:
    case TermKind::cod:
    case TermKind::id:
    case TermKind::inv:
    case TermKind::comp:
    case TermKind::cyc:
    case TermKind::pow:
      return true;
    default:
      return false;
  }
}

std::vector<Value> GroupoidStructure::domain(Sort s, const Bounds& bounds,
                                             bool* exhaustive) const {
  std::vector<Value> out;
  if (s == Sort::object) {
    *exhaustive = true;
    for (int64_t i = 0; i < g_.n; ++i) out.push_back(Value::object(i));
    return out;
  }
  require(s == Sort::arrow, Errc::signature_mismatch, "group sort on a groupoid model");
  *exhaustive = false;  // hom-sets are infinite
  for (const Arrow& f : enumerate_arrows(g_, bounds.arrow_disp))
    out.push_back(Value::arrow(f.src, f.disp));
  return out;
}

std::vector<Value> GroupoidStructure::arrows_from(int64_t obj, int64_t disp_bound,
                                                  bool positive_only) const {
  std::vector<Value> out;
  for (int64_t d = positive_only ? 0 : -disp_bound; d <= disp_bound; ++d)
    out.push_back(Value::arrow(obj, d));
  return out;
}

std::optional<Value> GroupoidStructure::apply_func(TermKind fn, const std::vector<Value>& args,
                                                   int64_t exp) const {
  const auto arr = [&](const Value& v) { return Arrow{g_.n, v.a, v.b}; };
  switch (fn) {
    case TermKind::dom: return Value::object(args[0].a);
    case TermKind::cod: return Value::object(cod(arr(args[0])));
    case TermKind::id: return Value::arrow(args[0].a, 0);
    case TermKind::cyc: return Value::arrow(args[0].a, g_.n);
    case TermKind::inv: {
      const Arrow r = inverse(arr(args[0]));
      return Value::arrow(r.src, r.disp);
    }
    case TermKind::comp: {
      const Arrow g = arr(args[0]), f = arr(args[1]);
      if (cod(f) != g.src) return std::nullopt;  // undefined composition
      return Value::arrow(f.src, f.disp + g.disp);
    }
    case TermKind::pow: {
      const Arrow f = arr(args[0]);
      if (cod(f) != f.src) return std::nullopt;  // powers of endomorphisms only
      return Value::arrow(f.src, f.disp * exp);
    }
    default:
      return std::nullopt;
  }
}

bool GroupoidStructure::holds(const std::string& pred, const std::vector<Value>& args) const {
  if (pred == "P") return args[0].b >= 0;
  if (pred == "T") {
    const Arrow f{g_.n, args[0].a, args[0].b};
    return classify(f).is_nontrivial;
  }
  fail(Errc::signature_mismatch, "unknown predicate " + pred);
}

namespace {

Loop to_loop(const Groupoid& g, const std::vector<Value>& vals) {
  Loop out;
  out.reserve(vals.size());
  for (const Value& v : vals) out.push_back(Arrow{g.n, v.a, v.b});
  return out;
}

}  // namespace

std::optional<bool> GroupoidStructure::eval_macro(
    const MacroApp& app, const std::vector<std::vector<Value>>& groups) const {
  switch (app.name) {
    case MacroName::L:
      return classify_loop(to_loop(g_, groups[0])).is_loop;
    case MacroName::Phi:
      return classify_loop(to_loop(g_, groups[0])).is_phi;
    case MacroName::Psi:
      return classify_loop(to_loop(g_, groups[0])).is_psi;
    case MacroName::PMin: {
      // positive and completable to the elementary cycle by a positive arrow
      const int64_t d = groups[0][0].b;
      return d >= 0 && d <= g_.n;
    }
    case MacroName::Gen: {
      const Loop z = to_loop(g_, groups.back());
      const Loop x = to_loop(g_, groups[0]);
      std::optional<Loop> y;
      if (groups.size() == 3) y = to_loop(g_, groups[1]);
      return generates(z, x, y);
    }
    case MacroName::DomEq: {
      std::vector<int64_t> doms;
      for (const auto& grp : groups)
        for (const Value& v : grp) doms.push_back(v.a);
      int64_t nonunique = 0;
      for (size_t i = 0; i < doms.size(); ++i) {
        bool dup = false;
        for (size_t j = 0; j < doms.size(); ++j) dup = dup || (i != j && doms[i] == doms[j]);
        if (dup) ++nonunique;
      }
      return nonunique >= app.param;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Value>> GroupoidStructure::witness_candidates(
    const Formula& exists_node, const std::vector<std::pair<std::string, Value>>& env) const {
  // Pattern: the body contains a Gen atom whose generator group is exactly
  // the bound tuple and whose targets are already assigned. Candidates: the
  // distinct-domain walk through the targets' objects, padded with
  // identities to the bound arity.
  const auto find_gen = [&](const FormulaPtr& f, auto&& self) -> const MacroApp* {
    if (f->kind == FormulaKind::macro && f->macro.name == MacroName::Gen) return &f->macro;
    if (f->kind == FormulaKind::conj)
      for (const auto& c : f->children)
        if (const MacroApp* m = self(c, self)) return m;
    return nullptr;
  };
  const MacroApp* gen = find_gen(exists_node.body, find_gen);
  if (!gen) return {};
  const size_t arity = exists_node.binders.size();
  if (gen->groups.back().size() != arity) return {};
  for (size_t i = 0; i < arity; ++i) {
    const TermPtr& t = gen->groups.back()[i];
    if (t->kind != TermKind::var || t->var != exists_node.binders[i].first) return {};
  }
  const auto lookup = [&](const std::string& v) -> const Value* {
    for (const auto& [name, val] : env)
      if (name == v) return &val;
    return nullptr;
  };
  std::vector<int64_t> objects;  // domains of the target arrows
  int64_t base = -1;
  for (size_t g = 0; g + 1 < gen->groups.size(); ++g)
    for (size_t i = 0; i < gen->groups[g].size(); ++i) {
      const TermPtr& t = gen->groups[g][i];
      if (t->kind != TermKind::var) return {};
      const Value* v = lookup(t->var);
      if (!v || v->sort != Sort::arrow) return {};
      if (g == 0 && i == 0) base = v->a;
      objects.push_back(v->a);
    }
  if (base < 0) return {};
  std::sort(objects.begin(), objects.end(), [&](int64_t a, int64_t b) {
    return floor_mod(a - base, g_.n) < floor_mod(b - base, g_.n);
  });
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  if (objects.size() > arity) return {};

  std::vector<Value> walk;
  if (objects.size() == 1) {
    walk.push_back(Value::arrow(base, g_.n));
  } else {
    for (size_t t = 0; t < objects.size(); ++t) {
      const int64_t from = objects[t];
      const int64_t to = objects[(t + 1) % objects.size()];
      walk.push_back(Value::arrow(from, floor_mod(to - from, g_.n)));
    }
  }
  while (walk.size() < arity) walk.push_back(Value::arrow(base, 0));  // pad with identities
  return {std::move(walk)};
}

bool SubgroupStructure::supports_function(TermKind fn) const {
  switch (fn) {
    case TermKind::inv:
    case TermKind::mul:
    case TermKind::one:
    case TermKind::pow:
      return true;
    default:
      return false;
  }
}

std::string SubgroupStructure::name() const {
  std::string s = "H(scale=" + h_.scale().str();
  if (!h_.heights().empty()) s += ";" + h_.heights_str();
  return s + ")";
}

std::vector<Value> SubgroupStructure::domain(Sort s, const Bounds& bounds,
                                             bool* exhaustive) const {
  require(s == Sort::group, Errc::signature_mismatch, "groupoid sort on a group model");
  *exhaustive = false;  // the group is infinite
  std::vector<Value> out;
  for (const Rat& q : h_.sample_elements(std::max<int64_t>(1, bounds.arrow_disp)))
    out.push_back(Value::group(q));
  return out;
}

std::optional<Value> SubgroupStructure::apply_func(TermKind fn, const std::vector<Value>& args,
                                                   int64_t exp) const {
  switch (fn) {
    case TermKind::one: return Value::group(Rat(0));
    case TermKind::inv: return Value::group(-args[0].q);
    case TermKind::mul: return Value::group(args[0].q + args[1].q);
    case TermKind::pow: return Value::group(Rat(exp) * args[0].q);
    default:
      return std::nullopt;
  }
}

bool SubgroupStructure::holds(const std::string& pred, const std::vector<Value>& args) const {
  if (pred == "P") return args[0].q.sign() >= 0;
  fail(Errc::signature_mismatch, "unknown predicate " + pred);
}

std::vector<std::vector<Value>> SubgroupStructure::witness_candidates(
    const Formula& exists_node, const std::vector<std::pair<std::string, Value>>& env) const {
  // Pattern: ... /\ u = pow(z, n) /\ v = pow(z, m) with z the bound variable;
  // offer the common generator of the assigned positive sides.
  if (exists_node.binders.size() != 1 || exists_node.binders[0].second != Sort::group) return {};
  const std::string& zvar = exists_node.binders[0].first;
  std::vector<Rat> sides;
  const auto scan = [&](const FormulaPtr& f, auto&& self) -> void {
    if (f->kind == FormulaKind::conj || f->kind == FormulaKind::indexed_or) {
      for (const auto& c : f->children) self(c, self);
      if (f->body) self(f->body, self);
      return;
    }
    if (f->kind != FormulaKind::eq) return;
    const TermPtr& lhs = f->terms[0];
    const TermPtr& rhs = f->terms[1];
    if (rhs->kind != TermKind::pow || rhs->args[0]->kind != TermKind::var ||
        rhs->args[0]->var != zvar || lhs->kind != TermKind::var)
      return;
    for (const auto& [name, val] : env)
      if (name == lhs->var && val.sort == Sort::group && val.q.sign() > 0)
        sides.push_back(val.q);
  };
  scan(exists_node.body, scan);
  std::vector<std::vector<Value>> out;
  if (sides.size() == 2) {
    try {
      out.push_back({Value::group(common_generator(h_, sides[0], sides[1]).z)});
    } catch (const Error&) {
    }
  }
  for (const Rat& s : sides) out.push_back({Value::group(s)});
  return out;
}

}  // namespace cyclo::logic
