#include "checker.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "macros.hpp"

namespace cyclo::logic {

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::holds: return "Holds";
    case VerdictKind::holds_up_to_bound: return "HoldsUpToBound";
    case VerdictKind::fails: return "Fails";
    case VerdictKind::unknown_at_bound: return "UnknownAtBound";
  }
  return "?";
}

VerdictKind merge_verdicts(VerdictKind a, VerdictKind b) {
  const auto rank = [](VerdictKind k) {
    switch (k) {
      case VerdictKind::fails: return 3;
      case VerdictKind::unknown_at_bound: return 2;
      case VerdictKind::holds_up_to_bound: return 1;
      case VerdictKind::holds: return 0;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

namespace {

enum class Tri : uint8_t { f_def, f_bound, t };

struct Env {
  std::vector<std::pair<std::string, Value>> vals;
  std::vector<std::pair<std::string, int64_t>> ints;

  const Value* find(const std::string& name) const {
    for (auto it = vals.rbegin(); it != vals.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }
  int64_t find_int(const std::string& name) const {
    for (auto it = ints.rbegin(); it != ints.rend(); ++it)
      if (it->first == name) return it->second;
    fail(Errc::unknown_name, "unbound index variable " + name);
  }
};

constexpr uint64_t kSearchBudget = 4'000'000;

class Evaluator {
 public:
  Evaluator(const Structure& st, const Bounds& bounds) : st_(st), bounds_(bounds) {}

  int64_t resolve(const IntExpr& e, const Env& env) const {
    switch (e.kind) {
      case IntExpr::Kind::lit: return e.lit;
      case IntExpr::Kind::var: return env.find_int(e.var);
      case IntExpr::Kind::neg_var: return -env.find_int(e.var);
      case IntExpr::Kind::bound_sym: return bounds_.index;
    }
    return 0;
  }

  std::optional<Value> eval_term(const TermPtr& t, const Env& env) const {
    if (t->kind == TermKind::var) {
      const Value* v = env.find(t->var);
      require(v != nullptr, Errc::unknown_name, "unbound variable " + t->var);
      return *v;
    }
    std::vector<Value> args;
    args.reserve(t->args.size());
    for (const auto& a : t->args) {
      const auto v = eval_term(a, env);
      if (!v) return std::nullopt;
      args.push_back(*v);
    }
    const int64_t exp = t->kind == TermKind::pow ? resolve(t->exp, env) : 0;
    return st_.apply_func(t->kind, args, exp);
  }

  Tri eval(const FormulaPtr& f, Env& env) {
    switch (f->kind) {
      case FormulaKind::truth:
        return Tri::t;
      case FormulaKind::falsity:
        return Tri::f_def;
      case FormulaKind::eq:
      case FormulaKind::neq: {
        const auto a = eval_term(f->terms[0], env);
        if (!a) return Tri::f_def;
        const auto b = eval_term(f->terms[1], env);
        if (!b) return Tri::f_def;
        const bool equal = *a == *b;
        return (f->kind == FormulaKind::eq ? equal : !equal) ? Tri::t : Tri::f_def;
      }
      case FormulaKind::pred: {
        std::vector<Value> args;
        for (const auto& t : f->terms) {
          const auto v = eval_term(t, env);
          if (!v) return Tri::f_def;
          args.push_back(*v);
        }
        return st_.holds(f->pred, args) ? Tri::t : Tri::f_def;
      }
      case FormulaKind::conj: {
        bool bound = false;
        for (const auto& c : f->children) {
          const Tri r = eval(c, env);
          if (r == Tri::f_def) return Tri::f_def;
          if (r == Tri::f_bound) bound = true;
        }
        return bound ? Tri::f_bound : Tri::t;
      }
      case FormulaKind::disj: {
        bool definite = true;
        for (const auto& c : f->children) {
          const Tri r = eval(c, env);
          if (r == Tri::t) return Tri::t;
          if (r == Tri::f_bound) definite = false;
        }
        return definite ? Tri::f_def : Tri::f_bound;
      }
      case FormulaKind::indexed_or: {
        const int64_t lo = resolve(f->lo, env);
        const int64_t hi = resolve(f->hi, env);
        const bool truncated = f->hi.kind == IntExpr::Kind::bound_sym ||
                               f->lo.kind == IntExpr::Kind::bound_sym;
        bool definite = true;
        for (int64_t k = lo; k <= hi; ++k) {
          env.ints.emplace_back(f->ivar, k);
          const Tri r = eval(f->body, env);
          env.ints.pop_back();
          if (r == Tri::t) return Tri::t;
          if (r == Tri::f_bound) definite = false;
        }
        return (definite && !truncated) ? Tri::f_def : Tri::f_bound;
      }
      case FormulaKind::macro: {
        std::vector<std::vector<Value>> groups;
        for (const auto& grp : f->macro.groups) {
          groups.emplace_back();
          for (const auto& t : grp) {
            const auto v = eval_term(t, env);
            if (!v) return Tri::f_def;  // partial-term semantics
            groups.back().push_back(*v);
          }
        }
        if (const auto native = st_.eval_macro(f->macro, groups))
          return *native ? Tri::t : Tri::f_def;
        return eval(expansion_of(f), env);
      }
      case FormulaKind::exists:
        return eval_exists(f, env);
    }
    return Tri::f_bound;
  }

 private:
  FormulaPtr expansion_of(const FormulaPtr& f) {
    auto it = expansions_.find(f.get());
    if (it != expansions_.end()) return it->second;
    FormulaPtr e = expand_macro(f->macro);
    expansions_.emplace(f.get(), e);
    return e;
  }

  Tri eval_exists(const FormulaPtr& f, Env& env) {
    // adapter-supplied candidates first; a verified candidate is definitive
    for (const auto& cand : st_.witness_candidates(*f, env.vals)) {
      if (cand.size() != f->binders.size()) continue;
      for (size_t i = 0; i < cand.size(); ++i)
        env.vals.emplace_back(f->binders[i].first, cand[i]);
      const Tri r = eval(f->body, env);
      env.vals.resize(env.vals.size() - cand.size());
      if (r == Tri::t) return Tri::t;
    }
    // bounded search over the sort domains
    Bounds search = bounds_;
    search.arrow_disp = bounds_.witness_depth;
    bool exhaustive_all = true;
    std::vector<std::vector<Value>> domains;
    for (const auto& [name, sort] : f->binders) {
      bool ex = false;
      domains.push_back(st_.domain(sort, search, &ex));
      exhaustive_all = exhaustive_all && ex;
    }
    uint64_t budget = kSearchBudget;
    bool truncated = false;
    const auto rec = [&](auto&& self, size_t i) -> Tri {
      if (i == f->binders.size()) {
        if (budget == 0) {
          truncated = true;
          return Tri::f_bound;
        }
        --budget;
        return eval(f->body, env);
      }
      bool all_def = true;
      for (const Value& v : domains[i]) {
        env.vals.emplace_back(f->binders[i].first, v);
        const Tri r = self(self, i + 1);
        env.vals.pop_back();
        if (r == Tri::t) return Tri::t;
        if (r == Tri::f_bound) all_def = false;
        if (budget == 0) {
          truncated = true;
          all_def = false;
          break;
        }
      }
      return all_def ? Tri::f_def : Tri::f_bound;
    };
    const Tri r = rec(rec, 0);
    if (r == Tri::t) return Tri::t;
    return (exhaustive_all && !truncated && r == Tri::f_def) ? Tri::f_def : Tri::f_bound;
  }

  const Structure& st_;
  Bounds bounds_;
  std::map<const Formula*, FormulaPtr> expansions_;
};

// ---------------------------------------------------------------------------
// Universal context enumeration

struct Block {
  std::vector<size_t> vars;  // indices into the context, ascending
  std::vector<FormulaPtr> conjuncts;
  std::vector<std::vector<Value>> solutions;
  std::vector<uint8_t> unsure;  // antecedent held only up to bounds
};

struct VarHints {
  bool positive = false;
  int chain_prev = -1;           // context var whose cod pins this source
  const Formula* pin = nullptr;  // equality pinning this variable
  bool pin_var_on_lhs = false;
};

void signature_walk_term(const Structure& st, const TermPtr& t) {
  if (t->kind != TermKind::var)
    require(st.supports_function(t->kind), Errc::signature_mismatch,
            "structure does not interpret '" + print_term(*t) + "'");
  for (const auto& a : t->args) signature_walk_term(st, a);
}

void signature_walk(const Structure& st, const FormulaPtr& f) {
  for (const auto& t : f->terms) signature_walk_term(st, t);
  if (f->kind == FormulaKind::pred)
    require(f->pred == "P" || (f->pred == "T" && st.supports_sort(Sort::arrow)),
            Errc::signature_mismatch, "predicate " + f->pred + " not interpreted");
  if (f->kind == FormulaKind::macro) {
    require(st.supports_sort(Sort::arrow), Errc::signature_mismatch,
            "macros need the arrow sort");
    for (const auto& grp : f->macro.groups)
      for (const auto& t : grp) signature_walk_term(st, t);
  }
  for (const auto& c : f->children) signature_walk(st, c);
  for (const auto& [name, sort] : f->binders)
    require(st.supports_sort(sort), Errc::signature_mismatch,
            std::string("sort ") + sort_name(sort) + " not present");
  if (f->body) signature_walk(st, f->body);
}

// ---------------------------------------------------------------------------
// Fast path for generator queries. Matches sequents of the shape
//   Phi_n(x) /\ Phi_m(y)  |-  \/_k exists z1..zk . Gen_k(x; y; z)
// over a groupoid model. The witness offered for a pair is the walk through
// the distinct domains of the instance, based at dom(x_1); both sides of the
// Gen condition decompose per arrow against such a walk, so the two
// half-decisions are memoized per (walk, solution) and each pair costs two
// table lookups.

struct GenQuery {
  std::vector<int64_t> arities;  // binder count per consequent disjunct
};

bool group_is_vars(const std::vector<TermPtr>& grp, const std::vector<size_t>& vars,
                   const std::vector<std::pair<std::string, Sort>>& context) {
  if (grp.size() != vars.size()) return false;
  for (size_t i = 0; i < grp.size(); ++i)
    if (grp[i]->kind != TermKind::var || grp[i]->var != context[vars[i]].first) return false;
  return true;
}

std::optional<GenQuery> match_gen_query(const Sequent& s, const std::vector<Block>& blocks) {
  if (blocks.size() != 2) return std::nullopt;
  for (const Block& blk : blocks) {
    if (blk.conjuncts.size() != 1) return std::nullopt;
    const FormulaPtr& c = blk.conjuncts[0];
    if (c->kind != FormulaKind::macro || c->macro.name != MacroName::Phi) return std::nullopt;
    if (!group_is_vars(c->macro.groups[0], blk.vars, s.context)) return std::nullopt;
    for (const auto& [name, sort] : s.context)
      if (sort != Sort::arrow) return std::nullopt;
  }
  const FormulaPtr& cons = s.consequent;
  const std::vector<FormulaPtr> disjuncts =
      cons->kind == FormulaKind::disj ? cons->children : std::vector<FormulaPtr>{cons};
  GenQuery q;
  for (const FormulaPtr& d : disjuncts) {
    if (d->kind != FormulaKind::exists || d->body->kind != FormulaKind::macro)
      return std::nullopt;
    const MacroApp& m = d->body->macro;
    if (m.name != MacroName::Gen || m.groups.size() != 3) return std::nullopt;
    if (!group_is_vars(m.groups[0], blocks[0].vars, s.context)) return std::nullopt;
    if (!group_is_vars(m.groups[1], blocks[1].vars, s.context)) return std::nullopt;
    if (m.groups[2].size() != d->binders.size()) return std::nullopt;
    for (size_t i = 0; i < d->binders.size(); ++i) {
      if (d->binders[i].second != Sort::arrow) return std::nullopt;
      if (m.groups[2][i]->kind != TermKind::var ||
          m.groups[2][i]->var != d->binders[i].first)
        return std::nullopt;
    }
    q.arities.push_back(static_cast<int64_t>(d->binders.size()));
  }
  return q;
}

struct Walk {
  Loop loop;
  std::vector<int> pos;        // object -> walk position, -1 when absent
  std::vector<uint8_t> bits_a;  // 0 unknown, 1 yes, 2 no
  std::vector<uint8_t> bits_b;
};

class GenQueryRunner {
 public:
  GenQueryRunner(const GroupoidStructure& gst, const GenQuery& q, std::vector<Block>& blocks)
      : g_(gst.model()), q_(q), a_(blocks[0]), b_(blocks[1]) {
    annotate(a_, base_a_, mask_a_);
    annotate(b_, base_b_, mask_b_);
    zkey_.assign(static_cast<size_t>(1) << g_.n, std::vector<int>(static_cast<size_t>(g_.n), -1));
  }

  // Returns t for a verified pair, f_bound when the canonical witness does
  // not settle it (the caller re-checks generically).
  Tri pair(size_t ia, size_t ib) {
    const uint32_t u = mask_a_[ia] | mask_b_[ib];
    const int64_t arity = __builtin_popcount(u);
    if (std::find(q_.arities.begin(), q_.arities.end(), arity) == q_.arities.end())
      return Tri::f_bound;
    Walk& w = walk_for(u, base_a_[ia]);
    uint8_t& xa = w.bits_a[ia];
    if (xa == 0) xa = decide(a_.solutions[ia], w, true) ? 1 : 2;
    if (xa == 2) return Tri::f_bound;
    uint8_t& yb = w.bits_b[ib];
    if (yb == 0) yb = decide(b_.solutions[ib], w, false) ? 1 : 2;
    return yb == 1 ? Tri::t : Tri::f_bound;
  }

 private:
  void annotate(const Block& blk, std::vector<int64_t>& base, std::vector<uint32_t>& mask) {
    base.reserve(blk.solutions.size());
    mask.reserve(blk.solutions.size());
    for (const auto& sol : blk.solutions) {
      base.push_back(sol.front().a);
      uint32_t m = 0;
      for (const Value& v : sol) m |= uint32_t{1} << v.a;
      mask.push_back(m);
    }
  }

  Walk& walk_for(uint32_t u, int64_t base) {
    int& key = zkey_[u][static_cast<size_t>(base)];
    if (key >= 0) return walks_[static_cast<size_t>(key)];
    Walk w;
    w.pos.assign(static_cast<size_t>(g_.n), -1);
    std::vector<int64_t> objects;
    for (int64_t o = 0; o < g_.n; ++o)
      if (u & (uint32_t{1} << o)) objects.push_back(o);
    std::sort(objects.begin(), objects.end(), [&](int64_t x, int64_t y) {
      return floor_mod(x - base, g_.n) < floor_mod(y - base, g_.n);
    });
    if (objects.size() == 1) {
      w.loop.push_back(Arrow{g_.n, base, g_.n});
    } else {
      for (size_t t = 0; t < objects.size(); ++t) {
        const int64_t from = objects[t];
        const int64_t to = objects[(t + 1) % objects.size()];
        w.loop.push_back(Arrow{g_.n, from, floor_mod(to - from, g_.n)});
      }
    }
    for (size_t p = 0; p < w.loop.size(); ++p) w.pos[static_cast<size_t>(w.loop[p].src)] = static_cast<int>(p);
    // the walk is itself a positive non-trivial loop (checked, not assumed)
    require(classify_loop(w.loop).is_phi, Errc::no_witness, "degenerate walk");
    w.bits_a.assign(a_.solutions.size(), 0);
    w.bits_b.assign(b_.solutions.size(), 0);
    key = static_cast<int>(walks_.size());
    walks_.push_back(std::move(w));
    return walks_.back();
  }

  // Exact per-arrow decision against a distinct-domain walk: the block of an
  // arrow is pinned by its endpoints, and its winding must be a nonnegative
  // whole number of turns.
  bool decide(const std::vector<Value>& sol, const Walk& w, bool base_fixed) const {
    if (base_fixed && w.loop.front().src != sol.front().a) return false;
    for (const Value& v : sol) {
      if (v.b < 0 || w.pos[static_cast<size_t>(v.a)] < 0) return false;
      if (v.b == 0) continue;
      const int64_t codv = floor_mod(v.a + v.b, g_.n);
      if (w.pos[static_cast<size_t>(codv)] < 0) return false;
      int64_t arc = floor_mod(codv - v.a, g_.n);
      if (arc == 0) arc = g_.n;
      if (v.b < arc || (v.b - arc) % g_.n != 0) return false;
    }
    return true;
  }

  Groupoid g_;
  const GenQuery& q_;
  const Block& a_;
  const Block& b_;
  std::vector<int64_t> base_a_, base_b_;
  std::vector<uint32_t> mask_a_, mask_b_;
  std::vector<std::vector<int>> zkey_;
  std::vector<Walk> walks_;
};

}  // namespace

bool reverify(const Structure& st, const Sequent& s, const Bounds& bounds,
              const std::vector<std::pair<std::string, Value>>& valuation) {
  Evaluator ev(st, bounds);
  Env env;
  env.vals = valuation;
  return ev.eval(s.antecedent, env) == Tri::t && ev.eval(s.consequent, env) == Tri::f_def;
}

Verdict check(const Structure& st, const Sequent& s, const Bounds& bounds) {
  Verdict verdict;
  verdict.label = s.label;
  verdict.sequent_text = print_sequent(s);

  for (const auto& [name, sort] : s.context)
    require(st.supports_sort(sort), Errc::signature_mismatch,
            std::string("sort ") + sort_name(sort) + " not present in " + st.name());
  signature_walk(st, s.antecedent);
  signature_walk(st, s.consequent);

  Evaluator ev(st, bounds);

  if (s.context.empty()) {
    Env env;
    const Tri ant = ev.eval(s.antecedent, env);
    verdict.instances = 1;
    if (ant == Tri::f_def) {
      verdict.kind = VerdictKind::holds;
      return verdict;
    }
    const Tri cons = ev.eval(s.consequent, env);
    if (cons == Tri::t)
      verdict.kind = VerdictKind::holds;
    else if (ant == Tri::t && cons == Tri::f_def)
      verdict.kind = VerdictKind::fails;
    else
      verdict.kind = VerdictKind::unknown_at_bound;
    return verdict;
  }

  // Partition the context into blocks independent under the antecedent.
  const auto conjuncts = conjuncts_of(s.antecedent);
  const size_t nvars = s.context.size();
  std::vector<size_t> parent(nvars);
  for (size_t i = 0; i < nvars; ++i) parent[i] = i;
  const auto find = [&](size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const auto var_index = [&](const std::string& name) -> int {
    for (size_t i = 0; i < nvars; ++i)
      if (s.context[i].first == name) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> conj_vars(conjuncts.size());
  for (size_t c = 0; c < conjuncts.size(); ++c) {
    std::vector<std::string> names;
    collect_vars(conjuncts[c], names);
    for (const auto& n : names) {
      const int vi = var_index(n);
      if (vi >= 0) conj_vars[c].push_back(vi);
    }
    for (size_t j = 1; j < conj_vars[c].size(); ++j)
      parent[find(static_cast<size_t>(conj_vars[c][0]))] =
          find(static_cast<size_t>(conj_vars[c][j]));
  }

  std::vector<Block> blocks;
  std::map<size_t, size_t> root_to_block;
  for (size_t i = 0; i < nvars; ++i) {
    const size_t root = find(i);
    if (!root_to_block.count(root)) {
      root_to_block[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[root_to_block[root]].vars.push_back(i);
  }
  for (size_t c = 0; c < conjuncts.size(); ++c) {
    const size_t b =
        conj_vars[c].empty() ? 0 : root_to_block[find(static_cast<size_t>(conj_vars[c][0]))];
    blocks[b].conjuncts.push_back(conjuncts[c]);
  }

  // Enumeration hints mined from the antecedent.
  std::vector<VarHints> hints(nvars);
  for (const auto& cf : conjuncts) {
    if (cf->kind == FormulaKind::pred && cf->pred == "P" && cf->terms[0]->kind == TermKind::var) {
      const int vi = var_index(cf->terms[0]->var);
      if (vi >= 0) hints[static_cast<size_t>(vi)].positive = true;
    }
    if (cf->kind == FormulaKind::macro &&
        (cf->macro.name == MacroName::Phi || cf->macro.name == MacroName::Psi ||
         cf->macro.name == MacroName::L)) {
      const auto& grp = cf->macro.groups[0];
      std::vector<int> idx;
      for (const auto& t : grp)
        idx.push_back(t->kind == TermKind::var ? var_index(t->var) : -1);
      for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0) continue;
        if (cf->macro.name != MacroName::L) hints[static_cast<size_t>(idx[i])].positive = true;
        const int prev = idx[(i + idx.size() - 1) % idx.size()];
        if (prev >= 0 && prev < idx[i]) hints[static_cast<size_t>(idx[i])].chain_prev = prev;
      }
    }
    if (cf->kind == FormulaKind::eq) {
      for (int side = 0; side < 2; ++side) {
        const TermPtr& v = cf->terms[static_cast<size_t>(side)];
        if (v->kind != TermKind::var) continue;
        const int vi = var_index(v->var);
        if (vi < 0 || hints[static_cast<size_t>(vi)].pin) continue;
        std::vector<std::string> other;
        collect_vars(cf->terms[static_cast<size_t>(1 - side)], other);
        bool ok = true;
        for (const auto& n : other) {
          const int oi = var_index(n);
          ok = ok && oi >= 0 && oi < vi;
        }
        if (ok) {
          hints[static_cast<size_t>(vi)].pin = cf.get();
          hints[static_cast<size_t>(vi)].pin_var_on_lhs = side == 0;
        }
      }
    }
  }

  // Exhaustiveness of the universal window: pinned variables inherit it,
  // arrow and group sorts are bounded.
  bool exhaustive = true;
  for (size_t i = 0; i < nvars; ++i)
    if (!hints[i].pin && s.context[i].second != Sort::object) exhaustive = false;

  // Enumerate the satisfying assignments per block.
  const int64_t symmetry = st.rotation_symmetry();
  for (size_t b = 0; b < blocks.size(); ++b) {
    Block& blk = blocks[b];
    std::vector<size_t> trigger(blk.conjuncts.size(), 0);
    for (size_t c = 0; c < blk.conjuncts.size(); ++c) {
      std::vector<std::string> names;
      collect_vars(blk.conjuncts[c], names);
      size_t last = 0;
      for (const auto& n : names) {
        const int vi = var_index(n);
        for (size_t p = 0; p < blk.vars.size(); ++p)
          if (static_cast<int>(blk.vars[p]) == vi) last = std::max(last, p);
      }
      trigger[c] = last;
    }

    Env env;
    std::vector<Value> tuple(blk.vars.size());
    const auto enumerate = [&](auto&& self, size_t depth, bool unsure) -> void {
      if (depth == blk.vars.size()) {
        blk.solutions.push_back(tuple);
        blk.unsure.push_back(unsure ? 1 : 0);
        return;
      }
      const size_t vi = blk.vars[depth];
      const auto& vname = s.context[vi].first;
      const Sort vsort = s.context[vi].second;
      const VarHints& h = hints[vi];
      const bool first_var = vi == 0;

      std::vector<Value> domain;
      if (h.pin) {
        const TermPtr other = h.pin->terms[h.pin_var_on_lhs ? 1 : 0];
        if (const auto v = ev.eval_term(other, env)) domain.push_back(*v);
      } else if (vsort == Sort::arrow) {
        int64_t pinned_src = -1;
        if (h.chain_prev >= 0) {
          const Value* prev = env.find(s.context[static_cast<size_t>(h.chain_prev)].first);
          if (prev) pinned_src = st.apply_func(TermKind::cod, {*prev}, 0)->a;
        }
        if (first_var && symmetry > 1) pinned_src = 0;
        if (pinned_src >= 0) {
          domain = st.arrows_from(pinned_src, bounds.arrow_disp, h.positive);
        } else {
          bool ex = false;
          domain = st.domain(vsort, bounds, &ex);
          if (h.positive) std::erase_if(domain, [](const Value& v) { return v.b < 0; });
        }
      } else {
        bool ex = false;
        domain = st.domain(vsort, bounds, &ex);
        if (first_var && symmetry > 1 && vsort == Sort::object) domain = {Value::object(0)};
      }

      for (const Value& v : domain) {
        tuple[depth] = v;
        env.vals.emplace_back(vname, v);
        bool next_unsure = unsure;
        bool dead = false;
        for (size_t c = 0; c < blk.conjuncts.size(); ++c) {
          if (trigger[c] != depth) continue;
          const Tri r = ev.eval(blk.conjuncts[c], env);
          if (r == Tri::f_def) {
            dead = true;
            break;
          }
          if (r == Tri::f_bound) next_unsure = true;
        }
        if (!dead) self(self, depth + 1, next_unsure);
        env.vals.pop_back();
      }
    };
    enumerate(enumerate, 0, false);
  }

  uint64_t instances = 1;
  for (const Block& blk : blocks) instances *= blk.solutions.size();
  verdict.instances = instances;
  if (instances == 0) {
    verdict.kind = exhaustive ? VerdictKind::holds : VerdictKind::holds_up_to_bound;
    return verdict;
  }

  bool any_unknown = false;
  Env env;
  const auto instance_result = [&](const std::vector<size_t>& pick) -> Tri {
    env.vals.clear();
    bool unsure = false;
    for (size_t b = 0; b < blocks.size(); ++b) {
      const Block& blk = blocks[b];
      unsure = unsure || blk.unsure[pick[b]] != 0;
      for (size_t d = 0; d < blk.vars.size(); ++d)
        env.vals.emplace_back(s.context[blk.vars[d]].first, blk.solutions[pick[b]][d]);
    }
    const Tri cons = ev.eval(s.consequent, env);
    if (cons == Tri::t) return Tri::t;
    if (!unsure && cons == Tri::f_def) return Tri::f_def;
    return Tri::f_bound;
  };
  const auto record_failure = [&](const std::vector<size_t>& pick) {
    verdict.kind = VerdictKind::fails;
    for (size_t b = 0; b < blocks.size(); ++b)
      for (size_t d = 0; d < blocks[b].vars.size(); ++d)
        verdict.counterexample.emplace_back(s.context[blocks[b].vars[d]].first,
                                            blocks[b].solutions[pick[b]][d]);
  };

  // Fast path for generator-shaped sequents over groupoid models.
  if (const auto* gst = dynamic_cast<const GroupoidStructure*>(&st)) {
    if (const auto q = match_gen_query(s, blocks)) {
      GenQueryRunner runner(*gst, *q, blocks);
      std::vector<size_t> pick(2, 0);
      for (size_t ia = 0; ia < blocks[0].solutions.size(); ++ia)
        for (size_t ib = 0; ib < blocks[1].solutions.size(); ++ib) {
          if (runner.pair(ia, ib) == Tri::t) continue;
          pick[0] = ia;
          pick[1] = ib;
          const Tri r = instance_result(pick);
          if (r == Tri::t) continue;
          if (r == Tri::f_def) {
            record_failure(pick);
            return verdict;
          }
          any_unknown = true;
        }
      if (any_unknown)
        verdict.kind = VerdictKind::unknown_at_bound;
      else
        verdict.kind = exhaustive ? VerdictKind::holds : VerdictKind::holds_up_to_bound;
      return verdict;
    }
  }

  std::vector<size_t> pick(blocks.size(), 0);
  const auto product = [&](auto&& self, size_t b) -> bool {  // false stops on failure
    if (b == blocks.size()) {
      const Tri r = instance_result(pick);
      if (r == Tri::f_def) {
        record_failure(pick);
        return false;
      }
      if (r == Tri::f_bound) any_unknown = true;
      return true;
    }
    for (size_t i = 0; i < blocks[b].solutions.size(); ++i) {
      pick[b] = i;
      if (!self(self, b + 1)) return false;
    }
    return true;
  };

  if (product(product, 0)) {
    if (any_unknown)
      verdict.kind = VerdictKind::unknown_at_bound;
    else
      verdict.kind = exhaustive ? VerdictKind::holds : VerdictKind::holds_up_to_bound;
  }
  return verdict;
}

}  // namespace cyclo::logic
