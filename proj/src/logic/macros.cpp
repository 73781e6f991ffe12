#include "macros.hpp"

namespace cyclo::logic {

namespace {

constexpr int64_t kMaxParam = 8;
constexpr int64_t kMaxGenBranches = 100000;

FormulaPtr chain_formula(const std::vector<TermPtr>& xs) {
  const int64_t n = static_cast<int64_t>(xs.size());
  std::vector<FormulaPtr> cs;
  for (int64_t i = 0; i < n; ++i)
    cs.push_back(Formula::eq(Term::apply(TermKind::cod, {xs[static_cast<size_t>(i)]}),
                             Term::apply(TermKind::dom, {xs[static_cast<size_t>((i + 1) % n)]})));
  return Formula::conj_(std::move(cs));
}

FormulaPtr positivity(const std::vector<TermPtr>& xs) {
  std::vector<FormulaPtr> cs;
  for (const auto& x : xs) cs.push_back(Formula::pred_("P", {x}));
  return Formula::conj_(std::move(cs));
}

FormulaPtr phi_formula(const std::vector<TermPtr>& xs) {
  return Formula::conj_({chain_formula(xs), positivity(xs),
                         Formula::pred_("T", {loop_composite_term(xs, 1)})});
}

FormulaPtr psi_formula(const std::vector<TermPtr>& xs) {
  const TermPtr cyc =
      Term::apply(TermKind::cyc, {Term::apply(TermKind::dom, {xs[0]})});
  return Formula::conj_({chain_formula(xs), positivity(xs),
                         Formula::eq(loop_composite_term(xs, 1), cyc)});
}

FormulaPtr pmin_formula(const TermPtr& f) {
  const TermPtr g = Term::make_var("pm_g", Sort::arrow);
  const TermPtr cyc = Term::apply(TermKind::cyc, {Term::apply(TermKind::dom, {f})});
  FormulaPtr body = Formula::conj_(
      {Formula::pred_("P", {g}),
       Formula::eq(Term::apply(TermKind::dom, {g}), Term::apply(TermKind::cod, {f})),
       Formula::eq(Term::apply(TermKind::cod, {g}), Term::apply(TermKind::dom, {f})),
       Formula::eq(Term::apply(TermKind::comp, {g, f}), cyc)});
  return Formula::conj_({Formula::pred_("P", {f}),
                         Formula::exists_({{"pm_g", Sort::arrow}}, std::move(body))});
}

// run of r generators of z from 1-based position a (cyclic); r = 0 gives the
// identity at the position's domain
TermPtr run_term(const std::vector<TermPtr>& zs, int64_t a, int64_t r) {
  const int64_t k = static_cast<int64_t>(zs.size());
  if (r == 0)
    return Term::apply(TermKind::id,
                       {Term::apply(TermKind::dom, {zs[static_cast<size_t>(a - 1)]})});
  TermPtr acc = zs[static_cast<size_t>(a - 1)];
  for (int64_t t = 1; t < r; ++t)
    acc = Term::apply(TermKind::comp, {zs[static_cast<size_t>((a - 1 + t) % k)], acc});
  return acc;
}

// one target generated successively from z starting at position `start`
FormulaPtr gen_targets_from(const std::vector<TermPtr>& ts, const std::vector<TermPtr>& zs,
                            int64_t start) {
  const int64_t n = static_cast<int64_t>(ts.size());
  const int64_t k = static_cast<int64_t>(zs.size());
  double shapes = 1;
  for (int64_t i = 0; i < n; ++i) shapes *= static_cast<double>(k + 1);
  require(shapes <= 1e7, Errc::invalid_argument, "Gen expansion too large");
  std::vector<FormulaPtr> branches;
  std::vector<int64_t> rs(static_cast<size_t>(n), 0);
  int64_t branch_count = 0;
  const auto rec = [&](auto&& self, int64_t i, int64_t sum) -> void {
    if (i == n) {
      if (sum % k != 0) return;
      require(++branch_count <= kMaxGenBranches, Errc::invalid_argument,
              "Gen expansion too large");
      std::vector<FormulaPtr> eqs;
      int64_t a = start;
      for (int64_t j = 0; j < n; ++j) {
        const int64_t r = rs[static_cast<size_t>(j)];
        const std::string pv = "p" + std::to_string(j + 1);
        const TermPtr rhs = Term::apply(
            TermKind::comp,
            {run_term(zs, a, r),
             Term::apply(TermKind::pow, {loop_composite_term(zs, a)},
                         IntExpr::variable(pv, false))});
        eqs.push_back(Formula::eq(ts[static_cast<size_t>(j)], rhs));
        a = (a - 1 + r) % k + 1;
      }
      // windings are nonnegative and unbounded; the bound symbol truncates
      // the search at check time
      FormulaPtr branch = Formula::conj_(std::move(eqs));
      for (int64_t j = n; j-- > 0;)
        branch = Formula::indexed_or_("p" + std::to_string(j + 1), IntExpr::literal(0),
                                      IntExpr::bound(), std::move(branch));
      branches.push_back(std::move(branch));
      return;
    }
    for (int64_t r = 0; r <= k; ++r) {
      rs[static_cast<size_t>(i)] = r;
      self(self, i + 1, sum + r);
    }
  };
  rec(rec, 0, 0);
  return Formula::disj_(std::move(branches));
}

FormulaPtr gen_formula(const MacroApp& app) {
  const auto& groups = app.groups;
  const std::vector<TermPtr>& zs = groups.back();
  const int64_t k = static_cast<int64_t>(zs.size());
  std::vector<FormulaPtr> parts{phi_formula(zs)};
  // first target: based at dom(z_1)
  parts.push_back(Formula::eq(Term::apply(TermKind::dom, {groups[0][0]}),
                              Term::apply(TermKind::dom, {zs[0]})));
  parts.push_back(gen_targets_from(groups[0], zs, 1));
  if (groups.size() == 3) {
    // second target: successively generated from any starting position
    std::vector<FormulaPtr> starts;
    for (int64_t s = 1; s <= k; ++s) starts.push_back(gen_targets_from(groups[1], zs, s));
    parts.push_back(Formula::disj_(std::move(starts)));
  }
  return Formula::conj_(std::move(parts));
}

FormulaPtr domeq_formula(const MacroApp& app) {
  std::vector<TermPtr> ws;
  for (const auto& grp : app.groups) ws.insert(ws.end(), grp.begin(), grp.end());
  const int64_t total = static_cast<int64_t>(ws.size());
  const int64_t kprime = app.param;
  std::vector<FormulaPtr> subsets;
  std::vector<int64_t> pick;
  const auto rec = [&](auto&& self, int64_t from) -> void {
    if (static_cast<int64_t>(pick.size()) == kprime) {
      std::vector<FormulaPtr> conj;
      for (int64_t i : pick) {
        std::vector<FormulaPtr> partners;
        for (int64_t j = 0; j < total; ++j) {
          if (j == i) continue;
          partners.push_back(
              Formula::eq(Term::apply(TermKind::dom, {ws[static_cast<size_t>(i)]}),
                          Term::apply(TermKind::dom, {ws[static_cast<size_t>(j)]})));
        }
        conj.push_back(Formula::disj_(std::move(partners)));
      }
      subsets.push_back(Formula::conj_(std::move(conj)));
      return;
    }
    for (int64_t i = from; i < total; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return Formula::disj_(std::move(subsets));
}

}  // namespace

TermPtr loop_composite_term(const std::vector<TermPtr>& args, int64_t i) {
  const int64_t n = static_cast<int64_t>(args.size());
  TermPtr acc = args[static_cast<size_t>(i - 1)];
  for (int64_t t = 1; t < n; ++t)
    acc = Term::apply(TermKind::comp, {args[static_cast<size_t>((i - 1 + t) % n)], acc});
  return acc;
}

FormulaPtr expand_macro(const MacroApp& app) {
  switch (app.name) {
    case MacroName::L: return chain_formula(app.groups[0]);
    case MacroName::Phi: return phi_formula(app.groups[0]);
    case MacroName::Psi: return psi_formula(app.groups[0]);
    case MacroName::PMin: return pmin_formula(app.groups[0][0]);
    case MacroName::Gen: return gen_formula(app);
    case MacroName::DomEq: return domeq_formula(app);
  }
  fail(Errc::unknown_name, "unknown macro");
}

NamedExpansion expand_macro_named(const std::string& name, const std::vector<int64_t>& params) {
  const auto vars = [](const std::string& stem, int64_t count) {
    std::vector<TermPtr> out;
    for (int64_t i = 1; i <= count; ++i)
      out.push_back(Term::make_var(stem + std::to_string(i), Sort::arrow));
    return out;
  };
  const auto check_param = [](int64_t v) {
    require(v >= 1 && v <= kMaxParam, Errc::index_out_of_range,
            "macro parameter " + std::to_string(v) + " outside 1.." + std::to_string(kMaxParam));
  };
  NamedExpansion out;
  const auto push_ctx = [&](const std::vector<TermPtr>& ts) {
    for (const auto& t : ts) out.context.emplace_back(t->var, Sort::arrow);
  };
  MacroApp app;
  if (name == "L" || name == "Phi" || name == "Psi") {
    require(params.size() == 1, Errc::invalid_argument, name + " takes one parameter");
    check_param(params[0]);
    app.name = name == "L" ? MacroName::L : name == "Phi" ? MacroName::Phi : MacroName::Psi;
    app.param = params[0];
    app.groups = {vars("x", params[0])};
    push_ctx(app.groups[0]);
  } else if (name == "PMin") {
    require(params.empty(), Errc::invalid_argument, "PMin takes no parameters");
    app.name = MacroName::PMin;
    app.groups = {{Term::make_var("f", Sort::arrow)}};
    out.context.emplace_back("f", Sort::arrow);
  } else if (name == "Gen") {
    require(params.size() == 2 || params.size() == 3, Errc::invalid_argument,
            "Gen takes (k, n) or (k, n, m)");
    for (int64_t p : params) check_param(p);
    app.name = MacroName::Gen;
    app.param = params[0];
    app.groups = {vars("x", params[1])};
    if (params.size() == 3) app.groups.push_back(vars("y", params[2]));
    app.groups.push_back(vars("z", params[0]));
    for (const auto& grp : app.groups) push_ctx(grp);
  } else if (name == "DomEq") {
    require(params.size() == 2, Errc::invalid_argument, "DomEq takes (k', count)");
    check_param(params[1]);
    require(params[0] >= 1 && params[0] <= params[1], Errc::index_out_of_range,
            "DomEq subscript outside 1..count");
    app.name = MacroName::DomEq;
    app.param = params[0];
    app.groups = {vars("w", params[1])};
    push_ctx(app.groups[0]);
  } else {
    fail(Errc::unknown_name, "unknown macro '" + name + "'");
  }
  out.formula = expand_macro(app);
  return out;
}

}  // namespace cyclo::logic
