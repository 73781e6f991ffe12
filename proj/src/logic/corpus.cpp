#include "corpus.hpp"

#include "parser.hpp"

namespace cyclo::logic {

namespace {

Sequent seq(const std::string& label, const std::string& text) {
  Sequent s = parse_sequent(text);
  s.label = label;
  return s;
}

std::string arrow_vars(const std::string& stem, int64_t count) {
  std::string out;
  for (int64_t i = 1; i <= count; ++i)
    out += (i > 1 ? ", " : "") + stem + std::to_string(i) + ":A";
  return out;
}

std::string var_list(const std::string& stem, int64_t count) {
  std::string out;
  for (int64_t i = 1; i <= count; ++i) out += (i > 1 ? ", " : "") + stem + std::to_string(i);
  return out;
}

std::vector<Sequent> groupoid_base() {
  return {
      seq("G.i", "f:A |- f o inv(f) = id(cod(f))"),
      seq("G.ii", "f:A |- inv(f) o f = id(dom(f))"),
      seq("G.iii", "a:O |- P(id(a))"),
      seq("G.iv", "f:A, g:A, h:A | P(f) /\\ P(g) /\\ h = g o f |- P(h)"),
      seq("G.v", "f:A | P(f) /\\ P(inv(f)) |- f = id(dom(f))"),
  };
}

Sequent totality() { return seq("G.vi", "f:A |- P(f) \\/ P(inv(f))"); }

std::vector<Sequent> nontriviality_axioms() {
  return {
      seq("GT.vii", "f:A | T(f) |- dom(f) = cod(f)"),
      seq("GT.viii", "a:O | T(id(a)) |- false"),
      seq("GT.ix", "f:A | T(f) |- OR k in 1..B . (T(pow(f, k)) /\\ T(pow(f, -k)))"),
      seq("GT.x", "f:A, g:A | T(g o f) |- T(f o g)"),
      seq("GT.xi", "f:A | dom(f) = cod(f) |- f = id(dom(f)) \\/ T(f)"),
  };
}

std::vector<Sequent> cycle_axioms() {
  return {
      seq("GC.vii", "a:O |- dom(C(a)) = a /\\ cod(C(a)) = a"),
      seq("GC.viii", "a:O |- P(C(a))"),
      seq("GC.ix", "a:O | C(a) = id(a) |- false"),
      seq("GC.x", "f:A, g:A | g o f = C(dom(f)) |- f o g = C(dom(g))"),
  };
}

void append(std::vector<Sequent>& out, std::vector<Sequent> more) {
  for (auto& s : more) out.push_back(std::move(s));
}

std::vector<Sequent> epicyclic_axioms(int64_t cap) {
  std::vector<Sequent> out;
  out.push_back(seq("TE.i", "|- exists a:O . a = a"));
  out.push_back(seq("TE.ii", "f:A | P(f) |- exists g:A . (P(g) /\\ T(g o f))"));
  for (int64_t n = 1; n <= cap; ++n)
    for (int64_t m = 1; m <= cap; ++m) {
      std::string text = arrow_vars("x", n) + ", " + arrow_vars("y", m) + " | Phi_" +
                         std::to_string(n) + "(" + var_list("x", n) + ") /\\ Phi_" +
                         std::to_string(m) + "(" + var_list("y", m) + ") |- ";
      for (int64_t k = 1; k <= n + m; ++k) {
        if (k > 1) text += " \\/ ";
        text += "(exists " + arrow_vars("z", k) + " . Gen_" + std::to_string(k) + "(" +
                var_list("x", n) + "; " + var_list("y", m) + "; " + var_list("z", k) + "))";
      }
      out.push_back(
          seq("TE.iii[n=" + std::to_string(n) + ",m=" + std::to_string(m) + "]", text));
    }
  for (int64_t k = 2; k <= std::max<int64_t>(cap, 2); ++k)
    for (int64_t i = 1; i <= k; ++i)
      for (int64_t j = i + 1; j <= k; ++j) {
        std::string text = arrow_vars("z", k) + " | Phi_" + std::to_string(k) + "(" +
                           var_list("z", k) + ") /\\ dom(z" + std::to_string(i) +
                           ") = dom(z" + std::to_string(j) + ") |- exists " +
                           arrow_vars("w", k - 1) + " . (Phi_" + std::to_string(k - 1) + "(" +
                           var_list("w", k - 1) + ") /\\ Gen_" + std::to_string(k - 1) + "(" +
                           var_list("z", k) + "; " + var_list("w", k - 1) + "))";
        out.push_back(seq("TE.iv[k=" + std::to_string(k) + ",i=" + std::to_string(i) +
                              ",j=" + std::to_string(j) + "]",
                          text));
      }
  return out;
}

std::vector<Sequent> epicyclic_alt_axioms(int64_t cap) {
  std::vector<Sequent> out;
  out.push_back(seq("TE.i", "|- exists a:O . a = a"));
  out.push_back(seq("TE.ii", "f:A | P(f) |- exists g:A . (P(g) /\\ T(g o f))"));
  for (int64_t n = 1; n <= cap; ++n)
    for (int64_t m = 1; m <= cap; ++m)
      for (int64_t kp = 1; kp <= n + m - 1; ++kp) {
        const int64_t k = n + m - kp;
        std::string text = arrow_vars("x", n) + ", " + arrow_vars("y", m) + " | Phi_" +
                           std::to_string(n) + "(" + var_list("x", n) + ") /\\ Phi_" +
                           std::to_string(m) + "(" + var_list("y", m) + ") /\\ DomEq_" +
                           std::to_string(kp) + "(" + var_list("x", n) + ", " +
                           var_list("y", m) + ") |- exists " + arrow_vars("z", k) + " . Gen_" +
                           std::to_string(k) + "(" + var_list("x", n) + "; " +
                           var_list("y", m) + "; " + var_list("z", k) + ")";
        out.push_back(seq("TEalt[n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                              ",k'=" + std::to_string(kp) + "]",
                          text));
      }
  return out;
}

std::vector<Sequent> cyclic_axioms() {
  return {
      seq("TC.i", "|- exists a:O . a = a"),
      seq("TC.ii", "a:O, b:O |- exists f:A . (dom(f) = a /\\ cod(f) = b /\\ P(f))"),
      seq("TC.iii",
          "f:A | P(f) |- OR w in 0..B . exists al:A . (PMin(al) /\\ dom(al) = dom(f) /\\ "
          "cod(al) = cod(f) /\\ f = al o pow(C(dom(f)), w))"),
  };
}

std::vector<Sequent> group_base() {
  return {
      seq("Grp.assoc", "x:G, y:G, z:G |- x * (y * z) = (x * y) * z"),
      seq("Grp.unit-l", "x:G |- one * x = x"),
      seq("Grp.unit-r", "x:G |- x * one = x"),
      seq("Grp.inv-l", "x:G |- inv(x) * x = one"),
      seq("Grp.inv-r", "x:G |- x * inv(x) = one"),
      seq("O.i", "|- P(one)"),
      seq("O.ii", "a:G, b:G | P(a) /\\ P(b) |- P(a * b)"),
      seq("O.iii", "a:G, c:G | P(a) |- P((inv(c) * a) * c)"),
      seq("O.iv", "a:G | P(a) /\\ P(inv(a)) |- a = one"),
  };
}

Sequent order_totality() { return seq("O.v", "a:G |- P(a) \\/ P(inv(a))"); }
Sequent neq_irreflexive() { return seq("One.vi", "x:G | x != x |- false"); }
Sequent neq_total() { return seq("One.vii", "x:G, y:G |- (x != y) \\/ (x = y)"); }

std::vector<Sequent> nstar_axioms() {
  return {
      seq("TN.i", "|- exists x:G . x != one"),
      seq("TN.ii",
          "x:G, y:G | P(x) /\\ P(y) |- OR n in 0..B . OR m in 0..B . exists z:G . (P(z) /\\ "
          "x = pow(z, n) /\\ y = pow(z, m))"),
  };
}

}  // namespace

Theory corpus(const std::string& name, int64_t scheme_cap) {
  require(scheme_cap >= 1 && scheme_cap <= 6, Errc::invalid_argument,
          "scheme cap must be in 1..6");
  Theory t;
  t.name = name;
  t.kind = TheoryKind::groupoid;
  std::vector<Sequent>& s = t.sequents;
  if (name == "G") {
    s = groupoid_base();
  } else if (name == "Gbar") {
    s = groupoid_base();
    s.push_back(totality());
  } else if (name == "GT") {
    s = groupoid_base();
    append(s, nontriviality_axioms());
  } else if (name == "GTbar") {
    s = groupoid_base();
    s.push_back(totality());
    append(s, nontriviality_axioms());
  } else if (name == "GC") {
    s = groupoid_base();
    append(s, cycle_axioms());
  } else if (name == "GCbar") {
    s = groupoid_base();
    s.push_back(totality());
    append(s, cycle_axioms());
  } else if (name == "TE") {
    s = corpus("GTbar", scheme_cap).sequents;
    append(s, epicyclic_axioms(scheme_cap));
  } else if (name == "TE-alt") {
    s = corpus("GTbar", scheme_cap).sequents;
    append(s, epicyclic_alt_axioms(scheme_cap));
  } else if (name == "TC") {
    s = corpus("GCbar", scheme_cap).sequents;
    append(s, cyclic_axioms());
  } else if (name == "O") {
    t.kind = TheoryKind::group;
    s = group_base();
  } else if (name == "Obar") {
    t.kind = TheoryKind::group;
    s = group_base();
    s.push_back(order_totality());
  } else if (name == "One") {
    t.kind = TheoryKind::group;
    s = group_base();
    s.push_back(neq_irreflexive());
  } else if (name == "Onebar") {
    t.kind = TheoryKind::group;
    s = group_base();
    s.push_back(order_totality());
    s.push_back(neq_irreflexive());
    s.push_back(neq_total());
  } else if (name == "TN") {
    t.kind = TheoryKind::group;
    s = corpus("Onebar", scheme_cap).sequents;
    append(s, nstar_axioms());
  } else {
    fail(Errc::unknown_name, "unknown theory '" + name + "'");
  }
  return t;
}

std::vector<std::string> corpus_names() {
  return {"G",  "Gbar", "GT", "GTbar", "GC",  "GCbar",  "TE", "TE-alt",
          "TC", "O",    "Obar", "One",   "Onebar", "TN"};
}

}  // namespace cyclo::logic
