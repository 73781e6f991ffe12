#include "parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace cyclo::logic {

namespace {

struct Token {
  enum class Kind : uint8_t { ident, number, punct, end };
  Kind kind = Kind::end;
  std::string text;
  int64_t value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) {
    int line = 1, col = 1;
    size_t i = 0;
    const auto push = [&](Token::Kind k, std::string s, int64_t v, int l, int c) {
      tokens_.push_back(Token{k, std::move(s), v, l, c});
    };
    while (i < text.size()) {
      const char ch = text[i];
      if (ch == '\n') {
        ++line;
        col = 1;
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++col;
        ++i;
        continue;
      }
      if (ch == '#') {  // comment to end of line
        while (i < text.size() && text[i] != '\n') ++i;
        continue;
      }
      const int l = line, c = col;
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        size_t j = i;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
          ++j;
        push(Token::Kind::ident, text.substr(i, j - i), 0, l, c);
        col += static_cast<int>(j - i);
        i = j;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        push(Token::Kind::number, text.substr(i, j - i), std::stoll(text.substr(i, j - i)), l, c);
        col += static_cast<int>(j - i);
        i = j;
        continue;
      }
      const auto two = text.substr(i, 2);
      if (two == "|-" || two == "/\\" || two == "\\/" || two == "!=" || two == "..") {
        push(Token::Kind::punct, two, 0, l, c);
        i += 2;
        col += 2;
        continue;
      }
      if (std::string("|,;:.()=*-").find(ch) != std::string::npos) {
        push(Token::Kind::punct, std::string(1, ch), 0, l, c);
        ++i;
        ++col;
        continue;
      }
      fail(Errc::parse_error, "unexpected character '" + std::string(1, ch) + "' at " +
                                  std::to_string(l) + ":" + std::to_string(c));
    }
    tokens_.push_back(Token{Token::Kind::end, "", 0, line, col});
  }

  std::vector<Token> tokens_;
};

struct MacroHead {
  MacroName name;
  int64_t param;
};

std::optional<MacroHead> macro_head(const std::string& ident) {
  if (ident == "PMin") return MacroHead{MacroName::PMin, 0};
  const size_t us = ident.rfind('_');
  if (us == std::string::npos || us + 1 >= ident.size()) return std::nullopt;
  const std::string stem = ident.substr(0, us);
  const std::string num = ident.substr(us + 1);
  if (!std::all_of(num.begin(), num.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  MacroName name;
  if (stem == "L")
    name = MacroName::L;
  else if (stem == "Phi")
    name = MacroName::Phi;
  else if (stem == "Psi")
    name = MacroName::Psi;
  else if (stem == "Gen")
    name = MacroName::Gen;
  else if (stem == "DomEq")
    name = MacroName::DomEq;
  else
    return std::nullopt;
  return MacroHead{name, std::stoll(num)};
}

bool reserved_ident(const std::string& s) {
  static const char* kReserved[] = {"exists", "OR", "in",  "true", "false", "one", "dom",
                                    "cod",    "id", "inv", "C",    "pow",   "P",   "T",
                                    "PMin",   "o"};
  for (const char* r : kReserved)
    if (s == r) return true;
  return macro_head(s).has_value();
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) {}

  Sequent parse_sequent_all() {
    Sequent s;
    s.antecedent = Formula::truth_();
    // context: ident : SORT pairs
    while (at_ident() && peek_next_is(":")) {
      const std::string name = eat_ident();
      expect(":");
      const Sort sort = parse_sort();
      require(!scope_.count(name), Errc::parse_error, "duplicate variable " + name + at_pos());
      require(!reserved_ident(name), Errc::parse_error,
              "'" + name + "' is reserved" + at_pos());
      scope_[name] = sort;
      s.context.emplace_back(name, sort);
      if (at_punct(",")) {
        next();
        continue;
      }
      break;
    }
    if (at_punct("|")) {
      next();
      s.antecedent = parse_formula();
    }
    expect("|-");
    s.consequent = parse_formula();
    require(at_end(), Errc::parse_error, "trailing input" + at_pos());
    return s;
  }

 private:
  Lexer lexer_;
  size_t pos_ = 0;
  std::map<std::string, Sort> scope_;
  std::vector<std::string> index_scope_;

  const Token& cur() const { return lexer_.tokens_[pos_]; }
  void next() { if (pos_ + 1 < lexer_.tokens_.size()) ++pos_; }
  bool at_end() const { return cur().kind == Token::Kind::end; }
  bool at_ident() const { return cur().kind == Token::Kind::ident; }
  bool at_number() const { return cur().kind == Token::Kind::number; }
  bool at_punct(const std::string& p) const {
    return cur().kind == Token::Kind::punct && cur().text == p;
  }
  bool at_kw(const std::string& k) const { return at_ident() && cur().text == k; }
  bool peek_next_is(const std::string& p) const {
    const Token& t = lexer_.tokens_[std::min(pos_ + 1, lexer_.tokens_.size() - 1)];
    return t.kind == Token::Kind::punct && t.text == p;
  }
  std::string at_pos() const {
    return " at " + std::to_string(cur().line) + ":" + std::to_string(cur().col);
  }
  void expect(const std::string& p) {
    require(at_punct(p), Errc::parse_error, "expected '" + p + "'" + at_pos());
    next();
  }
  std::string eat_ident() {
    require(at_ident(), Errc::parse_error, "expected identifier" + at_pos());
    std::string s = cur().text;
    next();
    return s;
  }

  Sort parse_sort() {
    const std::string s = eat_ident();
    if (s == "O") return Sort::object;
    if (s == "A") return Sort::arrow;
    if (s == "G") return Sort::group;
    fail(Errc::parse_error, "unknown sort '" + s + "'" + at_pos());
  }

  IntExpr parse_int_expr() {
    bool neg = false;
    if (at_punct("-")) {
      neg = true;
      next();
    }
    if (at_number()) {
      const int64_t v = cur().value;
      next();
      return IntExpr::literal(neg ? -v : v);
    }
    const std::string name = eat_ident();
    if (name == "B") {
      require(!neg, Errc::parse_error, "cannot negate the bound symbol" + at_pos());
      return IntExpr::bound();
    }
    require(std::count(index_scope_.begin(), index_scope_.end(), name) > 0, Errc::parse_error,
            "unknown index variable '" + name + "'" + at_pos());
    return IntExpr::variable(name, neg);
  }

  FormulaPtr parse_formula() {
    std::vector<FormulaPtr> disj{parse_conj()};
    while (at_punct("\\/")) {
      next();
      disj.push_back(parse_conj());
    }
    return Formula::disj_(std::move(disj));
  }

  FormulaPtr parse_conj() {
    std::vector<FormulaPtr> conj{parse_prim()};
    while (at_punct("/\\")) {
      next();
      conj.push_back(parse_prim());
    }
    return Formula::conj_(std::move(conj));
  }

  FormulaPtr parse_prim() {
    if (at_kw("true")) {
      next();
      return Formula::truth_();
    }
    if (at_kw("false")) {
      next();
      return Formula::falsity_();
    }
    if (at_kw("exists")) {
      next();
      std::vector<std::pair<std::string, Sort>> binders;
      while (true) {
        const std::string name = eat_ident();
        expect(":");
        const Sort sort = parse_sort();
        require(!scope_.count(name), Errc::parse_error,
                "variable '" + name + "' shadows an outer one" + at_pos());
        require(!reserved_ident(name), Errc::parse_error,
                "'" + name + "' is reserved" + at_pos());
        scope_[name] = sort;
        binders.emplace_back(name, sort);
        if (at_punct(",")) {
          next();
          continue;
        }
        break;
      }
      expect(".");
      FormulaPtr body = parse_prim();
      for (const auto& b : binders) scope_.erase(b.first);
      return Formula::exists_(std::move(binders), std::move(body));
    }
    if (at_kw("OR")) {
      next();
      const std::string ivar = eat_ident();
      require(std::count(index_scope_.begin(), index_scope_.end(), ivar) == 0 && ivar != "B",
              Errc::parse_error, "index variable '" + ivar + "' already in use" + at_pos());
      require(at_kw("in"), Errc::parse_error, "expected 'in'" + at_pos());
      next();
      const IntExpr lo = parse_int_expr();
      expect("..");
      const IntExpr hi = parse_int_expr();
      expect(".");
      index_scope_.push_back(ivar);
      FormulaPtr body = parse_prim();
      index_scope_.pop_back();
      return Formula::indexed_or_(ivar, lo, hi, std::move(body));
    }
    // predicate / macro atoms
    if (at_ident() && peek_next_is("(")) {
      const std::string head = cur().text;
      if (head == "P" || head == "T") {
        next();
        expect("(");
        TermPtr t = parse_term();
        expect(")");
        require(head == "P" ? (t->sort != Sort::object) : (t->sort == Sort::arrow),
                Errc::sort_mismatch, "predicate " + head + " applied to the wrong sort" + at_pos());
        return Formula::pred_(head, {std::move(t)});
      }
      if (const auto mh = macro_head(head)) {
        next();
        expect("(");
        MacroApp app{mh->name, mh->param, {}};
        app.groups.emplace_back();
        while (!at_punct(")")) {
          app.groups.back().push_back(parse_term());
          if (at_punct(",")) {
            next();
          } else if (at_punct(";")) {
            next();
            app.groups.emplace_back();
          } else {
            break;
          }
        }
        expect(")");
        check_macro(app);
        return Formula::macro_(std::move(app));
      }
    }
    // relation atom, possibly starting with '(': try term first, then a
    // parenthesized formula
    const size_t save = pos_;
    const bool starts_paren = at_punct("(");
    try {
      TermPtr lhs = parse_term();
      if (at_punct("=")) {
        next();
        return Formula::eq(lhs, parse_term());
      }
      if (at_punct("!=")) {
        next();
        return Formula::neq_(lhs, parse_term());
      }
      fail(Errc::parse_error, "expected '=' or '!='" + at_pos());
    } catch (const Error&) {
      if (!starts_paren) throw;
      pos_ = save;
    }
    expect("(");
    FormulaPtr f = parse_formula();
    expect(")");
    return f;
  }

  void check_macro(const MacroApp& app) {
    for (const auto& grp : app.groups)
      for (const auto& t : grp)
        require(t->sort == Sort::arrow, Errc::sort_mismatch,
                "macro arguments must be arrows" + at_pos());
    const auto group_count = static_cast<int64_t>(app.groups.size());
    switch (app.name) {
      case MacroName::L:
      case MacroName::Phi:
      case MacroName::Psi:
        require(group_count == 1 &&
                    static_cast<int64_t>(app.groups[0].size()) == app.param && app.param >= 1,
                Errc::parse_error, "macro expects exactly its subscript many arrows" + at_pos());
        break;
      case MacroName::PMin:
        require(group_count == 1 && app.groups[0].size() == 1, Errc::parse_error,
                "PMin takes one arrow" + at_pos());
        break;
      case MacroName::Gen:
        require((group_count == 2 || group_count == 3) &&
                    static_cast<int64_t>(app.groups.back().size()) == app.param && app.param >= 1,
                Errc::parse_error,
                "Gen takes one or two target groups and a generator group of its subscript size" +
                    at_pos());
        for (size_t g = 0; g + 1 < app.groups.size(); ++g)
          require(!app.groups[g].empty(), Errc::parse_error, "empty target group" + at_pos());
        break;
      case MacroName::DomEq: {
        require(group_count >= 1 && app.param >= 1, Errc::parse_error,
                "DomEq needs a positive subscript" + at_pos());
        int64_t total = 0;
        for (const auto& grp : app.groups) total += static_cast<int64_t>(grp.size());
        require(app.param <= total, Errc::parse_error,
                "DomEq subscript exceeds the argument count" + at_pos());
        break;
      }
    }
  }

  TermPtr parse_term() {
    std::vector<TermPtr> operands{parse_cterm()};
    std::vector<TermKind> ops;
    while (at_kw("o") || at_punct("*")) {
      ops.push_back(at_kw("o") ? TermKind::comp : TermKind::mul);
      next();
      operands.push_back(parse_cterm());
    }
    // right-associative fold
    TermPtr acc = operands.back();
    for (size_t i = operands.size() - 1; i-- > 0;) {
      const TermKind op = ops[i];
      const Sort need = op == TermKind::comp ? Sort::arrow : Sort::group;
      require(operands[i]->sort == need && acc->sort == need, Errc::sort_mismatch,
              op == TermKind::comp ? "'o' composes arrows" + at_pos()
                                   : "'*' multiplies group elements" + at_pos());
      acc = Term::apply(op, {operands[i], acc});
    }
    return acc;
  }

  TermPtr parse_cterm() {
    if (at_punct("(")) {
      next();
      TermPtr t = parse_term();
      expect(")");
      return t;
    }
    require(at_ident(), Errc::parse_error, "expected a term" + at_pos());
    const std::string head = eat_ident();
    if (head == "one") return Term::apply(TermKind::one, {});
    const auto unary = [&](TermKind k, Sort arg_sort) {
      expect("(");
      TermPtr t = parse_term();
      expect(")");
      require(t->sort == arg_sort, Errc::sort_mismatch,
              head + " applied to the wrong sort" + at_pos());
      return Term::apply(k, {std::move(t)});
    };
    if (head == "dom") return unary(TermKind::dom, Sort::arrow);
    if (head == "cod") return unary(TermKind::cod, Sort::arrow);
    if (head == "id") return unary(TermKind::id, Sort::object);
    if (head == "C") return unary(TermKind::cyc, Sort::object);
    if (head == "inv") {
      expect("(");
      TermPtr t = parse_term();
      expect(")");
      require(t->sort != Sort::object, Errc::sort_mismatch,
              "inv applies to arrows or group elements" + at_pos());
      return Term::apply(TermKind::inv, {std::move(t)});
    }
    if (head == "pow") {
      expect("(");
      TermPtr t = parse_term();
      expect(",");
      const IntExpr e = parse_int_expr();
      expect(")");
      require(t->sort != Sort::object, Errc::sort_mismatch,
              "pow applies to arrows or group elements" + at_pos());
      return Term::apply(TermKind::pow, {std::move(t)}, e);
    }
    const auto it = scope_.find(head);
    require(it != scope_.end(), Errc::unknown_name, "unknown symbol '" + head + "'" + at_pos());
    return Term::make_var(head, it->second);
  }
};

}  // namespace

Sequent parse_sequent(const std::string& text) {
  Parser p(text);
  Sequent s = p.parse_sequent_all();
  if (s.label.empty()) s.label = print_sequent(s);
  return s;
}

std::vector<Sequent> parse_corpus(const std::string& content) {
  std::vector<Sequent> out;
  std::string stanza, label;
  std::string pending_label;
  size_t i = 0;
  const auto flush = [&]() {
    if (stanza.find_first_not_of(" \t\n") == std::string::npos) {
      stanza.clear();
      return;
    }
    Sequent s = parse_sequent(stanza);
    if (!pending_label.empty()) s.label = pending_label;
    out.push_back(std::move(s));
    stanza.clear();
    pending_label.clear();
  };
  while (i <= content.size()) {
    const size_t eol = content.find('\n', i);
    std::string line =
        content.substr(i, eol == std::string::npos ? std::string::npos : eol - i);
    i = eol == std::string::npos ? content.size() + 1 : eol + 1;
    const size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') {
      std::string text = line.substr(first + 1);
      const size_t start = text.find_first_not_of(" \t");
      pending_label = start == std::string::npos ? "" : text.substr(start);
      continue;
    }
    if (first == std::string::npos) {
      flush();
      continue;
    }
    stanza += line + "\n";
  }
  flush();
  return out;
}

}  // namespace cyclo::logic
