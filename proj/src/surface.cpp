#include "surface.hpp"

#include <cctype>
#include <sstream>

#include "printer.hpp"

namespace hawk {

namespace {

enum class Tok {
  ident,
  numeral,
  kw_logic,
  kw_lhaw,
  kw_lehaw,
  kw_def,
  kw_theorem,
  kw_fun,
  kw_assume,
  kw_unpack,
  kw_as,
  kw_in,
  kw_wit,
  kw_peel,
  kw_refl,
  kw_efq,
  kw_ind,
  kw_ext,
  kw_apppm,
  kw_forall,
  kw_exists,
  kw_null,
  kw_bot,
  kw_top,
  kw_rec,
  kw_succ,  // S
  kw_nat,   // N
  lparen,
  rparen,
  lbrack,
  rbrack,
  comma,
  dot,
  proj,  // .1 or .2 (value in text)
  colon,
  coloneq,
  arrow,   // ->
  darrow,  // =>
  eq,
  neq,
  land_,  // conjunction symbol
  lor_,   // disjunction symbol
  eof
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

const std::map<std::string, Tok, std::less<>>& keyword_table() {
  static const std::map<std::string, Tok, std::less<>> table = {
      {"logic", Tok::kw_logic},   {"lhaw", Tok::kw_lhaw},     {"lehaw", Tok::kw_lehaw},
      {"def", Tok::kw_def},       {"theorem", Tok::kw_theorem}, {"fun", Tok::kw_fun},
      {"assume", Tok::kw_assume}, {"unpack", Tok::kw_unpack}, {"as", Tok::kw_as},
      {"in", Tok::kw_in},         {"wit", Tok::kw_wit},       {"peel", Tok::kw_peel},
      {"refl", Tok::kw_refl},     {"efq", Tok::kw_efq},       {"ind", Tok::kw_ind},
      {"ext", Tok::kw_ext},       {"apppm", Tok::kw_apppm},   {"forall", Tok::kw_forall},
      {"exists", Tok::kw_exists}, {"null", Tok::kw_null},     {"bot", Tok::kw_bot},
      {"top", Tok::kw_top},       {"rec", Tok::kw_rec},       {"S", Tok::kw_succ},
      {"N", Tok::kw_nat},
  };
  return table;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok k, std::string t, int l, int c) {
    out.push_back(Token{k, std::move(t), l, c});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    int l = line, cl = col;
    if (c == '#') throw ParseError(l, cl, "reserved name character '#'");
    if (ident_start(c)) {
      size_t j = i;
      while (j < text.size() && ident_cont(text[j])) ++j;
      std::string word = text.substr(i, j - i);
      col += static_cast<int>(j - i);
      i = j;
      auto it = keyword_table().find(word);
      push(it != keyword_table().end() ? it->second : Tok::ident, word, l, cl);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string num = text.substr(i, j - i);
      col += static_cast<int>(j - i);
      i = j;
      push(Tok::numeral, num, l, cl);
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < text.size() && text[i + 1] == b;
    };
    if (two('-', '>')) { push(Tok::arrow, "->", l, cl); i += 2; col += 2; continue; }
    if (two('=', '>')) { push(Tok::darrow, "=>", l, cl); i += 2; col += 2; continue; }
    if (two(':', '=')) { push(Tok::coloneq, ":=", l, cl); i += 2; col += 2; continue; }
    if (two('!', '=')) { push(Tok::neq, "!=", l, cl); i += 2; col += 2; continue; }
    if (two('/', '\\')) { push(Tok::land_, "/\\", l, cl); i += 2; col += 2; continue; }
    if (two('\\', '/')) { push(Tok::lor_, "\\/", l, cl); i += 2; col += 2; continue; }
    if (c == '.' && i + 1 < text.size() && (text[i + 1] == '1' || text[i + 1] == '2') &&
        !(i + 2 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 2])))) {
      push(Tok::proj, std::string(1, text[i + 1]), l, cl);
      i += 2;
      col += 2;
      continue;
    }
    switch (c) {
      case '(': push(Tok::lparen, "(", l, cl); break;
      case ')': push(Tok::rparen, ")", l, cl); break;
      case '[': push(Tok::lbrack, "[", l, cl); break;
      case ']': push(Tok::rbrack, "]", l, cl); break;
      case ',': push(Tok::comma, ",", l, cl); break;
      case '.': push(Tok::dot, ".", l, cl); break;
      case ':': push(Tok::colon, ":", l, cl); break;
      case '=': push(Tok::eq, "=", l, cl); break;
      default:
        throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    ++i;
    ++col;
  }
  out.push_back(Token{Tok::eof, "", line, col});
  return out;
}

constexpr unsigned kMaxNumeral = 1u << 20;

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  SourceFile file() {
    SourceFile out;
    if (at(Tok::kw_logic)) {
      next();
      if (at(Tok::kw_lhaw)) out.logic = Logic::lhaw;
      else if (at(Tok::kw_lehaw)) out.logic = Logic::lehaw;
      else err("expected lhaw or lehaw");
      next();
      expect(Tok::dot, "'.'");
    }
    while (!at(Tok::eof)) {
      if (at(Tok::kw_def)) {
        out.defs.push_back(def_decl());
      } else if (at(Tok::kw_theorem)) {
        out.theorems.push_back(theorem_decl());
      } else {
        err("expected 'def' or 'theorem'");
      }
    }
    return out;
  }

  Term term_fragment() {
    Term t = term();
    expect(Tok::eof, "end of input");
    return t;
  }
  Formula formula_fragment() {
    Formula f = formula();
    expect(Tok::eof, "end of input");
    return f;
  }
  Proof proof_fragment(const NameSet& pvars) {
    proof_scope_ = pvars;
    Proof p = proof();
    expect(Tok::eof, "end of input");
    return p;
  }
  TermProgram term_program() {
    TermProgram out;
    while (at(Tok::kw_def)) out.defs.push_back(def_decl());
    out.term = term();
    expect(Tok::eof, "end of input");
    return out;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  NameSet term_scope_;   // signature names and term binders
  NameSet proof_scope_;  // hypothesis names and proof binders
  std::map<std::string, Term> defs_;

  static constexpr int kMaxNesting = 2000;
  int depth_ = 0;
  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxNesting) p.err("input nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  void next() { if (!at(Tok::eof)) ++pos_; }
  [[noreturn]] void err(const std::string& msg) const {
    throw ParseError(cur().line, cur().col,
                     msg + (cur().kind == Tok::eof ? " (at end of input)"
                                                   : " (found '" + cur().text + "')"));
  }
  void expect(Tok k, const std::string& what) {
    if (!at(k)) err("expected " + what);
    next();
  }
  std::string ident(const std::string& what) {
    if (!at(Tok::ident)) err("expected " + what);
    std::string s = cur().text;
    next();
    return s;
  }

  struct ScopeGuard {
    NameSet* set;
    std::string name;
    bool added;
    ScopeGuard(NameSet& s, const std::string& n) : set(&s), name(n) {
      added = s.insert(n).second;
    }
    ScopeGuard(ScopeGuard&& o) noexcept : set(o.set), name(std::move(o.name)), added(o.added) {
      o.added = false;
    }
    ScopeGuard(const ScopeGuard&) = delete;
    ScopeGuard& operator=(const ScopeGuard&) = delete;
    ScopeGuard& operator=(ScopeGuard&&) = delete;
    ~ScopeGuard() {
      if (added) set->erase(name);
    }
  };

  void check_binder(const std::string& name, bool as_term) {
    if (as_term && proof_scope_.count(name))
      err("name '" + name + "' is already a hypothesis name in scope");
    if (!as_term && term_scope_.count(name))
      err("name '" + name + "' is already a term variable in scope");
  }

  // --- sorts ---------------------------------------------------------------

  Sort sort() {
    DepthGuard depth_guard(*this);
    Sort lhs = sort_atom();
    if (at(Tok::arrow)) {
      next();
      return Sort::arrow(lhs, sort());
    }
    return lhs;
  }
  Sort sort_atom() {
    if (at(Tok::kw_nat)) {
      next();
      return Sort::nat();
    }
    if (at(Tok::lparen)) {
      next();
      Sort s = sort();
      expect(Tok::rparen, "')'");
      return s;
    }
    err("expected a sort");
  }

  // --- terms ---------------------------------------------------------------

  bool starts_term_atom() const {
    switch (cur().kind) {
      case Tok::ident:
      case Tok::numeral:
      case Tok::lparen:
        return true;
      default:
        return false;
    }
  }

  Term term() {
    DepthGuard depth_guard(*this);
    if (at(Tok::kw_fun)) {
      next();
      std::vector<std::pair<std::string, Sort>> binders = tbinders();
      expect(Tok::darrow, "'=>'");
      std::vector<ScopeGuard> guards;
      guards.reserve(binders.size());
      for (auto& [n, _] : binders) guards.emplace_back(term_scope_, n);
      Term body = term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = Term::lam(it->first, it->second, body);
      return body;
    }
    return sterm();
  }

  std::vector<std::pair<std::string, Sort>> tbinders() {
    std::vector<std::pair<std::string, Sort>> out;
    while (at(Tok::lparen)) {
      next();
      std::string n = ident("binder name");
      check_binder(n, true);
      expect(Tok::colon, "':'");
      Sort s = sort();
      expect(Tok::rparen, "')'");
      out.emplace_back(n, s);
    }
    if (out.empty()) err("expected '(name : sort)'");
    return out;
  }

  Term sterm() {
    if (at(Tok::kw_succ)) {
      next();
      return Term::succ(sterm());
    }
    return appterm();
  }

  Term appterm() {
    Term head = at(Tok::kw_rec) ? recterm() : term_atom();
    while (starts_term_atom()) head = Term::app(head, term_atom());
    return head;
  }

  Term recterm() {
    expect(Tok::kw_rec, "'rec'");
    expect(Tok::lbrack, "'['");
    Sort s = sort();
    expect(Tok::rbrack, "']'");
    Term base = term_atom();
    Term step = term_atom();
    Term scrut = term_atom();
    return Term::rec(s, base, step, scrut);
  }

  Term term_atom() {
    if (at(Tok::ident)) {
      std::string n = cur().text;
      if (proof_scope_.count(n) && !term_scope_.count(n))
        err("'" + n + "' names a hypothesis, not a term");
      next();
      if (!term_scope_.count(n)) {
        auto it = defs_.find(n);
        if (it != defs_.end()) return it->second;
      }
      return Term::free_var(n);
    }
    if (at(Tok::numeral)) {
      unsigned long v = std::stoul(cur().text);
      if (v > kMaxNumeral) err("numeral too large");
      next();
      return numeral(static_cast<unsigned>(v));
    }
    if (at(Tok::lparen)) {
      next();
      Term t = term();
      expect(Tok::rparen, "')'");
      return t;
    }
    err("expected a term");
  }

  // --- formulas ------------------------------------------------------------

  Formula formula() {
    DepthGuard depth_guard(*this);
    if (at(Tok::kw_forall) || at(Tok::kw_exists)) {
      bool all = at(Tok::kw_forall);
      next();
      std::string n = ident("binder name");
      check_binder(n, true);
      expect(Tok::colon, "':'");
      Sort s = sort();
      expect(Tok::dot, "'.'");
      ScopeGuard g(term_scope_, n);
      Formula body = formula();
      return all ? Formula::forall(n, s, body) : Formula::exists(n, s, body);
    }
    return formula_imp();
  }

  Formula formula_imp() {
    Formula lhs = formula_or();
    if (at(Tok::arrow)) {
      next();
      return Formula::imp(lhs, formula_imp());
    }
    return lhs;
  }

  Formula formula_or() {
    Formula lhs = formula_and();
    if (at(Tok::lor_)) {
      next();
      return or_formula(lhs, formula_or());
    }
    return lhs;
  }

  Formula formula_and() {
    Formula lhs = formula_atom();
    if (at(Tok::land_)) {
      next();
      return Formula::land(lhs, formula_and());
    }
    return lhs;
  }

  Formula formula_atom() {
    if (at(Tok::kw_bot)) {
      next();
      return Formula::bot();
    }
    if (at(Tok::kw_top)) {
      next();
      return top_formula();
    }
    if (at(Tok::kw_null)) {
      next();
      return Formula::null_of(sterm());
    }
    if (at(Tok::kw_forall) || at(Tok::kw_exists)) return formula();
    if (at(Tok::lparen)) {
      // backtrack: either a parenthesized formula or the left term of an
      // equality starting with '('
      size_t save = pos_;
      next();
      try {
        Formula f = formula();
        expect(Tok::rparen, "')'");
        if (at(Tok::eq) || at(Tok::neq)) throw ParseError(cur().line, cur().col, "");
        return f;
      } catch (const ParseError&) {
        pos_ = save;
      }
    }
    return formula_eq();
  }

  Formula formula_eq() {
    Term lhs = sterm();
    if (at(Tok::neq)) {
      next();
      return neq_formula(lhs, sterm());
    }
    expect(Tok::eq, "'=' or '!='");
    Sort s = Sort::nat();
    if (at(Tok::lbrack)) {
      next();
      s = sort();
      expect(Tok::rbrack, "']'");
    }
    return Formula::eq(s, lhs, sterm());
  }

  // --- proofs --------------------------------------------------------------

  Proof proof() {
    DepthGuard depth_guard(*this);
    if (at(Tok::kw_fun)) {
      next();
      std::vector<std::pair<std::string, Sort>> binders = tbinders();
      expect(Tok::darrow, "'=>'");
      std::vector<ScopeGuard> guards;
      guards.reserve(binders.size());
      for (auto& [n, _] : binders) guards.emplace_back(term_scope_, n);
      Proof body = proof();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = Proof::tlam(it->first, it->second, body);
      return body;
    }
    if (at(Tok::kw_assume)) {
      next();
      std::string n = ident("hypothesis name");
      check_binder(n, false);
      expect(Tok::colon, "':'");
      Formula hyp = formula();
      expect(Tok::darrow, "'=>'");
      ScopeGuard g(proof_scope_, n);
      Proof body = proof();
      return Proof::plam(n, hyp, body);
    }
    if (at(Tok::kw_unpack)) {
      next();
      Proof scrut = proof_app();
      expect(Tok::kw_as, "'as'");
      expect(Tok::lbrack, "'['");
      std::string x = ident("witness name");
      check_binder(x, true);
      ScopeGuard gx(term_scope_, x);
      expect(Tok::comma, "','");
      std::string xi = ident("hypothesis name");
      check_binder(xi, false);
      ScopeGuard gxi(proof_scope_, xi);
      expect(Tok::rbrack, "']'");
      expect(Tok::kw_in, "'in'");
      Proof body = proof();
      return Proof::ex_elim(scrut, x, xi, body);
    }
    return proof_app();
  }

  bool starts_proof_or_term_atom() const {
    switch (cur().kind) {
      case Tok::ident:
      case Tok::numeral:
      case Tok::lparen:
      case Tok::kw_wit:
      case Tok::kw_peel:
      case Tok::kw_efq:
      case Tok::kw_ind:
      case Tok::kw_ext:
      case Tok::kw_apppm:
        return true;
      default:
        return false;
    }
  }

  Proof proof_app() {
    Proof head = proof_atom();
    while (starts_proof_or_term_atom()) {
      // classify the argument: a known hypothesis name or a proof keyword
      // form is a proof argument; otherwise try a term atom first
      if (at(Tok::ident)) {
        const std::string& n = cur().text;
        if (proof_scope_.count(n) && !term_scope_.count(n)) {
          head = Proof::papp(head, proof_atom());
          continue;
        }
        head = Proof::tapp(head, term_atom());
        continue;
      }
      if (at(Tok::numeral)) {
        head = Proof::tapp(head, term_atom());
        continue;
      }
      if (at(Tok::lparen)) {
        size_t save = pos_;
        try {
          Term t = term_atom();
          head = Proof::tapp(head, t);
          continue;
        } catch (const ParseError&) {
          pos_ = save;
        }
        head = Proof::papp(head, proof_atom());
        continue;
      }
      head = Proof::papp(head, proof_atom());
    }
    return head;
  }

  Proof proof_atom() {
    Proof p = proof_atom_bare();
    while (at(Tok::proj)) {
      p = Proof::proj(cur().text == "1" ? 1 : 2, p);
      next();
    }
    return p;
  }

  std::optional<Sort> opt_sort_ann() {
    if (!at(Tok::lbrack)) return std::nullopt;
    next();
    Sort s = sort();
    expect(Tok::rbrack, "']'");
    return s;
  }

  Proof proof_atom_bare() {
    switch (cur().kind) {
      case Tok::ident: {
        std::string n = cur().text;
        if (term_scope_.count(n) || defs_.count(n))
          err("'" + n + "' names a term, not a proof");
        next();
        return Proof::pvar(n);
      }
      case Tok::kw_refl: {
        next();
        Sort s = opt_sort_ann().value_or(Sort::nat());
        return Proof::refl(s, term_atom());
      }
      case Tok::kw_peel: {
        next();
        Sort s = opt_sort_ann().value_or(Sort::nat());
        expect(Tok::lparen, "'('");
        Term t = term();
        expect(Tok::comma, "','");
        Term u = term();
        expect(Tok::comma, "','");
        Proof eq = proof();
        expect(Tok::comma, "','");
        std::string x = ident("motive variable");
        check_binder(x, true);
        expect(Tok::darrow, "'=>'");
        Formula motive;
        {
          ScopeGuard g(term_scope_, x);
          motive = formula();
        }
        expect(Tok::comma, "','");
        Proof base = proof();
        expect(Tok::rparen, "')'");
        return Proof::peel(s, t, u, eq, x, motive, base);
      }
      case Tok::kw_efq: {
        next();
        expect(Tok::lparen, "'('");
        Proof p = proof();
        expect(Tok::comma, "','");
        Formula f = formula();
        expect(Tok::rparen, "')'");
        return Proof::efq(p, f);
      }
      case Tok::kw_ind: {
        next();
        expect(Tok::lparen, "'('");
        std::string x = ident("motive variable");
        check_binder(x, true);
        expect(Tok::darrow, "'=>'");
        Formula motive;
        {
          ScopeGuard g(term_scope_, x);
          motive = formula();
        }
        expect(Tok::comma, "','");
        Proof base = proof();
        expect(Tok::comma, "','");
        Proof step = proof();
        expect(Tok::comma, "','");
        Term t = term();
        expect(Tok::rparen, "')'");
        return Proof::ind(x, motive, base, step, t);
      }
      case Tok::kw_wit: {
        next();
        expect(Tok::lparen, "'('");
        Formula target = formula();
        expect(Tok::comma, "','");
        Term t = term();
        expect(Tok::comma, "','");
        Proof p = proof();
        expect(Tok::rparen, "')'");
        return Proof::ex_intro(t, p, target);
      }
      case Tok::kw_ext: {
        next();
        expect(Tok::lbrack, "'['");
        Sort d = sort();
        expect(Tok::comma, "','");
        Sort c = sort();
        expect(Tok::rbrack, "']'");
        expect(Tok::lparen, "'('");
        Proof p = proof();
        expect(Tok::rparen, "')'");
        return Proof::ext_intro(d, c, p);
      }
      case Tok::kw_apppm: {
        next();
        expect(Tok::lbrack, "'['");
        Sort d = sort();
        expect(Tok::comma, "','");
        Sort c = sort();
        expect(Tok::rbrack, "']'");
        expect(Tok::lparen, "'('");
        Proof p = proof();
        expect(Tok::comma, "','");
        Term t = term();
        expect(Tok::comma, "','");
        Term u = term();
        expect(Tok::comma, "','");
        Proof q = proof();
        expect(Tok::rparen, "')'");
        return Proof::app_pm(d, c, p, t, u, q);
      }
      case Tok::lparen: {
        next();
        Proof p = proof();
        if (at(Tok::comma)) {
          next();
          Proof q = proof();
          expect(Tok::rparen, "')'");
          return Proof::pair(p, q);
        }
        expect(Tok::rparen, "')'");
        return p;
      }
      default:
        err("expected a proof");
    }
  }

  // --- declarations ----------------------------------------------------------

 public:
  TermDef def_decl() {
    expect(Tok::kw_def, "'def'");
    std::string name = ident("definition name");
    if (defs_.count(name) || term_scope_.count(name))
      err("duplicate definition name '" + name + "'");
    expect(Tok::colon, "':'");
    Sort s = sort();
    expect(Tok::coloneq, "':='");
    Term t = term();
    expect(Tok::dot, "'.'");
    defs_.emplace(name, t);
    return TermDef{name, s, t};
  }

  TheoremDecl theorem_decl() {
    expect(Tok::kw_theorem, "'theorem'");
    TheoremDecl out;
    out.name = ident("theorem name");
    std::vector<ScopeGuard> guards;
    while (at(Tok::lparen)) {
      next();
      std::string n = ident("variable name");
      if (out.sig.declares(n)) err("duplicate signature name '" + n + "'");
      check_binder(n, true);
      expect(Tok::colon, "':'");
      Sort s = sort();
      expect(Tok::rparen, "')'");
      out.sig.push(n, s);
      guards.emplace_back(term_scope_, n);
    }
    while (at(Tok::lbrack)) {
      next();
      std::string n = ident("hypothesis name");
      if (out.ctx.lookup(n)) err("duplicate hypothesis name '" + n + "'");
      check_binder(n, false);
      expect(Tok::colon, "':'");
      Formula f = formula();
      expect(Tok::rbrack, "']'");
      out.ctx.push(n, f);
      guards.emplace_back(proof_scope_, n);
    }
    expect(Tok::colon, "':'");
    out.goal = formula();
    expect(Tok::coloneq, "':='");
    out.proof = proof();
    expect(Tok::dot, "'.'");
    return out;
  }
};

}  // namespace

SourceFile parse_source(const std::string& text) { return Parser(text).file(); }

Term parse_term_text(const std::string& text) { return Parser(text).term_fragment(); }

Formula parse_formula_text(const std::string& text) { return Parser(text).formula_fragment(); }

Proof parse_proof_text(const std::string& text, const NameSet& pvars) {
  return Parser(text).proof_fragment(pvars);
}

TermProgram parse_term_program(const std::string& text) { return Parser(text).term_program(); }

std::string print_source(const SourceFile& file) {
  std::ostringstream o;
  o << "logic " << logic_name(file.logic) << ".\n";
  for (const auto& d : file.defs) {
    o << "\ndef " << sanitize_name(d.name) << " : " << d.sort.show() << " := "
      << show_term(d.term) << ".\n";
  }
  for (const auto& t : file.theorems) {
    o << "\n" << show_theorem_decl(t.name, t.sig, t.ctx, t.goal, t.proof) << "\n";
  }
  return o.str();
}

}  // namespace hawk
