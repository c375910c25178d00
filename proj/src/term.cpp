#include "term.hpp"

#include <utility>

namespace hawk {

Term Term::make(Node n) { return Term(std::make_shared<const Node>(std::move(n))); }

Term Term::free_var(std::string name) {
  Node n;
  n.kind = TermKind::free_var;
  n.name = std::move(name);
  return make(std::move(n));
}

Term Term::bound(int index) {
  Node n;
  n.kind = TermKind::bound_var;
  n.index = index;
  return make(std::move(n));
}

Term Term::zero() {
  Node n;
  n.kind = TermKind::zero;
  return make(std::move(n));
}

Term Term::succ(Term t) {
  Node n;
  n.kind = TermKind::succ;
  n.a = std::move(t);
  return make(std::move(n));
}

Term Term::app(Term fn, Term arg) {
  Node n;
  n.kind = TermKind::app;
  n.a = std::move(fn);
  n.b = std::move(arg);
  return make(std::move(n));
}

Term Term::lam_raw(std::string display, Sort sort, Term body) {
  Node n;
  n.kind = TermKind::lam;
  n.name = std::move(display);
  n.sort = std::move(sort);
  n.a = std::move(body);
  return make(std::move(n));
}

Term Term::lam(const std::string& name, const Sort& sort, Term body) {
  return lam_raw(name, sort, close_term(body, name));
}

Term Term::rec(Sort result, Term base, Term step, Term scrut) {
  Node n;
  n.kind = TermKind::rec;
  n.sort = std::move(result);
  n.a = std::move(base);
  n.b = std::move(step);
  n.c = std::move(scrut);
  return make(std::move(n));
}

Term open_term_at(const Term& t, int k, const Term& image) {
  switch (t.kind()) {
    case TermKind::free_var:
    case TermKind::zero:
      return t;
    case TermKind::bound_var:
      return t.index() == k ? image : t;
    case TermKind::succ: {
      Term a = open_term_at(t.succ_arg(), k, image);
      return a.same_node(t.succ_arg()) ? t : Term::succ(a);
    }
    case TermKind::app: {
      Term f = open_term_at(t.fn(), k, image);
      Term a = open_term_at(t.arg(), k, image);
      if (f.same_node(t.fn()) && a.same_node(t.arg())) return t;
      return Term::app(f, a);
    }
    case TermKind::lam: {
      Term b = open_term_at(t.body(), k + 1, image);
      return b.same_node(t.body()) ? t : Term::lam_raw(t.name(), t.sort(), b);
    }
    case TermKind::rec: {
      Term a = open_term_at(t.rec_base(), k, image);
      Term b = open_term_at(t.rec_step(), k, image);
      Term c = open_term_at(t.rec_scrut(), k, image);
      if (a.same_node(t.rec_base()) && b.same_node(t.rec_step()) && c.same_node(t.rec_scrut()))
        return t;
      return Term::rec(t.sort(), a, b, c);
    }
  }
  return t;
}

Term close_term_at(const Term& t, int k, const std::string& name) {
  switch (t.kind()) {
    case TermKind::free_var:
      return t.name() == name ? Term::bound(k) : t;
    case TermKind::bound_var:
    case TermKind::zero:
      return t;
    case TermKind::succ:
      return Term::succ(close_term_at(t.succ_arg(), k, name));
    case TermKind::app:
      return Term::app(close_term_at(t.fn(), k, name), close_term_at(t.arg(), k, name));
    case TermKind::lam:
      return Term::lam_raw(t.name(), t.sort(), close_term_at(t.body(), k + 1, name));
    case TermKind::rec:
      return Term::rec(t.sort(), close_term_at(t.rec_base(), k, name),
                       close_term_at(t.rec_step(), k, name), close_term_at(t.rec_scrut(), k, name));
  }
  return t;
}

namespace {

NameSet subst_image_fvs(const TermSubst& theta) {
  NameSet fvs;
  for (const auto& [_, img] : theta) collect_free_term_vars(img, fvs);
  return fvs;
}

Term subst_term_go(const Term& t, const TermSubst& theta, const NameSet& image_fvs) {
  switch (t.kind()) {
    case TermKind::free_var: {
      auto it = theta.find(t.name());
      return it == theta.end() ? t : it->second;
    }
    case TermKind::bound_var:
    case TermKind::zero:
      return t;
    case TermKind::succ:
      return Term::succ(subst_term_go(t.succ_arg(), theta, image_fvs));
    case TermKind::app:
      return Term::app(subst_term_go(t.fn(), theta, image_fvs),
                       subst_term_go(t.arg(), theta, image_fvs));
    case TermKind::lam: {
      // Refresh the display name if an image would shadow it; binding is by
      // index, so this only keeps display names honest for printing/checking.
      std::string d = t.name();
      if (image_fvs.count(d)) {
        NameSet avoid = image_fvs;
        collect_free_term_vars(t.body(), avoid);
        d = fresh_name(d, avoid);
      }
      return Term::lam_raw(d, t.sort(), subst_term_go(t.body(), theta, image_fvs));
    }
    case TermKind::rec:
      return Term::rec(t.sort(), subst_term_go(t.rec_base(), theta, image_fvs),
                       subst_term_go(t.rec_step(), theta, image_fvs),
                       subst_term_go(t.rec_scrut(), theta, image_fvs));
  }
  return t;
}

}  // namespace

Term subst_term(const Term& t, const TermSubst& theta) {
  if (theta.empty()) return t;
  return subst_term_go(t, theta, subst_image_fvs(theta));
}

void collect_free_term_vars(const Term& t, NameSet& out) {
  switch (t.kind()) {
    case TermKind::free_var:
      out.insert(t.name());
      return;
    case TermKind::bound_var:
    case TermKind::zero:
      return;
    case TermKind::succ:
      collect_free_term_vars(t.succ_arg(), out);
      return;
    case TermKind::app:
      collect_free_term_vars(t.fn(), out);
      collect_free_term_vars(t.arg(), out);
      return;
    case TermKind::lam:
      collect_free_term_vars(t.body(), out);
      return;
    case TermKind::rec:
      collect_free_term_vars(t.rec_base(), out);
      collect_free_term_vars(t.rec_step(), out);
      collect_free_term_vars(t.rec_scrut(), out);
      return;
  }
}

NameSet free_term_vars(const Term& t) {
  NameSet out;
  collect_free_term_vars(t, out);
  return out;
}

bool alpha_eq_term(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::free_var:
      return a.name() == b.name();
    case TermKind::bound_var:
      return a.index() == b.index();
    case TermKind::zero:
      return true;
    case TermKind::succ:
      return alpha_eq_term(a.succ_arg(), b.succ_arg());
    case TermKind::app:
      return alpha_eq_term(a.fn(), b.fn()) && alpha_eq_term(a.arg(), b.arg());
    case TermKind::lam:
      return a.sort() == b.sort() && alpha_eq_term(a.body(), b.body());
    case TermKind::rec:
      return a.sort() == b.sort() && alpha_eq_term(a.rec_base(), b.rec_base()) &&
             alpha_eq_term(a.rec_step(), b.rec_step()) &&
             alpha_eq_term(a.rec_scrut(), b.rec_scrut());
  }
  return false;
}

Term numeral(unsigned n) {
  Term t = Term::zero();
  for (unsigned i = 0; i < n; ++i) t = Term::succ(t);
  return t;
}

bool is_numeral(const Term& t, unsigned* value) {
  unsigned n = 0;
  Term cur = t;
  while (cur.kind() == TermKind::succ) {
    ++n;
    cur = cur.succ_arg();
  }
  if (cur.kind() != TermKind::zero) return false;
  if (value) *value = n;
  return true;
}

}  // namespace hawk
