#include "formula.hpp"

#include <utility>

namespace hawk {

Formula Formula::make(Node n) { return Formula(std::make_shared<const Node>(std::move(n))); }

Formula Formula::eq(Sort sort, Term lhs, Term rhs) {
  Node n;
  n.kind = FormulaKind::eq;
  n.sort = std::move(sort);
  n.t = std::move(lhs);
  n.u = std::move(rhs);
  return make(std::move(n));
}

Formula Formula::bot() {
  Node n;
  n.kind = FormulaKind::bot;
  return make(std::move(n));
}

Formula Formula::null_of(Term t) {
  Node n;
  n.kind = FormulaKind::null;
  n.t = std::move(t);
  return make(std::move(n));
}

Formula Formula::imp(Formula l, Formula r) {
  Node n;
  n.kind = FormulaKind::imp;
  n.a = std::move(l);
  n.b = std::move(r);
  return make(std::move(n));
}

Formula Formula::land(Formula l, Formula r) {
  Node n;
  n.kind = FormulaKind::land;
  n.a = std::move(l);
  n.b = std::move(r);
  return make(std::move(n));
}

Formula Formula::forall_raw(std::string display, Sort sort, Formula body) {
  Node n;
  n.kind = FormulaKind::forall;
  n.name = std::move(display);
  n.sort = std::move(sort);
  n.a = std::move(body);
  return make(std::move(n));
}

Formula Formula::forall(const std::string& name, const Sort& sort, Formula body) {
  return forall_raw(name, sort, close_formula(body, name));
}

Formula Formula::exists_raw(std::string display, Sort sort, Formula body) {
  Node n;
  n.kind = FormulaKind::exists;
  n.name = std::move(display);
  n.sort = std::move(sort);
  n.a = std::move(body);
  return make(std::move(n));
}

Formula Formula::exists(const std::string& name, const Sort& sort, Formula body) {
  return exists_raw(name, sort, close_formula(body, name));
}

Formula open_formula_at(const Formula& f, int k, const Term& image) {
  switch (f.kind()) {
    case FormulaKind::bot:
      return f;
    case FormulaKind::eq: {
      Term l = open_term_at(f.lhs(), k, image);
      Term r = open_term_at(f.rhs(), k, image);
      if (l.same_node(f.lhs()) && r.same_node(f.rhs())) return f;
      return Formula::eq(f.eq_sort(), l, r);
    }
    case FormulaKind::null: {
      Term t = open_term_at(f.null_arg(), k, image);
      return t.same_node(f.null_arg()) ? f : Formula::null_of(t);
    }
    case FormulaKind::imp: {
      Formula a = open_formula_at(f.left(), k, image);
      Formula b = open_formula_at(f.right(), k, image);
      if (a.same_node(f.left()) && b.same_node(f.right())) return f;
      return Formula::imp(a, b);
    }
    case FormulaKind::land: {
      Formula a = open_formula_at(f.left(), k, image);
      Formula b = open_formula_at(f.right(), k, image);
      if (a.same_node(f.left()) && b.same_node(f.right())) return f;
      return Formula::land(a, b);
    }
    case FormulaKind::forall: {
      Formula b = open_formula_at(f.body(), k + 1, image);
      return b.same_node(f.body()) ? f : Formula::forall_raw(f.binder(), f.binder_sort(), b);
    }
    case FormulaKind::exists: {
      Formula b = open_formula_at(f.body(), k + 1, image);
      return b.same_node(f.body()) ? f : Formula::exists_raw(f.binder(), f.binder_sort(), b);
    }
  }
  return f;
}

Formula close_formula_at(const Formula& f, int k, const std::string& name) {
  switch (f.kind()) {
    case FormulaKind::bot:
      return f;
    case FormulaKind::eq:
      return Formula::eq(f.eq_sort(), close_term_at(f.lhs(), k, name),
                         close_term_at(f.rhs(), k, name));
    case FormulaKind::null:
      return Formula::null_of(close_term_at(f.null_arg(), k, name));
    case FormulaKind::imp:
      return Formula::imp(close_formula_at(f.left(), k, name),
                          close_formula_at(f.right(), k, name));
    case FormulaKind::land:
      return Formula::land(close_formula_at(f.left(), k, name),
                           close_formula_at(f.right(), k, name));
    case FormulaKind::forall:
      return Formula::forall_raw(f.binder(), f.binder_sort(),
                                 close_formula_at(f.body(), k + 1, name));
    case FormulaKind::exists:
      return Formula::exists_raw(f.binder(), f.binder_sort(),
                                 close_formula_at(f.body(), k + 1, name));
  }
  return f;
}

namespace {

Formula subst_formula_go(const Formula& f, const TermSubst& theta, const NameSet& image_fvs) {
  switch (f.kind()) {
    case FormulaKind::bot:
      return f;
    case FormulaKind::eq:
      return Formula::eq(f.eq_sort(), subst_term(f.lhs(), theta), subst_term(f.rhs(), theta));
    case FormulaKind::null:
      return Formula::null_of(subst_term(f.null_arg(), theta));
    case FormulaKind::imp:
      return Formula::imp(subst_formula_go(f.left(), theta, image_fvs),
                          subst_formula_go(f.right(), theta, image_fvs));
    case FormulaKind::land:
      return Formula::land(subst_formula_go(f.left(), theta, image_fvs),
                           subst_formula_go(f.right(), theta, image_fvs));
    case FormulaKind::forall:
    case FormulaKind::exists: {
      std::string d = f.binder();
      if (image_fvs.count(d)) {
        NameSet avoid = image_fvs;
        collect_free_formula_vars(f.body(), avoid);
        d = fresh_name(d, avoid);
      }
      Formula b = subst_formula_go(f.body(), theta, image_fvs);
      return f.kind() == FormulaKind::forall ? Formula::forall_raw(d, f.binder_sort(), b)
                                             : Formula::exists_raw(d, f.binder_sort(), b);
    }
  }
  return f;
}

}  // namespace

Formula subst_formula(const Formula& f, const TermSubst& theta) {
  if (theta.empty()) return f;
  NameSet image_fvs;
  for (const auto& [_, img] : theta) collect_free_term_vars(img, image_fvs);
  return subst_formula_go(f, theta, image_fvs);
}

void collect_free_formula_vars(const Formula& f, NameSet& out) {
  switch (f.kind()) {
    case FormulaKind::bot:
      return;
    case FormulaKind::eq:
      collect_free_term_vars(f.lhs(), out);
      collect_free_term_vars(f.rhs(), out);
      return;
    case FormulaKind::null:
      collect_free_term_vars(f.null_arg(), out);
      return;
    case FormulaKind::imp:
    case FormulaKind::land:
      collect_free_formula_vars(f.left(), out);
      collect_free_formula_vars(f.right(), out);
      return;
    case FormulaKind::forall:
    case FormulaKind::exists:
      collect_free_formula_vars(f.body(), out);
      return;
  }
}

NameSet free_formula_vars(const Formula& f) {
  NameSet out;
  collect_free_formula_vars(f, out);
  return out;
}

bool alpha_eq_formula(const Formula& a, const Formula& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::bot:
      return true;
    case FormulaKind::eq:
      return a.eq_sort() == b.eq_sort() && alpha_eq_term(a.lhs(), b.lhs()) &&
             alpha_eq_term(a.rhs(), b.rhs());
    case FormulaKind::null:
      return alpha_eq_term(a.null_arg(), b.null_arg());
    case FormulaKind::imp:
    case FormulaKind::land:
      return alpha_eq_formula(a.left(), b.left()) && alpha_eq_formula(a.right(), b.right());
    case FormulaKind::forall:
    case FormulaKind::exists:
      return a.binder_sort() == b.binder_sort() && alpha_eq_formula(a.body(), b.body());
  }
  return false;
}

Formula top_formula() { return Formula::imp(Formula::bot(), Formula::bot()); }

Formula or_formula(const Formula& l, const Formula& r) {
  NameSet avoid = free_formula_vars(l);
  collect_free_formula_vars(r, avoid);
  std::string z = fresh_name("z", avoid);
  Term zv = Term::free_var(z);
  Formula body = Formula::land(Formula::imp(Formula::eq(Sort::nat(), zv, Term::zero()), l),
                               Formula::imp(neq_formula(zv, Term::zero()), r));
  return Formula::exists(z, Sort::nat(), body);
}

Formula neq_formula(const Term& l, const Term& r) {
  return Formula::imp(Formula::eq(Sort::nat(), l, r), Formula::bot());
}

}  // namespace hawk
