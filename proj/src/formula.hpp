#pragma once

#include <memory>
#include <string>

#include "term.hpp"

namespace hawk {

enum class FormulaKind { eq, bot, null, imp, land, forall, exists };

// First-order formulas over System T terms. Quantifiers bind term variables
// in the same index namespace as term-level lambdas.
class Formula {
 public:
  Formula() = default;

  static Formula eq(Sort sort, Term lhs, Term rhs);
  static Formula bot();
  static Formula null_of(Term t);
  static Formula imp(Formula l, Formula r);
  static Formula land(Formula l, Formula r);
  static Formula forall_raw(std::string display, Sort sort, Formula body);
  static Formula forall(const std::string& name, const Sort& sort, Formula body);
  static Formula exists_raw(std::string display, Sort sort, Formula body);
  static Formula exists(const std::string& name, const Sort& sort, Formula body);

  FormulaKind kind() const;
  const Sort& eq_sort() const;
  const Term& lhs() const;
  const Term& rhs() const;
  const Term& null_arg() const;
  const Formula& left() const;   // imp / land
  const Formula& right() const;  // imp / land
  const std::string& binder() const;
  const Sort& binder_sort() const;
  const Formula& body() const;

  bool empty() const { return n_ == nullptr; }
  bool same_node(const Formula& o) const { return n_ == o.n_; }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Formula make(Node n);
  std::shared_ptr<const Node> n_;
};

struct Formula::Node {
  FormulaKind kind;
  std::string name;
  Sort sort;
  Term t, u;
  Formula a, b;
};

inline FormulaKind Formula::kind() const { return n_->kind; }
inline const Sort& Formula::eq_sort() const { return n_->sort; }
inline const Term& Formula::lhs() const { return n_->t; }
inline const Term& Formula::rhs() const { return n_->u; }
inline const Term& Formula::null_arg() const { return n_->t; }
inline const Formula& Formula::left() const { return n_->a; }
inline const Formula& Formula::right() const { return n_->b; }
inline const std::string& Formula::binder() const { return n_->name; }
inline const Sort& Formula::binder_sort() const { return n_->sort; }
inline const Formula& Formula::body() const { return n_->a; }

Formula open_formula_at(const Formula& f, int k, const Term& image);
inline Formula open_formula(const Formula& body, const Term& image) {
  return open_formula_at(body, 0, image);
}
Formula close_formula_at(const Formula& f, int k, const std::string& name);
inline Formula close_formula(const Formula& f, const std::string& name) {
  return close_formula_at(f, 0, name);
}

Formula subst_formula(const Formula& f, const TermSubst& theta);

NameSet free_formula_vars(const Formula& f);
void collect_free_formula_vars(const Formula& f, NameSet& out);

bool alpha_eq_formula(const Formula& a, const Formula& b);

// Derived connectives, expanded eagerly so the kernel never sees them:
//   top        == bot -> bot
//   phi \/ psi == exists z:N. (z = 0 -> phi) /\ (z != 0 -> psi), z fresh
//   t != u     == (t = u) -> bot
Formula top_formula();
Formula or_formula(const Formula& l, const Formula& r);
Formula neq_formula(const Term& l, const Term& r);

}  // namespace hawk
