#pragma once

#include <map>
#include <memory>
#include <string>

#include "names.hpp"
#include "sort.hpp"

namespace hawk {

enum class TermKind { free_var, bound_var, lam, app, zero, succ, rec };

// System T terms in locally nameless form: bound occurrences are de Bruijn
// indices, free occurrences are names, binders retain a display name that
// carries no meaning for alpha_eq or substitution.
class Term {
 public:
  Term() = default;  // empty slot, only used inside nodes

  static Term free_var(std::string name);
  static Term bound(int index);
  static Term zero();
  static Term succ(Term t);
  static Term app(Term fn, Term arg);
  // body already refers to the binder as index 0
  static Term lam_raw(std::string display, Sort sort, Term body);
  // convenience: abstracts free occurrences of `name` in body
  static Term lam(const std::string& name, const Sort& sort, Term body);
  static Term rec(Sort result, Term base, Term step, Term scrut);

  TermKind kind() const;
  const std::string& name() const;  // free_var / lam display
  int index() const;
  const Sort& sort() const;  // lam binder / rec result
  const Term& body() const;  // lam
  const Term& fn() const;    // app
  const Term& arg() const;   // app
  const Term& succ_arg() const;
  const Term& rec_base() const;
  const Term& rec_step() const;
  const Term& rec_scrut() const;

  bool empty() const { return n_ == nullptr; }
  bool same_node(const Term& o) const { return n_ == o.n_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Term make(Node n);
  std::shared_ptr<const Node> n_;
};

struct Term::Node {
  TermKind kind;
  std::string name;
  int index = 0;
  Sort sort;
  Term a, b, c;
};

inline TermKind Term::kind() const { return n_->kind; }
inline const std::string& Term::name() const { return n_->name; }
inline int Term::index() const { return n_->index; }
inline const Sort& Term::sort() const { return n_->sort; }
inline const Term& Term::body() const { return n_->a; }
inline const Term& Term::fn() const { return n_->a; }
inline const Term& Term::arg() const { return n_->b; }
inline const Term& Term::succ_arg() const { return n_->a; }
inline const Term& Term::rec_base() const { return n_->a; }
inline const Term& Term::rec_step() const { return n_->b; }
inline const Term& Term::rec_scrut() const { return n_->c; }

using TermSubst = std::map<std::string, Term>;

// Replaces the hole (index k at the outside) of a binder body by `image`;
// `image` must be locally closed, so no index shifting is ever needed.
Term open_term_at(const Term& t, int k, const Term& image);
inline Term open_term(const Term& body, const Term& image) { return open_term_at(body, 0, image); }

// Inverse: turns free occurrences of `name` into index k at the outside.
Term close_term_at(const Term& t, int k, const std::string& name);
inline Term close_term(const Term& t, const std::string& name) { return close_term_at(t, 0, name); }

// Simultaneous capture-avoiding substitution of free variables.
Term subst_term(const Term& t, const TermSubst& theta);

NameSet free_term_vars(const Term& t);
void collect_free_term_vars(const Term& t, NameSet& out);

bool alpha_eq_term(const Term& a, const Term& b);

// Numeral helpers: S^n 0.
Term numeral(unsigned n);
bool is_numeral(const Term& t, unsigned* value = nullptr);

}  // namespace hawk
