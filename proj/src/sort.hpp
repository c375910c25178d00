#pragma once

#include <memory>
#include <string>

namespace hawk {

// Simple sorts: N | sigma -> tau. Immutable, value-semantic.
class Sort {
 public:
  Sort() = default;  // N
  static Sort nat() { return Sort(); }
  static Sort arrow(Sort dom, Sort cod);

  bool is_nat() const { return node_ == nullptr; }
  bool is_arrow() const { return node_ != nullptr; }
  const Sort& dom() const;
  const Sort& cod() const;

  // depth(N) = 0; depth(sigma -> tau) = 1 + max(depth sigma, depth tau)
  int depth() const;

  std::string show() const;  // "N", "N -> N", "(N -> N) -> N", ...

  friend bool operator==(const Sort& a, const Sort& b);
  friend bool operator!=(const Sort& a, const Sort& b) { return !(a == b); }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;  // null = N
};

struct Sort::Node {
  Sort dom, cod;
  int depth;
};

inline const Sort& Sort::dom() const { return node_->dom; }
inline const Sort& Sort::cod() const { return node_->cod; }
inline int Sort::depth() const { return node_ ? node_->depth : 0; }

}  // namespace hawk
