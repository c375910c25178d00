#include "sort.hpp"

#include <algorithm>

namespace hawk {

Sort Sort::arrow(Sort dom, Sort cod) {
  Sort s;
  int d = 1 + std::max(dom.depth(), cod.depth());
  s.node_ = std::make_shared<const Node>(Node{std::move(dom), std::move(cod), d});
  return s;
}

bool operator==(const Sort& a, const Sort& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_nat() || b.is_nat()) return a.is_nat() && b.is_nat();
  if (a.depth() != b.depth()) return false;
  return a.dom() == b.dom() && a.cod() == b.cod();
}

std::string Sort::show() const {
  if (is_nat()) return "N";
  std::string lhs = dom().is_arrow() ? "(" + dom().show() + ")" : dom().show();
  return lhs + " -> " + cod().show();
}

}  // namespace hawk
