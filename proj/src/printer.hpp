#pragma once

#include <string>

#include "kernel.hpp"

namespace hawk {

// Concrete-syntax rendering. Binder display names are refreshed on the way
// out so that reparsing binds the same structure, and reserved '#' names are
// rendered through a consistent '_' renaming. parse(print(a)) is alpha-equal
// to a for '#'-free inputs.
std::string show_sort(const Sort& s);
std::string show_term(const Term& t);
std::string show_formula(const Formula& f);
std::string show_proof(const Proof& p);

// Display-insensitive canonical renderings (de Bruijn indices printed as-is);
// equal strings iff alpha-equal. Used as joinability keys.
std::string canonical_term(const Term& t);
std::string canonical_formula(const Formula& f);
std::string canonical_proof(const Proof& p);

// One whole theorem declaration, all parts rendered under a single
// consistent renaming of reserved names.
std::string show_theorem_decl(const std::string& name, const Signature& sig, const Context& ctx,
                              const Formula& goal, const Proof& proof);

}  // namespace hawk
