#pragma once

#include <set>
#include <string>

namespace hawk {

using NameSet = std::set<std::string>;

// Tags for the duplicating renamings x -> x#1 / x#2 / x#pm.
enum class RenameTag { one, two, pm };

// Derived names carry a '#' marker, which the lexer rejects in user input,
// so images are disjoint from user names and injective in (name, tag).
std::string renamed(const std::string& base, RenameTag tag);

bool is_reserved_name(const std::string& name);

// Returns `hint` if it is not in `avoid`, otherwise hint', hint'', ...
std::string fresh_name(std::string hint, const NameSet& avoid);

// Printable stand-in for reserved names: '#' becomes '_'.
std::string sanitize_name(const std::string& name);

}  // namespace hawk
