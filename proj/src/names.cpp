#include "names.hpp"

namespace hawk {

std::string renamed(const std::string& base, RenameTag tag) {
  switch (tag) {
    case RenameTag::one: return base + "#1";
    case RenameTag::two: return base + "#2";
    case RenameTag::pm: return base + "#pm";
  }
  return base;
}

bool is_reserved_name(const std::string& name) {
  return name.find('#') != std::string::npos;
}

std::string fresh_name(std::string hint, const NameSet& avoid) {
  if (hint.empty()) hint = "x";
  while (avoid.count(hint)) hint += '\'';
  return hint;
}

std::string sanitize_name(const std::string& name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) out += (c == '#') ? '_' : c;
  return out;
}

}  // namespace hawk
