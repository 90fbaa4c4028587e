#include "ainf/rational.hpp"

#include <stdexcept>

namespace ainf {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty rational");
  s = s.substr(first, last - first + 1);
  if (s.find_first_not_of("+-0123456789/") != std::string::npos)
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  auto slash = s.find('/');
  if (slash != std::string::npos && (slash == 0 || slash + 1 == s.size() || s.find('/', slash + 1) != std::string::npos))
    throw std::invalid_argument("malformed rational '" + s + "'");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

void add_term(Combination& acc, int index, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

void add_scaled(Combination& acc, const Combination& x, const Rational& c) {
  if (c == 0) return;
  for (const auto& [i, v] : x) add_term(acc, i, v * c);
}

Combination scaled(const Combination& x, const Rational& c) {
  Combination out;
  add_scaled(out, x, c);
  return out;
}

}  // namespace ainf
