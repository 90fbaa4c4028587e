#include "ainf/formal_series.hpp"

#include <algorithm>
#include <sstream>

namespace ainf {

VariableSet::VariableSet(std::vector<bool> odd, std::vector<std::string> names)
    : odd_(std::move(odd)), names_(std::move(names)) {
  if (names_.empty())
    for (int i = 0; i < size(); ++i) names_.push_back("x" + std::to_string(i));
  if (names_.size() != odd_.size()) throw std::invalid_argument("variable name count mismatch");
}

std::shared_ptr<const VariableSet> VariableSet::from_basis(const GradedBasis& basis, ParityConvention p,
                                                           const std::string& prefix) {
  std::vector<bool> odd;
  std::vector<std::string> names;
  for (int i = 0; i < basis.size(); ++i) {
    odd.push_back(basis.variable_odd(i, p));
    names.push_back(prefix + std::to_string(i));
  }
  return std::make_shared<const VariableSet>(std::move(odd), std::move(names));
}

std::optional<SignedMonomial> canonicalize(const VariableSet& vars, std::span<const int> word) {
  SignedMonomial out;
  out.monomial.assign(word.begin(), word.end());
  auto& m = out.monomial;
  for (std::size_t k = 1; k < m.size(); ++k) {
    for (std::size_t j = k; j > 0 && m[j - 1] >= m[j]; --j) {
      if (m[j - 1] == m[j]) {
        if (vars.odd(m[j])) return std::nullopt;
        break;
      }
      if (vars.odd(m[j - 1]) && vars.odd(m[j])) out.sign = -out.sign;
      std::swap(m[j - 1], m[j]);
    }
  }
  return out;
}

std::optional<SignedMonomial> mono_mul(const VariableSet& vars, const Monomial& a, const Monomial& b) {
  Monomial word(a);
  word.insert(word.end(), b.begin(), b.end());
  return canonicalize(vars, word);
}

bool monomial_odd(const VariableSet& vars, const Monomial& m) {
  bool odd = false;
  for (int v : m) odd ^= vars.odd(v);
  return odd;
}

FormalSeries::FormalSeries(VarsPtr vars, int order_cap) : vars_(std::move(vars)), cap_(order_cap) {
  if (!vars_) throw std::invalid_argument("series without variable set");
}

FormalSeries FormalSeries::constant(VarsPtr vars, int order_cap, const Rational& c) {
  FormalSeries s(std::move(vars), order_cap);
  s.add_canonical({}, c);
  return s;
}

FormalSeries FormalSeries::variable(VarsPtr vars, int order_cap, int i) {
  FormalSeries s(std::move(vars), order_cap);
  s.add_canonical({i}, 1);
  return s;
}

void FormalSeries::add_canonical(const Monomial& m, const Rational& c) {
  if (c == 0 || static_cast<int>(m.size()) > cap_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void FormalSeries::add_word(std::span<const int> word, const Rational& c) {
  if (static_cast<int>(word.size()) > cap_) return;
  auto canon = canonicalize(*vars_, word);
  if (!canon) return;
  add_canonical(canon->monomial, canon->sign == 1 ? c : Rational(-c));
}

Rational FormalSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormalSeries::require_compatible(const FormalSeries& o) const {
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) throw std::invalid_argument("mismatched variable sets");
  if (cap_ != o.cap_) throw std::invalid_argument("mismatched order caps");
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_canonical(m, c);
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_canonical(m, -c);
  return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  a.require_compatible(b);
  FormalSeries out(a.vars_, a.cap_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (static_cast<int>(ma.size() + mb.size()) > a.cap_) continue;
      auto p = mono_mul(*a.vars_, ma, mb);
      if (!p) continue;
      Rational c = ca * cb;
      if (p->sign < 0) c = -c;
      out.add_canonical(p->monomial, c);
    }
  }
  return out;
}

FormalSeries FormalSeries::scaled(const Rational& c) const {
  FormalSeries out(vars_, cap_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

FormalSeries FormalSeries::twisted(bool flip) const {
  if (!flip) return *this;
  FormalSeries out(*this);
  for (auto& [m, c] : out.terms_)
    if (monomial_odd(*vars_, m)) c = -c;
  return out;
}

FormalSeries FormalSeries::derivative_left(int i) const {
  FormalSeries out(vars_, cap_);
  const bool odd_i = vars_->odd(i);
  for (const auto& [m, c] : terms_) {
    auto pos = std::find(m.begin(), m.end(), i);
    if (pos == m.end()) continue;
    int odd_before = 0;
    for (auto it = m.begin(); it != pos; ++it) odd_before += vars_->odd(*it);
    auto mult = std::count(m.begin(), m.end(), i);
    Monomial rest(m.begin(), pos);
    rest.insert(rest.end(), pos + 1, m.end());
    Rational v = c * mult;
    if (odd_i && (odd_before & 1)) v = -v;
    out.add_canonical(rest, v);
  }
  return out;
}

FormalSeries FormalSeries::derivative_right(int i) const {
  FormalSeries out(vars_, cap_);
  const bool odd_i = vars_->odd(i);
  for (const auto& [m, c] : terms_) {
    auto rpos = std::find(m.rbegin(), m.rend(), i);
    if (rpos == m.rend()) continue;
    auto pos = std::prev(rpos.base());
    int odd_after = 0;
    for (auto it = std::next(pos); it != m.end(); ++it) odd_after += vars_->odd(*it);
    auto mult = std::count(m.begin(), m.end(), i);
    Monomial rest(m.begin(), pos);
    rest.insert(rest.end(), std::next(pos), m.end());
    Rational v = c * mult;
    if (odd_i && (odd_after & 1)) v = -v;
    out.add_canonical(rest, v);
  }
  return out;
}

FormalSeries FormalSeries::part(int n) const {
  FormalSeries out(vars_, cap_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == n) out.terms_.emplace(m, c);
  return out;
}

FormalSeries FormalSeries::truncated(int cap) const {
  FormalSeries out(vars_, cap);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) <= cap) out.terms_.emplace(m, c);
  return out;
}

FormalSeries FormalSeries::renormalized() const {
  FormalSeries out(vars_, cap_);
  for (const auto& [m, c] : terms_) out.add_word(m, c);
  return out;
}

FormalSeries FormalSeries::parity_part(bool odd) const {
  FormalSeries out(vars_, cap_);
  for (const auto& [m, c] : terms_)
    if (monomial_odd(*vars_, m) == odd) out.terms_.emplace(m, c);
  return out;
}

bool FormalSeries::operator==(const FormalSeries& o) const {
  return cap_ == o.cap_ && *vars_ == *o.vars_ && terms_ == o.terms_;
}

std::string FormalSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << ainf::to_string(c);
    for (int v : m) os << "*" << vars_->name(v);
  }
  return os.str();
}

FormalSeries substitute(const FormalSeries& f, std::span<const FormalSeries> images, VarsPtr target_vars,
                        int cap) {
  if (static_cast<int>(images.size()) != f.vars()->size())
    throw std::invalid_argument("substitution needs one image per variable");
  FormalSeries out(target_vars, cap);
  const FormalSeries one = FormalSeries::constant(target_vars, cap, 1);
  for (const auto& [m, c] : f.terms()) {
    FormalSeries prod = one;
    for (int v : m) {
      prod = prod * images[v].truncated(cap);
      if (prod.is_zero()) break;
    }
    out += prod.scaled(c);
  }
  return out;
}

}  // namespace ainf
