#include "ainf/artin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ainf {

ArtinScalar::ArtinScalar(int eps_order) : n_(eps_order), c_(eps_order) {
  if (eps_order < 1) throw std::invalid_argument("ε order must be positive");
}

ArtinScalar ArtinScalar::constant(int eps_order, const Rational& c) { return monomial(eps_order, 0, 0, c); }

ArtinScalar ArtinScalar::monomial(int eps_order, int e, int s, const Rational& c) {
  ArtinScalar a(eps_order);
  a.add(e, s, c);
  return a;
}

int ArtinScalar::t_degree() const {
  int d = -1;
  for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Rational ArtinScalar::coefficient(int e, int s) const {
  if (e < 0 || e >= n_ || s < 0 || s >= static_cast<int>(c_[e].size())) return 0;
  return c_[e][s];
}

void ArtinScalar::add(int e, int s, const Rational& c) {
  if (e >= n_ || c == 0) return;
  if (e < 0 || s < 0) throw std::invalid_argument("negative exponent");
  auto& row = c_[e];
  if (static_cast<int>(row.size()) <= s) row.resize(s + 1);
  row[s] += c;
  trim();
}

void ArtinScalar::trim() {
  for (auto& row : c_)
    while (!row.empty() && row.back() == 0) row.pop_back();
}

bool ArtinScalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const auto& r) { return r.empty(); });
}

bool ArtinScalar::nilpotent() const { return c_[0].empty(); }

ArtinScalar& ArtinScalar::operator+=(const ArtinScalar& o) {
  if (o.n_ != n_) throw std::invalid_argument("mismatched ε orders");
  for (int e = 0; e < n_; ++e) {
    auto& row = c_[e];
    if (row.size() < o.c_[e].size()) row.resize(o.c_[e].size());
    for (std::size_t s = 0; s < o.c_[e].size(); ++s) row[s] += o.c_[e][s];
  }
  trim();
  return *this;
}

ArtinScalar& ArtinScalar::operator-=(const ArtinScalar& o) { return *this += o.scaled(-1); }

ArtinScalar operator*(const ArtinScalar& a, const ArtinScalar& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("mismatched ε orders");
  ArtinScalar out(a.n_);
  for (int e1 = 0; e1 < a.n_; ++e1) {
    if (a.c_[e1].empty()) continue;
    for (int e2 = 0; e1 + e2 < a.n_; ++e2) {
      if (b.c_[e2].empty()) continue;
      auto& row = out.c_[e1 + e2];
      const std::size_t need = a.c_[e1].size() + b.c_[e2].size() - 1;
      if (row.size() < need) row.resize(need);
      for (std::size_t s1 = 0; s1 < a.c_[e1].size(); ++s1) {
        if (a.c_[e1][s1] == 0) continue;
        for (std::size_t s2 = 0; s2 < b.c_[e2].size(); ++s2) row[s1 + s2] += a.c_[e1][s1] * b.c_[e2][s2];
      }
    }
  }
  out.trim();
  return out;
}

ArtinScalar ArtinScalar::scaled(const Rational& c) const {
  ArtinScalar out(n_);
  if (c == 0) return out;
  out.c_ = c_;
  for (auto& row : out.c_)
    for (auto& v : row) v *= c;
  return out;
}

ArtinScalar ArtinScalar::integrate_t() const {
  ArtinScalar out(n_);
  for (int e = 0; e < n_; ++e) {
    if (c_[e].empty()) continue;
    out.c_[e].resize(c_[e].size() + 1);
    for (std::size_t s = 0; s < c_[e].size(); ++s) out.c_[e][s + 1] = c_[e][s] / Rational(static_cast<long>(s + 1));
  }
  out.trim();
  return out;
}

ArtinScalar ArtinScalar::derivative_t() const {
  ArtinScalar out(n_);
  for (int e = 0; e < n_; ++e)
    for (std::size_t s = 1; s < c_[e].size(); ++s) out.add(e, static_cast<int>(s - 1), c_[e][s] * static_cast<long>(s));
  return out;
}

ArtinScalar ArtinScalar::at_t(const Rational& t) const {
  ArtinScalar out(n_);
  for (int e = 0; e < n_; ++e) {
    Rational acc = 0, pw = 1;
    for (const auto& v : c_[e]) {
      acc += v * pw;
      pw *= t;
    }
    out.add(e, 0, acc);
  }
  return out;
}

ArtinScalar ArtinScalar::t_part(int s) const {
  ArtinScalar out(n_);
  for (int e = 0; e < n_; ++e) out.add(e, s, coefficient(e, s));
  return out;
}

bool ArtinScalar::operator==(const ArtinScalar& o) const { return n_ == o.n_ && c_ == o.c_; }

std::string ArtinScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e < n_; ++e)
    for (std::size_t s = 0; s < c_[e].size(); ++s) {
      if (c_[e][s] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << ainf::to_string(c_[e][s]);
      if (e) os << "*eps^" << e;
      if (s) os << "*t^" << s;
    }
  return os.str();
}

}  // namespace ainf
