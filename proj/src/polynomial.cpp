#include "toric/polynomial.hpp"

#include <sstream>

#include "toric/error.hpp"

namespace toric {

GradedPolynomial GradedPolynomial::monomial(Exponent e, Rational c) {
  GradedPolynomial p(e.size());
  p.add_term(e, c);
  return p;
}

GradedPolynomial GradedPolynomial::constant(std::size_t num_vars, Rational c) {
  return monomial(Exponent(num_vars, 0), std::move(c));
}

GradedPolynomial GradedPolynomial::variable(std::size_t num_vars, std::size_t i, Rational c) {
  Exponent e(num_vars, 0);
  e.at(i) = 1;
  return monomial(std::move(e), std::move(c));
}

Rational GradedPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedPolynomial::constant_term() const { return coefficient(Exponent(num_vars_, 0)); }

void GradedPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != num_vars_) {
    throw Error(ErrorCode::DimensionMismatch, "exponent length does not match variable count");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedPolynomial GradedPolynomial::partial(std::size_t var) const {
  GradedPolynomial d(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    d.terms_.emplace(std::move(f), c * e[var]);
  }
  return d;
}

GradedPolynomial GradedPolynomial::times_variable(std::size_t var) const {
  GradedPolynomial d(num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    ++f[var];
    d.terms_.emplace(std::move(f), c);
  }
  return d;
}

void GradedPolynomial::check_vars(const GradedPolynomial& o) const {
  if (o.num_vars_ != num_vars_) {
    throw Error(ErrorCode::DimensionMismatch, "polynomials in different rings");
  }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
  a.check_vars(b);
  GradedPolynomial p(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

std::string GradedPolynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest monomial first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = true;
    for (auto x : e) unit = unit && x == 0;
    if (mag != 1 || unit) os << mag;
    bool need_star = mag != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << names.at(i);
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

bool LinearSpan::insert(GradedPolynomial p) {
  while (!p.is_zero()) {
    const auto& [lead, c] = *p.terms().rbegin();
    auto it = basis_.find(lead);
    if (it == basis_.end()) {
      Exponent key = lead;
      basis_.emplace(std::move(key), std::move(p));
      return true;
    }
    const GradedPolynomial& b = it->second;
    p -= b * (c / b.terms().rbegin()->second);
  }
  return false;
}

std::vector<GradedPolynomial> LinearSpan::basis() const {
  std::vector<GradedPolynomial> out;
  for (const auto& [k, p] : basis_) out.push_back(p);
  return out;
}

}  // namespace toric
