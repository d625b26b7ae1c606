#include "secant/exact/multipoly.hpp"

#include <numeric>

#include "secant/error.hpp"

namespace secant {
namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(std::size_t variables, const Rational& c) {
  MultiPoly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw Error(ErrorKind::OutOfRange, "variable index out of range");
  Exponents e(variables, 0);
  e[index] = 1;
  MultiPoly p(variables);
  p.add_term(e, 1);
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.begin()->first));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = degree_of(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (degree_of(e) != d) return false;
  return true;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != variables_) throw Error(ErrorKind::ShapeMismatch, "exponent length != variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != variables_) throw Error(ErrorKind::ShapeMismatch, "evaluation point has wrong length");
  Rational out = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < variables_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    out += term;
  }
  return out;
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (variables_ != other.variables_)
    throw Error(ErrorKind::ShapeMismatch, "polynomials live in different rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.variables_);
  Exponents e(a.variables_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) {
    return i < names.size() ? names[i] : "x" + std::to_string(i);
  };
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool constant = degree_of(e) == 0;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string monomial;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += name(i);
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (constant) {
      out += secant::to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += secant::to_string(magnitude) + "*" + monomial;
    }
  }
  return out;
}

}  // namespace secant
