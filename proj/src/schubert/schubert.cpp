#include "secant/schubert.hpp"

#include "secant/error.hpp"

namespace secant::schubert {
namespace {

void require_n(int n) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "G(1,n) needs n >= 2, got " + std::to_string(n));
}

}  // namespace

SchubertClass::SchubertClass(int n) : n_(n) { require_n(n); }

SchubertClass SchubertClass::cycle(int n, int a, int b, const Integer& coefficient) {
  SchubertClass c(n);
  c.add(a, b, coefficient);
  return c;
}

Integer SchubertClass::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Integer(0) : it->second;
}

void SchubertClass::add(int a, int b, const Integer& coefficient) {
  if (!(n_ - 1 >= a && a >= b && b >= 0)) {
    throw Error(ErrorKind::OutOfRange, "σ[" + std::to_string(a) + "," + std::to_string(b) +
                                           "] is not a cycle of G(1," + std::to_string(n_) + ")");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SchubertClass::is_homogeneous(int codim) const {
  for (const auto& [idx, c] : terms_)
    if (idx.a + idx.b != codim) return false;
  return true;
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& other) {
  if (other.n_ != n_) throw Error(ErrorKind::ShapeMismatch, "classes on different Grassmannians");
  for (const auto& [idx, c] : other.terms_) add(idx.a, idx.b, c);
  return *this;
}

std::string SchubertClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    const Integer magnitude = abs(c);
    if (magnitude != 1) out += magnitude.get_str();
    out += "σ[" + std::to_string(idx.a) + "," + std::to_string(idx.b) + "]";
  }
  return out;
}

Multidegree::Multidegree(int n, std::vector<Integer> degrees) : n_(n), degrees_(std::move(degrees)) {
  require_n(n);
  const auto expected = static_cast<std::size_t>((n - 1) / 2 + 1);
  if (degrees_.size() != expected) {
    throw Error(ErrorKind::ShapeMismatch, "a multidegree on G(1," + std::to_string(n) + ") has " +
                                              std::to_string(expected) + " entries");
  }
  for (const auto& a : degrees_)
    if (a < 0) throw Error(ErrorKind::OutOfRange, "multidegree entries are nonnegative");
}

SchubertClass Multidegree::to_class() const {
  SchubertClass c(n_);
  for (int i = 0; i <= nu(); ++i) c.add(n_ - 1 - i, i, degrees_[static_cast<std::size_t>(i)]);
  return c;
}

std::string Multidegree::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ",";
    out += degrees_[i].get_str();
  }
  return out + ")";
}

SchubertClass pieri_sigma1(const SchubertClass& c) {
  SchubertClass out(c.n());
  for (const auto& [idx, coeff] : c.terms()) {
    if (idx.a + 1 <= c.n() - 1) out.add(idx.a + 1, idx.b, coeff);
    if (idx.b + 1 <= idx.a) out.add(idx.a, idx.b + 1, coeff);
  }
  return out;
}

SchubertClass sigma1_power_closed(int n, int l) {
  require_n(n);
  if (l < 1 || l > n - 1) {
    throw Error(ErrorKind::OutOfRange, "closed form needs 1 <= l <= n-1, got l = " + std::to_string(l));
  }
  SchubertClass out(n);
  for (int i = 0; i <= l / 2; ++i) out.add(l - i, i, binomial(l - 1, i) - binomial(l - 1, i - 2));
  return out;
}

SchubertClass sigma1_power_iterative(int n, int l) {
  if (l < 0) throw Error(ErrorKind::OutOfRange, "negative power");
  SchubertClass out = SchubertClass::cycle(n, 0, 0);
  for (int k = 0; k < l; ++k) out = pieri_sigma1(out);
  return out;
}

Multidegree multidegree_of(const SchubertClass& c) {
  const int n = c.n();
  if (!c.is_homogeneous(n - 1)) {
    throw Error(ErrorKind::NonHomogeneous, "class " + c.to_string() + " is not of codimension " +
                                               std::to_string(n - 1));
  }
  std::vector<Integer> degrees;
  for (int i = 0; i <= (n - 1) / 2; ++i) degrees.push_back(c.coefficient(n - 1 - i, i));
  return Multidegree(n, std::move(degrees));
}

Integer plucker_degree(const Multidegree& m) {
  Integer total = 0;
  const int n = m.n();
  for (int i = 0; i <= m.nu(); ++i)
    total += m.degrees()[static_cast<std::size_t>(i)] * (binomial(n - 2, i) - binomial(n - 2, i - 2));
  return total;
}

Integer plucker_degree_by_pieri(const Multidegree& m) {
  SchubertClass c = m.to_class();
  for (int k = 0; k < m.n() - 1; ++k) c = pieri_sigma1(c);
  return c.coefficient(m.n() - 1, m.n() - 1);
}

Rational plucker_degree_binomial_variant(const Multidegree& m) {
  Rational total = 0;
  const int n = m.n();
  for (int i = 0; i <= m.nu(); ++i) {
    total += Rational(m.degrees()[static_cast<std::size_t>(i)]) * Rational(binomial(n, i)) *
             make_rational(n - 2 * i + 1, n - i + 1);
  }
  return total;
}

Multidegree linear_congruence_multidegree(int n) {
  require_n(n);
  std::vector<Integer> degrees;
  for (int i = 0; i <= (n - 1) / 2; ++i) degrees.push_back(binomial(n - 2, i) - binomial(n - 2, i - 2));
  return Multidegree(n, std::move(degrees));
}

Integer grassmannian_degree(int n) {
  require_n(n);
  Integer out = binomial(2 * n - 2, n);
  mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(n - 1));
  return out;
}

}  // namespace secant::schubert
