#include "secant/exact/binary_form.hpp"

#include <algorithm>
#include <utility>

#include "secant/error.hpp"
#include "secant/exact/linear_algebra.hpp"

namespace secant {
namespace {

// Univariate polynomials in s, ascending coefficients, no trailing zeros.
using Uni = std::vector<Rational>;

void trim(Uni& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int uni_degree(const Uni& p) { return static_cast<int>(p.size()) - 1; }

Uni make_monic(Uni p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

// Returns (quotient, remainder).
std::pair<Uni, Uni> divmod(Uni a, const Uni& b) {
  trim(a);
  if (b.empty()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (a.size() < b.size()) return {Uni{}, a};
  Uni q(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational coeff = a[k + b.size() - 1] / lead;
    q[k] = coeff;
    if (coeff == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= coeff * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Uni uni_gcd(Uni a, Uni b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Uni derivative(const Uni& p) {
  Uni out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * Rational(static_cast<long>(k)));
  trim(out);
  return out;
}

Rational uni_eval(const Uni& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

// Dehomogenization at t = 1 with the power of t split off: f = t^e * F(s, t)
// and F(s, 1) is returned with degree deg(f) - e.
Uni dehomogenize(const BinaryForm& f, int& t_power) {
  const auto& c = f.coefficients();
  t_power = f.t_multiplicity();
  const int deg = f.degree();
  Uni out(static_cast<std::size_t>(deg - t_power + 1));
  for (int p = 0; p <= deg - t_power; ++p) out[static_cast<std::size_t>(p)] = c[static_cast<std::size_t>(deg - p)];
  trim(out);
  return out;
}

// Sign variations of a Sturm chain at x.
int variations(const std::vector<Uni>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(uni_eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Rational floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

// The rational with the smallest denominator in the open interval (lo, hi),
// lo < hi; hi_infinite marks hi = +infinity.
Rational simplest_between(const Rational& lo, const Rational& hi, bool hi_infinite) {
  const Rational fl = floor_of(lo);
  const Rational next = fl + 1;
  if (hi_infinite || next < hi) return next;
  // No integer strictly inside: lo and hi share the integer part fl (hi may equal fl + 1).
  const Rational frac_hi = hi - fl;
  const Rational frac_lo = lo - fl;
  // x = fl + 1/y with y in (1/frac_hi, 1/frac_lo).
  if (frac_lo == 0) return fl + 1 / simplest_between(1 / frac_hi, Rational(0), true);
  return fl + 1 / simplest_between(1 / frac_hi, 1 / frac_lo, false);
}

// An integer polynomial with a rational root has a root modulo every prime
// that does not divide its leading coefficient.
bool may_have_rational_root(const Uni& integral, const Integer& lead) {
  static constexpr unsigned long kPrimes[] = {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157};
  for (const unsigned long prime : kPrimes) {
    if (mpz_divisible_ui_p(lead.get_mpz_t(), prime)) continue;
    std::vector<unsigned long> residues;
    for (const auto& c : integral) residues.push_back(mpz_fdiv_ui(c.get_num_mpz_t(), prime));
    bool found = false;
    for (unsigned long x = 0; x < prime && !found; ++x) {
      unsigned long value = 0;
      for (auto it = residues.rbegin(); it != residues.rend(); ++it) value = (value * x + *it) % prime;
      found = value == 0;
    }
    if (!found) return false;
  }
  return true;
}

// Rational roots of a univariate polynomial with nonzero constant or not; the
// chain works on the squarefree part scaled to primitive integer coefficients.
std::vector<Rational> uni_rational_roots(const Uni& input) {
  Uni p = input;
  trim(p);
  std::vector<Rational> roots;
  if (uni_degree(p) < 1) return roots;
  const Uni g = uni_gcd(p, derivative(p));
  Uni sf = divmod(p, g).first;
  sf = to_rationals(primitive_integer_vector(sf));
  const Integer lead = abs(to_integer(sf.back()));
  if (!may_have_rational_root(sf, lead)) return roots;

  std::vector<Uni> chain{sf, derivative(sf)};
  while (uni_degree(chain.back()) > 0) {
    Uni r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }

  Rational bound = 0;
  for (std::size_t k = 0; k + 1 < sf.size(); ++k) bound = std::max<Rational>(bound, Rational(abs(sf[k])) / Rational(lead));
  bound += 1;
  // Distinct rationals with denominators <= lead differ by at least 1/lead^2.
  const Rational width_target = Rational(1) / Rational(lead * lead);

  struct Interval {
    Rational lo, hi;  // (lo, hi]
  };
  std::vector<Interval> work{{-bound, bound}};
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    const int count = variations(chain, iv.lo) - variations(chain, iv.hi);
    if (count == 0) continue;
    if (count == 1 && iv.hi - iv.lo < width_target) {
      if (uni_eval(sf, iv.hi) == 0) {
        roots.push_back(iv.hi);
        continue;
      }
      const Rational candidate = simplest_between(iv.lo, iv.hi, false);
      if (uni_eval(sf, candidate) == 0) roots.push_back(candidate);
      continue;
    }
    const Rational mid = (iv.lo + iv.hi) / 2;
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

BinaryForm::BinaryForm(std::vector<Rational> coefficients, bool zero)
    : coefficients_(std::move(coefficients)), zero_(zero) {}

BinaryForm::BinaryForm(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw Error(ErrorKind::EmptyInput, "a binary form needs degree + 1 coefficients");
  zero_ = std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& q) { return q == 0; });
}

BinaryForm BinaryForm::zero(int degree) {
  if (degree < 0) throw Error(ErrorKind::OutOfRange, "negative degree");
  return BinaryForm(std::vector<Rational>(static_cast<std::size_t>(degree) + 1, Rational(0)), true);
}

BinaryForm BinaryForm::one() { return BinaryForm(std::vector<Rational>{Rational(1)}); }

BinaryForm BinaryForm::linear(const Rational& s_coeff, const Rational& t_coeff) {
  return BinaryForm(std::vector<Rational>{s_coeff, t_coeff});
}

BinaryForm BinaryForm::from_poly(const MultiPoly& p, int degree) {
  if (p.variable_count() != 2) throw Error(ErrorKind::ShapeMismatch, "binary forms have two variables");
  if (p.is_zero()) return zero(degree);
  if (!p.is_homogeneous() || p.total_degree() != degree)
    throw Error(ErrorKind::NonHomogeneous, "polynomial is not homogeneous of degree " + std::to_string(degree));
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
  for (const auto& [e, v] : p.terms()) c[e[1]] = v;
  return BinaryForm(std::move(c));
}

Rational BinaryForm::evaluate(const Rational& s, const Rational& t) const {
  Rational out = 0;
  const int deg = degree();
  for (int k = 0; k <= deg; ++k) {
    const auto& c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational term = c;
    for (int i = 0; i < deg - k; ++i) term *= s;
    for (int i = 0; i < k; ++i) term *= t;
    out += term;
  }
  return out;
}

BinaryForm BinaryForm::monic() const {
  if (zero_) return *this;
  const Rational lead = coefficients_[static_cast<std::size_t>(t_multiplicity())];
  std::vector<Rational> c = coefficients_;
  for (auto& q : c) q /= lead;
  return BinaryForm(std::move(c), false);
}

int BinaryForm::t_multiplicity() const {
  if (zero_) throw Error(ErrorKind::InvalidArgument, "t-multiplicity of the zero form");
  int k = 0;
  while (coefficients_[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

MultiPoly BinaryForm::to_poly() const {
  MultiPoly p(2);
  const auto deg = static_cast<unsigned>(degree());
  for (unsigned k = 0; k <= deg; ++k) p.add_term({deg - k, k}, coefficients_[k]);
  return p;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  const int deg = a.degree() + b.degree();
  if (a.zero_ || b.zero_) return BinaryForm::zero(deg);
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return BinaryForm(std::move(c));
}

BinaryForm operator*(const BinaryForm& a, const Rational& c) {
  std::vector<Rational> out = a.coefficients_;
  for (auto& q : out) q *= c;
  return BinaryForm(std::move(out));
}

std::string BinaryForm::to_string() const {
  if (zero_) return "0";
  std::string out;
  bool first = true;
  const int deg = degree();
  for (int k = 0; k <= deg; ++k) {
    const Rational& c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string monomial;
    auto power = [](const char* v, int e) {
      if (e == 0) return std::string();
      return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
    };
    const std::string sp = power("s", deg - k);
    const std::string tp = power("t", k);
    monomial = sp.empty() ? tp : (tp.empty() ? sp : sp + "*" + tp);
    if (monomial.empty()) {
      out += secant::to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += secant::to_string(magnitude) + "*" + monomial;
    }
  }
  return out;
}

BinaryForm binary_gcd(std::span<const BinaryForm> forms) {
  if (forms.empty()) throw Error(ErrorKind::EmptyInput, "binary_gcd needs at least one form");
  bool any = false;
  int t_power = 0;
  Uni g;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    int e = 0;
    Uni u = dehomogenize(f, e);
    if (!any) {
      t_power = e;
      g = make_monic(u);
      any = true;
    } else {
      t_power = std::min(t_power, e);
      g = uni_gcd(g, u);
    }
  }
  if (!any) return BinaryForm::zero(forms.front().degree());
  // Rehomogenize: G = t^(t_power) * t^deg(g) * g(s/t).
  const int gdeg = uni_degree(g);
  const int total = gdeg + t_power;
  std::vector<Rational> c(static_cast<std::size_t>(total) + 1, Rational(0));
  for (int p = 0; p <= gdeg; ++p) c[static_cast<std::size_t>(total - p)] = g[static_cast<std::size_t>(p)];
  return BinaryForm(std::move(c));
}

BinaryForm divide_exact(const BinaryForm& a, const BinaryForm& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero form");
  const int qdeg = a.degree() - b.degree();
  if (qdeg < 0) throw Error(ErrorKind::InvalidArgument, "divisor has larger degree");
  if (a.is_zero()) return BinaryForm::zero(qdeg);
  // Long division in the coefficient index, leading with the lowest t-power of b.
  const int shift = b.t_multiplicity();
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> q(static_cast<std::size_t>(qdeg) + 1, Rational(0));
  const auto& bc = b.coefficients();
  const Rational lead = bc[static_cast<std::size_t>(shift)];
  for (int k = 0; k <= qdeg; ++k) {
    const Rational coeff = rem[static_cast<std::size_t>(k + shift)] / lead;
    q[static_cast<std::size_t>(k)] = coeff;
    if (coeff == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= coeff * bc[static_cast<std::size_t>(j)];
  }
  if (!is_zero(rem)) throw Error(ErrorKind::InvalidArgument, "form is not divisible");
  return BinaryForm(std::move(q));
}

bool divides(const BinaryForm& divisor, const BinaryForm& f) {
  try {
    divide_exact(f, divisor);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Rational resultant(const BinaryForm& a, const BinaryForm& b) {
  const auto m = static_cast<std::size_t>(a.degree());
  const auto n = static_cast<std::size_t>(b.degree());
  RationalMatrix s(m + n, m + n, Rational(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = a.coefficients()[k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = b.coefficients()[k];
  return determinant(s);
}

std::vector<BinaryRoot> rational_roots(const BinaryForm& f) {
  std::vector<BinaryRoot> out;
  if (f.is_zero()) return out;
  int t_power = 0;
  const Uni u = dehomogenize(f, t_power);
  if (t_power > 0) out.push_back({Integer(1), Integer(0)});
  for (const auto& r : uni_rational_roots(u)) out.push_back({r.get_num(), r.get_den()});
  return out;
}

}  // namespace secant
