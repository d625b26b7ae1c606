#include "secant/congruence.hpp"

namespace secant::congruence {
namespace {

std::vector<Integer> canonical(std::span<const Rational> coords) {
  if (coords.size() < 2) throw Error(ErrorKind::ShapeMismatch, "a projective point needs at least two coordinates");
  if (is_zero(coords)) throw Error(ErrorKind::InvalidArgument, "the zero vector is not a projective point");
  return primitive_integer_vector(coords);
}

}  // namespace

ProjPoint::ProjPoint(std::span<const Rational> coords) : coords_(canonical(coords)) {}

ProjPoint::ProjPoint(std::span<const Integer> coords) : coords_(canonical(to_rationals(coords))) {}

ProjPoint::ProjPoint(std::initializer_list<long> coords) {
  std::vector<Rational> q;
  for (long v : coords) q.emplace_back(v);
  coords_ = canonical(q);
}

std::string ProjPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += coords_[i].get_str();
  }
  return out + ")";
}

ProjLine::ProjLine(ProjPoint p0, ProjPoint p1) : p0_(std::move(p0)), p1_(std::move(p1)) {
  if (p0_.coords().size() != p1_.coords().size())
    throw Error(ErrorKind::ShapeMismatch, "line endpoints live in different spaces");
  bool independent = false;
  const auto& a = p0_.coords();
  const auto& b = p1_.coords();
  for (std::size_t i = 0; i < a.size() && !independent; ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] - a[j] * b[i] != 0) {
        independent = true;
        break;
      }
  if (!independent) throw Error(ErrorKind::InvalidArgument, "line through proportional points");
}

std::vector<Rational> ProjLine::point_at(const Rational& s, const Rational& t) const {
  std::vector<Rational> out(p0_.coords().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * Rational(p0_.coords()[i]) + t * Rational(p1_.coords()[i]);
  return out;
}

std::vector<Integer> ProjLine::plucker() const {
  const auto& a = p0_.coords();
  const auto& b = p1_.coords();
  std::vector<Rational> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) out.emplace_back(a[i] * b[j] - a[j] * b[i]);
  return primitive_integer_vector(out);
}

bool ProjLine::contains(const ProjPoint& p) const {
  if (p.coords().size() != p0_.coords().size()) return false;
  RationalMatrix m(3, p.coords().size());
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    m(0, i) = p0_.coords()[i];
    m(1, i) = p1_.coords()[i];
    m(2, i) = p.coords()[i];
  }
  return rank(m) == 2;
}

std::string ProjLine::to_string() const { return "[" + p0_.to_string() + ", " + p1_.to_string() + "]"; }

}  // namespace secant::congruence
