#include "toriclab/arith.hpp"
#include "toriclab/matrix.hpp"

namespace toriclab {

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x != 0) g = gcd(g, x);
    if (g == 1) break;
  }
  return abs(g);
}

bool is_zero(std::span<const Integer> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVector primitive(std::span<const Integer> v) {
  IntVector out(v.begin(), v.end());
  Integer g = content(v);
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

IntVector primitive(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, denominator(x));
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(numerator(x) * (l / denominator(x)));
  return primitive(std::span<const Integer>(out));
}

IntVector to_integer(std::span<const Rational> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (denominator(x) != 1) throw Error("non-integral rational in to_integer");
    out.push_back(numerator(x));
  }
  return out;
}

RatVector to_rational(std::span<const Integer> v) {
  return RatVector(v.begin(), v.end());
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw InputError("dot product length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InputError("dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw InputError("dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * Rational(b[i]);
  return s;
}

std::string to_string(const Integer& x) { return x.str(); }
std::string to_string(const Rational& x) { return x.str(); }

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

IntMatrix clear_row_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& x : m.row(r)) l = lcm(l, denominator(x));
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = numerator(m(r, c)) * (l / denominator(m(r, c)));
  }
  return out;
}

}  // namespace toriclab
