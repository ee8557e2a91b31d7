#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toriclab {

/// Arbitrary precision integer (GMP backed).
using Integer = boost::multiprecision::mpz_int;
/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (files, shapes, indices).
class InputError : public Error {
 public:
  using Error::Error;
};

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

/// Floor division for integers, b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// gcd of all entries; 0 for the zero vector.
Integer content(std::span<const Integer> v);

bool is_zero(std::span<const Integer> v);
bool is_zero(std::span<const Rational> v);

/// Divides by the content. The zero vector is returned unchanged.
IntVector primitive(std::span<const Integer> v);

/// Clears denominators and divides by the content, preserving direction.
IntVector primitive(std::span<const Rational> v);

IntVector to_integer(std::span<const Rational> v);  // throws if non-integral
RatVector to_rational(std::span<const Integer> v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational dot(std::span<const Rational> a, std::span<const Integer> b);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

}  // namespace toriclab
