#ifndef QNULL_RATIONAL_HPP
#define QNULL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qnull {

// Exact arithmetic throughout: arbitrary-precision integers and rationals.
// cpp_rational keeps values reduced to lowest terms with a positive
// denominator, which is exactly the representation contract we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline int sign_of(const Rational& q) { return q.sign(); }

inline Rational make_rational(Int n, Int d) {
  if (d.is_zero()) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(std::move(n), std::move(d));
}

inline Rational rat(long n, long d = 1) { return make_rational(Int(n), Int(d)); }

inline Rational abs_val(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Canonical text form: "n" for integers, "n/d" otherwise.
inline std::string format_rational(const Rational& q) {
  std::string s = num(q).str();
  if (den(q) != 1) {
    s += '/';
    s += den(q).str();
  }
  return s;
}

inline Int factorial(int s) {
  if (s < 0) throw std::domain_error("factorial of negative integer");
  Int r = 1;
  for (int t = 2; t <= s; ++t) r *= t;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int t = 0; t < k; ++t) {
    r *= (n - t);
    r /= (t + 1);
  }
  return r;
}

}  // namespace qnull

#endif  // QNULL_RATIONAL_HPP
