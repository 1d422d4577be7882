#ifndef QNULL_QUATERNION_HPP
#define QNULL_QUATERNION_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "qnull/rational.hpp"

namespace qnull {

// The quaternion algebra (a,b/Q): basis 1,i,j,k with i^2 = a, j^2 = b,
// ij = -ji = k.  Parameters are restricted to a < 0, b < 0 so that the
// norm form <1,-a,-b,ab> is positive definite and the algebra is division.
class QuatAlgebra {
 public:
  QuatAlgebra(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ >= 0 || b_ >= 0)
      throw std::invalid_argument("QuatAlgebra requires a < 0 and b < 0");
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  friend bool operator==(const QuatAlgebra& x, const QuatAlgebra& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuatAlgebra& x, const QuatAlgebra& y) {
    return !(x == y);
  }

 private:
  Rational a_, b_;
};

// Element of (a,b/Q) with exact rational coordinates in the basis 1,i,j,k.
class Quaternion {
 public:
  Quaternion(QuatAlgebra alg, Rational c0, Rational c1, Rational c2, Rational c3)
      : alg_(std::move(alg)),
        c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Quaternion zero(const QuatAlgebra& alg) {
    return Quaternion(alg, 0, 0, 0, 0);
  }
  static Quaternion one(const QuatAlgebra& alg) {
    return Quaternion(alg, 1, 0, 0, 0);
  }
  static Quaternion scalar(const QuatAlgebra& alg, Rational c) {
    return Quaternion(alg, std::move(c), 0, 0, 0);
  }
  // basis_unit(0..3) = 1, i, j, k
  static Quaternion basis_unit(const QuatAlgebra& alg, int k) {
    Quaternion u = zero(alg);
    u.c_[static_cast<std::size_t>(k)] = 1;
    return u;
  }

  const QuatAlgebra& algebra() const { return alg_; }
  const Rational& coord(int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::array<Rational, 4>& coords() const { return c_; }

  bool is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_scalar() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
  }
  bool is_one() const { return is_scalar() && c_[0] == 1; }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.alg_ == y.alg_ && x.c_ == y.c_;
  }
  friend bool operator!=(const Quaternion& x, const Quaternion& y) {
    return !(x == y);
  }

 private:
  QuatAlgebra alg_;
  std::array<Rational, 4> c_;
};

inline void require_same_algebra(const Quaternion& x, const Quaternion& y) {
  if (x.algebra() != y.algebra())
    throw std::invalid_argument("quaternions from mismatched algebras");
}

inline Quaternion add(const Quaternion& x, const Quaternion& y) {
  require_same_algebra(x, y);
  return Quaternion(x.algebra(), x.coord(0) + y.coord(0), x.coord(1) + y.coord(1),
                    x.coord(2) + y.coord(2), x.coord(3) + y.coord(3));
}

inline Quaternion sub(const Quaternion& x, const Quaternion& y) {
  require_same_algebra(x, y);
  return Quaternion(x.algebra(), x.coord(0) - y.coord(0), x.coord(1) - y.coord(1),
                    x.coord(2) - y.coord(2), x.coord(3) - y.coord(3));
}

inline Quaternion neg(const Quaternion& x) {
  return Quaternion(x.algebra(), -x.coord(0), -x.coord(1), -x.coord(2), -x.coord(3));
}

// Structure table: i^2=a, j^2=b, ij=k, ji=-k, ik=aj, ki=-aj, jk=-bi, kj=bi,
// k^2=-ab.
inline Quaternion mul(const Quaternion& x, const Quaternion& y) {
  require_same_algebra(x, y);
  const Rational& a = x.algebra().a();
  const Rational& b = x.algebra().b();
  const Rational &x0 = x.coord(0), &x1 = x.coord(1), &x2 = x.coord(2), &x3 = x.coord(3);
  const Rational &y0 = y.coord(0), &y1 = y.coord(1), &y2 = y.coord(2), &y3 = y.coord(3);
  Rational ab = a * b;
  return Quaternion(x.algebra(),
                    x0 * y0 + a * x1 * y1 + b * x2 * y2 - ab * x3 * y3,
                    x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
                    x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
                    x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1);
}

inline Quaternion scale(const Rational& c, const Quaternion& x) {
  return Quaternion(x.algebra(), c * x.coord(0), c * x.coord(1), c * x.coord(2),
                    c * x.coord(3));
}

inline Quaternion conj(const Quaternion& x) {
  return Quaternion(x.algebra(), x.coord(0), -x.coord(1), -x.coord(2), -x.coord(3));
}

inline Rational trd(const Quaternion& x) { return 2 * x.coord(0); }

// nrd(x) = x * conj(x), valued in the center.
inline Rational nrd(const Quaternion& x) {
  const Rational& a = x.algebra().a();
  const Rational& b = x.algebra().b();
  return x.coord(0) * x.coord(0) - a * x.coord(1) * x.coord(1) -
         b * x.coord(2) * x.coord(2) + a * b * x.coord(3) * x.coord(3);
}

inline Quaternion inv(const Quaternion& x) {
  if (x.is_zero()) throw std::domain_error("division by zero quaternion");
  Rational n = nrd(x);
  return scale(Rational(1) / n, conj(x));
}

// Canonical literal form, e.g. "3/2+1i-2j"; zero coordinates are dropped
// and the zero quaternion prints as "0".
inline std::string format_quaternion(const Quaternion& x) {
  static const char* units[4] = {"", "i", "j", "k"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    const Rational& c = x.coord(k);
    if (c.is_zero()) continue;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? "-" : "+";
    }
    out += format_rational(abs_val(c));
    out += units[k];
  }
  if (out.empty()) return "0";
  return out;
}

}  // namespace qnull

#endif  // QNULL_QUATERNION_HPP
