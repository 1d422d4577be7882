#ifndef QNULL_NCPOLY_HPP
#define QNULL_NCPOLY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qnull/quaternion.hpp"
#include "qnull/rational.hpp"

namespace qnull {

// One "monomial" function a_1 x_{i1} a_2 x_{i2} ... a_r x_{ir} a_{r+1}:
// r + 1 quaternion coefficients interleaved with r variable slots
// (1-based indices).  r = 0 is a constant.
struct NcMonomial {
  std::vector<Quaternion> coeffs;
  std::vector<int> vars;

  bool has_zero_coeff() const {
    for (const Quaternion& c : coeffs)
      if (c.is_zero()) return true;
    return false;
  }
};

// Polynomial function D^n -> D as a formal sum of monomial functions.  The
// representation is non-unique on purpose; equality of functions is decided
// through coordinate expansion (see coordbridge.hpp).
class NcPoly {
 public:
  NcPoly(QuatAlgebra alg, int nvars) : alg_(std::move(alg)), nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("NcPoly needs nvars >= 1");
  }

  static NcPoly zero(const QuatAlgebra& alg, int nvars) { return NcPoly(alg, nvars); }

  static NcPoly constant(const QuatAlgebra& alg, int nvars, Quaternion c) {
    NcPoly f(alg, nvars);
    if (c.algebra() != alg)
      throw std::invalid_argument("constant from mismatched algebra");
    f.push_term(NcMonomial{{std::move(c)}, {}});
    return f;
  }

  static NcPoly variable(const QuatAlgebra& alg, int nvars, int index) {
    NcPoly f(alg, nvars);
    if (index < 1 || index > nvars)
      throw std::out_of_range("variable index out of range");
    f.push_term(NcMonomial{{Quaternion::one(alg), Quaternion::one(alg)}, {index}});
    return f;
  }

  const QuatAlgebra& algebra() const { return alg_; }
  int nvars() const { return nvars_; }
  const std::vector<NcMonomial>& terms() const { return terms_; }

  // Monomials containing a zero coefficient are the zero function; they are
  // never stored.
  void push_term(NcMonomial m) {
    if (m.coeffs.size() != m.vars.size() + 1)
      throw std::invalid_argument("malformed monomial");
    for (int v : m.vars)
      if (v < 1 || v > nvars_) throw std::out_of_range("variable index out of range");
    for (const Quaternion& c : m.coeffs)
      if (c.algebra() != alg_)
        throw std::invalid_argument("monomial coefficient from mismatched algebra");
    if (m.has_zero_coeff()) return;
    terms_.push_back(std::move(m));
  }

  bool has_no_terms() const { return terms_.empty(); }

 private:
  QuatAlgebra alg_;
  int nvars_;
  std::vector<NcMonomial> terms_;
};

inline void require_compatible(const NcPoly& f, const NcPoly& g) {
  if (f.algebra() != g.algebra() || f.nvars() != g.nvars())
    throw std::invalid_argument("incompatible polynomials (algebra or arity)");
}

inline NcPoly add(const NcPoly& f, const NcPoly& g) {
  require_compatible(f, g);
  NcPoly r = f;
  for (const NcMonomial& m : g.terms()) r.push_term(m);
  return r;
}

inline NcPoly scale_left(const Quaternion& c, const NcPoly& f) {
  if (c.algebra() != f.algebra())
    throw std::invalid_argument("incompatible scalar algebra");
  NcPoly r(f.algebra(), f.nvars());
  if (c.is_zero()) return r;
  for (NcMonomial m : f.terms()) {
    m.coeffs.front() = mul(c, m.coeffs.front());
    r.push_term(std::move(m));
  }
  return r;
}

inline NcPoly scale_right(const NcPoly& f, const Quaternion& c) {
  if (c.algebra() != f.algebra())
    throw std::invalid_argument("incompatible scalar algebra");
  NcPoly r(f.algebra(), f.nvars());
  if (c.is_zero()) return r;
  for (NcMonomial m : f.terms()) {
    m.coeffs.back() = mul(m.coeffs.back(), c);
    r.push_term(std::move(m));
  }
  return r;
}

inline NcPoly neg(const NcPoly& f) {
  return scale_left(Quaternion::scalar(f.algebra(), -1), f);
}

inline NcPoly sub(const NcPoly& f, const NcPoly& g) { return add(f, neg(g)); }

// Monomial concatenation; the boundary coefficients a_{r+1} and b_1 merge
// into a single interior coefficient.
inline NcPoly mul_poly(const NcPoly& f, const NcPoly& g) {
  require_compatible(f, g);
  NcPoly r(f.algebra(), f.nvars());
  for (const NcMonomial& m : f.terms()) {
    for (const NcMonomial& n : g.terms()) {
      NcMonomial prod;
      prod.coeffs.reserve(m.coeffs.size() + n.coeffs.size() - 1);
      prod.coeffs.insert(prod.coeffs.end(), m.coeffs.begin(), m.coeffs.end() - 1);
      prod.coeffs.push_back(mul(m.coeffs.back(), n.coeffs.front()));
      prod.coeffs.insert(prod.coeffs.end(), n.coeffs.begin() + 1, n.coeffs.end());
      prod.vars.reserve(m.vars.size() + n.vars.size());
      prod.vars.insert(prod.vars.end(), m.vars.begin(), m.vars.end());
      prod.vars.insert(prod.vars.end(), n.vars.begin(), n.vars.end());
      r.push_term(std::move(prod));
    }
  }
  return r;
}

inline NcPoly pow_nc(const NcPoly& f, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial exponent");
  NcPoly r = NcPoly::constant(f.algebra(), f.nvars(), Quaternion::one(f.algebra()));
  for (int t = 0; t < e; ++t) r = mul_poly(r, f);
  return r;
}

inline Quaternion eval(const NcPoly& f, const std::vector<Quaternion>& point) {
  if (point.size() != static_cast<std::size_t>(f.nvars()))
    throw std::invalid_argument("evaluation point arity mismatch");
  for (const Quaternion& x : point)
    if (x.algebra() != f.algebra())
      throw std::invalid_argument("evaluation point from mismatched algebra");
  Quaternion acc = Quaternion::zero(f.algebra());
  for (const NcMonomial& m : f.terms()) {
    Quaternion v = m.coeffs.front();
    for (std::size_t t = 0; t < m.vars.size(); ++t) {
      v = mul(v, point[static_cast<std::size_t>(m.vars[t] - 1)]);
      v = mul(v, m.coeffs[t + 1]);
    }
    acc = add(acc, v);
  }
  return acc;
}

// Conjugation-averaging projector onto the central coordinate:
// (1/4)(g + i g i^-1 + j g j^-1 + k g k^-1) kills the i, j, k components.
inline NcPoly central_projector(const NcPoly& g) {
  const QuatAlgebra& alg = g.algebra();
  NcPoly acc = g;
  for (int k = 1; k < 4; ++k) {
    Quaternion u = Quaternion::basis_unit(alg, k);
    acc = add(acc, scale_left(u, scale_right(g, inv(u))));
  }
  return scale_left(Quaternion::scalar(alg, rat(1, 4)), acc);
}

// Component function f_k of f = f_0 + f_1 i + f_2 j + f_3 k, realized inside
// the ring itself: the central part of f * b_k^-1.
inline NcPoly extract_component(const NcPoly& f, int k) {
  if (k < 0 || k > 3) throw std::out_of_range("component index out of range");
  if (k == 0) return central_projector(f);
  Quaternion u = Quaternion::basis_unit(f.algebra(), k);
  return central_projector(scale_right(f, inv(u)));
}

namespace detail {

// Coefficient as an expression atom.  Single positive coordinates render
// bare ("2", "1i"); anything else is parenthesized so it survives a '*'.
inline std::string coeff_atom(const Quaternion& c) {
  int nonzero = 0;
  int slot = 0;
  for (int k = 0; k < 4; ++k) {
    if (!c.coord(k).is_zero()) {
      ++nonzero;
      slot = k;
    }
  }
  if (nonzero == 1 && c.coord(slot) > 0) {
    static const char* units[4] = {"", "i", "j", "k"};
    if (slot > 0 && c.coord(slot) == 1) return units[slot];
    return format_quaternion(c);
  }
  return "(" + format_quaternion(c) + ")";
}

}  // namespace detail

inline std::string format_ncpoly(const NcPoly& f) {
  if (f.has_no_terms()) return "0";
  std::string out;
  for (const NcMonomial& m : f.terms()) {
    Quaternion lead = m.coeffs.front();
    int nonzero = 0, slot = 0;
    for (int k = 0; k < 4; ++k)
      if (!lead.coord(k).is_zero()) {
        ++nonzero;
        slot = k;
      }
    bool negative = nonzero == 1 && lead.coord(slot) < 0;
    if (negative) lead = neg(lead);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::vector<std::string> factors;
    const std::size_t r = m.vars.size();
    if (!(lead.is_one() && r > 0)) factors.push_back(detail::coeff_atom(lead));
    for (std::size_t t = 0; t < r; ++t) {
      factors.push_back("x" + std::to_string(m.vars[t]));
      const Quaternion& c = m.coeffs[t + 1];
      if (!c.is_one()) factors.push_back(detail::coeff_atom(c));
    }
    for (std::size_t t = 0; t < factors.size(); ++t) {
      if (t > 0) out += "*";
      out += factors[t];
    }
  }
  return out;
}

}  // namespace qnull

#endif  // QNULL_NCPOLY_HPP
